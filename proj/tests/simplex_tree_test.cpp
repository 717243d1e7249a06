#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

#include "oracle.hpp"
#include "vrtree/construction.hpp"
#include "vrtree/simplex.hpp"
#include "vrtree/simplex_tree.hpp"

using namespace vrtree;

namespace {

Graph example() {
  return build_graph(11, {{2, 1}, {2, 0}, {1, 0}, {2, 3}, {2, 4}, {2, 5}, {2, 6},
                          {2, 7}, {2, 8}, {2, 9}, {2, 10}, {10, 1}, {0, 10}});
}

std::vector<std::vector<VertexId>> as_vectors(const std::vector<Simplex>& ss) {
  std::vector<std::vector<VertexId>> out;
  for (const auto& s : ss)
    out.emplace_back(s.begin(), s.end());
  return out;
}

} // namespace

TEST(Simplex, Validation) {
  EXPECT_THROW(Simplex(std::vector<VertexId>{}), validation_error);
  EXPECT_THROW(Simplex({1, 1}), validation_error);
  EXPECT_THROW(Simplex({2, 1}), validation_error);
  const Simplex s{0, 2, 10};
  EXPECT_EQ(s.dimension(), 2u);
  EXPECT_EQ(s.without_index(1), (Simplex{0, 10}));
  std::ostringstream os;
  os << s;
  EXPECT_EQ(os.str(), "{0,2,10}");
}

TEST(SimplexTree, PathExtension) {
  SimplexTree t;
  const auto a = t.add_vertex(0);
  const auto ab = t.insert_child(a, 1);
  const auto abc = t.insert_child(ab, 2);
  EXPECT_EQ(t.simplex_of(abc), (Simplex{0, 1, 2}));
  EXPECT_EQ(t.depth(abc), 2);
  EXPECT_EQ(t.parent(abc), ab);
}

TEST(SimplexTree, OrderViolationIsAnError) {
  SimplexTree t;
  const auto a = t.add_vertex(0);
  const auto ac = t.insert_child(a, 2);
  EXPECT_THROW(t.insert_child(ac, 1), structural_error);
  EXPECT_THROW(t.insert_child(ac, 2), structural_error);
}

TEST(SimplexTree, DuplicateIsAnError) {
  SimplexTree t;
  const auto a = t.add_vertex(0);
  t.insert_child(a, 5);
  EXPECT_THROW(t.insert_child(a, 5), structural_error);
  EXPECT_THROW(t.add_vertex(0), structural_error);
}

TEST(SimplexTree, SiblingsStaySorted) {
  SimplexTree t;
  const auto a = t.add_vertex(0);
  const auto ab = t.insert_child(a, 1);
  t.insert_child(ab, 2);
  t.insert_child(ab, 10);
  EXPECT_EQ(t.child_labels(ab), (std::vector<VertexId>{2, 10}));

  // Out-of-order insertion still lands in sorted position.
  for (VertexId v : {7u, 3u, 9u, 4u})
    t.insert_child(a, v);
  EXPECT_EQ(t.child_labels(a), (std::vector<VertexId>{1, 3, 4, 7, 9}));
  EXPECT_EQ(t.check_invariants(), "");
}

TEST(SimplexTree, ExampleLevels) {
  const auto t = new_vr(example(), MaxDim(3)).tree;
  const auto expect2 = oracle::cliques(example(), 3);
  std::vector<std::vector<VertexId>> tri, tet;
  for (const auto& c : expect2) {
    if (c.size() == 3)
      tri.push_back(c);
    if (c.size() == 4)
      tet.push_back(c);
  }
  EXPECT_EQ(as_vectors(t.simplices_at_level(2)), tri);
  EXPECT_EQ(as_vectors(t.simplices_at_level(2)),
            (std::vector<std::vector<VertexId>>{{0, 1, 2}, {0, 1, 10}, {0, 2, 10}, {1, 2, 10}}));
  EXPECT_EQ(as_vectors(t.simplices_at_level(3)), tet);
  EXPECT_TRUE(t.simplices_at_level(4).empty());
  EXPECT_TRUE(t.simplices_at_level(100).empty());
}

TEST(SimplexTree, FVectors) {
  std::vector<Edge> k5;
  for (VertexId u = 0; u < 5; ++u)
    for (VertexId v = u + 1; v < 5; ++v)
      k5.push_back({u, v});
  EXPECT_EQ(new_vr(build_graph(5, k5), MaxDim(3)).tree.f_vector(), (std::vector<std::size_t>{5, 10, 10, 5}));
  EXPECT_EQ(new_vr(example(), MaxDim(3)).tree.f_vector(), (std::vector<std::size_t>{11, 13, 4, 1}));
  EXPECT_EQ(new_vr(build_graph(4, std::vector<Edge>{}), MaxDim(3)).tree.f_vector(), (std::vector<std::size_t>{4}));
}

TEST(SimplexTree, Contains) {
  const auto t = new_vr(example(), MaxDim(3)).tree;
  EXPECT_TRUE(t.contains(Simplex{0, 1, 2, 10}));
  EXPECT_FALSE(t.contains(Simplex{2, 3, 4}));
  EXPECT_TRUE(t.contains(Simplex{7}));
  EXPECT_FALSE(t.contains(Simplex{11}));
}

TEST(SimplexTree, SimplexSetOrder) {
  EXPECT_TRUE(SimplexTree().as_simplex_set().empty());
  const auto k3 = new_vr(build_graph(3, {{0, 1}, {1, 2}, {0, 2}}), MaxDim(2)).tree;
  EXPECT_EQ(as_vectors(k3.as_simplex_set()),
            (std::vector<std::vector<VertexId>>{{0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}, {0, 1, 2}}));
  EXPECT_EQ(k3.dump(), "0\n1\n2\n0 1\n0 2\n1 2\n0 1 2\n");
}

TEST(SimplexTree, InsertNeedsPrefix) {
  SimplexTree t;
  t.insert(Simplex{0});
  EXPECT_THROW(t.insert(Simplex{0, 1, 2}), structural_error);
  t.insert(Simplex{0, 1});
  t.insert(Simplex{0, 1, 2});
  EXPECT_TRUE(t.contains(Simplex{0, 1, 2}));
}

TEST(SimplexTree, NodeBudget) {
  SimplexTree t(std::optional<std::size_t>(2));
  t.add_vertex(0);
  t.add_vertex(1);
  EXPECT_THROW(t.add_vertex(2), resource_error);
  EXPECT_EQ(t.size(), 2u);
}

TEST(SimplexTree, GraftKeepsOrder) {
  SimplexTree a, b;
  a.insert_child(a.add_vertex(0), 3);
  b.insert_child(b.add_vertex(2), 3);
  SimplexTree c;
  c.insert_child(c.add_vertex(1), 2);
  a.graft(std::move(b));
  a.graft(std::move(c));
  EXPECT_EQ(a.dump(), "0\n1\n2\n0 3\n1 2\n2 3\n");
  EXPECT_EQ(a.check_invariants(), "");

  SimplexTree clash;
  clash.add_vertex(1);
  EXPECT_THROW(a.graft(std::move(clash)), structural_error);
}

// Path, closure, bijection and sibling-order invariants on random complexes.
TEST(SimplexTree, StructuralProperties) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = erdos_renyi(14, 0.5, seed);
    const auto t = new_vr(g, MaxDim(4)).tree;
    ASSERT_EQ(t.check_invariants(), "");
    const auto f = t.f_vector();
    for (std::size_t k = 0; k < f.size(); ++k)
      EXPECT_EQ(t.simplices_at_level(k).size(), f[k]);
    for (const Simplex& s : t.as_simplex_set()) {
      if (s.size() < 2)
        continue;
      for (std::size_t i = 0; i < s.size(); ++i)
        EXPECT_TRUE(t.contains(s.without_index(i))) << s;
    }
    EXPECT_EQ(t.dump(), oracle::dump(oracle::cliques(g, 4)));
  }
}
