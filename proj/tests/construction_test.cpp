#include <gtest/gtest.h>

#include <vector>

#include "oracle.hpp"
#include "vrtree/construction.hpp"
#include "vrtree/verify.hpp"

using namespace vrtree;

namespace {

Graph example() {
  return build_graph(11, {{2, 1}, {2, 0}, {1, 0}, {2, 3}, {2, 4}, {2, 5}, {2, 6},
                          {2, 7}, {2, 8}, {2, 9}, {2, 10}, {10, 1}, {0, 10}});
}

Graph complete(VertexId n) {
  std::vector<Edge> e;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v)
      e.push_back({u, v});
  return build_graph(n, e);
}

using F = std::vector<std::size_t>;

} // namespace

TEST(NewVR, FVectors) {
  EXPECT_EQ(new_vr(example(), MaxDim(3)).tree.f_vector(), (F{11, 13, 4, 1}));
  EXPECT_EQ(new_vr(complete(5), MaxDim(4)).tree.f_vector(), (F{5, 10, 10, 5, 1}));
  EXPECT_EQ(new_vr(build_graph(6, std::vector<Edge>{}), MaxDim(4)).tree.f_vector(), (F{6}));
}

TEST(NewAddCofaces, ExampleSubtreeOfZero) {
  const Graph g = example();
  SimplexTree t;
  ComparisonCounters c;
  const auto zero = t.add_vertex(0);
  const std::vector<VertexId> cand{1, 2, 10};
  new_add_cofaces(g, MaxDim(3), zero, cand, t, c);
  EXPECT_EQ(t.dump(), "0\n0 1\n0 2\n0 10\n0 1 2\n0 1 10\n0 2 10\n0 1 2 10\n");

  // Oracle restricted to simplices whose minimum vertex is 0.
  std::vector<oracle::Clique> expect;
  for (const auto& cl : oracle::cliques(g, 3))
    if (cl.front() == 0)
      expect.push_back(cl);
  EXPECT_EQ(t.dump(), oracle::dump(expect));
  EXPECT_EQ(c.merge_comparisons, 0u);
}

TEST(NewAddCofaces, DimensionZeroAndEmptyCandidates) {
  const Graph g = example();
  SimplexTree t;
  ComparisonCounters c;
  const auto zero = t.add_vertex(0);
  const std::vector<VertexId> cand{1, 2, 10};
  new_add_cofaces(g, MaxDim(0), zero, cand, t, c);
  EXPECT_EQ(t.size(), 1u);
  new_add_cofaces(g, MaxDim(3), zero, std::vector<VertexId>{}, t, c);
  EXPECT_EQ(t.size(), 1u);
}

TEST(AddCofaces, MatchesNewAddCofaces) {
  const Graph g = example();
  SimplexTree a, b;
  ComparisonCounters ca, cb;
  const std::vector<VertexId> cand{1, 2, 10};
  new_add_cofaces(g, MaxDim(3), a.add_vertex(0), cand, a, ca);
  add_cofaces(g, MaxDim(3), b.add_vertex(0), cand, b, cb);
  EXPECT_EQ(a.dump(), b.dump());
  EXPECT_GT(cb.merge_comparisons, 0u);
  EXPECT_EQ(cb.edge_probes, 0u);
}

TEST(IncrementalVR, ExampleAndCounterAsymmetry) {
  const auto nv = new_vr(example(), MaxDim(3));
  const auto iv = incremental_vr(example(), MaxDim(3));
  EXPECT_EQ(nv.tree.dump(), iv.tree.dump());
  EXPECT_EQ(nv.counters.merge_comparisons, 0u);
  EXPECT_GT(nv.counters.edge_probes, 0u);
  EXPECT_EQ(iv.counters.edge_probes, 0u);
  EXPECT_GT(iv.counters.merge_comparisons, 0u);
}

TEST(IncrementalVR, DimensionOne) {
  const Graph g = erdos_renyi(20, 0.4, 5);
  const auto t = incremental_vr(g, MaxDim(1)).tree;
  EXPECT_EQ(t.f_vector(), (F{20, g.edge_count()}));
}

TEST(InductiveVR, Examples) {
  EXPECT_EQ(inductive_vr(complete(4), MaxDim(3)).tree.f_vector(), (F{4, 6, 4, 1}));
  EXPECT_EQ(inductive_vr(example(), MaxDim(2)).tree.f_vector(), (F{11, 13, 4}));
}

TEST(BruteForceVR, Examples) {
  EXPECT_EQ(brute_force_vr(example(), MaxDim(3)).tree.f_vector(), (F{11, 13, 4, 1}));
  EXPECT_EQ(brute_force_vr(complete(6), MaxDim(5)).tree.f_vector(), (F{6, 15, 20, 15, 6, 1}));
  EXPECT_EQ(brute_force_vr(erdos_renyi(9, 0.0, 1), MaxDim(3)).tree.f_vector(), (F{9}));
}

// All four constructions against the bitmask oracle, which shares no code
// with brute_force_vr.
TEST(Constructions, AgreeWithOracle) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto inst = equivalence_instance(777, seed, 15, 5);
    const Graph g = erdos_renyi(inst.n, inst.p, inst.graph_seed);
    const MaxDim d(inst.dim);
    const std::string expect = oracle::dump(oracle::cliques(g, inst.dim));
    for (Algorithm a : {Algorithm::new_vr, Algorithm::incremental, Algorithm::inductive, Algorithm::brute_force})
      EXPECT_EQ(construct(a, g, d).tree.dump(), expect) << algorithm_name(a) << " seed " << seed;
  }
}

TEST(Constructions, DimensionCapAndCounters) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = erdos_renyi(18, 0.6, seed);
    for (std::size_t d = 0; d <= 4; ++d) {
      const auto r = new_vr(g, MaxDim(d), {std::nullopt, true});
      EXPECT_LE(r.tree.f_vector().size(), d + 1);
      EXPECT_EQ(r.tree.f_vector(), oracle::f_vector(oracle::cliques(g, d)));
      EXPECT_EQ(r.counters.nodes_created, r.tree.size());
      const auto i = incremental_vr(g, MaxDim(d), {std::nullopt, true});
      EXPECT_EQ(i.counters.nodes_created, i.tree.size());
    }
  }
}

TEST(Constructions, Deterministic) {
  const Graph g = erdos_renyi(30, 0.4, 11);
  const auto a = new_vr(g, MaxDim(4));
  const auto b = new_vr(g, MaxDim(4));
  EXPECT_EQ(a.tree.dump(), b.tree.dump());
  EXPECT_EQ(a.counters, b.counters);
}

TEST(Constructions, DimensionBeyondCliqueNumber) {
  const auto r = new_vr(complete(4), MaxDim(10));
  EXPECT_EQ(r.tree.f_vector(), (F{4, 6, 4, 1}));
}

TEST(Constructions, NodeBudget) {
  const BuildOptions tight{std::size_t{10}, false};
  EXPECT_THROW(new_vr(complete(6), MaxDim(5), tight), resource_error);
  EXPECT_THROW(incremental_vr(complete(6), MaxDim(5), tight), resource_error);
  EXPECT_NO_THROW(new_vr(complete(6), MaxDim(5), {std::size_t{63}, false}));
}

TEST(Algorithm, Names) {
  for (Algorithm a : {Algorithm::new_vr, Algorithm::incremental, Algorithm::inductive, Algorithm::brute_force})
    EXPECT_EQ(parse_algorithm(algorithm_name(a)), a);
  EXPECT_THROW(parse_algorithm("maximal"), validation_error);
}

TEST(Verify, SuitePasses) {
  const auto rep = run_equivalence_suite(40, 14, 3);
  EXPECT_EQ(rep.instances, 40u);
  EXPECT_TRUE(rep.ok()) << (rep.failures.empty() ? "" : rep.failures.front());
}
