#ifndef VRTREE_SIMPLEX_TREE_HPP
#define VRTREE_SIMPLEX_TREE_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "vrtree/error.hpp"
#include "vrtree/graph.hpp"
#include "vrtree/simplex.hpp"

namespace vrtree {

/// Opaque reference to a node of one SimplexTree.
struct NodeHandle {
  std::uint32_t id = 0;
  friend bool operator==(NodeHandle, NodeHandle) = default;
};

/**
 * Simplex tree: a trie over increasing vertex sequences.
 *
 * A node at depth k is a k-simplex whose vertices are the labels on the path
 * from the level-0 ancestor down to the node. Nodes live in a single arena;
 * siblings form a singly linked list kept in increasing label order, so
 * appending the next-larger child is O(1) and nothing is allocated per node
 * beyond the arena slot. The root is a sentinel with no label.
 */
class SimplexTree {
  static constexpr std::uint32_t npos = std::numeric_limits<std::uint32_t>::max();

  struct Node {
    VertexId label;
    std::int32_t depth;
    std::uint32_t parent;
    std::uint32_t first_child = npos;
    std::uint32_t last_child = npos;
    std::uint32_t next_sibling = npos;
  };

public:
  class ChildIterator {
  public:
    using value_type = NodeHandle;
    using difference_type = std::ptrdiff_t;

    ChildIterator() = default;
    ChildIterator(const SimplexTree* t, std::uint32_t id) : tree_(t), id_(id) {}

    NodeHandle operator*() const { return {id_}; }
    ChildIterator& operator++() {
      id_ = tree_->nodes_[id_].next_sibling;
      return *this;
    }
    ChildIterator operator++(int) {
      auto tmp = *this;
      ++*this;
      return tmp;
    }
    friend bool operator==(const ChildIterator& a, const ChildIterator& b) { return a.id_ == b.id_; }

  private:
    const SimplexTree* tree_ = nullptr;
    std::uint32_t id_ = npos;
  };

  struct ChildRange {
    ChildIterator first;
    ChildIterator last;
    ChildIterator begin() const { return first; }
    ChildIterator end() const { return last; }
    bool empty() const { return first == last; }
  };

  SimplexTree() { nodes_.push_back(Node{0, -1, npos}); }

  explicit SimplexTree(std::optional<std::size_t> node_budget) : SimplexTree() {
    node_budget_ = node_budget;
  }

  NodeHandle root() const noexcept { return {0}; }
  bool is_root(NodeHandle h) const noexcept { return h.id == 0; }

  VertexId label(NodeHandle h) const { return node(h).label; }
  /// Depth of a real node (0 for vertices); -1 for the root sentinel.
  int depth(NodeHandle h) const { return node(h).depth; }
  NodeHandle parent(NodeHandle h) const { return {node(h).parent}; }

  ChildRange children(NodeHandle h) const {
    return {ChildIterator(this, node(h).first_child), ChildIterator(this, npos)};
  }

  std::vector<VertexId> child_labels(NodeHandle h) const {
    std::vector<VertexId> out;
    for (NodeHandle c : children(h))
      out.push_back(label(c));
    return out;
  }

  /// Number of real nodes, i.e. simplices.
  std::size_t size() const noexcept { return nodes_.size() - 1; }
  bool empty() const noexcept { return size() == 0; }

  /// Inserts `label` as a child of `parent`, keeping siblings sorted.
  /// The label must exceed the parent's and must not already be a child.
  NodeHandle insert_child(NodeHandle parent, VertexId label) {
    const Node& p = node(parent);
    if (parent.id != 0 && label <= p.label)
      throw structural_error("cannot insert label " + std::to_string(label) + " below " +
                             describe(parent) + ": labels must increase along a path");
    if (p.last_child == npos || nodes_[p.last_child].label < label)
      return link_new(parent.id, label, p.last_child, npos);

    std::uint32_t prev = npos;
    std::uint32_t next = p.first_child;
    while (nodes_[next].label < label) {
      prev = next;
      next = nodes_[next].next_sibling;
    }
    if (nodes_[next].label == label)
      throw structural_error("duplicate insertion of label " + std::to_string(label) + " below " +
                             describe(parent));
    return link_new(parent.id, label, prev, next);
  }

  NodeHandle add_vertex(VertexId v) { return insert_child(root(), v); }

  /// Pre-allocates room for `simplices` nodes.
  void reserve(std::size_t simplices) { nodes_.reserve(simplices + 1); }

  /// Inserts a simplex whose facet without the last vertex is already stored.
  NodeHandle insert(const Simplex& s) {
    NodeHandle h = root();
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
      auto c = find_child(h, s[i]);
      if (!c)
        throw structural_error("cannot insert " + to_string(s) + ": prefix is missing");
      h = *c;
    }
    return insert_child(h, s.back());
  }

  std::optional<NodeHandle> find_child(NodeHandle parent, VertexId label) const {
    for (NodeHandle c : children(parent)) {
      VertexId l = nodes_[c.id].label;
      if (l == label)
        return c;
      if (l > label)
        break;
    }
    return std::nullopt;
  }

  std::optional<NodeHandle> find(const Simplex& s) const {
    NodeHandle h = root();
    for (VertexId v : s) {
      auto c = find_child(h, v);
      if (!c)
        return std::nullopt;
      h = *c;
    }
    return h;
  }

  bool contains(const Simplex& s) const { return find(s).has_value(); }

  Simplex simplex_of(NodeHandle h) const {
    if (h.id == 0)
      throw validation_error("the root sentinel does not represent a simplex");
    std::vector<VertexId> vs(static_cast<std::size_t>(node(h).depth) + 1);
    for (std::size_t i = vs.size(); i-- > 0; h = parent(h))
      vs[i] = nodes_[h.id].label;
    return Simplex(std::move(vs));
  }

  /// Node handles at depth k in lexicographic order of their simplices.
  std::vector<NodeHandle> nodes_at_level(std::size_t k) const {
    std::vector<NodeHandle> out;
    if (k >= level_counts_.size())
      return out;
    out.reserve(level_counts_[k]);
    const auto target = static_cast<int>(k);
    preorder([&](NodeHandle h, int d) {
      if (d == target) {
        out.push_back(h);
        return false;
      }
      return true;
    });
    return out;
  }

  std::vector<Simplex> simplices_at_level(std::size_t k) const {
    std::vector<Simplex> out;
    for (NodeHandle h : nodes_at_level(k))
      out.push_back(simplex_of(h));
    return out;
  }

  /// Entry k counts k-simplices; length is max dimension + 1.
  std::vector<std::size_t> f_vector() const { return level_counts_; }

  std::size_t max_dimension_plus_one() const noexcept { return level_counts_.size(); }

  /// Every simplex, ordered by dimension then lexicographically.
  std::vector<Simplex> as_simplex_set() const {
    std::vector<Simplex> out;
    out.reserve(size());
    for (std::size_t k = 0; k < level_counts_.size(); ++k)
      for (auto& s : simplices_at_level(k))
        out.push_back(std::move(s));
    return out;
  }

  /// Canonical dump: one simplex per line, space-separated vertices, in
  /// as_simplex_set() order.
  void dump(std::ostream& os) const {
    for (std::size_t k = 0; k < level_counts_.size(); ++k) {
      for (NodeHandle h : nodes_at_level(k)) {
        auto s = simplex_of(h);
        for (std::size_t i = 0; i < s.size(); ++i)
          os << (i ? " " : "") << s[i];
        os << '\n';
      }
    }
  }

  std::string dump() const {
    std::ostringstream os;
    dump(os);
    return os.str();
  }

  /**
   * Moves every level-0 subtree of `other` under this tree's root. Level-0
   * labels must not collide. Relative order of all nodes is preserved, so
   * grafting per-vertex fragments in vertex order yields the same tree as
   * building it in one pass.
   */
  void graft(SimplexTree&& other) {
    if (node_budget_ && size() + other.size() > *node_budget_)
      throw resource_error("node budget of " + std::to_string(*node_budget_) + " exhausted");
    const auto offset = static_cast<std::uint32_t>(nodes_.size() - 1);
    auto remap = [offset](std::uint32_t id) { return id == npos ? npos : id + offset; };

    std::vector<std::uint32_t> roots;
    for (std::uint32_t c = other.nodes_[0].first_child; c != npos; c = other.nodes_[c].next_sibling)
      roots.push_back(c + offset);

    nodes_.reserve(nodes_.size() + other.size());
    for (std::size_t i = 1; i < other.nodes_.size(); ++i) {
      Node n = other.nodes_[i];
      n.parent = n.parent == 0 ? 0 : n.parent + offset;
      n.first_child = remap(n.first_child);
      n.last_child = remap(n.last_child);
      n.next_sibling = n.parent == 0 ? npos : remap(n.next_sibling);
      nodes_.push_back(n);
    }
    for (std::uint32_t r : roots)
      link_root(r);

    if (level_counts_.size() < other.level_counts_.size())
      level_counts_.resize(other.level_counts_.size(), 0);
    for (std::size_t k = 0; k < other.level_counts_.size(); ++k)
      level_counts_[k] += other.level_counts_[k];
    other = SimplexTree();
  }

  /// Checks label order along paths, sibling order, depths and level counts.
  /// Returns an empty string when everything holds.
  std::string check_invariants() const {
    std::vector<std::size_t> counts;
    std::string err;
    preorder([&](NodeHandle h, int d) {
      const Node& n = nodes_[h.id];
      if (n.depth != d)
        err = "depth mismatch at " + describe(h);
      if (n.parent != 0 && nodes_[n.parent].label >= n.label)
        err = "path not increasing at " + describe(h);
      if (n.next_sibling != npos && nodes_[n.next_sibling].label <= n.label)
        err = "siblings out of order at " + describe(h);
      if (counts.size() <= static_cast<std::size_t>(d))
        counts.resize(d + 1, 0);
      ++counts[d];
      return err.empty();
    });
    if (err.empty() && counts != level_counts_)
      err = "level counts disagree with the stored nodes";
    return err;
  }

private:
  // New node between siblings prev and next (either may be npos).
  NodeHandle link_new(std::uint32_t parent, VertexId label, std::uint32_t prev, std::uint32_t next) {
    if (node_budget_ && size() >= *node_budget_)
      throw resource_error("node budget of " + std::to_string(*node_budget_) + " exhausted");
    if (nodes_.size() >= npos - 1)
      throw resource_error("simplex tree node index space exhausted");

    const auto id = static_cast<std::uint32_t>(nodes_.size());
    const int d = nodes_[parent].depth + 1;
    nodes_.push_back(Node{label, d, parent, npos, npos, next});
    Node& p = nodes_[parent];
    if (prev == npos)
      p.first_child = id;
    else
      nodes_[prev].next_sibling = id;
    if (next == npos)
      p.last_child = id;

    if (level_counts_.size() <= static_cast<std::size_t>(d))
      level_counts_.resize(d + 1, 0);
    ++level_counts_[d];
    return {id};
  }

  Node& node(NodeHandle h) {
    if (h.id >= nodes_.size())
      throw validation_error("invalid node handle");
    return nodes_[h.id];
  }
  const Node& node(NodeHandle h) const {
    if (h.id >= nodes_.size())
      throw validation_error("invalid node handle");
    return nodes_[h.id];
  }

  void link_root(std::uint32_t id) {
    Node& r = nodes_[0];
    const VertexId l = nodes_[id].label;
    if (r.last_child == npos || nodes_[r.last_child].label < l) {
      if (r.last_child == npos)
        r.first_child = id;
      else
        nodes_[r.last_child].next_sibling = id;
      r.last_child = id;
      return;
    }
    std::uint32_t prev = npos;
    std::uint32_t next = r.first_child;
    while (nodes_[next].label < l) {
      prev = next;
      next = nodes_[next].next_sibling;
    }
    if (nodes_[next].label == l)
      throw structural_error("graft collides on level-0 label " + std::to_string(l));
    nodes_[id].next_sibling = next;
    if (prev == npos)
      r.first_child = id;
    else
      nodes_[prev].next_sibling = id;
  }

  // Depth-first, children in increasing label order. `visit(h, depth)`
  // returns whether to descend into h.
  template <class Visit>
  void preorder(Visit&& visit) const {
    std::vector<std::uint32_t> stack;
    auto push_children = [&](std::uint32_t id) {
      const std::size_t mark = stack.size();
      for (std::uint32_t c = nodes_[id].first_child; c != npos; c = nodes_[c].next_sibling)
        stack.push_back(c);
      std::reverse(stack.begin() + static_cast<std::ptrdiff_t>(mark), stack.end());
    };
    push_children(0);
    while (!stack.empty()) {
      const std::uint32_t id = stack.back();
      stack.pop_back();
      if (visit(NodeHandle{id}, nodes_[id].depth))
        push_children(id);
    }
  }

  std::string describe(NodeHandle h) const {
    if (h.id == 0)
      return "the root";
    return "node " + to_string(simplex_of(h));
  }

  static std::string to_string(const Simplex& s) {
    std::ostringstream os;
    os << s;
    return os.str();
  }

  std::vector<Node> nodes_;
  std::vector<std::size_t> level_counts_;
  std::optional<std::size_t> node_budget_;
};

} // namespace vrtree

#endif
