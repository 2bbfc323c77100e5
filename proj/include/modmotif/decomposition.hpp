#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "modmotif/graph.hpp"

namespace modmotif {

enum class NodeKind { Series, Parallel, Prime, Leaf };

/// "series", "parallel", "prime" or "leaf".
std::string_view to_string(NodeKind kind);

struct TreeNode {
  VertexSet vertices;
  NodeKind kind = NodeKind::Leaf;
  /// Child node indices, ordered by minimum contained vertex id.
  std::vector<std::size_t> children;
  /// Index of the parent node; equals the node's own index for the root.
  std::size_t parent = 0;
};

/// The modular decomposition tree T(G). Nodes are stored in pre-order, so
/// the root is node 0 and every parent precedes its children.
class ModularDecompositionTree {
 public:
  const std::vector<TreeNode>& nodes() const noexcept { return nodes_; }
  const TreeNode& node(std::size_t i) const { return nodes_.at(i); }
  std::size_t root() const noexcept { return 0; }
  std::size_t size() const noexcept { return nodes_.size(); }

  /// Index of the leaf {v}.
  std::size_t leaf_of(VertexId v) const { return leaf_.at(v); }

  /// Degenerate nodes are series or parallel: every union of their children
  /// is a module.
  bool is_degenerate(std::size_t i) const {
    auto k = nodes_.at(i).kind;
    return k == NodeKind::Series || k == NodeKind::Parallel;
  }

 private:
  friend ModularDecompositionTree decompose(const VertexColoredGraph& g);
  std::vector<TreeNode> nodes_;
  std::vector<std::size_t> leaf_;
};

/// No vertex outside `s` sees some but not all of `s`. Throws InputError for
/// an empty set or out-of-range ids; `s` need not be sorted.
bool is_module(const VertexColoredGraph& g, std::span<const VertexId> s);

/// Top-down construction. Each step splits a strong module by connected
/// components (parallel), co-components (series), or, when both G[S] and
/// its complement are connected, by the maximal strong submodules (prime),
/// found from the partition of S - {v} into maximal modules avoiding v.
/// Worst case O(n^3); typically close to O(n^2).
ModularDecompositionTree decompose(const VertexColoredGraph& g);

/// Vertex sets of all tree nodes in pre-order (root first).
std::vector<VertexSet> strong_modules(const ModularDecompositionTree& t);

/// Kind of an arbitrary module from the connectivity of G[s] and its
/// complement. Throws InputError when `s` is not a module.
NodeKind classify(const VertexColoredGraph& g, std::span<const VertexId> s);

}  // namespace modmotif
