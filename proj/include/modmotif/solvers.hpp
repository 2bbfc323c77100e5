#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "modmotif/decomposition.hpp"
#include "modmotif/graph.hpp"
#include "modmotif/sub_motif_table.hpp"

namespace modmotif {

struct MotifSolution {
  VertexSet vertices;
  /// List-colored mode only: assignment[i] is the motif color given to
  /// vertices[i].
  std::optional<std::vector<ColorId>> assignment;
  /// The tree node that produced the solution: the node itself, or the
  /// series/parallel node whose children it unites.
  std::size_t tree_node = 0;
  NodeKind tree_node_kind = NodeKind::Leaf;
};

/// Work counters of one solve_module_motif call.
struct SolveStats {
  std::size_t dp_runs = 0;
  /// Largest sub-motif table built, in entries.
  std::size_t max_table_entries = 0;
};

/// Linear scan of T(G) in pre-order for a strong module whose colors are
/// exactly `m`. Simple mode only.
std::optional<MotifSolution> solve_strong_only(const VertexColoredGraph& g,
                                               const ModularDecompositionTree& t,
                                               const ColorMultiset& m);

/// Module Graph Motif in O(2^k |V|^2). For each tree node in pre-order:
/// accept the node if its colors equal `m`; for series/parallel nodes,
/// drop children whose colors are not within `m`, accept a child equal to
/// `m`, then run the subset DP over the remaining children. Simple mode
/// only; `m` must be nonempty.
std::optional<MotifSolution> solve_module_motif(const VertexColoredGraph& g,
                                                const ModularDecompositionTree& t,
                                                const ColorMultiset& m,
                                                SolveStats* stats = nullptr);

/// Every distinct module whose colors equal `m`, in traversal order, up to
/// `cap` results: matching tree nodes, and unions of at least two but not
/// all children of series/parallel nodes.
std::vector<MotifSolution> enumerate_module_motifs(const VertexColoredGraph& g,
                                                   const ModularDecompositionTree& t,
                                                   const ColorMultiset& m,
                                                   std::size_t cap);

/// List-Colored Module Graph Motif: a module of exactly k vertices with a
/// bijection onto `m` respecting each vertex's color list. Tree nodes with
/// k vertices are tested directly; series/parallel nodes with more than k
/// vertices are searched over unions of children, after grouping children
/// by profile (the multiset of their vertices' color lists) and keeping at
/// most k/|child| of each group. Works on simple graphs as well.
std::optional<MotifSolution> solve_list_colored(const VertexColoredGraph& g,
                                                const ModularDecompositionTree& t,
                                                const ColorMultiset& m, std::size_t k);

/// A bijection from `lists.size()` vertices onto the motif slots of `m`
/// with each vertex mapped into its own list, via maximum bipartite
/// matching. Returns the color of each vertex, or nullopt when Hall's
/// condition fails. Throws InputError when lists.size() != m.size().
std::optional<std::vector<ColorId>> bijection_feasible(
    std::span<const std::vector<ColorId>> lists, const ColorMultiset& m);

/// Same, reading the lists from `g` for `vertices`.
std::optional<std::vector<ColorId>> bijection_feasible(const VertexColoredGraph& g,
                                                       std::span<const VertexId> vertices,
                                                       const ColorMultiset& m);

}  // namespace modmotif
