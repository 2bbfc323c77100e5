#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "modmotif/graph.hpp"
#include "modmotif/io.hpp"

namespace modmotif {

enum class ReductionKind { MisToMaxMotif, SetCoverToMinSubst, X3cToModuleMotif };

/// "mis2maxmotif", "sc2minsubst" or "x3c2module".
std::string_view to_string(ReductionKind kind);
std::optional<ReductionKind> reduction_kind_from_string(std::string_view s);

/// What a generated vertex stands for. Indices are 1-based like the gadget
/// names:
///   root                    r
///   path_edge   {i, e}      copy of source vertex i for edge e (edge order)
///   path_private {i, j}     private vertex j of source vertex i
///   subset      {i}         v_i for set S_i
///   element_copy {i, j, t}  copy t of the j-th element of S_i
///   triple_element {i, j}   element x_j of triple S_i
struct GadgetRole {
  std::string kind;
  std::vector<std::uint32_t> index;
  bool operator==(const GadgetRole&) const = default;
};

struct ReductionCertificate {
  ReductionKind kind;
  /// Source of mis2maxmotif; its colors are ignored.
  std::optional<VertexColoredGraph> source_graph;
  /// Source of sc2minsubst and x3c2module.
  std::optional<SetSystem> source_sets;
  VertexColoredGraph graph;
  ColorMultiset motif;
  /// roles[v] for every generated vertex v.
  std::vector<GadgetRole> roles;
  /// mis2maxmotif: the total order on source edges behind adj().
  std::vector<Edge> edge_order;
  /// The root r (mis2maxmotif, sc2minsubst).
  VertexId root = 0;
  /// mis2maxmotif: path of each source vertex from r outwards.
  /// sc2minsubst: element copies under each v_i, ordered by (j, t).
  /// x3c2module: the three vertices of each triple in element order.
  std::vector<std::vector<VertexId>> groups;
  /// sc2minsubst: v_i of each set.
  std::vector<VertexId> subset_vertices;
};

/// Tree with root r and one path per source vertex: its edge copies in
/// edge order, then |V_I|^2 private vertices. Motif = all colors.
/// |V| = 1 + 2|E_I| + |V_I|^3.
ReductionCertificate gen_mis_to_maxmotif(const VertexColoredGraph& source);

/// Depth-2 tree: r, one v_i per set, |S|+1 copies of each element of S_i
/// under v_i. Motif = {c_r} and every element copy color.
ReductionCertificate gen_setcover_to_minsubst(const SetSystem& source);

/// One path v_i^a - v_i^b - v_i^c per triple {a < b < c}, colored by
/// element. Motif = {c_1, ..., c_3q}.
ReductionCertificate gen_x3c_to_modulemotif(const SetSystem& source);

/// r plus the whole path of every vertex of `is`. Throws InvalidSolution
/// unless `is` is independent in the source graph.
VertexSet map_is_to_motif_solution(const ReductionCertificate& cert,
                                   std::span<const VertexId> is);

/// Source vertices whose whole path lies in the solution, after completing
/// it: a solution avoiding r is replaced by r plus the path it lies on, and
/// a path whose edge copies are all present gets its private vertices.
/// Throws InvalidSolution unless `v_prime` is nonempty, connected and
/// colorful.
VertexSet map_motif_to_is_solution(const ReductionCertificate& cert,
                                   std::span<const VertexId> v_prime);

/// Solution with exactly |cover| substitutions. Sets that are the first set
/// of the cover holding some element contribute r-v_i plus the copies of
/// those elements, minus copy t=1 of their first such element. Any other
/// set of the cover contributes v_i and trades one element copy for it.
/// Throws InvalidSolution if `cover` is not a cover.
VertexSet map_cover_to_subst_solution(const ReductionCertificate& cert,
                                      std::span<const std::size_t> cover);

/// {S_i : v_i in V'}, or every set when the solution has at least |S|+1
/// substitutions. Throws InvalidSolution when |V'| != |M| or G[V'] is not
/// connected.
std::vector<std::size_t> map_subst_to_cover_solution(const ReductionCertificate& cert,
                                                     std::span<const VertexId> v_prime);

/// Union of the paths of an exact cover. Throws InvalidSolution when
/// `cover` is not an exact cover.
VertexSet map_x3c_to_module_solution(const ReductionCertificate& cert,
                                     std::span<const std::size_t> cover);

/// Triples whose paths meet `v_prime`. Throws InvalidSolution unless it is
/// a module with colors exactly M.
std::vector<std::size_t> map_module_to_x3c_solution(const ReductionCertificate& cert,
                                                    std::span<const VertexId> v_prime);

struct BoundCheck {
  std::string name;
  bool ok = false;
  /// Both sides of the checked relation, e.g. "55 >= 2 * 25 = 50".
  std::string detail;
};

struct VerificationReport {
  std::vector<BoundCheck> checks;
  /// Mapped solution, in generated-vertex or source ids.
  std::vector<std::size_t> mapped;
  bool ok() const;
};

VerificationReport verify_lemma1(const ReductionCertificate& cert,
                                 std::span<const VertexId> is);
VerificationReport verify_lemma2(const ReductionCertificate& cert,
                                 std::span<const VertexId> v_prime);
VerificationReport verify_lemma3(const ReductionCertificate& cert,
                                 std::span<const std::size_t> cover);
VerificationReport verify_lemma4(const ReductionCertificate& cert,
                                 std::span<const VertexId> v_prime);
/// x3c_brute on the source against solve_module_motif on the instance,
/// plus both solution maps when the answer is yes.
VerificationReport verify_x3c_equivalence(const ReductionCertificate& cert);

/// Regenerates the instance from the source and compares it to `cert`.
bool certificate_consistent(const ReductionCertificate& cert);

}  // namespace modmotif
