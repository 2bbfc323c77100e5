#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "modmotif/graph.hpp"
#include "modmotif/io.hpp"

// Exhaustive reference implementations. They share no code with the
// decomposition or the solvers: module tests run on 64-bit adjacency masks,
// and every search walks candidates in lexicographic order so the first hit
// is the lexicographically smallest answer.

namespace modmotif {

struct OracleBudget {
  std::size_t max_n = 20;
  std::uint64_t max_subsets = std::uint64_t{1} << 20;
};

/// All modules (nonempty), sorted lexicographically. Throws BudgetExceeded
/// when n > max_n, n > 63 or 2^n - 1 > max_subsets.
std::vector<VertexSet> enumerate_modules(const VertexColoredGraph& g,
                                         const OracleBudget& b = {});

/// Lexicographically smallest module with colors exactly `m`. Simple mode.
std::optional<VertexSet> find_module_motif_brute(const VertexColoredGraph& g,
                                                 const ColorMultiset& m,
                                                 const OracleBudget& b = {});

struct ListColoredWitness {
  VertexSet vertices;
  std::vector<ColorId> assignment;
};

/// Every k-subset in lexicographic order, every assignment from the color
/// lists, first module whose assignment multiset is `m`.
std::optional<ListColoredWitness> find_list_colored_brute(const VertexColoredGraph& g,
                                                          const ColorMultiset& m,
                                                          const OracleBudget& b = {});

/// Enumerates all assignments from the lists; nullopt when none hits `m`.
std::optional<std::vector<ColorId>> bijection_brute(
    std::span<const std::vector<ColorId>> lists, const ColorMultiset& m);

/// Colors are ignored. Lexicographically smallest among maximum sets.
VertexSet max_independent_set_brute(const VertexColoredGraph& g,
                                    const OracleBudget& b = {});

/// Minimum cover, lexicographically smallest among minima (0-based set
/// indices). Throws InputError when some element lies in no set.
std::vector<std::size_t> min_set_cover_brute(const SetSystem& s,
                                             const OracleBudget& b = {});

/// An exact cover by the sets of `s` (lexicographically smallest), or
/// nullopt. Throws InputError unless every set has three elements.
std::optional<std::vector<std::size_t>> x3c_brute(const SetSystem& s,
                                                  const OracleBudget& b = {});

/// |M| - sum over c of min(occ_M(c), occ_col(s)(c)). Throws InvalidSolution
/// when |s| != |M| or G[s] is not connected. Simple mode.
std::size_t count_substitutions(const VertexColoredGraph& g, const ColorMultiset& m,
                                std::span<const VertexId> s);

}  // namespace modmotif
