#pragma once

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "modmotif/graph.hpp"
#include "modmotif/io.hpp"

// Seeded generators for the property tests, the acceptance suite and
// `gen corpus`. Same seed, same library build: same instances.

namespace modmotif {

using Rng = std::mt19937_64;

/// Universe {c1, ..., c<count>}.
ColorUniversePtr numbered_colors(std::size_t count);

/// G(n, p) with uniform colors from `colors` and names 0..n-1.
VertexColoredGraph random_graph(Rng& rng, std::size_t n, double p, const ColorUniversePtr& colors);

/// Random series, parallel and prime compositions of smaller random parts,
/// so that degenerate nodes with many children are common.
VertexColoredGraph random_modular_graph(Rng& rng, std::size_t n, const ColorUniversePtr& colors);

/// Each vertex lists 1..max_list distinct colors.
VertexColoredGraph random_list_colored_graph(Rng& rng, std::size_t n, double p,
                                             const ColorUniversePtr& colors,
                                             std::size_t max_list);

/// Random multiset of size k with no color above max_occ.
ColorMultiset random_motif(Rng& rng, const ColorUniversePtr& colors, std::size_t k,
                           std::uint32_t max_occ);

/// Edge list over 0..n-1 in G(n, p), names v1..vn, all vertices colored `x`.
VertexColoredGraph random_uncolored_graph(Rng& rng, std::size_t n, double p);

/// Random sets over |X| = universe_size; every element lands in some set.
SetSystem random_set_system(Rng& rng, std::size_t universe_size, std::size_t sets);

/// `sets` random triples over 3q elements; with `plant`, the first q
/// triples (before shuffling) form an exact cover.
SetSystem random_triples(Rng& rng, std::size_t q, std::size_t sets, bool plant);

/// A large simple-mode instance with a known module motif: a random
/// background on which a parallel module of `module_size` isolated vertices
/// hangs. The module's leaves come first with decoy colors, so the subset
/// DP over its children has to fill its table before the last leaves
/// complete the motif.
struct PlantedInstance {
  VertexColoredGraph graph;
  ColorMultiset motif;
};

/// Colorful motif c1..ck; decoy leaves use c1..c(k-1).
PlantedInstance planted_colorful_instance(Rng& rng, std::size_t n, std::size_t k,
                                          std::size_t module_size);

/// Motif {c1: k/3, c2: k/3, c3: k - 2k/3}; decoy leaves use c1 and c2.
PlantedInstance planted_three_color_instance(Rng& rng, std::size_t n, std::size_t k,
                                             std::size_t module_size);

/// Writes `count` small graph/motif pairs to `dir` as instance_NNN.gm and
/// instance_NNN.motif plus an index.json; odd instances get a motif read
/// off a random module (planted), even ones a random motif.
void generate_corpus(std::uint64_t seed, std::size_t count, std::size_t min_n,
                     std::size_t max_n, const std::filesystem::path& dir);

}  // namespace modmotif
