#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "modmotif/graph.hpp"

namespace modmotif {

/// Parses the `.gm` format:
///
///     # comment
///     v <id> <color>            simple vertex
///     v <id> <c1>|<c2>|...      list-colored vertex
///     e <u> <v>
///
/// Any `|` list switches the whole graph to list-colored mode. Edges may
/// reference vertices declared later in the file. Colors are interned in
/// order of first appearance, vertices in declaration order.
VertexColoredGraph parse_graph(std::string_view text);

/// Inverse of parse_graph: vertices in id order, then edges sorted.
std::string serialize_graph(const VertexColoredGraph& g);

/// Parses `<color> <count>` lines against the colors of `base`. Colors not
/// in `base` are appended to a copy of it, so the result's universe always
/// extends `base`.
ColorMultiset parse_motif(std::string_view text, const ColorUniversePtr& base);

std::string serialize_motif(const ColorMultiset& m);

/// Set system used by the set-cover and exact-cover tools. Elements are
/// 0-based here and 1-based in text.
struct SetSystem {
  std::size_t universe_size = 0;
  std::vector<std::vector<std::size_t>> sets;
};

/// First line is |X| (or q with `triples_header`, meaning |X| = 3q), then
/// one set per line of space-separated 1-based element indices. A line with
/// only `-` denotes the empty set.
SetSystem parse_set_system(std::string_view text, bool triples_header = false);
std::string serialize_set_system(const SetSystem& s, bool triples_header = false);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace modmotif
