#pragma once

#include <algorithm>
#include <filesystem>
#include <string>
#include <vector>

#include "modmotif/decomposition.hpp"
#include "modmotif/graph.hpp"
#include "modmotif/io.hpp"

namespace test_support {

inline std::filesystem::path fixture(const std::string& name) {
  return std::filesystem::path(MODMOTIF_FIXTURES) / name;
}

inline modmotif::VertexColoredGraph load_fixture_graph(const std::string& name) {
  return modmotif::parse_graph(modmotif::read_text_file(fixture(name)));
}

inline modmotif::ColorMultiset load_fixture_motif(const std::string& name,
                                                  const modmotif::VertexColoredGraph& g) {
  return modmotif::parse_motif(modmotif::read_text_file(fixture(name)), g.universe_ptr());
}

inline modmotif::VertexSet ids(const modmotif::VertexColoredGraph& g,
                               const std::vector<std::string>& names) {
  modmotif::VertexSet out;
  for (const auto& n : names) out.push_back(*g.find_vertex(n));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::string> names(const modmotif::VertexColoredGraph& g,
                                      const modmotif::VertexSet& s) {
  std::vector<std::string> out;
  for (auto v : s) out.push_back(g.name(v));
  return out;
}

/// Node index holding exactly `s`, or t.size().
inline std::size_t node_of(const modmotif::ModularDecompositionTree& t,
                           const modmotif::VertexSet& s) {
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t.node(i).vertices == s) return i;
  }
  return t.size();
}

/// Connectivity of G[s] (or of its complement), by BFS on an explicit
/// adjacency matrix. Independent of the library's own connectivity code.
inline bool connected_in(const modmotif::VertexColoredGraph& g, const modmotif::VertexSet& s,
                         bool complement) {
  if (s.empty()) return false;
  std::vector<char> seen(s.size(), 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    auto i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (seen[j] || i == j) continue;
      if (g.adjacent(s[i], s[j]) != complement) {
        seen[j] = 1;
        ++count;
        stack.push_back(j);
      }
    }
  }
  return count == s.size();
}

/// Kind a node with vertex set `s` must carry.
inline modmotif::NodeKind expected_kind(const modmotif::VertexColoredGraph& g,
                                        const modmotif::VertexSet& s) {
  if (s.size() == 1) return modmotif::NodeKind::Leaf;
  if (!connected_in(g, s, false)) return modmotif::NodeKind::Parallel;
  if (!connected_in(g, s, true)) return modmotif::NodeKind::Series;
  return modmotif::NodeKind::Prime;
}

/// Modules predicted by the tree: its nodes plus every union of at least
/// two (but not all) children of a series or parallel node.
inline std::vector<modmotif::VertexSet> predicted_modules(const modmotif::ModularDecompositionTree& t) {
  std::vector<modmotif::VertexSet> out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    out.push_back(t.node(i).vertices);
    if (!t.is_degenerate(i)) continue;
    const auto& ch = t.node(i).children;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << ch.size()) - 1; ++mask) {
      if ((mask & (mask - 1)) == 0) continue;
      modmotif::VertexSet u;
      for (std::size_t c = 0; c < ch.size(); ++c) {
        if (mask >> c & 1) {
          const auto& vs = t.node(ch[c]).vertices;
          u.insert(u.end(), vs.begin(), vs.end());
        }
      }
      std::sort(u.begin(), u.end());
      out.push_back(std::move(u));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace test_support
