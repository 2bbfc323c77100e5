#include "modmotif/solvers.hpp"

#include <algorithm>
#include <memory>

#include "modmotif/errors.hpp"

namespace modmotif {

namespace {

using Key = MotifKeyCodec::Key;

void require_simple(const VertexColoredGraph& g) {
  if (g.mode() != ColoringMode::Simple) {
    throw InputError("this solver needs a simple-mode graph; use solve_list_colored");
  }
}

void require_motif_over(const VertexColoredGraph& g, const ColorMultiset& m) {
  require_compatible(g.universe(), m.universe());
  if (m.empty()) throw InputError("the motif must be nonempty");
}

// Key of each tree node's color multiset, or nullopt when it is not a
// sub-multiset of the motif. Children follow parents in pre-order, so a
// reverse sweep sees every child before its parent.
std::vector<std::optional<Key>> node_keys(const VertexColoredGraph& g,
                                          const ModularDecompositionTree& t,
                                          const MotifKeyCodec& codec) {
  std::vector<std::optional<Key>> keys(t.size());
  for (std::size_t i = t.size(); i-- > 0;) {
    const auto& node = t.node(i);
    if (node.kind == NodeKind::Leaf) {
      keys[i] = codec.unit(g.color(node.vertices.front()));
      continue;
    }
    std::optional<Key> sum = codec.zero();
    for (auto c : node.children) {
      if (!keys[c]) {
        sum.reset();
        break;
      }
      sum = codec.add(*sum, *keys[c]);
      if (!sum) break;
    }
    keys[i] = sum;
  }
  return keys;
}

MotifSolution node_solution(const ModularDecompositionTree& t, std::size_t i) {
  return {t.node(i).vertices, std::nullopt, i, t.node(i).kind};
}

MotifSolution union_solution(const ModularDecompositionTree& t, std::size_t parent,
                             std::span<const std::size_t> children) {
  MotifSolution s;
  for (auto c : children) {
    const auto& vs = t.node(c).vertices;
    s.vertices.insert(s.vertices.end(), vs.begin(), vs.end());
  }
  std::sort(s.vertices.begin(), s.vertices.end());
  s.tree_node = parent;
  s.tree_node_kind = t.node(parent).kind;
  return s;
}

}  // namespace

std::optional<MotifSolution> solve_strong_only(const VertexColoredGraph& g,
                                               const ModularDecompositionTree& t,
                                               const ColorMultiset& m) {
  require_simple(g);
  require_motif_over(g, m);
  std::vector<std::uint32_t> count(std::max(g.universe().size(), m.counts().size()), 0);
  for (std::size_t i = 0; i < t.size(); ++i) {
    const auto& vs = t.node(i).vertices;
    if (vs.size() != m.size()) continue;
    bool equal = true;
    for (auto v : vs) {
      auto c = g.color(v);
      if (++count[c] > m.occ(c)) equal = false;
    }
    for (auto v : vs) count[g.color(v)] = 0;
    if (equal) return node_solution(t, i);
  }
  return std::nullopt;
}

std::optional<MotifSolution> solve_module_motif(const VertexColoredGraph& g,
                                                const ModularDecompositionTree& t,
                                                const ColorMultiset& m,
                                                SolveStats* stats) {
  require_simple(g);
  require_motif_over(g, m);
  auto codec = std::make_shared<const MotifKeyCodec>(m);
  const auto target = codec->target();
  auto keys = node_keys(g, t, *codec);
  SubMotifTable table(codec);

  std::vector<std::size_t> fitting;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (keys[i] && *keys[i] == target) return node_solution(t, i);
    if (!t.is_degenerate(i)) continue;

    fitting.clear();
    for (auto c : t.node(i).children) {
      if (!keys[c]) continue;
      if (*keys[c] == target) return node_solution(t, c);
      fitting.push_back(c);
    }
    if (fitting.size() < 2) continue;

    table.reset();
    if (stats) ++stats->dp_runs;
    for (std::uint32_t j = 0; j < fitting.size(); ++j) {
      bool hit = table.add_child(*keys[fitting[j]], j);
      if (stats) stats->max_table_entries = std::max(stats->max_table_entries, table.size());
      if (!hit) continue;
      std::vector<std::size_t> chosen;
      auto witness = table.witness(target);
      for (auto w : *witness) chosen.push_back(fitting[w]);
      return union_solution(t, i, chosen);
    }
  }
  return std::nullopt;
}

std::vector<MotifSolution> enumerate_module_motifs(const VertexColoredGraph& g,
                                                   const ModularDecompositionTree& t,
                                                   const ColorMultiset& m,
                                                   std::size_t cap) {
  require_simple(g);
  require_motif_over(g, m);
  std::vector<MotifSolution> out;
  if (cap == 0) return out;
  // The single-solution answer leads, the rest follow in tree order.
  auto first = solve_module_motif(g, t, m);
  if (!first) return out;
  out.push_back(*first);
  auto emit = [&](MotifSolution s) {
    if (s.vertices != first->vertices) out.push_back(std::move(s));
  };
  MotifKeyCodec codec(m);
  const auto target = codec.target();
  auto keys = node_keys(g, t, codec);

  auto by_index = [](const Key& a, const Key& b) { return a.index < b.index; };
  auto contains = [&](const std::vector<Key>& set, const Key& k) {
    return std::binary_search(set.begin(), set.end(), k, by_index);
  };

  for (std::size_t i = 0; i < t.size() && out.size() < cap; ++i) {
    if (keys[i] && *keys[i] == target) emit(node_solution(t, i));
    if (!t.is_degenerate(i) || out.size() >= cap) continue;

    const auto& children = t.node(i).children;
    std::vector<std::size_t> fitting;
    for (auto c : children) {
      if (keys[c]) fitting.push_back(c);
    }
    if (fitting.size() < 2) continue;

    // reach[j]: sums of sub-collections of fitting[j..], sorted by index.
    const std::size_t f = fitting.size();
    std::vector<std::vector<Key>> reach(f + 1);
    reach[f] = {codec.zero()};
    std::vector<Key> shifted;
    for (std::size_t j = f; j-- > 0;) {
      shifted.clear();
      for (const auto& k : reach[j + 1]) {
        if (auto s = codec.add(k, *keys[fitting[j]])) shifted.push_back(*s);
      }
      std::sort(shifted.begin(), shifted.end(), by_index);
      std::set_union(reach[j + 1].begin(), reach[j + 1].end(), shifted.begin(),
                     shifted.end(), std::back_inserter(reach[j]), by_index);
    }
    if (!contains(reach[0], target)) continue;

    std::vector<std::size_t> chosen;
    // Include-first search, so unions come out in lexicographic order of
    // their child-inclusion vectors. Every branch taken can still finish.
    auto search = [&](auto&& self, std::size_t j, Key remaining) -> void {
      if (out.size() >= cap) return;
      if (remaining.index == 0) {
        if (chosen.size() >= 2 && chosen.size() < children.size()) {
          emit(union_solution(t, i, chosen));
        }
        return;
      }
      if (j == f) return;
      if (auto rest = codec.subtract(remaining, *keys[fitting[j]]);
          rest && contains(reach[j + 1], *rest)) {
        chosen.push_back(fitting[j]);
        self(self, j + 1, *rest);
        chosen.pop_back();
      }
      if (contains(reach[j + 1], remaining)) self(self, j + 1, remaining);
    };
    search(search, 0, target);
  }
  return out;
}

}  // namespace modmotif
