#include "modmotif/oracles.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>

#include "modmotif/errors.hpp"

namespace modmotif {

namespace {

using Mask = std::uint64_t;

std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    // r * (n - k + i) / i stays exact; saturate instead of overflowing.
    auto num = static_cast<std::uint64_t>(n - k + i);
    if (r > std::numeric_limits<std::uint64_t>::max() / num) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    r = r * num / i;
  }
  return r;
}

std::uint64_t pow2(std::size_t n) {
  return n >= 64 ? std::numeric_limits<std::uint64_t>::max() : std::uint64_t{1} << n;
}

void check_n(std::size_t n, const OracleBudget& b, const char* what) {
  if (n > b.max_n || n > 63) {
    throw BudgetExceeded(std::string(what) + ": n = " + std::to_string(n) +
                         " exceeds the oracle limit of " +
                         std::to_string(std::min<std::size_t>(b.max_n, 63)));
  }
}

void check_count(std::uint64_t count, const OracleBudget& b, const char* what) {
  if (count > b.max_subsets) {
    throw BudgetExceeded(std::string(what) + ": " + std::to_string(count) +
                         " candidates exceed the budget of " +
                         std::to_string(b.max_subsets));
  }
}

// Calls fn(indices) on every k-subset of {0..n-1} in lexicographic order
// until fn returns true. Returns whether fn ever did.
template <class Fn>
bool for_each_combination(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return false;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    if (fn(std::span<const std::size_t>(idx))) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<Mask> adjacency_masks(const VertexColoredGraph& g) {
  std::vector<Mask> adj(g.vertex_count(), 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= Mask{1} << v;
    adj[v] |= Mask{1} << u;
  }
  return adj;
}

bool mask_is_module(const std::vector<Mask>& adj, Mask s) {
  for (std::size_t x = 0; x < adj.size(); ++x) {
    if (s >> x & 1) continue;
    Mask seen = adj[x] & s;
    if (seen != 0 && seen != s) return false;
  }
  return true;
}

Mask to_mask(std::span<const std::size_t> idx) {
  Mask s = 0;
  for (auto i : idx) s |= Mask{1} << i;
  return s;
}

VertexSet to_vertex_set(std::span<const std::size_t> idx) {
  return VertexSet(idx.begin(), idx.end());
}

// Calls fn on every assignment picking one entry of each list, in
// lexicographic order of list positions, until fn returns true.
template <class Fn>
bool for_each_assignment(std::span<const std::vector<ColorId>> lists, Fn&& fn) {
  for (const auto& l : lists) {
    if (l.empty()) return false;
  }
  std::vector<std::size_t> pos(lists.size(), 0);
  std::vector<ColorId> pick(lists.size());
  while (true) {
    for (std::size_t i = 0; i < lists.size(); ++i) pick[i] = lists[i][pos[i]];
    if (fn(std::span<const ColorId>(pick))) return true;
    std::size_t i = lists.size();
    while (i > 0 && pos[i - 1] + 1 == lists[i - 1].size()) pos[--i] = 0;
    if (i == 0) return false;
    ++pos[i - 1];
  }
}

bool hits_motif(std::span<const ColorId> colors, const ColorMultiset& m,
                std::vector<std::uint32_t>& scratch) {
  scratch.assign(m.counts().size(), 0);
  for (auto c : colors) {
    if (c >= scratch.size() || ++scratch[c] > m.occ(c)) return false;
  }
  return colors.size() == m.size();
}

}  // namespace

std::vector<VertexSet> enumerate_modules(const VertexColoredGraph& g, const OracleBudget& b) {
  const auto n = g.vertex_count();
  check_n(n, b, "enumerate-modules");
  check_count(pow2(n) - 1, b, "enumerate-modules");
  auto adj = adjacency_masks(g);
  std::vector<VertexSet> out;
  for (Mask s = 1; s < (Mask{1} << n); ++s) {
    if (!mask_is_module(adj, s)) continue;
    VertexSet vs;
    for (Mask r = s; r; r &= r - 1) vs.push_back(static_cast<VertexId>(std::countr_zero(r)));
    out.push_back(std::move(vs));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<VertexSet> find_module_motif_brute(const VertexColoredGraph& g,
                                                 const ColorMultiset& m,
                                                 const OracleBudget& b) {
  require_compatible(g.universe(), m.universe());
  const auto n = g.vertex_count();
  const auto k = m.size();
  check_n(n, b, "find-motif");
  if (k == 0 || k > n) return std::nullopt;
  check_count(binomial(n, k), b, "find-motif");
  auto adj = adjacency_masks(g);
  std::vector<ColorId> colors(k);
  std::vector<std::uint32_t> scratch;
  std::optional<VertexSet> found;
  for_each_combination(n, k, [&](std::span<const std::size_t> idx) {
    for (std::size_t i = 0; i < k; ++i) colors[i] = g.color(static_cast<VertexId>(idx[i]));
    if (!hits_motif(colors, m, scratch) || !mask_is_module(adj, to_mask(idx))) return false;
    found = to_vertex_set(idx);
    return true;
  });
  return found;
}

std::optional<ListColoredWitness> find_list_colored_brute(const VertexColoredGraph& g,
                                                          const ColorMultiset& m,
                                                          const OracleBudget& b) {
  require_compatible(g.universe(), m.universe());
  const auto n = g.vertex_count();
  const auto k = m.size();
  check_n(n, b, "list-colored");
  if (k == 0 || k > n) return std::nullopt;
  check_count(binomial(n, k), b, "list-colored");
  auto adj = adjacency_masks(g);
  std::optional<ListColoredWitness> found;
  std::vector<std::vector<ColorId>> lists(k);
  for_each_combination(n, k, [&](std::span<const std::size_t> idx) {
    if (!mask_is_module(adj, to_mask(idx))) return false;
    for (std::size_t i = 0; i < k; ++i) {
      auto cs = g.colors(static_cast<VertexId>(idx[i]));
      lists[i].assign(cs.begin(), cs.end());
    }
    auto f = bijection_brute(lists, m);
    if (!f) return false;
    found = ListColoredWitness{to_vertex_set(idx), std::move(*f)};
    return true;
  });
  return found;
}

std::optional<std::vector<ColorId>> bijection_brute(
    std::span<const std::vector<ColorId>> lists, const ColorMultiset& m) {
  std::vector<std::uint32_t> scratch;
  std::optional<std::vector<ColorId>> found;
  for_each_assignment(lists, [&](std::span<const ColorId> pick) {
    if (!hits_motif(pick, m, scratch)) return false;
    found.emplace(pick.begin(), pick.end());
    return true;
  });
  return found;
}

VertexSet max_independent_set_brute(const VertexColoredGraph& g, const OracleBudget& b) {
  const auto n = g.vertex_count();
  check_n(n, b, "mis");
  check_count(pow2(n), b, "mis");
  auto adj = adjacency_masks(g);
  for (std::size_t k = n; k > 0; --k) {
    VertexSet found;
    bool hit = for_each_combination(n, k, [&](std::span<const std::size_t> idx) {
      Mask s = to_mask(idx);
      for (auto v : idx) {
        if (adj[v] & s) return false;
      }
      found = to_vertex_set(idx);
      return true;
    });
    if (hit) return found;
  }
  return {};
}

std::vector<std::size_t> min_set_cover_brute(const SetSystem& s, const OracleBudget& b) {
  const auto x = s.universe_size;
  if (x > 63) throw BudgetExceeded("setcover: |X| = " + std::to_string(x) + " exceeds 63");
  std::vector<Mask> sets;
  Mask all = 0;
  for (const auto& set : s.sets) {
    Mask m = 0;
    for (auto e : set) m |= Mask{1} << e;
    sets.push_back(m);
    all |= m;
  }
  const Mask want = x == 0 ? 0 : (Mask{1} << x) - 1;
  if ((all & want) != want) {
    for (std::size_t e = 0; e < x; ++e) {
      if (!(all >> e & 1)) {
        throw InputError("element " + std::to_string(e + 1) + " lies in no set");
      }
    }
  }
  check_n(sets.size(), b, "setcover");
  check_count(pow2(sets.size()), b, "setcover");
  for (std::size_t k = 0; k <= sets.size(); ++k) {
    std::vector<std::size_t> found;
    bool hit = for_each_combination(sets.size(), k, [&](std::span<const std::size_t> idx) {
      Mask u = 0;
      for (auto i : idx) u |= sets[i];
      if (u != want) return false;
      found.assign(idx.begin(), idx.end());
      return true;
    });
    if (hit) return found;
  }
  return {};  // unreachable: the full collection covers X
}

std::optional<std::vector<std::size_t>> x3c_brute(const SetSystem& s, const OracleBudget& b) {
  const auto x = s.universe_size;
  if (x % 3 != 0) throw InputError("x3c needs |X| divisible by 3");
  if (x > 63) throw BudgetExceeded("x3c: |X| = " + std::to_string(x) + " exceeds 63");
  std::vector<Mask> sets;
  for (std::size_t i = 0; i < s.sets.size(); ++i) {
    if (s.sets[i].size() != 3) {
      throw InputError("set " + std::to_string(i + 1) + " does not have three elements");
    }
    Mask m = 0;
    for (auto e : s.sets[i]) m |= Mask{1} << e;
    sets.push_back(m);
  }
  check_n(sets.size(), b, "x3c");
  check_count(pow2(sets.size()), b, "x3c");
  const Mask want = x == 0 ? 0 : (Mask{1} << x) - 1;
  std::optional<std::vector<std::size_t>> found;
  for_each_combination(sets.size(), x / 3, [&](std::span<const std::size_t> idx) {
    Mask u = 0;
    for (auto i : idx) {
      if (u & sets[i]) return false;
      u |= sets[i];
    }
    if (u != want) return false;
    found.emplace(idx.begin(), idx.end());
    return true;
  });
  return found;
}

std::size_t count_substitutions(const VertexColoredGraph& g, const ColorMultiset& m,
                                std::span<const VertexId> s) {
  require_compatible(g.universe(), m.universe());
  if (s.size() != m.size()) {
    throw InvalidSolution("solution has " + std::to_string(s.size()) +
                          " vertices but the motif has " + std::to_string(m.size()));
  }
  if (s.empty()) return 0;
  std::vector<VertexId> sorted(s.begin(), s.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidSolution("solution repeats a vertex");
  }
  for (auto v : sorted) {
    if (v >= g.vertex_count()) throw InvalidSolution("vertex id out of range");
  }
  // Plain BFS inside s.
  std::vector<VertexId> stack{sorted.front()};
  std::vector<char> seen(sorted.size(), 0);
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    auto u = stack.back();
    stack.pop_back();
    for (auto w : g.neighbors(u)) {
      auto it = std::lower_bound(sorted.begin(), sorted.end(), w);
      if (it == sorted.end() || *it != w) continue;
      auto i = static_cast<std::size_t>(it - sorted.begin());
      if (seen[i]) continue;
      seen[i] = 1;
      ++reached;
      stack.push_back(w);
    }
  }
  if (reached != sorted.size()) throw InvalidSolution("solution does not induce a connected subgraph");

  std::vector<std::uint32_t> have(std::max(g.universe().size(), m.counts().size()), 0);
  for (auto v : sorted) ++have[g.color(v)];
  std::size_t matched = 0;
  for (ColorId c = 0; c < have.size(); ++c) matched += std::min(have[c], m.occ(c));
  return m.size() - matched;
}

}  // namespace modmotif
