#include "modmotif/random_instances.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>

#include "json.hpp"

#include "modmotif/decomposition.hpp"
#include "modmotif/errors.hpp"

namespace modmotif {

namespace {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

std::vector<std::string> plain_names(std::size_t n, const std::string& prefix = "",
                                     std::size_t first = 0) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(prefix + std::to_string(first + i));
  return names;
}

std::vector<ColorId> random_colors(Rng& rng, std::size_t n, const ColorUniversePtr& colors) {
  std::vector<ColorId> out(n);
  for (auto& c : out) c = static_cast<ColorId>(uniform(rng, 0, colors->size() - 1));
  return out;
}

std::vector<Edge> gnp_edges(Rng& rng, std::size_t lo, std::size_t n, double p) {
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (coin(rng, p)) edges.emplace_back(lo + u, lo + v);
    }
  }
  return edges;
}

void compose(Rng& rng, std::size_t lo, std::size_t n, std::vector<Edge>& edges) {
  if (n == 1) return;
  if (n <= 4 || coin(rng, 0.15)) {
    auto e = gnp_edges(rng, lo, n, 0.5);
    edges.insert(edges.end(), e.begin(), e.end());
    return;
  }
  const std::size_t parts = uniform(rng, 2, std::min<std::size_t>(n, 6));
  // Random composition of n into `parts` positive sizes.
  std::vector<std::size_t> cuts(n - 1);
  std::iota(cuts.begin(), cuts.end(), 1);
  std::shuffle(cuts.begin(), cuts.end(), rng);
  cuts.resize(parts - 1);
  cuts.push_back(0);
  cuts.push_back(n);
  std::sort(cuts.begin(), cuts.end());
  for (std::size_t i = 0; i < parts; ++i) compose(rng, lo + cuts[i], cuts[i + 1] - cuts[i], edges);

  const auto op = uniform(rng, 0, 2);  // 0 parallel, 1 series, 2 random quotient
  for (std::size_t a = 0; a < parts; ++a) {
    for (std::size_t b = a + 1; b < parts; ++b) {
      bool join = op == 1 || (op == 2 && coin(rng, 0.5));
      if (!join) continue;
      for (auto u = cuts[a]; u < cuts[a + 1]; ++u) {
        for (auto v = cuts[b]; v < cuts[b + 1]; ++v) edges.emplace_back(lo + u, lo + v);
      }
    }
  }
}

// Background G(b, 1/2) plus a module of independent vertices b..n-1 seen by
// a random half of the background.
std::vector<Edge> planted_edges(Rng& rng, std::size_t n, std::size_t module_size) {
  if (module_size < 2 || module_size >= n) throw InputError("module size must be in [2, n)");
  const std::size_t b = n - module_size;
  auto edges = gnp_edges(rng, 0, b, 0.5);
  for (std::size_t u = 0; u < b; ++u) {
    if (!coin(rng, 0.5)) continue;
    for (std::size_t v = b; v < n; ++v) edges.emplace_back(u, v);
  }
  return edges;
}

}  // namespace

ColorUniversePtr numbered_colors(std::size_t count) {
  auto u = std::make_shared<ColorUniverse>();
  for (std::size_t i = 1; i <= count; ++i) u->intern("c" + std::to_string(i));
  return u;
}

VertexColoredGraph random_graph(Rng& rng, std::size_t n, double p, const ColorUniversePtr& colors) {
  auto edges = gnp_edges(rng, 0, n, p);
  return VertexColoredGraph::simple(colors, plain_names(n), random_colors(rng, n, colors),
                                    std::move(edges));
}

VertexColoredGraph random_modular_graph(Rng& rng, std::size_t n, const ColorUniversePtr& colors) {
  std::vector<Edge> edges;
  compose(rng, 0, n, edges);
  return VertexColoredGraph::simple(colors, plain_names(n), random_colors(rng, n, colors),
                                    std::move(edges));
}

VertexColoredGraph random_list_colored_graph(Rng& rng, std::size_t n, double p,
                                             const ColorUniversePtr& colors,
                                             std::size_t max_list) {
  std::vector<std::vector<ColorId>> lists(n);
  std::vector<ColorId> all(colors->size());
  std::iota(all.begin(), all.end(), 0);
  for (auto& l : lists) {
    std::shuffle(all.begin(), all.end(), rng);
    auto len = uniform(rng, 1, std::min(max_list, all.size()));
    l.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(len));
    std::sort(l.begin(), l.end());
  }
  std::vector<Edge> edges;
  if (coin(rng, 0.5)) {
    edges = gnp_edges(rng, 0, n, p);
  } else {
    compose(rng, 0, n, edges);
  }
  return VertexColoredGraph::list_colored(colors, plain_names(n), std::move(lists),
                                          std::move(edges));
}

ColorMultiset random_motif(Rng& rng, const ColorUniversePtr& colors, std::size_t k,
                           std::uint32_t max_occ) {
  if (k > colors->size() * max_occ) throw InputError("motif size exceeds the color budget");
  std::vector<std::uint32_t> occ(colors->size(), 0);
  for (std::size_t placed = 0; placed < k;) {
    auto c = uniform(rng, 0, colors->size() - 1);
    if (occ[c] >= max_occ) continue;
    ++occ[c];
    ++placed;
  }
  return ColorMultiset(colors, std::move(occ));
}

VertexColoredGraph random_uncolored_graph(Rng& rng, std::size_t n, double p) {
  auto u = std::make_shared<ColorUniverse>();
  u->intern("x");
  auto edges = gnp_edges(rng, 0, n, p);
  return VertexColoredGraph::simple(u, plain_names(n, "v", 1), std::vector<ColorId>(n, 0),
                                    std::move(edges));
}

SetSystem random_set_system(Rng& rng, std::size_t universe_size, std::size_t sets) {
  if (sets == 0) throw InputError("need at least one set");
  SetSystem s{universe_size, std::vector<std::vector<std::size_t>>(sets)};
  for (auto& set : s.sets) {
    for (std::size_t e = 0; e < universe_size; ++e) {
      if (coin(rng, 0.4)) set.push_back(e);
    }
  }
  for (std::size_t e = 0; e < universe_size; ++e) {
    bool hit = std::any_of(s.sets.begin(), s.sets.end(), [&](const auto& set) {
      return std::binary_search(set.begin(), set.end(), e);
    });
    if (hit) continue;
    auto& set = s.sets[uniform(rng, 0, sets - 1)];
    set.insert(std::lower_bound(set.begin(), set.end(), e), e);
  }
  return s;
}

SetSystem random_triples(Rng& rng, std::size_t q, std::size_t sets, bool plant) {
  const std::size_t x = 3 * q;
  SetSystem s{x, {}};
  std::vector<std::size_t> elems(x);
  std::iota(elems.begin(), elems.end(), 0);
  if (plant) {
    std::shuffle(elems.begin(), elems.end(), rng);
    for (std::size_t i = 0; i < q && s.sets.size() < sets; ++i) {
      std::vector<std::size_t> t(elems.begin() + 3 * i, elems.begin() + 3 * i + 3);
      std::sort(t.begin(), t.end());
      s.sets.push_back(std::move(t));
    }
  }
  while (s.sets.size() < sets) {
    std::shuffle(elems.begin(), elems.end(), rng);
    std::vector<std::size_t> t(elems.begin(), elems.begin() + 3);
    std::sort(t.begin(), t.end());
    s.sets.push_back(std::move(t));
  }
  std::shuffle(s.sets.begin(), s.sets.end(), rng);
  return s;
}

PlantedInstance planted_colorful_instance(Rng& rng, std::size_t n, std::size_t k,
                                          std::size_t module_size) {
  if (k < 2 || module_size < k) throw InputError("need 2 <= k <= module size");
  auto u = std::make_shared<ColorUniverse>(*numbered_colors(k));
  const ColorId bg = u->intern("bg");
  const std::size_t b = n - module_size;
  std::vector<ColorId> colors(n, bg);
  for (std::size_t i = 0; i + 1 < module_size; ++i) {
    colors[b + i] = static_cast<ColorId>(i % (k - 1));
  }
  colors[n - 1] = static_cast<ColorId>(k - 1);
  auto edges = planted_edges(rng, n, module_size);
  std::vector<std::uint32_t> occ(u->size(), 0);
  std::fill(occ.begin(), occ.begin() + static_cast<std::ptrdiff_t>(k), 1);
  ColorUniversePtr up = u;
  return {VertexColoredGraph::simple(up, plain_names(n), std::move(colors), std::move(edges)),
          ColorMultiset(up, std::move(occ))};
}

PlantedInstance planted_three_color_instance(Rng& rng, std::size_t n, std::size_t k,
                                             std::size_t module_size) {
  const std::uint32_t a = static_cast<std::uint32_t>(k / 3);
  const std::uint32_t c = static_cast<std::uint32_t>(k - 2 * (k / 3));
  if (a == 0 || module_size < k) throw InputError("need 3 <= k <= module size");
  auto u = std::make_shared<ColorUniverse>(*numbered_colors(3));
  const ColorId bg = u->intern("bg");
  const std::size_t b = n - module_size;
  std::vector<ColorId> colors(n, bg);
  const std::size_t decoys = module_size - c;
  for (std::size_t i = 0; i < decoys; ++i) colors[b + i] = static_cast<ColorId>(i % 2);
  for (std::size_t i = decoys; i < module_size; ++i) colors[b + i] = 2;
  auto edges = planted_edges(rng, n, module_size);
  ColorUniversePtr up = u;
  return {VertexColoredGraph::simple(up, plain_names(n), std::move(colors), std::move(edges)),
          ColorMultiset(up, {a, a, c, 0})};
}

void generate_corpus(std::uint64_t seed, std::size_t count, std::size_t min_n,
                     std::size_t max_n, const std::filesystem::path& dir) {
  if (min_n < 1 || min_n > max_n) throw InputError("invalid size range");
  std::filesystem::create_directories(dir);
  Rng rng(seed);
  nlohmann::ordered_json index = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < count; ++i) {
    const auto n = uniform(rng, min_n, max_n);
    auto colors = numbered_colors(uniform(rng, 1, 4));
    auto g = coin(rng, 0.5) ? random_modular_graph(rng, n, colors)
                            : random_graph(rng, n, 0.3 + 0.4 * std::uniform_real_distribution<>(0, 1)(rng), colors);
    const bool planted = i % 2 == 1;
    std::optional<ColorMultiset> m;
    if (planted) {
      auto t = decompose(g);
      const auto pick = uniform(rng, 0, t.size() - 1);
      const auto& node = t.node(pick);
      VertexSet s;
      if (t.is_degenerate(pick) && coin(rng, 0.5)) {
        for (auto c : node.children) {
          if (coin(rng, 0.5)) {
            const auto& vs = t.node(c).vertices;
            s.insert(s.end(), vs.begin(), vs.end());
          }
        }
      }
      if (s.empty()) s = node.vertices;
      std::sort(s.begin(), s.end());
      m = color_multiset_of(g, s);
    } else {
      m = random_motif(rng, colors, uniform(rng, 1, std::min<std::size_t>(n, colors->size() * 3)), 3);
    }
    char stem[32];
    std::snprintf(stem, sizeof stem, "instance_%03zu", i);
    write_text_file(dir / (std::string(stem) + ".gm"), serialize_graph(g));
    write_text_file(dir / (std::string(stem) + ".motif"), serialize_motif(*m));
    index.push_back({{"name", stem}, {"n", n}, {"edges", g.edge_count()}, {"k", m->size()},
                     {"planted", planted}});
  }
  write_text_file(dir / "index.json", index.dump(2) + "\n");
}

}  // namespace modmotif
