#include "modmotif/reductions.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "modmotif/decomposition.hpp"
#include "modmotif/errors.hpp"
#include "modmotif/oracles.hpp"
#include "modmotif/solvers.hpp"

namespace modmotif {

namespace {

std::string idx(std::size_t i) { return std::to_string(i + 1); }

ColorMultiset all_colors_once(const ColorUniversePtr& u, std::size_t count) {
  std::vector<std::uint32_t> occ(u->size(), 0);
  std::fill(occ.begin(), occ.begin() + static_cast<std::ptrdiff_t>(count), 1);
  return ColorMultiset(u, std::move(occ));
}

void require_kind(const ReductionCertificate& cert, ReductionKind kind) {
  if (cert.kind != kind) {
    throw InputError("certificate is " + std::string(to_string(cert.kind)) + ", expected " +
                     std::string(to_string(kind)));
  }
}

VertexSet checked_set(std::span<const VertexId> ids, std::size_t n, const char* what) {
  VertexSet s(ids.begin(), ids.end());
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
    throw InvalidSolution(std::string(what) + " repeats a vertex");
  }
  if (!s.empty() && s.back() >= n) throw InvalidSolution(std::string(what) + ": vertex id out of range");
  return s;
}

std::vector<std::size_t> checked_indices(std::span<const std::size_t> ids, std::size_t n,
                                         const char* what) {
  std::vector<std::size_t> s(ids.begin(), ids.end());
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
    throw InvalidSolution(std::string(what) + " repeats a set");
  }
  if (!s.empty() && s.back() >= n) throw InvalidSolution(std::string(what) + ": set index out of range");
  return s;
}

std::vector<std::vector<std::size_t>> checked_sets(const SetSystem& s) {
  auto sets = s.sets;
  for (auto& set : sets) {
    std::sort(set.begin(), set.end());
    if (std::adjacent_find(set.begin(), set.end()) != set.end()) {
      throw InputError("repeated element in a set");
    }
    if (!set.empty() && set.back() >= s.universe_size) throw InputError("element out of range");
  }
  return sets;
}

bool covers(const SetSystem& s, std::span<const std::size_t> chosen) {
  std::vector<char> hit(s.universe_size, 0);
  for (auto i : chosen) {
    for (auto e : s.sets[i]) hit[e] = 1;
  }
  return std::all_of(hit.begin(), hit.end(), [](char h) { return h != 0; });
}

bool exact_cover(const SetSystem& s, std::span<const std::size_t> chosen) {
  std::vector<int> hits(s.universe_size, 0);
  for (auto i : chosen) {
    for (auto e : s.sets[i]) ++hits[e];
  }
  return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

bool colorful_within(const VertexColoredGraph& g, const ColorMultiset& m,
                     std::span<const VertexId> s) {
  std::vector<std::uint32_t> seen(g.universe().size(), 0);
  for (auto v : s) {
    auto c = g.color(v);
    if (++seen[c] > 1 || m.occ(c) == 0) return false;
  }
  return true;
}

long long ceil_div(long long a, long long b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); }

std::string join(std::span<const std::size_t> xs) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? "," : "") << xs[i] + 1;
  out << '}';
  return out.str();
}

}  // namespace

std::string_view to_string(ReductionKind kind) {
  switch (kind) {
    case ReductionKind::MisToMaxMotif: return "mis2maxmotif";
    case ReductionKind::SetCoverToMinSubst: return "sc2minsubst";
    case ReductionKind::X3cToModuleMotif: return "x3c2module";
  }
  return "?";
}

std::optional<ReductionKind> reduction_kind_from_string(std::string_view s) {
  for (auto k : {ReductionKind::MisToMaxMotif, ReductionKind::SetCoverToMinSubst,
                 ReductionKind::X3cToModuleMotif}) {
    if (to_string(k) == s) return k;
  }
  return std::nullopt;
}

bool VerificationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const BoundCheck& c) { return c.ok; });
}

ReductionCertificate gen_mis_to_maxmotif(const VertexColoredGraph& source) {
  const std::size_t n = source.vertex_count();
  if (n == 0) throw InputError("the source graph must be nonempty");
  const auto& edges = source.edges();
  const std::size_t n2 = n * n;

  auto universe = std::make_shared<ColorUniverse>();
  universe->intern("c_r");
  std::vector<ColorId> edge_color;
  for (auto [a, b] : edges) edge_color.push_back(universe->intern("c_e" + idx(a) + "_" + idx(b)));

  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    adj[edges[e].first].push_back(e);
    adj[edges[e].second].push_back(e);
  }

  std::vector<std::string> names{"r"};
  std::vector<ColorId> colors{0};
  std::vector<GadgetRole> roles{{"root", {}}};
  std::vector<Edge> tree_edges;
  std::vector<std::vector<VertexId>> paths(n);
  auto add = [&](std::string name, ColorId c, GadgetRole role) {
    auto v = static_cast<VertexId>(names.size());
    names.push_back(std::move(name));
    colors.push_back(c);
    roles.push_back(std::move(role));
    return v;
  };
  for (std::size_t i = 0; i < n; ++i) {
    VertexId prev = 0;
    for (auto e : adj[i]) {
      auto [a, b] = edges[e];
      auto v = add("v" + idx(i) + "^e" + idx(a) + "_" + idx(b), edge_color[e],
                   {"path_edge", {static_cast<std::uint32_t>(i + 1), static_cast<std::uint32_t>(e + 1)}});
      tree_edges.emplace_back(prev, v);
      paths[i].push_back(v);
      prev = v;
    }
    for (std::size_t j = 1; j <= n2; ++j) {
      auto c = universe->intern("c" + idx(i) + "^" + std::to_string(j));
      auto v = add("v" + idx(i) + "^" + std::to_string(j), c,
                   {"path_private", {static_cast<std::uint32_t>(i + 1), static_cast<std::uint32_t>(j)}});
      tree_edges.emplace_back(prev, v);
      paths[i].push_back(v);
      prev = v;
    }
  }
  if (names.size() != 1 + 2 * edges.size() + n * n2) {
    throw std::logic_error("mis2maxmotif size formula violated");
  }
  ColorUniversePtr u = universe;
  auto motif = all_colors_once(u, u->size());
  auto g = VertexColoredGraph::simple(u, std::move(names), std::move(colors), std::move(tree_edges));
  return ReductionCertificate{ReductionKind::MisToMaxMotif, source, std::nullopt, std::move(g),
                              std::move(motif), std::move(roles), edges, 0, std::move(paths), {}};
}

ReductionCertificate gen_setcover_to_minsubst(const SetSystem& source) {
  auto sets = checked_sets(source);
  const std::size_t m = sets.size();
  const std::size_t x = source.universe_size;
  if (m == 0) throw InputError("the set system must have at least one set");
  const std::size_t copies = m + 1;

  auto universe = std::make_shared<ColorUniverse>();
  universe->intern("c_r");
  for (std::size_t k = 0; k < x; ++k) {
    for (std::size_t t = 1; t <= copies; ++t) universe->intern("c" + idx(k) + "_" + std::to_string(t));
  }
  const std::size_t motif_colors = universe->size();
  auto copy_color = [&](std::size_t k, std::size_t t) {
    return static_cast<ColorId>(1 + k * copies + (t - 1));
  };

  std::vector<std::string> names{"r"};
  std::vector<ColorId> colors{0};
  std::vector<GadgetRole> roles{{"root", {}}};
  std::vector<Edge> edges;
  std::vector<std::vector<VertexId>> groups(m);
  std::vector<VertexId> subset_vertices;
  std::size_t leaves = 0;
  for (std::size_t i = 0; i < m; ++i) {
    auto vi = static_cast<VertexId>(names.size());
    names.push_back("v" + idx(i));
    colors.push_back(universe->intern("c" + idx(i)));
    roles.push_back({"subset", {static_cast<std::uint32_t>(i + 1)}});
    edges.emplace_back(0, vi);
    subset_vertices.push_back(vi);
    for (std::size_t j = 0; j < sets[i].size(); ++j) {
      for (std::size_t t = 1; t <= copies; ++t) {
        auto v = static_cast<VertexId>(names.size());
        names.push_back("v" + idx(i) + "_" + idx(j) + "_" + std::to_string(t));
        colors.push_back(copy_color(sets[i][j], t));
        roles.push_back({"element_copy", {static_cast<std::uint32_t>(i + 1),
                                          static_cast<std::uint32_t>(j + 1),
                                          static_cast<std::uint32_t>(t)}});
        edges.emplace_back(vi, v);
        groups[i].push_back(v);
        ++leaves;
      }
    }
  }
  std::size_t expected_leaves = 0;
  for (const auto& s : sets) expected_leaves += copies * s.size();
  if (leaves != expected_leaves) throw std::logic_error("sc2minsubst leaf count violated");

  ColorUniversePtr u = universe;
  auto motif = all_colors_once(u, motif_colors);
  if (motif.size() != 1 + x * copies) throw std::logic_error("sc2minsubst motif size violated");
  auto g = VertexColoredGraph::simple(u, std::move(names), std::move(colors), std::move(edges));
  SetSystem normalized{x, std::move(sets)};
  return ReductionCertificate{ReductionKind::SetCoverToMinSubst, std::nullopt,
                              std::move(normalized), std::move(g), std::move(motif),
                              std::move(roles), {}, 0, std::move(groups),
                              std::move(subset_vertices)};
}

ReductionCertificate gen_x3c_to_modulemotif(const SetSystem& source) {
  auto sets = checked_sets(source);
  if (source.universe_size % 3 != 0) throw InputError("|X| must be a multiple of 3");
  if (sets.empty()) throw InputError("the set system must have at least one triple");
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (sets[i].size() != 3) {
      throw InputError("set " + idx(i) + " does not have three elements");
    }
  }
  auto universe = std::make_shared<ColorUniverse>();
  for (std::size_t j = 0; j < source.universe_size; ++j) universe->intern("c" + idx(j));

  std::vector<std::string> names;
  std::vector<ColorId> colors;
  std::vector<GadgetRole> roles;
  std::vector<Edge> edges;
  std::vector<std::vector<VertexId>> groups(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (auto j : sets[i]) {
      groups[i].push_back(static_cast<VertexId>(names.size()));
      names.push_back("v" + idx(i) + "^" + idx(j));
      colors.push_back(static_cast<ColorId>(j));
      roles.push_back({"triple_element", {static_cast<std::uint32_t>(i + 1),
                                          static_cast<std::uint32_t>(j + 1)}});
    }
    edges.emplace_back(groups[i][0], groups[i][1]);
    edges.emplace_back(groups[i][1], groups[i][2]);
  }
  if (names.size() != 3 * sets.size()) throw std::logic_error("x3c2module size formula violated");
  ColorUniversePtr u = universe;
  auto motif = all_colors_once(u, u->size());
  auto g = VertexColoredGraph::simple(u, std::move(names), std::move(colors), std::move(edges));
  SetSystem normalized{source.universe_size, std::move(sets)};
  return ReductionCertificate{ReductionKind::X3cToModuleMotif, std::nullopt,
                              std::move(normalized), std::move(g), std::move(motif),
                              std::move(roles), {}, 0, std::move(groups), {}};
}

VertexSet map_is_to_motif_solution(const ReductionCertificate& cert,
                                   std::span<const VertexId> is) {
  require_kind(cert, ReductionKind::MisToMaxMotif);
  const auto& src = *cert.source_graph;
  auto s = checked_set(is, src.vertex_count(), "independent set");
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t b = a + 1; b < s.size(); ++b) {
      if (src.adjacent(s[a], s[b])) {
        throw InvalidSolution("not independent: " + src.name(s[a]) + " - " + src.name(s[b]));
      }
    }
  }
  VertexSet out{cert.root};
  for (auto v : s) out.insert(out.end(), cert.groups[v].begin(), cert.groups[v].end());
  std::sort(out.begin(), out.end());
  return out;
}

VertexSet map_motif_to_is_solution(const ReductionCertificate& cert,
                                   std::span<const VertexId> v_prime) {
  require_kind(cert, ReductionKind::MisToMaxMotif);
  const auto& g = cert.graph;
  auto s = checked_set(v_prime, g.vertex_count(), "solution");
  if (s.empty()) throw InvalidSolution("solution is empty");
  if (!induces_connected(g, s)) throw InvalidSolution("solution does not induce a connected subgraph");
  if (!colorful_within(g, cert.motif, s)) throw InvalidSolution("solution repeats a color");

  std::vector<char> in(g.vertex_count(), 0);
  for (auto v : s) in[v] = 1;
  if (!in[cert.root]) {
    // Connected and avoiding r, so it lies on one path.
    auto i = cert.roles[s.front()].index[0] - 1;
    in[cert.root] = 1;
    for (auto v : cert.groups[i]) in[v] = 1;
  }
  const auto& src = *cert.source_graph;
  VertexSet out;
  for (VertexId i = 0; i < src.vertex_count(); ++i) {
    const auto& path = cert.groups[i];
    const std::size_t d = src.degree(i);
    bool edges_in = std::all_of(path.begin(), path.begin() + static_cast<std::ptrdiff_t>(d),
                                [&](VertexId v) { return in[v] != 0; });
    if (edges_in) out.push_back(i);
  }
  return out;
}

VertexSet map_cover_to_subst_solution(const ReductionCertificate& cert,
                                      std::span<const std::size_t> cover) {
  require_kind(cert, ReductionKind::SetCoverToMinSubst);
  const auto& sys = *cert.source_sets;
  auto c = checked_indices(cover, sys.sets.size(), "cover");
  if (!covers(sys, c)) throw InvalidSolution("not a cover of X");
  const std::size_t copies = sys.sets.size() + 1;

  if (sys.universe_size == 0) {
    if (c.empty()) return {cert.root};
    if (c.size() == 1) return {cert.subset_vertices[c[0]]};
    throw InputError("with X empty a solution has one vertex, so at most one substitution");
  }

  // S_min^k: first set of the cover, in index order, holding x_k.
  std::vector<std::size_t> first(sys.universe_size, sys.sets.size());
  for (auto i : c) {
    for (auto e : sys.sets[i]) first[e] = std::min(first[e], i);
  }
  VertexSet out{cert.root};
  std::vector<std::size_t> traded;
  for (auto i : c) {
    out.push_back(cert.subset_vertices[i]);
    bool seen_f = false;
    for (std::size_t j = 0; j < sys.sets[i].size(); ++j) {
      if (first[sys.sets[i][j]] != i) continue;
      std::size_t t0 = seen_f ? 1 : 2;  // copy t=1 of the f_i-th element is left out
      seen_f = true;
      for (std::size_t t = t0; t <= copies; ++t) out.push_back(cert.groups[i][j * copies + t - 1]);
    }
    if (!seen_f) traded.push_back(i);
  }
  std::sort(out.begin(), out.end());
  // Each set not needed by any element still costs one substitution: drop
  // the copy with the highest id in exchange for its v_i.
  for (std::size_t n = 0; n < traded.size(); ++n) {
    auto it = std::find_if(out.rbegin(), out.rend(), [&](VertexId v) {
      return cert.roles[v].kind == "element_copy";
    });
    out.erase(std::next(it).base());
  }
  return out;
}

std::vector<std::size_t> map_subst_to_cover_solution(const ReductionCertificate& cert,
                                                     std::span<const VertexId> v_prime) {
  require_kind(cert, ReductionKind::SetCoverToMinSubst);
  auto s = checked_set(v_prime, cert.graph.vertex_count(), "solution");
  auto subs = count_substitutions(cert.graph, cert.motif, s);
  const auto& sys = *cert.source_sets;
  std::vector<std::size_t> out;
  if (subs >= sys.sets.size() + 1) {
    for (std::size_t i = 0; i < sys.sets.size(); ++i) out.push_back(i);
    return out;
  }
  for (std::size_t i = 0; i < sys.sets.size(); ++i) {
    if (std::binary_search(s.begin(), s.end(), cert.subset_vertices[i])) out.push_back(i);
  }
  return out;
}

VertexSet map_x3c_to_module_solution(const ReductionCertificate& cert,
                                     std::span<const std::size_t> cover) {
  require_kind(cert, ReductionKind::X3cToModuleMotif);
  const auto& sys = *cert.source_sets;
  auto c = checked_indices(cover, sys.sets.size(), "cover");
  if (!exact_cover(sys, c)) throw InvalidSolution("not an exact cover of X");
  VertexSet out;
  for (auto i : c) out.insert(out.end(), cert.groups[i].begin(), cert.groups[i].end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> map_module_to_x3c_solution(const ReductionCertificate& cert,
                                                    std::span<const VertexId> v_prime) {
  require_kind(cert, ReductionKind::X3cToModuleMotif);
  auto s = checked_set(v_prime, cert.graph.vertex_count(), "solution");
  if (s.empty() || !is_module(cert.graph, s)) throw InvalidSolution("solution is not a module");
  if (!(color_multiset_of(cert.graph, s) == cert.motif)) {
    throw InvalidSolution("solution colors differ from the motif");
  }
  std::vector<std::size_t> out;
  for (auto v : s) out.push_back(cert.roles[v].index[0] - 1);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

VerificationReport verify_lemma1(const ReductionCertificate& cert,
                                 std::span<const VertexId> is) {
  auto v = map_is_to_motif_solution(cert, is);
  const auto n = cert.source_graph->vertex_count();
  const auto chosen = std::set<VertexId>(is.begin(), is.end()).size();
  VerificationReport r;
  r.mapped.assign(v.begin(), v.end());
  r.checks.push_back({"connected", induces_connected(cert.graph, v), ""});
  r.checks.push_back({"colorful", colorful_within(cert.graph, cert.motif, v), ""});
  std::ostringstream d;
  d << "|V'| = " << v.size() << " >= |IS| * |V_I|^2 = " << chosen << " * " << n * n << " = "
    << chosen * n * n;
  r.checks.push_back({"size", v.size() >= chosen * n * n, d.str()});
  return r;
}

VerificationReport verify_lemma2(const ReductionCertificate& cert,
                                 std::span<const VertexId> v_prime) {
  auto is = map_motif_to_is_solution(cert, v_prime);
  const auto& src = *cert.source_graph;
  bool independent = true;
  for (std::size_t a = 0; a < is.size(); ++a) {
    for (std::size_t b = a + 1; b < is.size(); ++b) independent = independent && !src.adjacent(is[a], is[b]);
  }
  const auto size = static_cast<long long>(std::set<VertexId>(v_prime.begin(), v_prime.end()).size());
  const auto e = static_cast<long long>(src.edge_count());
  const auto n2 = static_cast<long long>(src.vertex_count() * src.vertex_count());
  const auto bound = ceil_div(size - 2 * e - 1, n2);
  VerificationReport r;
  r.mapped.assign(is.begin(), is.end());
  r.checks.push_back({"independent", independent, ""});
  std::ostringstream d;
  d << "|V'_I| = " << is.size() << " >= ceil((" << size << " - 2*" << e << " - 1) / " << n2
    << ") = " << bound;
  r.checks.push_back({"size", static_cast<long long>(is.size()) >= bound, d.str()});
  return r;
}

VerificationReport verify_lemma3(const ReductionCertificate& cert,
                                 std::span<const std::size_t> cover) {
  auto v = map_cover_to_subst_solution(cert, cover);
  VerificationReport r;
  r.mapped.assign(v.begin(), v.end());
  std::ostringstream size;
  size << "|V'| = " << v.size() << ", |M| = " << cert.motif.size();
  r.checks.push_back({"size", v.size() == cert.motif.size(), size.str()});
  bool connected = induces_connected(cert.graph, v);
  r.checks.push_back({"connected", connected, ""});
  if (connected && v.size() == cert.motif.size()) {
    auto subs = count_substitutions(cert.graph, cert.motif, v);
    std::ostringstream d;
    d << "substitutions = " << subs << ", |cover| = " << cover.size();
    r.checks.push_back({"substitutions", subs == cover.size(), d.str()});
  }
  return r;
}

VerificationReport verify_lemma4(const ReductionCertificate& cert,
                                 std::span<const VertexId> v_prime) {
  auto cover = map_subst_to_cover_solution(cert, v_prime);
  auto subs = count_substitutions(cert.graph, cert.motif, v_prime);
  VerificationReport r;
  r.mapped = cover;
  r.checks.push_back({"cover", covers(*cert.source_sets, cover), "S' = " + join(cover)});
  std::ostringstream d;
  d << "|S'| = " << cover.size() << " <= s = " << subs;
  r.checks.push_back({"size", cover.size() <= subs, d.str()});
  return r;
}

VerificationReport verify_x3c_equivalence(const ReductionCertificate& cert) {
  require_kind(cert, ReductionKind::X3cToModuleMotif);
  OracleBudget budget;
  budget.max_n = 63;
  budget.max_subsets = std::uint64_t{1} << 24;
  auto exact = x3c_brute(*cert.source_sets, budget);
  auto t = decompose(cert.graph);
  auto module = solve_module_motif(cert.graph, t, cert.motif);
  VerificationReport r;
  std::ostringstream d;
  d << "x3c: " << (exact ? "yes" : "no") << ", module motif: " << (module ? "yes" : "no");
  r.checks.push_back({"equivalent", exact.has_value() == module.has_value(), d.str()});
  if (exact) {
    auto v = map_x3c_to_module_solution(cert, *exact);
    bool ok = is_module(cert.graph, v) && color_multiset_of(cert.graph, v) == cert.motif;
    r.checks.push_back({"forward", ok, "cover " + join(*exact)});
  }
  if (module) {
    auto cover = map_module_to_x3c_solution(cert, module->vertices);
    r.checks.push_back({"backward", exact_cover(*cert.source_sets, cover), "cover " + join(cover)});
    r.mapped.assign(module->vertices.begin(), module->vertices.end());
  }
  return r;
}

bool certificate_consistent(const ReductionCertificate& cert) {
  auto regen = [&] {
    switch (cert.kind) {
      case ReductionKind::MisToMaxMotif: return gen_mis_to_maxmotif(*cert.source_graph);
      case ReductionKind::SetCoverToMinSubst: return gen_setcover_to_minsubst(*cert.source_sets);
      case ReductionKind::X3cToModuleMotif: break;
    }
    return gen_x3c_to_modulemotif(*cert.source_sets);
  }();
  return regen.graph == cert.graph && regen.motif == cert.motif && regen.roles == cert.roles;
}

}  // namespace modmotif
