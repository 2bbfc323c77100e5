#include <doctest.h>

#include <map>
#include <set>

#include "modmotif/errors.hpp"
#include "modmotif/oracles.hpp"
#include "modmotif/random_instances.hpp"
#include "modmotif/solvers.hpp"
#include "modmotif/sub_motif_table.hpp"
#include "support.hpp"

using namespace modmotif;
using test_support::ids;

namespace {

ColorMultiset motif_of(const VertexColoredGraph& g, const std::string& text) {
  return parse_motif(text, g.universe_ptr());
}

ColorMultiset ms(const ColorUniversePtr& u, std::vector<std::uint32_t> occ) {
  return ColorMultiset(u, std::move(occ));
}

void check_simple_solution(const VertexColoredGraph& g, const ColorMultiset& m,
                           const MotifSolution& s) {
  CHECK(std::is_sorted(s.vertices.begin(), s.vertices.end()));
  CHECK(is_module(g, s.vertices));
  CHECK(color_multiset_of(g, s.vertices) == m);
  CHECK_FALSE(s.assignment.has_value());
}

void check_list_solution(const VertexColoredGraph& g, const ColorMultiset& m, std::size_t k,
                         const MotifSolution& s) {
  REQUIRE(s.assignment.has_value());
  CHECK(s.vertices.size() == k);
  CHECK(is_module(g, s.vertices));
  std::vector<std::uint32_t> occ(m.universe().size(), 0);
  for (std::size_t i = 0; i < s.vertices.size(); ++i) {
    auto c = (*s.assignment)[i];
    auto list = g.colors(s.vertices[i]);
    CHECK(std::find(list.begin(), list.end(), c) != list.end());
    if (c < occ.size()) ++occ[c];
  }
  CHECK(ColorMultiset(m.universe_ptr(), occ) == m);
}

std::vector<std::vector<ColorId>> lists_of(const VertexColoredGraph& g, const VertexSet& s) {
  std::vector<std::vector<ColorId>> out;
  for (auto v : s) out.emplace_back(g.colors(v).begin(), g.colors(v).end());
  return out;
}

}  // namespace

TEST_SUITE("motif_solvers") {
  TEST_CASE("strong-only: whole graph and single colors") {
    auto g = test_support::load_fixture_graph("appendix.gm");
    auto t = decompose(g);
    auto all = solve_strong_only(g, t, motif_of(g, "a 11"));
    REQUIRE(all);
    CHECK(all->tree_node == t.root());
    CHECK(all->vertices.size() == 11);

    auto p3 = test_support::load_fixture_graph("p3.gm");
    auto leaf = solve_strong_only(p3, decompose(p3), motif_of(p3, "blue 1"));
    REQUIRE(leaf);
    CHECK(leaf->vertices == ids(p3, {"b"}));
    CHECK(leaf->tree_node_kind == NodeKind::Leaf);
  }

  TEST_CASE("strong-only: {a,c} of P3 is strong") {
    // The only modules of P3 are V, {a,c} and the singletons; {a,c}
    // overlaps none of them, so it is a strong module and a tree node.
    auto g = test_support::load_fixture_graph("p3.gm");
    auto t = decompose(g);
    auto mods = enumerate_modules(g);
    CHECK(mods.size() == 5);
    CHECK(test_support::node_of(t, ids(g, {"a", "c"})) < t.size());

    auto s = solve_strong_only(g, t, test_support::load_fixture_motif("p3_red.motif", g));
    REQUIRE(s);
    CHECK(s->vertices == ids(g, {"a", "c"}));
    CHECK(s->tree_node_kind == NodeKind::Parallel);
  }

  TEST_CASE("strong-only misses weak modules") {
    // In K3 every pair is a module but none is strong.
    auto g = parse_graph("v x a\nv y b\nv z c\ne x y\ne y z\ne x z\n");
    auto t = decompose(g);
    CHECK_FALSE(solve_strong_only(g, t, motif_of(g, "a 1\nb 1")));
    auto s = solve_module_motif(g, t, motif_of(g, "a 1\nb 1"));
    REQUIRE(s);
    CHECK(s->vertices == ids(g, {"x", "y"}));
    CHECK(s->tree_node == t.root());
    CHECK(s->tree_node_kind == NodeKind::Series);
  }

  TEST_CASE("module motif on the x3c fixture") {
    auto g = test_support::load_fixture_graph("fig3.gm");
    auto t = decompose(g);
    auto s = solve_module_motif(g, t, test_support::load_fixture_motif("fig3.motif", g));
    REQUIRE(s);
    CHECK(s->vertices == ids(g, {"v1^1", "v1^3", "v1^5", "v3^2", "v3^4", "v3^6"}));
    CHECK(s->tree_node_kind == NodeKind::Parallel);
    auto brute = find_module_motif_brute(g, test_support::load_fixture_motif("fig3.motif", g));
    REQUIRE(brute);
    CHECK(*brute == s->vertices);

    CHECK_FALSE(solve_module_motif(g, t, test_support::load_fixture_motif("fig3_wrong.motif", g)));
  }

  TEST_CASE("module motif: singletons and absent colors") {
    auto g = test_support::load_fixture_graph("p3.gm");
    auto t = decompose(g);
    auto s = solve_module_motif(g, t, motif_of(g, "blue 1"));
    REQUIRE(s);
    CHECK(s->vertices == ids(g, {"b"}));
    CHECK_FALSE(solve_module_motif(g, t, motif_of(g, "green 1")));
    CHECK_FALSE(solve_module_motif(g, t, motif_of(g, "red 3")));
  }

  TEST_CASE("module motif preconditions") {
    auto g = test_support::load_fixture_graph("p3_list.gm");
    auto t = decompose(g);
    CHECK_THROWS_AS(solve_module_motif(g, t, motif_of(g, "blue 1")), InputError);
    CHECK_THROWS_AS(solve_strong_only(g, t, motif_of(g, "blue 1")), InputError);
    auto p3 = test_support::load_fixture_graph("p3.gm");
    CHECK_THROWS_AS(solve_module_motif(p3, decompose(p3), ColorMultiset(p3.universe_ptr())),
                    InputError);
  }

  TEST_CASE("dp_fill examples") {
    auto u = numbered_colors(2);
    auto m = ms(u, {2, 1});
    auto empty = dp_fill({}, m);
    CHECK(empty.size() == 1);
    CHECK(empty.reachable(ColorMultiset(u)));
    CHECK_FALSE(empty.target_reachable());

    std::vector<ColorMultiset> children{ms(u, {1, 0}), ms(u, {1, 0}), ms(u, {0, 1})};
    auto table = dp_fill(children, m);
    CHECK(table.target_reachable());
    auto w = table.witness(m);
    REQUIRE(w);
    CHECK(*w == std::vector<std::uint32_t>{0, 1, 2});
    // Reachable sums of subsets of {a, a, b}: all 6 sub-multisets of m.
    CHECK(table.size() == 6);
    CHECK(table.size() <= table.size_bound());

    std::vector<ColorMultiset> too_big{ms(u, {3, 0})};
    CHECK_THROWS_AS(dp_fill(too_big, m), InputError);
  }

  TEST_CASE("key codec") {
    auto u = numbered_colors(3);
    MotifKeyCodec codec(ms(u, {2, 0, 3}));
    CHECK(codec.key_space() == 12);
    CHECK(codec.motif_size() == 5);
    CHECK_FALSE(codec.unit(1));
    auto a = codec.encode(ms(u, {1, 0, 2}));
    auto b = codec.encode(ms(u, {1, 0, 1}));
    REQUIRE(a);
    REQUIRE(b);
    auto sum = codec.add(*a, *b);
    REQUIRE(sum);
    CHECK(*sum == codec.target());
    CHECK_FALSE(codec.add(*sum, *b));
    auto diff = codec.subtract(*sum, *a);
    REQUIRE(diff);
    CHECK(*diff == *b);
    CHECK_FALSE(codec.subtract(*b, *a));
    CHECK(codec.decode(a->index) == ms(u, {1, 0, 2}));
    CHECK_FALSE(codec.encode(ms(u, {0, 1, 0})));

    // 40 colors at occurrence 3 need 3 bits each: more than 64.
    auto wide = numbered_colors(40);
    CHECK_THROWS_AS(MotifKeyCodec(ColorMultiset(wide, std::vector<std::uint32_t>(40, 3))),
                    InputError);
  }

  TEST_CASE("key codec: lexicographic index order") {
    auto u = numbered_colors(3);
    auto m = ms(u, {1, 2, 1});
    MotifKeyCodec codec(m);
    std::vector<std::vector<std::uint32_t>> subs;
    for (std::uint32_t a = 0; a <= 1; ++a)
      for (std::uint32_t b = 0; b <= 2; ++b)
        for (std::uint32_t c = 0; c <= 1; ++c) subs.push_back({a, b, c});
    for (std::size_t i = 0; i < subs.size(); ++i) {
      auto key = codec.encode(ms(u, subs[i]));
      REQUIRE(key);
      CHECK(key->index == i);
    }
  }

  TEST_CASE("list-colored examples") {
    auto g = test_support::load_fixture_graph("p3_list.gm");
    auto t = decompose(g);
    auto m = test_support::load_fixture_motif("p3_list.motif", g);
    auto s = solve_list_colored(g, t, m, 2);
    REQUIRE(s);
    CHECK(s->vertices == ids(g, {"a", "c"}));
    check_list_solution(g, m, 2, *s);
    auto red = *g.universe().find("red");
    auto blue = *g.universe().find("blue");
    CHECK(*s->assignment == std::vector<ColorId>{red, blue});

    auto brute = find_list_colored_brute(g, m);
    REQUIRE(brute);
    CHECK(brute->vertices == s->vertices);

    CHECK_FALSE(solve_list_colored(g, t, motif_of(g, "yellow 1"), 1));
    CHECK_THROWS_AS(solve_list_colored(g, t, m, 3), InputError);
  }

  TEST_CASE("list-colored on a clique with one color") {
    auto g = parse_graph("v 1 c|c2\nv 2 c\nv 3 c\nv 4 c\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n");
    auto t = decompose(g);
    auto s = solve_list_colored(g, t, motif_of(g, "c 4"), 4);
    REQUIRE(s);
    CHECK(s->vertices == VertexSet{0, 1, 2, 3});
    check_list_solution(g, motif_of(g, "c 4"), 4, *s);
  }

  TEST_CASE("list-colored on a simple graph") {
    auto g = test_support::load_fixture_graph("fig3.gm");
    auto m = test_support::load_fixture_motif("fig3.motif", g);
    auto s = solve_list_colored(g, decompose(g), m, 6);
    REQUIRE(s);
    CHECK(s->vertices == ids(g, {"v1^1", "v1^3", "v1^5", "v3^2", "v3^4", "v3^6"}));
  }

  TEST_CASE("bijection examples") {
    auto u = numbered_colors(2);
    ColorId a = 0, b = 1;
    std::vector<std::vector<ColorId>> forced{{a}, {b}};
    CHECK(bijection_feasible(forced, ms(u, {1, 1})) == std::vector<ColorId>{a, b});

    std::vector<std::vector<ColorId>> hall{{a}, {a}};
    CHECK_FALSE(bijection_feasible(hall, ms(u, {1, 1})));
    CHECK_FALSE(bijection_brute(hall, ms(u, {1, 1})));

    std::vector<std::vector<ColorId>> swap{{a, b}, {a}};
    CHECK(bijection_feasible(swap, ms(u, {1, 1})) == std::vector<ColorId>{b, a});
    CHECK(bijection_brute(swap, ms(u, {1, 1})) == std::vector<ColorId>{b, a});

    CHECK_THROWS_AS(bijection_feasible(swap, ms(u, {2, 1})), InputError);
  }

  TEST_CASE("property: module motif agrees with the oracle") {
    Rng rng(31);
    for (int it = 0; it < 400; ++it) {
      const std::size_t n = 1 + rng() % 10;
      auto colors = numbered_colors(1 + rng() % 4);
      auto g = it % 2 ? random_modular_graph(rng, n, colors)
                      : random_graph(rng, n, 0.2 + 0.6 * (rng() % 100) / 100.0, colors);
      auto t = decompose(g);
      const std::size_t k = 1 + rng() % std::min(n, 3 * colors->size());
      auto m = random_motif(rng, colors, k, 3);
      auto got = solve_module_motif(g, t, m);
      auto want = find_module_motif_brute(g, m);
      CHECK(got.has_value() == want.has_value());
      if (got) check_simple_solution(g, m, *got);

      auto strong = solve_strong_only(g, t, m);
      if (strong) {
        CHECK(got.has_value());
        CHECK(test_support::node_of(t, strong->vertices) < t.size());
        check_simple_solution(g, m, *strong);
      }
    }
  }

  TEST_CASE("property: motifs read off modules are always found") {
    Rng rng(32);
    for (int it = 0; it < 200; ++it) {
      auto g = random_modular_graph(rng, 2 + rng() % 9, numbered_colors(3));
      auto mods = enumerate_modules(g);
      const auto& pick = mods[rng() % mods.size()];
      auto m = color_multiset_of(g, pick);
      auto got = solve_module_motif(g, decompose(g), m);
      REQUIRE(got);
      check_simple_solution(g, m, *got);
    }
  }

  TEST_CASE("property: enumeration lists exactly the matching modules") {
    Rng rng(33);
    for (int it = 0; it < 200; ++it) {
      const std::size_t n = 1 + rng() % 9;
      auto colors = numbered_colors(2);
      auto g = random_modular_graph(rng, n, colors);
      auto m = random_motif(rng, colors, 1 + rng() % std::min<std::size_t>(n, 6), 3);
      std::vector<VertexSet> want;
      for (const auto& s : enumerate_modules(g)) {
        if (color_multiset_of(g, s) == m) want.push_back(s);
      }
      auto sols = enumerate_module_motifs(g, decompose(g), m, 1u << 20);
      std::vector<VertexSet> got;
      for (const auto& s : sols) got.push_back(s.vertices);
      std::sort(got.begin(), got.end());
      CHECK(std::adjacent_find(got.begin(), got.end()) == got.end());
      CHECK(got == want);

      auto first = solve_module_motif(g, decompose(g), m);
      if (first) {
        REQUIRE_FALSE(sols.empty());
        CHECK(sols.front().vertices == first->vertices);
      }
      if (sols.size() > 1) {
        CHECK(enumerate_module_motifs(g, decompose(g), m, 1).size() == 1);
      }
    }
  }

  TEST_CASE("property: dp_fill matches subset sums") {
    Rng rng(34);
    for (int it = 0; it < 150; ++it) {
      auto u = numbered_colors(1 + rng() % 3);
      std::vector<std::uint32_t> occ(u->size());
      for (auto& o : occ) o = 1 + rng() % 3;
      ColorMultiset m(u, occ);
      const std::size_t count = rng() % 13;
      std::vector<ColorMultiset> children;
      for (std::size_t i = 0; i < count; ++i) {
        std::vector<std::uint32_t> c(u->size());
        for (std::size_t j = 0; j < c.size(); ++j) c[j] = rng() % (occ[j] + 1);
        if (std::all_of(c.begin(), c.end(), [](auto x) { return x == 0; })) c[0] = 1;
        children.emplace_back(u, c);
      }
      auto table = dp_fill(children, m);

      std::set<std::vector<std::uint32_t>> want;
      for (std::uint32_t mask = 0; mask < (1u << count); ++mask) {
        std::vector<std::uint32_t> sum(u->size(), 0);
        bool fits = true;
        for (std::size_t i = 0; i < count; ++i) {
          if (!(mask >> i & 1)) continue;
          for (std::size_t j = 0; j < sum.size(); ++j) {
            sum[j] += children[i].occ(static_cast<ColorId>(j));
            if (sum[j] > occ[j]) fits = false;
          }
        }
        if (fits) want.insert(sum);
      }

      std::set<std::vector<std::uint32_t>> got;
      auto reach = table.reachable_multisets();
      CHECK(std::is_sorted(reach.begin(), reach.end(), [](const auto& a, const auto& b) {
        return std::lexicographical_compare(a.counts().begin(), a.counts().end(),
                                            b.counts().begin(), b.counts().end());
      }));
      for (const auto& r : reach) {
        got.emplace(r.counts().begin(), r.counts().end());
        auto w = table.witness(r);
        REQUIRE(w);
        ColorMultiset sum(u);
        for (auto c : *w) sum = sum + children[c];
        CHECK(sum == r);
        CHECK(std::is_sorted(w->begin(), w->end()));
      }
      CHECK(got == want);
      CHECK(table.size() == want.size());
      CHECK(table.size() <= table.size_bound());
    }
  }

  TEST_CASE("property: table reset reproduces a fresh fill") {
    Rng rng(35);
    auto u = numbered_colors(2);
    ColorMultiset m(u, {3, 2});
    auto codec = std::make_shared<const MotifKeyCodec>(m);
    SubMotifTable table(codec);
    for (int it = 0; it < 50; ++it) {
      table.reset();
      std::vector<ColorMultiset> children;
      for (int i = 0; i < 5; ++i) {
        ColorMultiset c(u, {static_cast<std::uint32_t>(rng() % 2), static_cast<std::uint32_t>(rng() % 2)});
        if (c.empty()) continue;
        children.push_back(c);
        table.add_child(*codec->encode(c), static_cast<std::uint32_t>(children.size() - 1));
      }
      CHECK(table.reachable_multisets() == dp_fill(children, m).reachable_multisets());
    }
  }

  TEST_CASE("property: bijection matches exhaustive assignment") {
    Rng rng(36);
    for (int it = 0; it < 500; ++it) {
      auto u = numbered_colors(1 + rng() % 4);
      const std::size_t k = 1 + rng() % 6;
      auto m = random_motif(rng, u, k, 6);
      std::vector<std::vector<ColorId>> lists(k);
      for (auto& l : lists) {
        for (ColorId c = 0; c < u->size(); ++c)
          if (rng() % 2) l.push_back(c);
        if (l.empty()) l.push_back(static_cast<ColorId>(rng() % u->size()));
      }
      auto got = bijection_feasible(lists, m);
      auto want = bijection_brute(lists, m);
      CHECK(got.has_value() == want.has_value());
      if (got) {
        std::vector<std::uint32_t> occ(u->size(), 0);
        for (std::size_t i = 0; i < k; ++i) {
          CHECK(std::find(lists[i].begin(), lists[i].end(), (*got)[i]) != lists[i].end());
          ++occ[(*got)[i]];
        }
        CHECK(ColorMultiset(u, occ) == m);
      }
    }
  }

  TEST_CASE("property: list-colored agrees with the oracle") {
    Rng rng(37);
    for (int it = 0; it < 300; ++it) {
      const std::size_t n = 1 + rng() % 9;
      auto colors = numbered_colors(1 + rng() % 4);
      auto g = random_list_colored_graph(rng, n, 0.2 + 0.6 * (rng() % 100) / 100.0, colors, 3);
      const std::size_t k = 1 + rng() % std::min<std::size_t>(5, n);
      auto m = random_motif(rng, colors, k, 5);
      auto got = solve_list_colored(g, decompose(g), m, k);
      auto want = find_list_colored_brute(g, m);
      CHECK(got.has_value() == want.has_value());
      if (got) check_list_solution(g, m, k, *got);
      if (want) CHECK(bijection_feasible(lists_of(g, want->vertices), m).has_value());
    }
  }

  TEST_CASE("property: table never exceeds its bound") {
    Rng rng(38);
    for (int it = 0; it < 60; ++it) {
      auto colors = numbered_colors(2 + rng() % 3);
      auto g = random_modular_graph(rng, 20 + rng() % 40, colors);
      auto m = random_motif(rng, colors, 1 + rng() % std::min<std::size_t>(12, 5 * colors->size()), 5);
      SolveStats stats;
      solve_module_motif(g, decompose(g), m, &stats);
      MotifKeyCodec codec(m);
      auto bound = std::min<std::uint64_t>(std::uint64_t{1} << m.size(), codec.key_space());
      CHECK(stats.max_table_entries <= bound);
    }
  }

  TEST_CASE("determinism") {
    Rng rng(39);
    for (int it = 0; it < 30; ++it) {
      auto colors = numbered_colors(3);
      auto g = random_modular_graph(rng, 12, colors);
      auto m = random_motif(rng, colors, 4, 2);
      auto a = solve_module_motif(g, decompose(g), m);
      auto b = solve_module_motif(g, decompose(g), m);
      CHECK(a.has_value() == b.has_value());
      if (a && b) CHECK(a->vertices == b->vertices);
    }
  }
}
