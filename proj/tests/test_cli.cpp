#include <doctest.h>
#include <unistd.h>

#include <set>

#include "cli_cases.hpp"
#include "json.hpp"
#include "modmotif/io.hpp"
#include "support.hpp"

using nlohmann::json;

namespace {

std::filesystem::path scratch(const std::string& tag) {
  return std::filesystem::temp_directory_path() /
         ("modmotif_cli_" + tag + "_" + std::to_string(::getpid()));
}

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation run(std::vector<std::string> args) {
  std::ostringstream out, err;
  auto tmp = scratch("single");
  std::filesystem::create_directories(tmp);
  int code = modmotif::cli::run(
      test_support::expand(args, MODMOTIF_FIXTURES, tmp), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("every invocation: exit codes and byte-identical reruns") {
    const auto& cases = test_support::cli_cases();
    auto tmp = scratch("det");
    auto first = test_support::run_all_cases(MODMOTIF_FIXTURES, tmp);
    auto files_first = test_support::snapshot(tmp);
    auto second = test_support::run_all_cases(MODMOTIF_FIXTURES, tmp);
    auto files_second = test_support::snapshot(tmp);
    std::filesystem::remove_all(tmp);

    REQUIRE(first.size() == cases.size());
    for (std::size_t i = 0; i < cases.size(); ++i) {
      INFO(cases[i].name);
      CHECK(first[i].code == cases[i].exit_code);
      CHECK(first[i].out == second[i].out);
      CHECK(first[i].code == second[i].code);
      if (first[i].code != 0) CHECK_FALSE(first[i].err.empty());
    }
    CHECK(files_first == files_second);
    CHECK(files_first.size() > 10);
  }

  TEST_CASE("appendix tree golden") {
    auto r = run({"decompose", "-g", "@fx/appendix.gm", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(r.out == modmotif::read_text_file(test_support::fixture("appendix_tree.json")));
    auto j = json::parse(r.out);
    CHECK(j["nodes"][0]["kind"] == "prime");
    CHECK(j["nodes"].size() == 17);
  }

  TEST_CASE("solution output") {
    auto r = run({"solve", "module-motif", "-g", "@fx/fig3.gm", "-m", "@fx/fig3.motif"});
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["found"] == true);
    CHECK(j["vertices"] ==
          json::array({"v1^1", "v1^3", "v1^5", "v3^2", "v3^4", "v3^6"}));
    CHECK(j["tree_node_kind"] == "parallel");

    auto wrong = run({"solve", "module-motif", "-g", "@fx/fig3.gm", "-m", "@fx/fig3_wrong.motif"});
    CHECK(wrong.code == 1);
    CHECK(json::parse(wrong.out)["found"] == false);

    auto list = run({"solve", "list-colored", "-g", "@fx/p3_list.gm", "-m", "@fx/p3_list.motif"});
    REQUIRE(list.code == 0);
    auto lj = json::parse(list.out);
    CHECK(lj["assignment"]["a"] == "red");
    CHECK(lj["assignment"]["c"] == "blue");
  }

  TEST_CASE("--all lists distinct modules and honours the cap") {
    // Two a-colored vertices forming a module: {v2,v3}, {v6,v7}, {v10,v11},
    // {v8,v9}, and the other pairs inside series {v8..v11}.
    auto r = run({"solve", "module-motif", "-g", "@fx/appendix.gm", "-m", "@fx/two_a.motif", "--all"});
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out);
    std::set<std::vector<std::string>> seen;
    for (const auto& s : j["solutions"]) seen.insert(s["vertices"].get<std::vector<std::string>>());
    CHECK(seen.size() == j["solutions"].size());
    CHECK(j["count"] == j["solutions"].size());
    CHECK(j["capped"] == false);

    auto capped = run({"solve", "module-motif", "-g", "@fx/appendix.gm", "-m", "@fx/two_a.motif",
                       "--all", "--cap", "2"});
    auto cj = json::parse(capped.out);
    CHECK(cj["solutions"].size() == 2);
    CHECK(cj["capped"] == true);
    CHECK(cj["solutions"][0] == j["solutions"][0]);
  }

  TEST_CASE("oracle outputs") {
    auto mis = json::parse(run({"oracle", "mis", "-g", "@fx/fig1_gi.gm"}).out);
    CHECK(mis["size"] == 2);
    auto sc = json::parse(run({"oracle", "setcover", "-i", "@fx/fig2.sets"}).out);
    CHECK(sc["cover"] == json::array({1, 2}));
    auto x3c = json::parse(run({"oracle", "x3c", "-i", "@fx/fig3.x3c"}).out);
    CHECK(x3c["cover"] == json::array({1, 3}));
    auto mods = json::parse(run({"oracle", "enumerate-modules", "-g", "@fx/p3.gm"}).out);
    CHECK(mods["count"] == 5);
  }

  TEST_CASE("verification reports print both sides") {
    auto tmp = scratch("verify");
    std::filesystem::create_directories(tmp);
    auto cert = (tmp / "c.json").string();
    std::ostringstream o, e;
    REQUIRE(modmotif::cli::run({"gen", "mis2maxmotif", "-i",
                                test_support::fixture("fig1_gi.gm").string(), "-o",
                                (tmp / "g.gm").string(), "--provenance", cert},
                               o, e) == 0);
    std::ostringstream out, err;
    int code = modmotif::cli::run(
        {"verify", "lemma1", "--cert", cert, "--solution", test_support::fixture("fig1_is.txt").string()},
        out, err);
    CHECK(code == 0);
    auto j = json::parse(out.str());
    CHECK(j["checks"][2]["detail"] == "|V'| = 55 >= |IS| * |V_I|^2 = 2 * 25 = 50");
    CHECK(j["mapped"].size() == 55);
    std::filesystem::remove_all(tmp);
  }

  TEST_CASE("corpus is reproducible") {
    auto a = scratch("corpus_a"), b = scratch("corpus_b");
    std::ostringstream o, e;
    REQUIRE(modmotif::cli::run({"gen", "corpus", "-o", a.string(), "--seed", "7", "--count", "5"}, o, e) == 0);
    REQUIRE(modmotif::cli::run({"gen", "corpus", "-o", b.string(), "--seed", "7", "--count", "5"}, o, e) == 0);
    CHECK(test_support::snapshot(a) == test_support::snapshot(b));
    CHECK(test_support::snapshot(a).size() == 11);

    // Planted instances are solvable; the rest agree with the oracle.
    auto index = json::parse(modmotif::read_text_file(a / "index.json"));
    for (const auto& inst : index) {
      auto stem = inst["name"].get<std::string>();
      auto g = (a / (stem + ".gm")).string();
      auto m = (a / (stem + ".motif")).string();
      std::ostringstream so, se, oo, oe;
      int solve = modmotif::cli::run({"solve", "module-motif", "-g", g, "-m", m}, so, se);
      int oracle = modmotif::cli::run({"oracle", "find-motif", "-g", g, "-m", m}, oo, oe);
      CHECK(solve == oracle);
      if (inst["planted"].get<bool>()) CHECK(solve == 0);
    }
    std::filesystem::remove_all(a);
    std::filesystem::remove_all(b);
  }
}
