#include "modmotif/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <memory>
#include <numeric>
#include <sstream>
#include <utility>

#include "modmotif/decomposition.hpp"
#include "modmotif/errors.hpp"
#include "modmotif/format.hpp"
#include "modmotif/io.hpp"
#include "modmotif/oracles.hpp"
#include "modmotif/random_instances.hpp"
#include "modmotif/reductions.hpp"
#include "modmotif/solvers.hpp"

namespace modmotif::cli {

namespace {

struct Options {
  std::string graph;
  std::string motif;
  std::string input;
  std::string out;
  std::string provenance;
  std::string motif_out;
  std::string cert;
  std::string solution;
  std::string format = "json";
  bool all = false;
  bool json = false;
  std::size_t cap = 1000;
  std::size_t budget = 20;
  std::uint64_t seed = 1;
  std::size_t count = 20;
  std::size_t min_n = 2;
  std::size_t max_n = 10;
};

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

VertexColoredGraph load_graph(const std::string& path) {
  return parse_graph(read_text_file(path));
}

ColorMultiset load_motif(const std::string& path, const VertexColoredGraph& g) {
  auto m = parse_motif(read_text_file(path), g.universe_ptr());
  if (m.empty()) throw InputError("the motif is empty");
  return m;
}

OracleBudget budget_of(const Options& o) {
  OracleBudget b;
  b.max_n = o.budget;
  b.max_subsets = o.budget >= 63 ? std::numeric_limits<std::uint64_t>::max()
                                 : std::uint64_t{1} << o.budget;
  return b;
}

std::vector<std::string> tokens(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

VertexSet vertex_tokens(const VertexColoredGraph& g, const std::string& path) {
  VertexSet out;
  for (const auto& t : tokens(read_text_file(path))) {
    auto v = g.find_vertex(t);
    if (!v) throw InputError("unknown vertex '" + t + "' in " + path);
    out.push_back(*v);
  }
  return out;
}

std::vector<std::size_t> index_tokens(const std::string& path) {
  std::vector<std::size_t> out;
  for (const auto& t : tokens(read_text_file(path))) {
    std::size_t i = 0;
    auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), i);
    if (ec != std::errc() || p != t.data() + t.size() || i == 0) {
      throw InputError("expected a 1-based set index, got '" + t + "'");
    }
    out.push_back(i - 1);
  }
  return out;
}

Json index_json(std::span<const std::size_t> xs) {
  Json a = Json::array();
  for (auto x : xs) a.push_back(x + 1);
  return a;
}

ReductionCertificate load_certificate(const std::string& path) {
  Json j;
  try {
    j = Json::parse(read_text_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("certificate " + path + ": " + e.what());
  }
  return certificate_from_json(j);
}

int emit_report(std::ostream& out, std::ostream& err, const std::string& check,
                const VerificationReport& r, const Json& mapped) {
  print_json(out, report_json(check, r, mapped));
  for (const auto& c : r.checks) {
    if (!c.ok) err << check << ": " << c.name << " failed" << (c.detail.empty() ? "" : ": ")
                   << c.detail << '\n';
  }
  return r.ok() ? kOk : kVerificationFailed;
}

int cmd_decompose(const Options& o, std::ostream& out) {
  auto g = load_graph(o.graph);
  auto t = decompose(g);
  if (o.format == "dot") {
    out << tree_dot(g, t);
  } else if (o.format == "text") {
    out << tree_text(g, t);
  } else {
    print_json(out, tree_json(g, t));
  }
  return kOk;
}

int cmd_solve(const std::string& which, const Options& o, std::ostream& out) {
  auto g = load_graph(o.graph);
  auto m = load_motif(o.motif, g);
  auto t = decompose(g);
  const bool text = o.format == "text" && !o.json;
  if (which == "module-motif" && o.all) {
    auto all = enumerate_module_motifs(g, t, m, o.cap);
    if (text) {
      for (const auto& s : all) out << solution_text(g, s);
      if (all.empty()) out << "no solution\n";
    } else {
      Json list = Json::array();
      for (const auto& s : all) list.push_back(solution_json(g, s));
      print_json(out, {{"found", !all.empty()}, {"count", all.size()},
                       {"capped", all.size() >= o.cap}, {"solutions", std::move(list)}});
    }
    return all.empty() ? kNotFound : kOk;
  }
  std::optional<MotifSolution> s;
  if (which == "module-motif") {
    s = solve_module_motif(g, t, m);
  } else if (which == "strong-only") {
    s = solve_strong_only(g, t, m);
  } else {
    s = solve_list_colored(g, t, m, m.size());
  }
  if (text) {
    out << solution_text(g, s);
  } else {
    print_json(out, solution_json(g, s));
  }
  return s ? kOk : kNotFound;
}

int cmd_oracle(const std::string& which, const Options& o, std::ostream& out) {
  const auto b = budget_of(o);
  if (which == "enumerate-modules") {
    auto g = load_graph(o.graph);
    auto mods = enumerate_modules(g, b);
    Json list = Json::array();
    for (const auto& m : mods) list.push_back(names_json(g, m));
    print_json(out, {{"count", mods.size()}, {"modules", std::move(list)}});
    return kOk;
  }
  if (which == "find-motif") {
    auto g = load_graph(o.graph);
    auto m = load_motif(o.motif, g);
    std::optional<ListColoredWitness> w;
    if (g.mode() == ColoringMode::ListColored) {
      w = find_list_colored_brute(g, m, b);
    } else if (auto s = find_module_motif_brute(g, m, b)) {
      w = ListColoredWitness{*s, {}};
    }
    Json j = {{"found", w.has_value()}};
    if (w) {
      j["vertices"] = names_json(g, w->vertices);
      if (!w->assignment.empty()) {
        Json a = Json::object();
        for (std::size_t i = 0; i < w->vertices.size(); ++i) {
          a[g.name(w->vertices[i])] = g.universe().name(w->assignment[i]);
        }
        j["assignment"] = std::move(a);
      }
    }
    print_json(out, j);
    return w ? kOk : kNotFound;
  }
  if (which == "mis") {
    auto g = load_graph(o.graph);
    auto s = max_independent_set_brute(g, b);
    print_json(out, {{"size", s.size()}, {"vertices", names_json(g, s)}});
    return kOk;
  }
  if (which == "setcover") {
    auto sys = parse_set_system(read_text_file(o.input));
    auto c = min_set_cover_brute(sys, b);
    print_json(out, {{"size", c.size()}, {"cover", index_json(c)}});
    return kOk;
  }
  auto sys = parse_set_system(read_text_file(o.input), true);
  auto c = x3c_brute(sys, b);
  Json j = {{"found", c.has_value()}};
  if (c) j["cover"] = index_json(*c);
  print_json(out, j);
  return c ? kOk : kNotFound;
}

int cmd_gen(const std::string& which, const Options& o, std::ostream& out) {
  if (which == "corpus") {
    generate_corpus(o.seed, o.count, o.min_n, o.max_n, o.out);
    print_json(out, {{"directory", o.out}, {"count", o.count}, {"seed", o.seed}});
    return kOk;
  }
  auto text = read_text_file(o.input);
  auto cert = which == "mis2maxmotif"  ? gen_mis_to_maxmotif(parse_graph(text))
              : which == "sc2minsubst" ? gen_setcover_to_minsubst(parse_set_system(text))
                                       : gen_x3c_to_modulemotif(parse_set_system(text, true));
  write_text_file(o.out, serialize_graph(cert.graph));
  if (!o.provenance.empty()) write_text_file(o.provenance, certificate_json(cert).dump(2) + "\n");
  if (!o.motif_out.empty()) write_text_file(o.motif_out, serialize_motif(cert.motif));
  print_json(out, {{"reduction", to_string(cert.kind)},
                   {"vertices", cert.graph.vertex_count()},
                   {"edges", cert.graph.edge_count()},
                   {"motif_size", cert.motif.size()}});
  return kOk;
}

Json tree_check(const VertexColoredGraph& g, const ModularDecompositionTree& t,
                VerificationReport& r) {
  const auto n = g.vertex_count();
  std::size_t leaves = 0;
  bool single_child = false, partition = true, modules = true, kinds = true;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const auto& node = t.node(i);
    if (node.kind == NodeKind::Leaf) {
      leaves += node.vertices.size() == 1 && node.children.empty();
    } else {
      single_child = single_child || node.children.size() < 2;
      VertexSet u;
      for (auto c : node.children) {
        u.insert(u.end(), t.node(c).vertices.begin(), t.node(c).vertices.end());
      }
      std::sort(u.begin(), u.end());
      partition = partition && u == node.vertices;
    }
    modules = modules && is_module(g, node.vertices);
    kinds = kinds && modules && classify(g, node.vertices) == node.kind;
  }
  VertexSet all(n);
  std::iota(all.begin(), all.end(), 0);
  r.checks.push_back({"root", t.node(t.root()).vertices == all, ""});
  r.checks.push_back({"leaves", leaves == n, std::to_string(leaves) + " leaves, n = " + std::to_string(n)});
  r.checks.push_back({"node_count", t.size() < 2 * n || n == 1,
                      std::to_string(t.size()) + " < 2n = " + std::to_string(2 * n)});
  r.checks.push_back({"no_single_child", !single_child, ""});
  r.checks.push_back({"children_partition", partition, ""});
  r.checks.push_back({"modules", modules, ""});
  r.checks.push_back({"kinds", kinds, ""});
  return Json::array();
}

int cmd_verify(const std::string& which, const Options& o, std::ostream& out, std::ostream& err) {
  if (which == "tree") {
    auto g = load_graph(o.graph);
    auto t = decompose(g);
    VerificationReport r;
    auto mapped = tree_check(g, t, r);
    return emit_report(out, err, which, r, mapped);
  }
  auto cert = load_certificate(o.cert);
  if (which == "x3c-equiv") {
    auto r = verify_x3c_equivalence(cert);
    VertexSet vs(r.mapped.begin(), r.mapped.end());
    return emit_report(out, err, which, r, names_json(cert.graph, vs));
  }
  if (which == "lemma1") {
    if (cert.kind != ReductionKind::MisToMaxMotif) throw InputError("lemma1 needs an mis2maxmotif certificate");
    auto is = vertex_tokens(*cert.source_graph, o.solution);
    auto r = verify_lemma1(cert, is);
    VertexSet vs(r.mapped.begin(), r.mapped.end());
    return emit_report(out, err, which, r, names_json(cert.graph, vs));
  }
  if (which == "lemma2") {
    if (cert.kind != ReductionKind::MisToMaxMotif) throw InputError("lemma2 needs an mis2maxmotif certificate");
    auto vp = vertex_tokens(cert.graph, o.solution);
    auto r = verify_lemma2(cert, vp);
    VertexSet vs(r.mapped.begin(), r.mapped.end());
    return emit_report(out, err, which, r, names_json(*cert.source_graph, vs));
  }
  if (which == "lemma3") {
    auto cover = index_tokens(o.solution);
    auto r = verify_lemma3(cert, cover);
    VertexSet vs(r.mapped.begin(), r.mapped.end());
    return emit_report(out, err, which, r, names_json(cert.graph, vs));
  }
  auto vp = vertex_tokens(cert.graph, o.solution);
  auto r = verify_lemma4(cert, vp);
  return emit_report(out, err, which, r, index_json(r.mapped));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Module graph motif search on vertex-colored graphs", "modmotif"};
  app.require_subcommand(1, 1);
  const std::vector<std::string> formats{"json", "text", "dot"};

  auto* decompose_cmd = app.add_subcommand("decompose", "Modular decomposition tree");
  decompose_cmd->add_option("-g,--graph", o.graph, "Graph (.gm)")->required();
  decompose_cmd->add_option("--format", o.format)->check(CLI::IsMember(formats));

  auto* solve = app.add_subcommand("solve", "Motif solvers");
  solve->require_subcommand(1, 1);
  for (auto [name, about] : {std::pair{"module-motif", "Module whose colors equal the motif"},
                              std::pair{"strong-only", "Same, scanning strong modules only"},
                              std::pair{"list-colored", "Module with a color bijection onto the motif"}}) {
    auto* s = solve->add_subcommand(name, about);
    s->add_option("-g,--graph", o.graph, "Graph (.gm)")->required();
    s->add_option("-m,--motif", o.motif, "Motif")->required();
    s->add_option("--format", o.format)->check(CLI::IsMember({"json", "text"}));
    s->add_flag("--json", o.json, "Same as --format json");
    if (std::string(name) == "module-motif") {
      s->add_flag("--all", o.all, "List every solution module");
      s->add_option("--cap", o.cap, "Most solutions listed with --all");
    }
  }

  auto* oracle = app.add_subcommand("oracle", "Exhaustive reference solvers");
  oracle->require_subcommand(1, 1);
  for (auto [name, about] : {std::pair{"enumerate-modules", "Every module, by brute force"},
                              std::pair{"find-motif", "First module matching the motif"},
                              std::pair{"mis", "Maximum independent set"},
                              std::pair{"setcover", "Minimum set cover"},
                              std::pair{"x3c", "Exact cover by 3-sets"}}) {
    auto* s = oracle->add_subcommand(name, about);
    std::string n = name;
    if (n == "setcover" || n == "x3c") {
      s->add_option("-i,--input", o.input, "Set system")->required();
    } else {
      s->add_option("-g,--graph", o.graph, "Graph (.gm)")->required();
    }
    if (n == "find-motif") s->add_option("-m,--motif", o.motif, "Motif")->required();
    s->add_option("--budget", o.budget, "Largest n (or |S|) enumerated; 2^budget candidates");
  }

  auto* gen = app.add_subcommand("gen", "Instance generators");
  gen->require_subcommand(1, 1);
  for (auto [name, about] : {std::pair{"mis2maxmotif", "Max Graph Motif gadget from a graph"},
                              std::pair{"sc2minsubst", "Min Substitute gadget from a set system"},
                              std::pair{"x3c2module", "Module Graph Motif instance from X3C"}}) {
    auto* s = gen->add_subcommand(name, about);
    s->add_option("-i,--input", o.input, "Source instance")->required();
    s->add_option("-o,--out", o.out, "Generated graph (.gm)")->required();
    s->add_option("--provenance", o.provenance, "Certificate (JSON)");
    s->add_option("--motif", o.motif_out, "Generated motif");
  }
  auto* corpus = gen->add_subcommand("corpus", "Random graph/motif corpus");
  corpus->add_option("-o,--out", o.out, "Directory")->required();
  corpus->add_option("--seed", o.seed);
  corpus->add_option("--count", o.count);
  corpus->add_option("--min-n", o.min_n);
  corpus->add_option("--max-n", o.max_n);

  auto* verify = app.add_subcommand("verify", "Checkers");
  verify->require_subcommand(1, 1);
  for (auto [name, about] : {std::pair{"lemma1", "Independent set to motif solution"},
                              std::pair{"lemma2", "Motif solution to independent set"},
                              std::pair{"lemma3", "Set cover to substitution solution"},
                              std::pair{"lemma4", "Substitution solution to set cover"}}) {
    auto* s = verify->add_subcommand(name, about);
    s->add_option("--cert", o.cert, "Certificate (JSON)")->required();
    s->add_option("--solution", o.solution, "Candidate solution")->required();
  }
  verify->add_subcommand("x3c-equiv", "X3C answer equals the module motif answer")
      ->add_option("--cert", o.cert)
      ->required();
  verify->add_subcommand("tree", "Structural checks on the decomposition tree")
      ->add_option("-g,--graph", o.graph)
      ->required();

  std::vector<std::string> argv_store{"modmotif"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  auto leaf = [](CLI::App* parent) { return parent->get_subcommands().front()->get_name(); };
  try {
    if (decompose_cmd->parsed()) return cmd_decompose(o, out);
    if (solve->parsed() || oracle->parsed()) {
      int code = solve->parsed() ? cmd_solve(leaf(solve), o, out) : cmd_oracle(leaf(oracle), o, out);
      if (code == kNotFound) err << "no solution\n";
      return code;
    }
    if (gen->parsed()) return cmd_gen(leaf(gen), o, out);
    return cmd_verify(leaf(verify), o, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const InvalidSolution& e) {
    err << "verification failed: " << e.what() << '\n';
    return kVerificationFailed;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kBudgetExceeded;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace modmotif::cli
