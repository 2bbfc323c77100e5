#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "modmotif/cli.hpp"
#include "modmotif/decomposition.hpp"
#include "modmotif/errors.hpp"
#include "modmotif/format.hpp"
#include "modmotif/io.hpp"
#include "modmotif/oracles.hpp"
#include "modmotif/reductions.hpp"
#include "modmotif/solvers.hpp"

namespace py = pybind11;
using namespace modmotif;

namespace {

using Names = std::vector<std::string>;

VertexSet to_ids(const VertexColoredGraph& g, const Names& names) {
  std::vector<VertexId> ids;
  for (const auto& n : names) {
    auto v = g.find_vertex(n);
    if (!v) throw InputError("unknown vertex '" + n + "'");
    ids.push_back(*v);
  }
  return make_vertex_set(std::move(ids), g.vertex_count());
}

Names to_names(const VertexColoredGraph& g, std::span<const VertexId> vs) {
  Names out;
  for (auto v : vs) out.push_back(g.name(v));
  return out;
}

OracleBudget budget(std::size_t max_n) {
  return OracleBudget{max_n, max_n >= 64 ? ~std::uint64_t{0} : std::uint64_t{1} << max_n};
}

py::object solution(const VertexColoredGraph& g, const std::optional<MotifSolution>& s) {
  if (!s) return py::none();
  py::dict d;
  d["vertices"] = to_names(g, s->vertices);
  d["kind"] = std::string(to_string(s->tree_node_kind));
  if (s->assignment) {
    Names colors;
    for (auto c : *s->assignment) colors.push_back(g.universe().name(c));
    d["assignment"] = colors;
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_modmotif, m) {
  m.doc() = "Modular decomposition and module graph motif search";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<InputError>(m, "InputError", base.ptr());
  py::register_exception<InvalidSolution>(m, "InvalidSolution", base.ptr());
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base.ptr());

  py::class_<VertexColoredGraph>(m, "Graph")
      .def_static("parse", [](const std::string& text) { return parse_graph(text); })
      .def_static("load", [](const std::string& path) { return parse_graph(read_text_file(path)); })
      .def_property_readonly("vertex_count", &VertexColoredGraph::vertex_count)
      .def_property_readonly("edge_count", &VertexColoredGraph::edge_count)
      .def_property_readonly("names", &VertexColoredGraph::names)
      .def_property_readonly("list_colored",
                             [](const VertexColoredGraph& g) { return g.mode() == ColoringMode::ListColored; })
      .def("serialize", &serialize_graph)
      .def("__eq__", [](const VertexColoredGraph& a, const VertexColoredGraph& b) { return a == b; });

  m.def("is_module", [](const VertexColoredGraph& g, const Names& s) { return is_module(g, to_ids(g, s)); });
  m.def("classify", [](const VertexColoredGraph& g, const Names& s) {
    return std::string(to_string(classify(g, to_ids(g, s))));
  });
  m.def("decompose_json", [](const VertexColoredGraph& g) { return tree_json(g, decompose(g)).dump(); });
  m.def("decompose_text", [](const VertexColoredGraph& g) { return tree_text(g, decompose(g)); });

  m.def("solve_module_motif", [](const VertexColoredGraph& g, const std::string& motif) {
    return solution(g, solve_module_motif(g, decompose(g), parse_motif(motif, g.universe_ptr())));
  });
  m.def("solve_strong_only", [](const VertexColoredGraph& g, const std::string& motif) {
    return solution(g, solve_strong_only(g, decompose(g), parse_motif(motif, g.universe_ptr())));
  });
  m.def("solve_list_colored", [](const VertexColoredGraph& g, const std::string& motif) {
    auto mm = parse_motif(motif, g.universe_ptr());
    return solution(g, solve_list_colored(g, decompose(g), mm, mm.size()));
  });
  m.def(
      "enumerate_module_motifs",
      [](const VertexColoredGraph& g, const std::string& motif, std::size_t cap) {
        std::vector<Names> out;
        for (const auto& s : enumerate_module_motifs(g, decompose(g), parse_motif(motif, g.universe_ptr()), cap))
          out.push_back(to_names(g, s.vertices));
        return out;
      },
      py::arg("graph"), py::arg("motif"), py::arg("cap") = 1000);

  m.def(
      "enumerate_modules",
      [](const VertexColoredGraph& g, std::size_t max_n) {
        std::vector<Names> out;
        for (const auto& s : enumerate_modules(g, budget(max_n))) out.push_back(to_names(g, s));
        return out;
      },
      py::arg("graph"), py::arg("max_n") = 20);
  m.def(
      "find_motif_brute",
      [](const VertexColoredGraph& g, const std::string& motif, std::size_t max_n) -> py::object {
        auto s = find_module_motif_brute(g, parse_motif(motif, g.universe_ptr()), budget(max_n));
        if (!s) return py::none();
        return py::cast(to_names(g, *s));
      },
      py::arg("graph"), py::arg("motif"), py::arg("max_n") = 20);
  m.def(
      "max_independent_set",
      [](const VertexColoredGraph& g, std::size_t max_n) {
        return to_names(g, max_independent_set_brute(g, budget(max_n)));
      },
      py::arg("graph"), py::arg("max_n") = 20);
  m.def("min_set_cover", [](const std::string& sets) { return min_set_cover_brute(parse_set_system(sets)); });
  m.def("x3c", [](const std::string& sets) { return x3c_brute(parse_set_system(sets, true)); });

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
