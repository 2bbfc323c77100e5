#include "modmotif/format.hpp"

#include <sstream>

#include "modmotif/errors.hpp"
#include "modmotif/io.hpp"

namespace modmotif {

namespace {

std::string dot_quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

std::string join_names(const VertexColoredGraph& g, std::span<const VertexId> vs) {
  std::string out;
  for (auto v : vs) {
    if (!out.empty()) out += ' ';
    out += g.name(v);
  }
  return out;
}

}  // namespace

Json names_json(const VertexColoredGraph& g, std::span<const VertexId> vs) {
  Json a = Json::array();
  for (auto v : vs) a.push_back(g.name(v));
  return a;
}

Json motif_json(const ColorMultiset& m) {
  Json o = Json::object();
  for (ColorId c = 0; c < m.counts().size(); ++c) {
    if (m.occ(c) > 0) o[m.universe().name(c)] = m.occ(c);
  }
  return o;
}

Json tree_json(const VertexColoredGraph& g, const ModularDecompositionTree& t) {
  Json nodes = Json::array();
  for (std::size_t i = 0; i < t.size(); ++i) {
    const auto& n = t.node(i);
    nodes.push_back({{"id", i},
                     {"kind", to_string(n.kind)},
                     {"vertices", names_json(g, n.vertices)},
                     {"children", n.children}});
  }
  return {{"root", t.root()}, {"nodes", std::move(nodes)}};
}

std::string tree_text(const VertexColoredGraph& g, const ModularDecompositionTree& t) {
  std::ostringstream out;
  auto walk = [&](auto&& self, std::size_t i, int depth) -> void {
    const auto& n = t.node(i);
    out << std::string(2 * depth, ' ') << to_string(n.kind) << " {" << join_names(g, n.vertices)
        << "}\n";
    for (auto c : n.children) self(self, c, depth + 1);
  };
  walk(walk, t.root(), 0);
  return out.str();
}

std::string tree_dot(const VertexColoredGraph& g, const ModularDecompositionTree& t) {
  std::ostringstream out;
  out << "digraph T {\n  node [shape=box];\n";
  for (std::size_t i = 0; i < t.size(); ++i) {
    const auto& n = t.node(i);
    std::string label = n.kind == NodeKind::Leaf ? g.name(n.vertices.front())
                                                 : std::string(to_string(n.kind));
    out << "  n" << i << " [label=" << dot_quoted(label) << "];\n";
  }
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (auto c : t.node(i).children) out << "  n" << i << " -> n" << c << ";\n";
  }
  out << "}\n";
  return out.str();
}

Json solution_json(const VertexColoredGraph& g, const std::optional<MotifSolution>& s) {
  if (!s) return {{"found", false}};
  Json j = {{"found", true}, {"vertices", names_json(g, s->vertices)}};
  if (s->assignment) {
    Json a = Json::object();
    for (std::size_t i = 0; i < s->vertices.size(); ++i) {
      a[g.name(s->vertices[i])] = g.universe().name((*s->assignment)[i]);
    }
    j["assignment"] = std::move(a);
  }
  j["tree_node"] = s->tree_node;
  j["tree_node_kind"] = to_string(s->tree_node_kind);
  return j;
}

std::string solution_text(const VertexColoredGraph& g, const std::optional<MotifSolution>& s) {
  if (!s) return "no solution\n";
  std::ostringstream out;
  out << "module: {" << join_names(g, s->vertices) << "}\n";
  out << "from " << to_string(s->tree_node_kind) << " node " << s->tree_node << '\n';
  if (s->assignment) {
    for (std::size_t i = 0; i < s->vertices.size(); ++i) {
      out << "  " << g.name(s->vertices[i]) << " -> "
          << g.universe().name((*s->assignment)[i]) << '\n';
    }
  }
  return out.str();
}

Json certificate_json(const ReductionCertificate& cert) {
  Json j;
  j["reduction"] = to_string(cert.kind);
  if (cert.source_graph) {
    j["source"] = serialize_graph(*cert.source_graph);
  } else {
    j["source"] = serialize_set_system(*cert.source_sets,
                                       cert.kind == ReductionKind::X3cToModuleMotif);
  }
  j["motif"] = motif_json(cert.motif);
  if (!cert.edge_order.empty()) {
    Json order = Json::array();
    for (auto [u, v] : cert.edge_order) {
      order.push_back({cert.source_graph->name(u), cert.source_graph->name(v)});
    }
    j["edge_order"] = std::move(order);
  }
  Json vertices = Json::array();
  for (VertexId v = 0; v < cert.graph.vertex_count(); ++v) {
    vertices.push_back({{"name", cert.graph.name(v)},
                        {"role", cert.roles[v].kind},
                        {"index", cert.roles[v].index}});
  }
  j["vertices"] = std::move(vertices);
  return j;
}

ReductionCertificate certificate_from_json(const Json& j) {
  std::optional<ReductionKind> kind;
  std::string source;
  try {
    kind = reduction_kind_from_string(j.at("reduction").get<std::string>());
    source = j.at("source").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed certificate: ") + e.what());
  }
  if (!kind) throw InputError("unknown reduction in certificate");

  auto cert = [&] {
    switch (*kind) {
      case ReductionKind::MisToMaxMotif: return gen_mis_to_maxmotif(parse_graph(source));
      case ReductionKind::SetCoverToMinSubst:
        return gen_setcover_to_minsubst(parse_set_system(source));
      case ReductionKind::X3cToModuleMotif: break;
    }
    return gen_x3c_to_modulemotif(parse_set_system(source, true));
  }();

  const Json fresh = certificate_json(cert);
  for (const char* key : {"motif", "vertices", "edge_order"}) {
    if (j.contains(key) != fresh.contains(key) || (j.contains(key) && j.at(key) != fresh.at(key))) {
      throw InvalidSolution(std::string("certificate field '") + key +
                            "' does not match the instance regenerated from its source");
    }
  }
  return cert;
}

Json report_json(const std::string& check, const VerificationReport& r, const Json& mapped) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json e = {{"name", c.name}, {"ok", c.ok}};
    if (!c.detail.empty()) e["detail"] = c.detail;
    checks.push_back(std::move(e));
  }
  return {{"check", check}, {"ok", r.ok()}, {"checks", std::move(checks)}, {"mapped", mapped}};
}

}  // namespace modmotif
