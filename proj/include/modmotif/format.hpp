#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "modmotif/decomposition.hpp"
#include "modmotif/reductions.hpp"
#include "modmotif/solvers.hpp"

// Machine (JSON) and human (text, DOT) views. Vertices always appear under
// their original names.

namespace modmotif {

using Json = nlohmann::ordered_json;

Json names_json(const VertexColoredGraph& g, std::span<const VertexId> vs);
Json motif_json(const ColorMultiset& m);

/// {"root": 0, "nodes": [{"id", "kind", "vertices", "children"}]}.
Json tree_json(const VertexColoredGraph& g, const ModularDecompositionTree& t);
std::string tree_text(const VertexColoredGraph& g, const ModularDecompositionTree& t);
std::string tree_dot(const VertexColoredGraph& g, const ModularDecompositionTree& t);

/// {"found", "vertices", "assignment"?, "tree_node", "tree_node_kind"}.
Json solution_json(const VertexColoredGraph& g, const std::optional<MotifSolution>& s);
std::string solution_text(const VertexColoredGraph& g, const std::optional<MotifSolution>& s);

/// Certificate file: reduction name, source text, generated motif and the
/// role of every generated vertex.
Json certificate_json(const ReductionCertificate& cert);

/// Rebuilds the certificate from its source and checks the recorded roles
/// and motif against the regenerated ones. Throws InvalidSolution on a
/// mismatch and InputError on a malformed file.
ReductionCertificate certificate_from_json(const Json& j);

Json report_json(const std::string& check, const VerificationReport& r, const Json& mapped);

}  // namespace modmotif
