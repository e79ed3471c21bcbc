#pragma once

#include "graft/decompose.hpp"

namespace graft {

// JSON surface format for grafts. Canonical form keeps every list sorted so
// serialization round-trips byte for byte.
struct GraftDocument {
  std::vector<Label> vertices;
  std::vector<std::pair<Label, Label>> edges;
  std::vector<Label> terminals;
  std::optional<std::pair<std::vector<Label>, std::vector<Label>>> classes;

  void canonicalize();
};

GraftDocument parse_graft_document(const std::string& text);
std::string serialize_document(const GraftDocument& doc);

Graft document_to_graft(const GraftDocument& doc);
BipartiteGraft document_to_bipartite(const GraftDocument& doc);
GraftDocument document_from(const Graft& g);
GraftDocument document_from(const BipartiteGraft& g);

// JSON rendering of a decomposition: spine, teeth with roots and attachment
// edges (plus recursive certificates when supplied), fringe, and the join.
std::string emit_decomposition(
    const BipartiteGraft& g, const CathedralDecomposition& dec, const Join& join,
    const std::map<Label, const PrimalCertificate*>* certificates = nullptr);

std::string emit_dot(const Graft& g);
std::string emit_dot(const BipartiteGraft& g, const CathedralDecomposition& dec,
                     const Join& join);

std::string emit_distance_table(const Graft& g, const DistanceTable& table);
std::string emit_join(const Graft& g, const Join& join);
std::string emit_root_profile(const Graft& g, const RootProfile& profile);
std::string emit_certificate(const PrimalCertificate& cert);

}  // namespace graft
