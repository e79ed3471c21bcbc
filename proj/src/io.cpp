#include "graft/io.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace graft {

namespace {

using nlohmann::json;  // std::map-backed: object keys serialize sorted

std::vector<Label> label_list(const json& j, const std::string& field) {
  if (!j.is_array())
    fail(Errc::ParseError, "field '" + field + "' must be an array");
  std::vector<Label> out;
  for (const auto& item : j) {
    if (!item.is_string())
      fail(Errc::ParseError, "field '" + field + "' must hold strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

json labels_json(const Graph& g, std::span<const VertexIx> xs) {
  json out = json::array();
  for (VertexIx v : xs) out.push_back(g.label(v));
  return out;
}

json edge_json(const Graph& g, EdgeId id) {
  const Edge& e = g.edge(id);
  return json::array({g.label(e.u), g.label(e.v)});
}

json edges_json(const Graph& g, std::span<const EdgeId> es) {
  json out = json::array();
  for (EdgeId id : es) out.push_back(edge_json(g, id));
  return out;
}

json graft_json(const Graft& g) {
  json out;
  out["vertices"] = labels_json(g.graph(), [&] {
    VertexSet all(g.graph().vertex_count());
    for (VertexIx v = 0; v < g.graph().vertex_count(); ++v) all[v] = v;
    return all;
  }());
  out["edges"] = edges_json(g.graph(), g.graph().all_edge_ids());
  out["terminals"] = labels_json(g.graph(), g.terminals());
  return out;
}

json bipartite_json(const BipartiteGraft& g) {
  json out = graft_json(g.graft());
  out["classes"]["A"] = labels_json(g.graph(), g.class_a());
  out["classes"]["B"] = labels_json(g.graph(), g.class_b());
  return out;
}

}  // namespace

void GraftDocument::canonicalize() {
  std::sort(vertices.begin(), vertices.end());
  for (auto& [a, b] : edges)
    if (b < a) std::swap(a, b);
  std::sort(edges.begin(), edges.end());
  std::sort(terminals.begin(), terminals.end());
  terminals.erase(std::unique(terminals.begin(), terminals.end()), terminals.end());
  if (classes) {
    std::sort(classes->first.begin(), classes->first.end());
    std::sort(classes->second.begin(), classes->second.end());
  }
}

GraftDocument parse_graft_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(Errc::ParseError, e.what());
  }
  if (!j.is_object()) fail(Errc::ParseError, "top level must be an object");
  for (const auto& [key, value] : j.items())
    if (key != "vertices" && key != "edges" && key != "terminals" && key != "classes")
      fail(Errc::ParseError, "unknown field '" + key + "'");
  if (!j.contains("vertices")) fail(Errc::ParseError, "missing field 'vertices'");

  GraftDocument doc;
  doc.vertices = label_list(j["vertices"], "vertices");
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) fail(Errc::ParseError, "field 'edges' must be an array");
    std::size_t i = 0;
    for (const auto& item : j["edges"]) {
      if (!item.is_array() || item.size() != 2 || !item[0].is_string() ||
          !item[1].is_string())
        fail(Errc::ParseError,
             "edges[" + std::to_string(i) + "] must be a pair of labels");
      doc.edges.emplace_back(item[0].get<std::string>(), item[1].get<std::string>());
      ++i;
    }
  }
  if (j.contains("terminals"))
    doc.terminals = label_list(j["terminals"], "terminals");
  if (j.contains("classes")) {
    const auto& c = j["classes"];
    if (!c.is_object() || !c.contains("A") || !c.contains("B"))
      fail(Errc::ParseError, "field 'classes' must hold arrays 'A' and 'B'");
    doc.classes = {label_list(c["A"], "classes.A"), label_list(c["B"], "classes.B")};
  }
  doc.canonicalize();
  return doc;
}

std::string serialize_document(const GraftDocument& doc) {
  GraftDocument copy = doc;
  copy.canonicalize();
  json j;
  j["vertices"] = copy.vertices;
  j["edges"] = json::array();
  for (const auto& [a, b] : copy.edges) j["edges"].push_back(json::array({a, b}));
  j["terminals"] = copy.terminals;
  if (copy.classes) {
    j["classes"]["A"] = copy.classes->first;
    j["classes"]["B"] = copy.classes->second;
  }
  return j.dump(2) + "\n";
}

Graft document_to_graft(const GraftDocument& doc) {
  try {
    return build_graft(doc.vertices, doc.edges, doc.terminals);
  } catch (const GraftError& e) {
    if (e.code() == Errc::InternalCheckFailed) throw;
    fail(Errc::ValidationError, e.what());
  }
}

BipartiteGraft document_to_bipartite(const GraftDocument& doc) {
  if (!doc.classes)
    fail(Errc::ValidationError, "document carries no color classes");
  Graft g = document_to_graft(doc);
  try {
    return BipartiteGraft::make(g, g.graph().indices_of(doc.classes->first),
                                g.graph().indices_of(doc.classes->second));
  } catch (const GraftError& e) {
    if (e.code() == Errc::InternalCheckFailed) throw;
    fail(Errc::ValidationError, e.what());
  }
}

GraftDocument document_from(const Graft& g) {
  GraftDocument doc;
  for (const Label& l : g.graph().labels()) doc.vertices.push_back(l);
  for (const Edge& e : g.graph().edges())
    doc.edges.emplace_back(g.graph().label(e.u), g.graph().label(e.v));
  for (VertexIx v : g.terminals()) doc.terminals.push_back(g.graph().label(v));
  doc.canonicalize();
  return doc;
}

GraftDocument document_from(const BipartiteGraft& g) {
  GraftDocument doc = document_from(g.graft());
  std::vector<Label> a, b;
  for (VertexIx v : g.class_a()) a.push_back(g.graph().label(v));
  for (VertexIx v : g.class_b()) b.push_back(g.graph().label(v));
  doc.classes = {std::move(a), std::move(b)};
  doc.canonicalize();
  return doc;
}

namespace {

json certificate_json(const PrimalCertificate& cert) {
  json out;
  out["root"] = cert.root;
  out["leaf"] = cert.base_case;
  out["comb"] = bipartite_json(cert.comb);
  if (!cert.base_case) {
    out["attachments"] = json::array();
    for (const auto& [edge, target] : cert.attachments) {
      const Edge& e = cert.comb.graph().edge(edge);
      out["attachments"].push_back(json::array(
          {cert.comb.graph().label(e.u), cert.comb.graph().label(e.v), target}));
    }
    out["children"] = json::array();
    for (const auto& [label, child] : cert.children) {
      json c;
      c["tooth"] = label;
      c["certificate"] = certificate_json(*child);
      out["children"].push_back(std::move(c));
    }
  }
  return out;
}

}  // namespace

std::string emit_decomposition(
    const BipartiteGraft& g, const CathedralDecomposition& dec, const Join& join,
    const std::map<Label, const PrimalCertificate*>* certificates) {
  const Graph& graph = g.graph();
  json out;
  out["spine"] = labels_json(graph, dec.base);
  out["fringe"] = labels_json(graph, dec.fringe);
  out["join"]["size"] = join.size();
  out["join"]["edges"] = edges_json(graph, join.edges);
  out["skeleton"] = bipartite_json(dec.skeleton.graft);
  out["skeleton"]["join"] = edges_json(graph, dec.skeleton.join.edges);
  out["teeth"] = json::array();
  for (const Tooth& tooth : dec.teeth) {
    json t;
    t["name"] = contracted_label(graph, tooth.original_vertices);
    t["vertices"] = labels_json(graph, tooth.original_vertices);
    t["root"] = tooth.graft.graph().label(tooth.root);
    t["attachment"] = edge_json(graph, tooth.attachment);
    t["graft"] = graft_json(tooth.graft);
    t["join"] = edges_json(tooth.graft.graph(), tooth.join.edges);
    if (certificates) {
      auto it = certificates->find(contracted_label(graph, tooth.original_vertices));
      if (it != certificates->end() && it->second)
        t["certificate"] = certificate_json(*it->second);
    }
    out["teeth"].push_back(std::move(t));
  }
  return out.dump(2) + "\n";
}

namespace {

std::string quoted(const Label& l) {
  std::string out = "\"";
  for (char c : l) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string emit_dot(const Graft& g) {
  std::ostringstream out;
  out << "graph graft {\n  node [shape=circle, fontsize=10];\n";
  for (const Label& l : g.graph().labels()) {
    out << "  " << quoted(l);
    if (g.is_terminal(g.graph().index_of(l))) out << " [peripheries=2]";
    out << ";\n";
  }
  for (const Edge& e : g.graph().edges())
    out << "  " << quoted(g.graph().label(e.u)) << " -- "
        << quoted(g.graph().label(e.v)) << ";\n";
  out << "}\n";
  return out.str();
}

std::string emit_dot(const BipartiteGraft& g, const CathedralDecomposition& dec,
                     const Join& join) {
  const Graph& graph = g.graph();
  VertexSet teeth_vertices;
  for (const Tooth& tooth : dec.teeth)
    teeth_vertices = setops::set_union(teeth_vertices, tooth.original_vertices);

  std::ostringstream out;
  out << "graph decomposition {\n  node [shape=circle, fontsize=10, style=filled];\n";
  for (VertexIx v = 0; v < graph.vertex_count(); ++v) {
    const char* color = "white";
    if (setops::contains(dec.base, v)) color = "lightblue";
    else if (setops::contains(teeth_vertices, v)) color = "khaki";
    else if (setops::contains(dec.fringe, v)) color = "lightgray";
    out << "  " << quoted(graph.label(v)) << " [fillcolor=" << color;
    if (g.graft().is_terminal(v)) out << ", peripheries=2";
    out << "];\n";
  }
  for (const Edge& e : graph.edges()) {
    out << "  " << quoted(graph.label(e.u)) << " -- " << quoted(graph.label(e.v));
    if (setops::contains(join.edges, e.id)) out << " [style=dashed]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string emit_distance_table(const Graft& g, const DistanceTable& table) {
  json out;
  out["source"] = g.graph().label(table.source);
  out["distances"] = json::object();
  json unreachable = json::array();
  for (VertexIx v = 0; v < g.graph().vertex_count(); ++v) {
    if (table.has(v)) out["distances"][g.graph().label(v)] = table.at(v);
    else unreachable.push_back(g.graph().label(v));
  }
  out["unreachable"] = std::move(unreachable);
  return out.dump(2) + "\n";
}

std::string emit_join(const Graft& g, const Join& join) {
  json out;
  out["size"] = join.size();
  out["edges"] = edges_json(g.graph(), join.edges);
  return out.dump(2) + "\n";
}

std::string emit_root_profile(const Graft& g, const RootProfile& profile) {
  const Graph& graph = g.graph();
  json out;
  out["root"] = graph.label(profile.root);
  out["primal"] = profile.outside_part.empty() &&
                  static_cast<int>(profile.level0.size() + profile.lay0.size()) ==
                      graph.vertex_count();
  out["level0"] = labels_json(graph, profile.level0);
  out["lay0"] = labels_json(graph, profile.lay0);
  out["initialComponent"] = labels_json(graph, profile.initial_component);
  out["zeroPart"] = labels_json(graph, profile.zero_part);
  out["negativePart"] = labels_json(graph, profile.negative_part);
  out["outsidePart"] = labels_json(graph, profile.outside_part);
  return out.dump(2) + "\n";
}

std::string emit_certificate(const PrimalCertificate& cert) {
  return certificate_json(cert).dump(2) + "\n";
}

}  // namespace graft
