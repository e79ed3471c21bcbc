#include "graft/core.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <tuple>

namespace graft {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::DuplicateLabel: return "DuplicateLabel";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::UnknownEndpoint: return "UnknownEndpoint";
    case Errc::LoopEdge: return "LoopEdge";
    case Errc::OddTerminalComponent: return "OddTerminalComponent";
    case Errc::UnknownVertex: return "UnknownVertex";
    case Errc::OverlappingSets: return "OverlappingSets";
    case Errc::ForeignEdgeId: return "ForeignEdgeId";
    case Errc::TooLarge: return "TooLarge";
    case Errc::NoJoinExists: return "NoJoinExists";
    case Errc::NotMinimumJoin: return "NotMinimumJoin";
    case Errc::SameVertex: return "SameVertex";
    case Errc::Disconnected: return "Disconnected";
    case Errc::NotPrimal: return "NotPrimal";
    case Errc::NotInA: return "NotInA";
    case Errc::NotExtreme: return "NotExtreme";
    case Errc::NotMaximalExtreme: return "NotMaximalExtreme";
    case Errc::NotCombic: return "NotCombic";
    case Errc::CombicViolation: return "CombicViolation";
    case Errc::NotComb: return "NotComb";
    case Errc::LabelCollision: return "LabelCollision";
    case Errc::IllegalAttachment: return "IllegalAttachment";
    case Errc::ToothNotPrimal: return "ToothNotPrimal";
    case Errc::BadAttachment: return "BadAttachment";
    case Errc::ContractionMismatch: return "ContractionMismatch";
    case Errc::TerminalRuleViolation: return "TerminalRuleViolation";
    case Errc::InfeasibleParameters: return "InfeasibleParameters";
    case Errc::UnknownSuite: return "UnknownSuite";
    case Errc::ParseError: return "ParseError";
    case Errc::ValidationError: return "ValidationError";
    case Errc::InternalCheckFailed: return "InternalCheckFailed";
  }
  return "UnknownError";
}

GraftError::GraftError(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message),
      code_(code) {}

void fail(Errc code, const std::string& message) {
  throw GraftError(code, message);
}

void internal_check(bool ok, const std::string& what) {
  if (!ok) fail(Errc::InternalCheckFailed, what);
}

namespace setops {

bool contains(std::span<const int> xs, int x) {
  return std::binary_search(xs.begin(), xs.end(), x);
}

bool is_subset(std::span<const int> xs, std::span<const int> ys) {
  return std::includes(ys.begin(), ys.end(), xs.begin(), xs.end());
}

bool intersects(std::span<const int> xs, std::span<const int> ys) {
  auto i = xs.begin();
  auto j = ys.begin();
  while (i != xs.end() && j != ys.end()) {
    if (*i == *j) return true;
    if (*i < *j) ++i; else ++j;
  }
  return false;
}

std::vector<int> sorted_unique(std::vector<int> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

std::vector<int> set_union(std::span<const int> a, std::span<const int> b) {
  std::vector<int> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<int> set_intersection(std::span<const int> a, std::span<const int> b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

std::vector<int> set_difference(std::span<const int> a, std::span<const int> b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

std::vector<int> set_symdiff(std::span<const int> a, std::span<const int> b) {
  std::vector<int> out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                std::back_inserter(out));
  return out;
}

std::vector<int> toggled(std::span<const int> xs, int x) {
  std::vector<int> single{x};
  return set_symdiff(xs, single);
}

}  // namespace setops

// ---------------------------------------------------------------- Graph

Graph::Graph() { finalize(); }

void Graph::finalize() {
  const int n = vertex_count();
  adj_.assign(n, {});
  for (const Edge& e : edges_) {
    adj_[e.u].emplace_back(e.v, e.id);
    adj_[e.v].emplace_back(e.u, e.id);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());

  unit_dist_.assign(n, std::vector<int>(n, -1));
  for (VertexIx s = 0; s < n; ++s) {
    auto& dist = unit_dist_[s];
    dist[s] = 0;
    std::queue<VertexIx> q;
    q.push(s);
    while (!q.empty()) {
      VertexIx v = q.front();
      q.pop();
      for (const auto& [w, id] : adj_[v]) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          q.push(w);
        }
      }
    }
  }
}

Graph Graph::from_labels(const std::vector<Label>& vertices,
                         const std::vector<std::pair<Label, Label>>& edges) {
  std::vector<Label> labels = vertices;
  std::sort(labels.begin(), labels.end());
  if (std::adjacent_find(labels.begin(), labels.end()) != labels.end()) {
    auto it = std::adjacent_find(labels.begin(), labels.end());
    fail(Errc::DuplicateLabel, "vertex label '" + *it + "' appears twice");
  }
  auto index = [&](const Label& l) -> VertexIx {
    auto it = std::lower_bound(labels.begin(), labels.end(), l);
    if (it == labels.end() || *it != l)
      fail(Errc::UnknownEndpoint, "edge endpoint '" + l + "' is not a vertex");
    return static_cast<VertexIx>(it - labels.begin());
  };

  std::vector<std::pair<VertexIx, VertexIx>> pairs;
  pairs.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    VertexIx u = index(a);
    VertexIx v = index(b);
    if (u == v) fail(Errc::LoopEdge, "loop at vertex '" + a + "'");
    if (u > v) std::swap(u, v);
    pairs.emplace_back(u, v);
  }
  std::sort(pairs.begin(), pairs.end());
  if (std::adjacent_find(pairs.begin(), pairs.end()) != pairs.end()) {
    auto it = std::adjacent_find(pairs.begin(), pairs.end());
    fail(Errc::DuplicateEdge, "edge {" + labels[it->first] + "," +
                                  labels[it->second] + "} appears twice");
  }

  Graph g;
  g.labels_ = std::move(labels);
  g.edges_.reserve(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i)
    g.edges_.push_back(Edge{static_cast<EdgeId>(i), pairs[i].first, pairs[i].second});
  g.finalize();
  return g;
}

Graph Graph::from_parts(std::vector<Label> labels,
                        std::vector<std::tuple<EdgeId, Label, Label>> edges,
                        bool allow_parallel) {
  std::sort(labels.begin(), labels.end());
  if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
    fail(Errc::DuplicateLabel, "duplicate label in derived graph");
  auto index = [&](const Label& l) -> VertexIx {
    auto it = std::lower_bound(labels.begin(), labels.end(), l);
    if (it == labels.end() || *it != l)
      fail(Errc::UnknownEndpoint, "edge endpoint '" + l + "' is not a vertex");
    return static_cast<VertexIx>(it - labels.begin());
  };

  Graph g;
  g.edges_.reserve(edges.size());
  for (const auto& [id, a, b] : edges) {
    VertexIx u = index(a);
    VertexIx v = index(b);
    if (u == v) fail(Errc::LoopEdge, "loop at vertex '" + a + "'");
    if (u > v) std::swap(u, v);
    g.edges_.push_back(Edge{id, u, v});
  }
  g.labels_ = std::move(labels);
  std::sort(g.edges_.begin(), g.edges_.end(),
            [](const Edge& x, const Edge& y) { return x.id < y.id; });
  for (std::size_t i = 1; i < g.edges_.size(); ++i)
    if (g.edges_[i - 1].id == g.edges_[i].id)
      fail(Errc::DuplicateEdge, "edge id used twice in derived graph");
  if (!allow_parallel) {
    auto ends = [](const Edge& e) { return std::pair(e.u, e.v); };
    std::vector<std::pair<VertexIx, VertexIx>> ps;
    for (const Edge& e : g.edges_) ps.push_back(ends(e));
    std::sort(ps.begin(), ps.end());
    if (std::adjacent_find(ps.begin(), ps.end()) != ps.end())
      fail(Errc::DuplicateEdge, "parallel edge in simple graph");
  }
  g.finalize();
  return g;
}

const Label& Graph::label(VertexIx v) const {
  require_vertex(v);
  return labels_[v];
}

std::optional<VertexIx> Graph::try_index_of(const Label& l) const noexcept {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), l);
  if (it == labels_.end() || *it != l) return std::nullopt;
  return static_cast<VertexIx>(it - labels_.begin());
}

VertexIx Graph::index_of(const Label& l) const {
  auto ix = try_index_of(l);
  if (!ix) fail(Errc::UnknownVertex, "no vertex labeled '" + l + "'");
  return *ix;
}

VertexSet Graph::indices_of(std::span<const Label> ls) const {
  VertexSet out;
  out.reserve(ls.size());
  for (const Label& l : ls) out.push_back(index_of(l));
  return setops::sorted_unique(std::move(out));
}

bool Graph::has_edge(EdgeId e) const noexcept {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e,
                             [](const Edge& x, EdgeId id) { return x.id < id; });
  return it != edges_.end() && it->id == e;
}

const Edge& Graph::edge(EdgeId e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e,
                             [](const Edge& x, EdgeId id) { return x.id < id; });
  if (it == edges_.end() || it->id != e)
    fail(Errc::ForeignEdgeId, "edge id " + std::to_string(e) + " not in graph");
  return *it;
}

EdgeId Graph::max_edge_id() const noexcept {
  return edges_.empty() ? -1 : edges_.back().id;
}

EdgeIds Graph::all_edge_ids() const {
  EdgeIds out;
  out.reserve(edges_.size());
  for (const Edge& e : edges_) out.push_back(e.id);
  return out;
}

std::span<const std::pair<VertexIx, EdgeId>> Graph::incident(VertexIx v) const {
  require_vertex(v);
  return adj_[v];
}

int Graph::unit_distance(VertexIx a, VertexIx b) const {
  require_vertex(a);
  require_vertex(b);
  return unit_dist_[a][b];
}

bool Graph::same_component(VertexIx a, VertexIx b) const {
  return unit_distance(a, b) >= 0;
}

std::vector<VertexSet> Graph::components() const {
  return components_without({});
}

std::vector<VertexSet> Graph::components_without(
    std::span<const VertexIx> removed) const {
  require_vertices(removed);
  const int n = vertex_count();
  std::vector<bool> gone(n, false);
  for (VertexIx v : removed) gone[v] = true;
  std::vector<bool> seen(n, false);
  std::vector<VertexSet> out;
  for (VertexIx s = 0; s < n; ++s) {
    if (gone[s] || seen[s]) continue;
    VertexSet comp;
    std::vector<VertexIx> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      VertexIx v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (const auto& [w, id] : adj_[v]) {
        if (!gone[w] && !seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  std::sort(out.begin(), out.end(),
            [](const VertexSet& a, const VertexSet& b) { return a[0] < b[0]; });
  return out;
}

VertexSet Graph::component_of(VertexIx v) const {
  require_vertex(v);
  VertexSet comp;
  for (VertexIx w = 0; w < vertex_count(); ++w)
    if (unit_dist_[v][w] >= 0) comp.push_back(w);
  return comp;
}

bool Graph::connected() const {
  if (vertex_count() == 0) return true;
  return static_cast<int>(component_of(0).size()) == vertex_count();
}

Graph Graph::induced_subgraph(std::span<const VertexIx> keep) const {
  require_vertices(keep);
  std::vector<Label> labels;
  labels.reserve(keep.size());
  for (VertexIx v : keep) labels.push_back(labels_[v]);
  std::vector<bool> in(vertex_count(), false);
  for (VertexIx v : keep) in[v] = true;
  std::vector<std::tuple<EdgeId, Label, Label>> edges;
  for (const Edge& e : edges_)
    if (in[e.u] && in[e.v]) edges.emplace_back(e.id, labels_[e.u], labels_[e.v]);
  return from_parts(std::move(labels), std::move(edges), true);
}

Graph Graph::without_edge(EdgeId id) const {
  edge(id);  // validate
  std::vector<std::tuple<EdgeId, Label, Label>> edges;
  for (const Edge& e : edges_)
    if (e.id != id) edges.emplace_back(e.id, labels_[e.u], labels_[e.v]);
  return from_parts(labels_, std::move(edges), true);
}

Graph Graph::augmented(const std::vector<Label>& new_labels,
                       const std::vector<std::pair<Label, Label>>& new_edges) const {
  std::vector<Label> labels = labels_;
  for (const Label& l : new_labels) {
    if (try_index_of(l)) fail(Errc::LabelCollision, "label '" + l + "' already used");
    labels.push_back(l);
  }
  {
    auto copy = labels;
    std::sort(copy.begin(), copy.end());
    if (std::adjacent_find(copy.begin(), copy.end()) != copy.end())
      fail(Errc::LabelCollision, "duplicate label among new vertices");
  }
  std::vector<std::tuple<EdgeId, Label, Label>> edges;
  for (const Edge& e : edges_) edges.emplace_back(e.id, labels_[e.u], labels_[e.v]);
  std::vector<std::pair<Label, Label>> added = new_edges;
  for (auto& [a, b] : added)
    if (b < a) std::swap(a, b);
  std::sort(added.begin(), added.end());
  if (std::adjacent_find(added.begin(), added.end()) != added.end())
    fail(Errc::DuplicateEdge, "duplicate new edge");
  EdgeId next = max_edge_id() + 1;
  for (const auto& [a, b] : added) edges.emplace_back(next++, a, b);
  return from_parts(std::move(labels), std::move(edges), false);
}

void Graph::require_vertex(VertexIx v) const {
  if (v < 0 || v >= vertex_count())
    fail(Errc::UnknownVertex, "vertex index " + std::to_string(v) + " out of range");
}

void Graph::require_vertices(std::span<const VertexIx> xs) const {
  for (VertexIx v : xs) require_vertex(v);
}

void Graph::require_edge_ids(std::span<const EdgeId> es) const {
  for (EdgeId e : es) edge(e);
}

// ---------------------------------------------------------------- Graft

namespace {
const std::shared_ptr<const Graph>& empty_graph() {
  static const std::shared_ptr<const Graph> g = std::make_shared<Graph>();
  return g;
}
}  // namespace

Graft::Graft() : graph_(empty_graph()) {}

Graft Graft::make(Graph g, VertexSet terminals) {
  return make(std::make_shared<const Graph>(std::move(g)), std::move(terminals));
}

Graft Graft::make(std::shared_ptr<const Graph> g, VertexSet terminals) {
  terminals = setops::sorted_unique(std::move(terminals));
  g->require_vertices(terminals);
  for (const VertexSet& comp : g->components()) {
    if (setops::set_intersection(comp, terminals).size() % 2 != 0)
      fail(Errc::OddTerminalComponent,
           "component " + label_set_to_string(*g, comp) +
               " holds an odd number of terminals");
  }
  Graft out;
  out.graph_ = std::move(g);
  out.terminals_ = std::move(terminals);
  return out;
}

bool Graft::is_terminal(VertexIx v) const {
  return setops::contains(terminals_, v);
}

Graft Graft::with_terminals(VertexSet terminals) const {
  return make(graph_, std::move(terminals));
}

Graft Graft::with_toggled(VertexIx a, VertexIx b) const {
  VertexSet t = setops::toggled(terminals_, a);
  t = setops::toggled(t, b);
  return make(graph_, std::move(t));
}

// ---------------------------------------------------------- BipartiteGraft

BipartiteGraft BipartiteGraft::make(Graft g, VertexSet class_a, VertexSet class_b) {
  class_a = setops::sorted_unique(std::move(class_a));
  class_b = setops::sorted_unique(std::move(class_b));
  const Graph& graph = g.graph();
  graph.require_vertices(class_a);
  graph.require_vertices(class_b);
  if (setops::intersects(class_a, class_b))
    fail(Errc::ValidationError, "color classes overlap");
  if (static_cast<int>(class_a.size() + class_b.size()) != graph.vertex_count())
    fail(Errc::ValidationError, "color classes do not cover the vertex set");
  std::vector<std::uint8_t> side(graph.vertex_count(), 0);
  for (VertexIx v : class_b) side[v] = 1;
  for (const Edge& e : graph.edges())
    if (side[e.u] == side[e.v])
      fail(Errc::ValidationError,
           "edge {" + graph.label(e.u) + "," + graph.label(e.v) +
               "} stays inside one color class");
  BipartiteGraft out;
  out.graft_ = std::move(g);
  out.class_a_ = std::move(class_a);
  out.class_b_ = std::move(class_b);
  out.side_ = std::move(side);
  return out;
}

bool BipartiteGraft::in_class_a(VertexIx v) const {
  graph().require_vertex(v);
  return side_[v] == 0;
}

std::span<const VertexIx> BipartiteGraft::class_of(VertexIx v) const {
  return in_class_a(v) ? class_a() : class_b();
}

// ----------------------------------------------------------- operations

Graft build_graft(const std::vector<Label>& vertices,
                  const std::vector<std::pair<Label, Label>>& edges,
                  const std::vector<Label>& terminals) {
  Graph g = Graph::from_labels(vertices, edges);
  VertexSet t;
  t.reserve(terminals.size());
  for (const Label& l : terminals) {
    auto ix = g.try_index_of(l);
    if (!ix) fail(Errc::UnknownVertex, "terminal '" + l + "' is not a vertex");
    t.push_back(*ix);
  }
  return Graft::make(std::move(g), std::move(t));
}

std::pair<EdgeIds, EdgeIds> boundary_and_induced(const Graph& g,
                                                 std::span<const VertexIx> x) {
  g.require_vertices(x);
  EdgeIds cut, inside;
  for (const Edge& e : g.edges()) {
    const bool a = setops::contains(x, e.u);
    const bool b = setops::contains(x, e.v);
    if (a && b) inside.push_back(e.id);
    else if (a || b) cut.push_back(e.id);
  }
  return {std::move(cut), std::move(inside)};
}

EdgeIds boundary_cut(const Graph& g, std::span<const VertexIx> x) {
  return boundary_and_induced(g, x).first;
}

EdgeIds induced_edges(const Graph& g, std::span<const VertexIx> x) {
  return boundary_and_induced(g, x).second;
}

EdgeIds edges_between(const Graph& g, std::span<const VertexIx> x,
                      std::span<const VertexIx> y) {
  g.require_vertices(x);
  g.require_vertices(y);
  EdgeIds out;
  for (const Edge& e : g.edges()) {
    const bool xy = setops::contains(x, e.u) && setops::contains(y, e.v);
    const bool yx = setops::contains(y, e.u) && setops::contains(x, e.v);
    if (xy || yx) out.push_back(e.id);
  }
  return out;
}

VertexSet neighborhood(const Graph& g, std::span<const VertexIx> x) {
  g.require_vertices(x);
  VertexSet out;
  for (VertexIx v : x)
    for (const auto& [w, id] : g.incident(v))
      if (!setops::contains(x, w)) out.push_back(w);
  return setops::sorted_unique(std::move(out));
}

ComponentPartition components_with_parity(const Graft& g,
                                          std::span<const VertexIx> x) {
  ComponentPartition out;
  out.components = g.graph().components_without(x);
  for (std::size_t i = 0; i < out.components.size(); ++i) {
    auto inter = setops::set_intersection(out.components[i], g.terminals());
    if (inter.size() % 2 == 1) out.odd_indices.push_back(i);
    else out.even_indices.push_back(i);
  }
  return out;
}

Label contracted_label(const Graph& g, std::span<const VertexIx> set) {
  std::string out = "[";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) out += "+";
    out += g.label(set[i]);
  }
  out += "]";
  return out;
}

ContractionResult contract_sets(const Graph& g,
                                const std::vector<VertexSet>& sets) {
  const int n = g.vertex_count();
  std::vector<int> owner(n, -1);
  std::vector<VertexSet> sorted_sets;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    VertexSet s = setops::sorted_unique(sets[i]);
    if (s.empty()) fail(Errc::ValidationError, "cannot contract an empty set");
    g.require_vertices(s);
    for (VertexIx v : s) {
      if (owner[v] >= 0)
        fail(Errc::OverlappingSets,
             "vertex '" + g.label(v) + "' appears in two contraction sets");
      owner[v] = static_cast<int>(i);
    }
    sorted_sets.push_back(std::move(s));
  }

  std::vector<Label> labels;
  std::vector<Label> set_labels(sorted_sets.size());
  for (std::size_t i = 0; i < sorted_sets.size(); ++i) {
    set_labels[i] = contracted_label(g, sorted_sets[i]);
    labels.push_back(set_labels[i]);
  }
  for (VertexIx v = 0; v < n; ++v)
    if (owner[v] < 0) labels.push_back(g.label(v));
  {
    auto copy = labels;
    std::sort(copy.begin(), copy.end());
    if (std::adjacent_find(copy.begin(), copy.end()) != copy.end())
      fail(Errc::LabelCollision, "contracted label collides with an existing one");
  }

  auto label_of = [&](VertexIx v) -> const Label& {
    return owner[v] >= 0 ? set_labels[owner[v]] : g.label(v);
  };
  std::vector<std::tuple<EdgeId, Label, Label>> edges;
  for (const Edge& e : g.edges()) {
    if (owner[e.u] >= 0 && owner[e.u] == owner[e.v]) continue;  // drop loops
    edges.emplace_back(e.id, label_of(e.u), label_of(e.v));
  }

  ContractionResult out;
  out.graph = Graph::from_parts(std::move(labels), std::move(edges), true);
  out.vertex_map.resize(n);
  for (VertexIx v = 0; v < n; ++v)
    out.vertex_map[v] = out.graph.index_of(label_of(v));
  for (std::size_t i = 0; i < sorted_sets.size(); ++i)
    out.set_vertices.push_back(out.graph.index_of(set_labels[i]));
  return out;
}

EdgeIds symmetric_difference(const Graph& g, std::span<const EdgeId> a,
                             std::span<const EdgeId> b) {
  g.require_edge_ids(a);
  g.require_edge_ids(b);
  return setops::set_symdiff(a, b);
}

bool same_labeled_graph(const Graph& a, const Graph& b) {
  if (a.labels().size() != b.labels().size()) return false;
  if (!std::equal(a.labels().begin(), a.labels().end(), b.labels().begin()))
    return false;
  auto ends = [](const Graph& g) {
    std::vector<std::pair<Label, Label>> out;
    for (const Edge& e : g.edges()) out.emplace_back(g.label(e.u), g.label(e.v));
    std::sort(out.begin(), out.end());
    return out;
  };
  return ends(a) == ends(b);
}

bool same_labeled_graft(const Graft& a, const Graft& b) {
  if (!same_labeled_graph(a.graph(), b.graph())) return false;
  std::vector<Label> ta, tb;
  for (VertexIx v : a.terminals()) ta.push_back(a.graph().label(v));
  for (VertexIx v : b.terminals()) tb.push_back(b.graph().label(v));
  return ta == tb;
}

bool same_labeled_bipartite(const BipartiteGraft& a, const BipartiteGraft& b) {
  if (!same_labeled_graft(a.graft(), b.graft())) return false;
  auto names = [](const BipartiteGraft& g, std::span<const VertexIx> xs) {
    std::vector<Label> out;
    for (VertexIx v : xs) out.push_back(g.graph().label(v));
    return out;
  };
  // classes may be swapped as wholes
  auto aa = names(a, a.class_a()), ab = names(a, a.class_b());
  auto ba = names(b, b.class_a()), bb = names(b, b.class_b());
  return (aa == ba && ab == bb) || (aa == bb && ab == ba);
}

std::string label_set_to_string(const Graph& g, std::span<const VertexIx> xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += g.label(xs[i]);
  }
  return out + "}";
}

std::string edge_set_to_string(const Graph& g, std::span<const EdgeId> es) {
  std::string out = "{";
  for (std::size_t i = 0; i < es.size(); ++i) {
    if (i) out += ",";
    const Edge& e = g.edge(es[i]);
    out += g.label(e.u) + "-" + g.label(e.v) + "#" + std::to_string(e.id);
  }
  return out + "}";
}

}  // namespace graft
