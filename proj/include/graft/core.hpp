#pragma once

#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace graft {

using VertexIx = int;
using EdgeId = int;
using Label = std::string;
using VertexSet = std::vector<VertexIx>;  // sorted, unique
using EdgeIds = std::vector<EdgeId>;      // sorted, unique

enum class Errc {
  DuplicateLabel,
  DuplicateEdge,
  UnknownEndpoint,
  LoopEdge,
  OddTerminalComponent,
  UnknownVertex,
  OverlappingSets,
  ForeignEdgeId,
  TooLarge,
  NoJoinExists,
  NotMinimumJoin,
  SameVertex,
  Disconnected,
  NotPrimal,
  NotInA,
  NotExtreme,
  NotMaximalExtreme,
  NotCombic,
  CombicViolation,
  NotComb,
  LabelCollision,
  IllegalAttachment,
  ToothNotPrimal,
  BadAttachment,
  ContractionMismatch,
  TerminalRuleViolation,
  InfeasibleParameters,
  UnknownSuite,
  ParseError,
  ValidationError,
  InternalCheckFailed,
};

const char* errc_name(Errc c);

class GraftError : public std::runtime_error {
 public:
  GraftError(Errc code, const std::string& message);
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& message);

// Always-on consistency check for facts the structure theory guarantees.
// A failure indicates a bug, not bad input.
void internal_check(bool ok, const std::string& what);

// Set operations over sorted unique int vectors.
namespace setops {
bool contains(std::span<const int> xs, int x);
bool is_subset(std::span<const int> xs, std::span<const int> ys);
bool intersects(std::span<const int> xs, std::span<const int> ys);
std::vector<int> sorted_unique(std::vector<int> xs);
std::vector<int> set_union(std::span<const int> a, std::span<const int> b);
std::vector<int> set_intersection(std::span<const int> a, std::span<const int> b);
std::vector<int> set_difference(std::span<const int> a, std::span<const int> b);
std::vector<int> set_symdiff(std::span<const int> a, std::span<const int> b);
std::vector<int> toggled(std::span<const int> xs, int x);
}  // namespace setops

struct Edge {
  EdgeId id = -1;
  VertexIx u = -1;
  VertexIx v = -1;

  VertexIx other(VertexIx w) const { return w == u ? v : u; }
  bool touches(VertexIx w) const { return u == w || v == w; }
};

// Undirected graph with string vertex labels and stable edge ids.
// Vertex indices are dense and follow sorted label order, so sorted index
// output is sorted label output. Edge ids survive derivation: subgraphs and
// contractions keep the ids of the edges they inherit. Loops never exist;
// parallel edges appear only in derived graphs.
class Graph {
 public:
  Graph();

  // Fresh build from user input: simple, loopless; ids assigned in sorted
  // endpoint order.
  static Graph from_labels(const std::vector<Label>& vertices,
                           const std::vector<std::pair<Label, Label>>& edges);

  // Derived-graph build: edges keep the given ids; parallels allowed when
  // flagged (contraction output), loops always rejected.
  static Graph from_parts(std::vector<Label> labels,
                          std::vector<std::tuple<EdgeId, Label, Label>> edges,
                          bool allow_parallel);

  int vertex_count() const noexcept { return static_cast<int>(labels_.size()); }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  std::span<const Label> labels() const noexcept { return labels_; }
  const Label& label(VertexIx v) const;
  std::optional<VertexIx> try_index_of(const Label& l) const noexcept;
  VertexIx index_of(const Label& l) const;  // UnknownVertex
  VertexSet indices_of(std::span<const Label> ls) const;

  std::span<const Edge> edges() const noexcept { return edges_; }  // ascending id
  bool has_edge(EdgeId e) const noexcept;
  const Edge& edge(EdgeId e) const;  // ForeignEdgeId
  EdgeId max_edge_id() const noexcept;
  EdgeIds all_edge_ids() const;

  // (neighbor, edge id), sorted by (neighbor, id).
  std::span<const std::pair<VertexIx, EdgeId>> incident(VertexIx v) const;

  int unit_distance(VertexIx a, VertexIx b) const;  // -1 when unreachable
  bool same_component(VertexIx a, VertexIx b) const;
  std::vector<VertexSet> components() const;
  std::vector<VertexSet> components_without(std::span<const VertexIx> removed) const;
  VertexSet component_of(VertexIx v) const;
  bool connected() const;

  Graph induced_subgraph(std::span<const VertexIx> keep) const;
  Graph without_edge(EdgeId e) const;
  // New vertices plus edges between existing and new labels; fresh ids.
  Graph augmented(const std::vector<Label>& new_labels,
                  const std::vector<std::pair<Label, Label>>& new_edges) const;

  void require_vertex(VertexIx v) const;
  void require_vertices(std::span<const VertexIx> xs) const;
  void require_edge_ids(std::span<const EdgeId> es) const;

 private:
  std::vector<Label> labels_;
  std::vector<Edge> edges_;  // sorted by id
  std::vector<std::vector<std::pair<VertexIx, EdgeId>>> adj_;
  std::vector<std::vector<int>> unit_dist_;

  void finalize();
};

struct ComponentPartition {
  std::vector<VertexSet> components;       // sorted by smallest member
  std::vector<std::size_t> odd_indices;    // odd terminal intersection
  std::vector<std::size_t> even_indices;
};

struct ContractionResult {
  Graph graph;
  std::vector<VertexIx> vertex_map;  // old index -> new index
  VertexSet set_vertices;            // new index of [X_i], per input set order
};

// Graph plus terminal set with even intersection per component.
class Graft {
 public:
  Graft();
  static Graft make(Graph g, VertexSet terminals);
  static Graft make(std::shared_ptr<const Graph> g, VertexSet terminals);

  const Graph& graph() const { return *graph_; }
  const std::shared_ptr<const Graph>& graph_ptr() const { return graph_; }
  std::span<const VertexIx> terminals() const { return terminals_; }
  bool is_terminal(VertexIx v) const;
  int terminal_count() const { return static_cast<int>(terminals_.size()); }

  Graft with_terminals(VertexSet terminals) const;       // same graph
  Graft with_toggled(VertexIx a, VertexIx b) const;      // T symdiff {a,b}

 private:
  std::shared_ptr<const Graph> graph_;
  VertexSet terminals_;
};

class BipartiteGraft {
 public:
  BipartiteGraft() = default;
  static BipartiteGraft make(Graft g, VertexSet class_a, VertexSet class_b);

  const Graft& graft() const { return graft_; }
  const Graph& graph() const { return graft_.graph(); }
  std::span<const VertexIx> class_a() const { return class_a_; }
  std::span<const VertexIx> class_b() const { return class_b_; }
  bool in_class_a(VertexIx v) const;
  std::span<const VertexIx> class_of(VertexIx v) const;

 private:
  Graft graft_;
  VertexSet class_a_;
  VertexSet class_b_;
  std::vector<std::uint8_t> side_;
};

Graft build_graft(const std::vector<Label>& vertices,
                  const std::vector<std::pair<Label, Label>>& edges,
                  const std::vector<Label>& terminals);

// (boundary cut, induced edge set) of X.
std::pair<EdgeIds, EdgeIds> boundary_and_induced(const Graph& g,
                                                 std::span<const VertexIx> x);
EdgeIds boundary_cut(const Graph& g, std::span<const VertexIx> x);
EdgeIds induced_edges(const Graph& g, std::span<const VertexIx> x);
EdgeIds edges_between(const Graph& g, std::span<const VertexIx> x,
                      std::span<const VertexIx> y);
VertexSet neighborhood(const Graph& g, std::span<const VertexIx> x);

ComponentPartition components_with_parity(const Graft& g,
                                          std::span<const VertexIx> x);

ContractionResult contract_sets(const Graph& g,
                                const std::vector<VertexSet>& sets);
Label contracted_label(const Graph& g, std::span<const VertexIx> set);

EdgeIds symmetric_difference(const Graph& g, std::span<const EdgeId> a,
                             std::span<const EdgeId> b);

// Label-level equality, the notion used for round-trip checks. Edge ids may
// differ between independently built graphs; endpoint-label multisets decide.
bool same_labeled_graph(const Graph& a, const Graph& b);
bool same_labeled_graft(const Graft& a, const Graft& b);
bool same_labeled_bipartite(const BipartiteGraft& a, const BipartiteGraft& b);

std::string label_set_to_string(const Graph& g, std::span<const VertexIx> xs);
std::string edge_set_to_string(const Graph& g, std::span<const EdgeId> es);

}  // namespace graft
