#pragma once

#include <map>
#include <memory>

#include "graft/structure.hpp"

namespace graft {

struct CathedralDecomposition {
  VertexSet base;    // the spine set X (original indices)
  Skeleton skeleton;
  std::vector<Tooth> teeth;
  VertexSet fringe;  // trivial leftovers
};

// Decompose along a maximal bipartitic extreme set: X is combic, the below
// part splits into the odd components, each becomes a primal tooth graft, and
// whatever remains is a trivial fringe.
CathedralDecomposition decompose(const BipartiteGraft& g, const Join& f,
                                 std::span<const VertexIx> x);

struct SeboReport {
  VertexIx root = -1;
  bool combic = false;
  bool odd_components_match = false;
  bool even_components_match = false;
  bool skeleton_is_comb = false;
  bool skeleton_primal = false;
  bool teeth_primal = false;
  bool tooth_distance_identity = false;
  bool neighbor_containment = false;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// Check the distance-theoretic structure around a root: the zero part is
// combic, its skeleton is a comb primal at the root, the teeth are primal at
// their cut ends with distances shifted by exactly one, and spine neighbors
// land in each tooth's zero part.
SeboReport verify_sebo(const Graft& g, const Join& f, VertexIx r);

// Operational comb test: class A extreme and every class-B vertex at minimum
// distance exactly -1 from A.
bool is_comb(const BipartiteGraft& g, const Join& f);

struct ToothSpec {
  BipartiteGraft graft;
  VertexIx root = -1;
  const Graph& graph() const { return graft.graph(); }
};

struct SynthesisSpec {
  BipartiteGraft comb;                  // spine = class A, teeth = class B
  std::map<Label, ToothSpec> teeth;     // comb tooth label -> tooth graft
  std::map<EdgeId, Label> attachments;  // comb edge -> target label in the tooth
};

struct SynthesisEdgeMap {
  std::map<EdgeId, EdgeId> comb_to_result;
  std::map<Label, std::map<EdgeId, EdgeId>> tooth_to_result;
};

// Glue primal tooth grafts into the teeth of a skeleton comb; attachment
// edges may only target a tooth's zero part. Contracting the teeth recovers
// the comb exactly.
BipartiteGraft synthesize(const SynthesisSpec& spec);
BipartiteGraft synthesize(const SynthesisSpec& spec, SynthesisEdgeMap& edge_map);

// Minimum join of a synthesis from minimum joins of its parts: the comb join
// picks one cut edge per tooth, and each tooth contributes a minimum join of
// its graft with terminals toggled between its root and the cut end.
Join synthesis_min_join(const SynthesisSpec& spec, const Join& comb_join,
                        const std::map<Label, Join>& tooth_joins);

struct PrimalCertificate {
  Label root;
  BipartiteGraft comb;  // the graft itself for leaves, else its skeleton comb
  bool base_case = false;
  std::map<EdgeId, Label> attachments;  // comb edge -> original attachment target
  std::vector<std::pair<Label, std::unique_ptr<PrimalCertificate>>> children;

  int node_count() const;
  int depth() const;
};

// Recursive certificate that a bipartite graft is primal at the root: leaves
// are combs, inner nodes are skeleton combs with certified tooth grafts.
PrimalCertificate primal_decompose(const BipartiteGraft& g, VertexIx root);

// Rebuild the graft a certificate describes; label-identical to the input of
// primal_decompose.
BipartiteGraft resynthesize(const PrimalCertificate& cert);

// A tooth inherits the parent's two-coloring.
BipartiteGraft tooth_as_bipartite(const BipartiteGraft& parent, const Tooth& tooth);

// Decomposition parts repackaged as a synthesis input; synthesizing it
// reproduces the decomposed (fringe-free) graft label for label.
SynthesisSpec spec_from_decomposition(const BipartiteGraft& g,
                                      const CathedralDecomposition& dec);

struct CombReport {
  bool primal = false;
  bool claims_checked = false;
  bool cross_edges_absent = false;
  bool contraction_join_minimum = false;
  bool contraction_distances = false;
  FactorComponents factor_components;
  int root_component = -1;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// For a comb primal at a spine root: the root's factor-component has no
// spine-side edges leaving it, the join restricted outside it stays minimum
// after contracting it, and contraction distances are 1 to the spine and 0 to
// the teeth. Reports the factor-component structure either way.
CombReport comb_primality_checks(const BipartiteGraft& comb, VertexIx root);

}  // namespace graft
