#include "graft/decompose.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace graft {

CathedralDecomposition decompose(const BipartiteGraft& g, const Join& f,
                                 std::span<const VertexIx> x) {
  if (!is_maximal_bipartitic_extreme(g, f, x))
    fail(Errc::NotMaximalExtreme, "set is not maximal bipartitic extreme");
  if (!is_combic(g.graft(), f, x))
    fail(Errc::CombicViolation,
         "maximal bipartitic extreme set is not combic; this is a bug");

  CathedralDecomposition out;
  out.base.assign(x.begin(), x.end());
  out.skeleton = skeleton_of(g.graft(), f, x);

  const ExtremePartition part = extreme_partition(g, f, x);
  out.fringe = part.fringe;

  // the below part splits exactly into the odd components
  const ComponentPartition comps = components_with_parity(g.graft(), x);
  std::vector<VertexSet> odd, even;
  for (std::size_t i : comps.odd_indices) odd.push_back(comps.components[i]);
  for (std::size_t i : comps.even_indices) even.push_back(comps.components[i]);
  {
    std::vector<VertexSet> below_comps;
    const Graph below_graph = g.graph().induced_subgraph(part.below);
    for (const VertexSet& c : below_graph.components()) {
      VertexSet mapped;
      for (VertexIx v : c)
        mapped.push_back(g.graph().index_of(below_graph.label(v)));
      below_comps.push_back(setops::sorted_unique(std::move(mapped)));
    }
    std::sort(below_comps.begin(), below_comps.end());
    std::vector<VertexSet> odd_sorted = odd;
    std::sort(odd_sorted.begin(), odd_sorted.end());
    internal_check(below_comps == odd_sorted,
                   "below part does not split into the odd components");
  }

  const VertexSet spine_neighbors = neighborhood(g.graph(), x);
  for (const VertexSet& comp : odd) {
    Tooth tooth = tooth_extract(g.graft(), f, x, comp);
    internal_check(is_primal(tooth.graft, tooth.root),
                   "tooth graft is not primal at its cut end");
    const Join tooth_join = tooth.join;
    const RootProfile profile = root_profile(tooth.graft, tooth_join, tooth.root);
    for (VertexIx v : setops::set_intersection(spine_neighbors, comp)) {
      const VertexIx local = tooth.graft.graph().index_of(g.graph().label(v));
      internal_check(setops::contains(profile.zero_part, local),
                     "spine neighbor outside the tooth's zero part");
    }
    out.teeth.push_back(std::move(tooth));
  }

  // even components are single trivial vertices and exhaust the fringe
  const FactorComponents fc = factor_components(g.graft());
  VertexSet even_union;
  for (const VertexSet& comp : even) {
    internal_check(comp.size() == 1, "even component is not a single vertex");
    internal_check(setops::contains(fc.trivial, comp.front()),
                   "even component vertex is not trivial");
    even_union = setops::set_union(even_union, comp);
  }
  internal_check(even_union == out.fringe,
                 "even components do not exhaust the fringe");
  return out;
}

SeboReport verify_sebo(const Graft& g, const Join& f, VertexIx r) {
  require_minimum_join(g, f.edges);
  SeboReport report;
  report.root = r;
  auto note = [&](bool ok, const std::string& what) {
    if (!ok) report.failures.push_back(what);
    return ok;
  };

  const RootProfile profile = root_profile(g, f, r);
  const VertexSet& x = profile.zero_part;

  report.combic = note(is_combic(g, f, x), "zero part is not combic");
  if (!report.combic) return report;

  const ComponentPartition comps = components_with_parity(g, x);
  std::vector<VertexSet> odd, even;
  for (std::size_t i : comps.odd_indices) odd.push_back(comps.components[i]);
  for (std::size_t i : comps.even_indices) even.push_back(comps.components[i]);

  auto component_sets = [&](std::span<const VertexIx> part) {
    std::vector<VertexSet> out;
    const Graph sub = g.graph().induced_subgraph(part);
    for (const VertexSet& c : sub.components()) {
      VertexSet mapped;
      for (VertexIx v : c) mapped.push_back(g.graph().index_of(sub.label(v)));
      out.push_back(setops::sorted_unique(std::move(mapped)));
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  {
    auto odd_sorted = odd;
    std::sort(odd_sorted.begin(), odd_sorted.end());
    report.odd_components_match =
        note(component_sets(profile.negative_part) == odd_sorted,
             "odd components differ from the negative part's components");
    auto even_sorted = even;
    std::sort(even_sorted.begin(), even_sorted.end());
    report.even_components_match =
        note(component_sets(profile.outside_part) == even_sorted,
             "even components differ from the outside part's components");
  }

  const Skeleton skeleton = skeleton_of(g, f, x);
  report.skeleton_is_comb =
      note(is_comb(skeleton.graft, skeleton.join), "skeleton is not a comb");
  {
    const VertexIx r_sk = skeleton.graft.graph().index_of(g.graph().label(r));
    report.skeleton_primal = note(is_primal(skeleton.graft.graft(), r_sk),
                                  "skeleton is not primal at the root");
  }

  const VertexSet spine_neighbors = neighborhood(g.graph(), x);
  report.teeth_primal = true;
  report.tooth_distance_identity = true;
  report.neighbor_containment = true;
  for (const VertexSet& comp : odd) {
    const Tooth tooth = tooth_extract(g, f, x, comp);
    const bool primal = is_primal(tooth.graft, tooth.root);
    report.teeth_primal = note(primal, "tooth not primal at its cut end") &&
                          report.teeth_primal;
    if (!primal) continue;
    // distances inside the tooth sit exactly one level above the graft's
    int tooth_min = 0, graft_min = 0;
    bool pointwise = true;
    for (VertexIx v : comp) {
      const VertexIx local = tooth.graft.graph().index_of(g.graph().label(v));
      auto inner = join_distance(tooth.graft, tooth.root, local);
      auto outer = join_distance(g, r, v);
      if (!inner || !outer || *outer != *inner - 1) pointwise = false;
      if (inner) tooth_min = std::min(tooth_min, *inner);
      if (outer) graft_min = std::min(graft_min, *outer);
    }
    report.tooth_distance_identity =
        note(pointwise && tooth_min == graft_min + 1,
             "tooth distances are not the graft distances shifted by one") &&
        report.tooth_distance_identity;

    const Join tooth_join = tooth.join;
    const RootProfile tooth_profile =
        root_profile(tooth.graft, tooth_join, tooth.root);
    for (VertexIx v : setops::set_intersection(spine_neighbors, comp)) {
      const VertexIx local = tooth.graft.graph().index_of(g.graph().label(v));
      report.neighbor_containment =
          note(setops::contains(tooth_profile.zero_part, local),
               "spine neighbor outside a tooth's zero part") &&
          report.neighbor_containment;
    }
  }
  return report;
}

bool is_comb(const BipartiteGraft& g, const Join& f) {
  if (!is_extreme(g.graft(), f, g.class_a())) return false;
  for (VertexIx b : g.class_b()) {
    std::optional<int> best;
    for (VertexIx a : g.class_a()) {
      auto d = join_distance(g.graft(), a, b);
      if (d && (!best || *d < *best)) best = *d;
    }
    if (!best || *best != -1) return false;
  }
  return true;
}

namespace {

struct SynthesisParts {
  std::vector<Label> vertices;
  std::vector<std::pair<Label, Label>> edges;
  std::vector<Label> terminals;
  std::vector<Label> class_a;  // comb spine plus tooth B-classes
  std::vector<Label> class_b;  // tooth A-classes
  // endpoint pairs (sorted) for edge lookup after the build
  std::map<EdgeId, std::pair<Label, Label>> comb_edge_ends;
  std::map<Label, std::map<EdgeId, std::pair<Label, Label>>> tooth_edge_ends;
};

SynthesisParts assemble(const SynthesisSpec& spec) {
  const BipartiteGraft& comb = spec.comb;
  const Graph& cg = comb.graph();
  {
    const Join comb_join = min_join(comb.graft());
    if (!is_comb(comb, comb_join))
      fail(Errc::NotComb, "skeleton graft fails the comb test");
  }

  for (const auto& [label, tooth] : spec.teeth)
    if (!cg.try_index_of(label))
      fail(Errc::BadAttachment,
           "tooth '" + label + "' matches no comb tooth vertex");

  SynthesisParts parts;
  std::set<Label> used;
  for (VertexIx a : comb.class_a()) {
    parts.vertices.push_back(cg.label(a));
    parts.class_a.push_back(cg.label(a));
    used.insert(cg.label(a));
    if (comb.graft().is_terminal(a)) parts.terminals.push_back(cg.label(a));
  }

  for (VertexIx b : comb.class_b()) {
    const Label b_label = cg.label(b);
    auto it = spec.teeth.find(b_label);
    if (it == spec.teeth.end())
      fail(Errc::BadAttachment, "no tooth graft for comb tooth '" + b_label + "'");
    if (!comb.graft().is_terminal(b))
      fail(Errc::TerminalRuleViolation,
           "comb tooth '" + b_label + "' must be a terminal");

    const ToothSpec& tooth = it->second;
    const Graph& tg = tooth.graph();
    tg.require_vertex(tooth.root);
    if (!is_primal(tooth.graft.graft(), tooth.root))
      fail(Errc::ToothNotPrimal,
           "tooth graft for '" + b_label + "' is not primal at its root");

    for (const Label& l : tg.labels()) {
      if (used.count(l) || cg.try_index_of(l))
        fail(Errc::LabelCollision,
             "tooth vertex label '" + l + "' collides with another part");
      used.insert(l);
      parts.vertices.push_back(l);
      // tooth classes flip: the root side joins the comb's tooth side
      const bool root_side = tooth.graft.in_class_a(tg.index_of(l)) ==
                             tooth.graft.in_class_a(tooth.root);
      (root_side ? parts.class_b : parts.class_a).push_back(l);
    }
    // terminal rule: tooth terminals toggled at the root
    VertexSet tooth_terminals(tooth.graft.graft().terminals().begin(),
                              tooth.graft.graft().terminals().end());
    tooth_terminals = setops::toggled(tooth_terminals, tooth.root);
    for (VertexIx v : tooth_terminals) parts.terminals.push_back(tg.label(v));

    for (const Edge& e : tg.edges()) {
      parts.edges.emplace_back(tg.label(e.u), tg.label(e.v));
      parts.tooth_edge_ends[b_label][e.id] = {
          std::min(tg.label(e.u), tg.label(e.v)),
          std::max(tg.label(e.u), tg.label(e.v))};
    }
  }

  // comb edges become attachment edges into each tooth's zero part
  std::map<Label, VertexSet> zero_parts;
  for (const auto& [b_label, tooth] : spec.teeth) {
    const Join tooth_join = min_join(tooth.graft.graft());
    zero_parts[b_label] =
        root_profile(tooth.graft.graft(), tooth_join, tooth.root).zero_part;
  }
  std::set<std::pair<Label, Label>> used_attachments;
  for (const Edge& e : cg.edges()) {
    const VertexIx spine_end = comb.in_class_a(e.u) ? e.u : e.v;
    const VertexIx tooth_end = comb.in_class_a(e.u) ? e.v : e.u;
    const Label tooth_label = cg.label(tooth_end);
    auto att = spec.attachments.find(e.id);
    if (att == spec.attachments.end())
      fail(Errc::BadAttachment,
           "no attachment target for comb edge id " + std::to_string(e.id));
    const ToothSpec& tooth = spec.teeth.at(tooth_label);
    auto target = tooth.graph().try_index_of(att->second);
    if (!target)
      fail(Errc::BadAttachment, "attachment target '" + att->second +
                                    "' is not a vertex of tooth '" +
                                    tooth_label + "'");
    if (!setops::contains(zero_parts.at(tooth_label), *target))
      fail(Errc::BadAttachment, "attachment target '" + att->second +
                                    "' is outside the tooth's zero part");
    if (!used_attachments.emplace(cg.label(spine_end), att->second).second)
      fail(Errc::BadAttachment,
           "parallel comb edges attach to the same target '" + att->second + "'");
    parts.edges.emplace_back(cg.label(spine_end), att->second);
    parts.comb_edge_ends[e.id] = {
        std::min(cg.label(spine_end), att->second),
        std::max(cg.label(spine_end), att->second)};
  }
  return parts;
}

}  // namespace

BipartiteGraft synthesize(const SynthesisSpec& spec) {
  SynthesisEdgeMap unused;
  return synthesize(spec, unused);
}

BipartiteGraft synthesize(const SynthesisSpec& spec, SynthesisEdgeMap& edge_map) {
  SynthesisParts parts = assemble(spec);
  Graft graft = build_graft(parts.vertices, parts.edges, parts.terminals);
  const Graph& g = graft.graph();

  auto ends_to_id = [&](const std::pair<Label, Label>& ends) -> EdgeId {
    const VertexIx u = g.index_of(ends.first);
    const VertexIx v = g.index_of(ends.second);
    for (const auto& [w, id] : g.incident(u))
      if (w == v) return id;
    internal_check(false, "synthesis edge lookup failed");
    return -1;
  };
  edge_map.comb_to_result.clear();
  edge_map.tooth_to_result.clear();
  for (const auto& [comb_id, ends] : parts.comb_edge_ends)
    edge_map.comb_to_result[comb_id] = ends_to_id(ends);
  for (const auto& [tooth_label, m] : parts.tooth_edge_ends)
    for (const auto& [tooth_id, ends] : m)
      edge_map.tooth_to_result[tooth_label][tooth_id] = ends_to_id(ends);

  VertexSet class_a = g.indices_of(parts.class_a);
  VertexSet class_b = g.indices_of(parts.class_b);
  BipartiteGraft out = BipartiteGraft::make(std::move(graft), class_a, class_b);

  // contracting every tooth back must recover the comb label-for-label
  {
    std::vector<VertexSet> sets;
    std::vector<Label> names;
    for (const auto& [b_label, tooth] : spec.teeth) {
      VertexSet s;
      for (const Label& l : tooth.graph().labels())
        s.push_back(out.graph().index_of(l));
      sets.push_back(setops::sorted_unique(std::move(s)));
      names.push_back(b_label);
    }
    const ContractionResult contracted = contract_sets(out.graph(), sets);
    std::vector<Label> labels;
    for (const Label& l : contracted.graph.labels()) labels.push_back(l);
    for (std::size_t i = 0; i < sets.size(); ++i)
      labels[contracted.set_vertices[i]] = names[i];
    std::vector<std::tuple<EdgeId, Label, Label>> edges;
    for (const Edge& e : contracted.graph.edges())
      edges.emplace_back(e.id, labels[e.u], labels[e.v]);
    const Graph renamed = Graph::from_parts(labels, std::move(edges), true);
    // contracted tooth terminals collapse mod 2; every tooth holds an odd count
    VertexSet terminals;
    std::map<VertexIx, int> parity;
    for (VertexIx v : out.graft().terminals()) parity[contracted.vertex_map[v]] ^= 1;
    for (const auto& [cv, p] : parity)
      if (p) terminals.push_back(renamed.index_of(labels[cv]));
    const Graft check = Graft::make(renamed, setops::sorted_unique(std::move(terminals)));
    if (!same_labeled_graft(check, spec.comb.graft()))
      fail(Errc::ContractionMismatch,
           "contracting the teeth does not recover the skeleton comb");
  }
  return out;
}

Join synthesis_min_join(const SynthesisSpec& spec, const Join& comb_join,
                        const std::map<Label, Join>& tooth_joins) {
  SynthesisEdgeMap edge_map;
  const BipartiteGraft result = synthesize(spec, edge_map);
  require_minimum_join(spec.comb.graft(), comb_join.edges);

  EdgeIds out;
  for (EdgeId id : comb_join.edges) out.push_back(edge_map.comb_to_result.at(id));

  for (VertexIx b : spec.comb.class_b()) {
    const Label b_label = spec.comb.graph().label(b);
    const ToothSpec& tooth = spec.teeth.at(b_label);
    const EdgeIds cut = boundary_cut(spec.comb.graph(), VertexSet{b});
    const EdgeIds cut_join = setops::set_intersection(cut, comb_join.edges);
    internal_check(cut_join.size() == 1,
                   "comb join must pick exactly one cut edge per tooth");
    const Label target = spec.attachments.at(cut_join.front());
    const VertexIx cut_end = tooth.graph().index_of(target);

    VertexSet expected(tooth.graft.graft().terminals().begin(),
                       tooth.graft.graft().terminals().end());
    if (cut_end != tooth.root) {
      expected = setops::toggled(expected, tooth.root);
      expected = setops::toggled(expected, cut_end);
    }
    auto it = tooth_joins.find(b_label);
    if (it == tooth_joins.end())
      fail(Errc::ValidationError, "no tooth join supplied for '" + b_label + "'");
    const Graft expected_graft = Graft::make(tooth.graft.graft().graph_ptr(), expected);
    require_minimum_join(expected_graft, it->second.edges);
    for (EdgeId id : it->second.edges)
      out.push_back(edge_map.tooth_to_result.at(b_label).at(id));
  }

  Join combined{setops::sorted_unique(std::move(out))};
  require_minimum_join(result.graft(), combined.edges);

  // the spine is maximal bipartitic extreme with empty fringe
  std::vector<Label> spine_labels;
  for (VertexIx a : spec.comb.class_a())
    spine_labels.push_back(spec.comb.graph().label(a));
  const VertexSet spine = result.graph().indices_of(spine_labels);
  internal_check(is_maximal_bipartitic_extreme(result, combined, spine),
                 "synthesis spine is not maximal bipartitic extreme");
  const ExtremePartition part = extreme_partition(result, combined, spine);
  internal_check(part.fringe.empty(), "synthesis has a nonempty fringe");
  return combined;
}

int PrimalCertificate::node_count() const {
  int n = 1;
  for (const auto& [label, child] : children) n += child->node_count();
  return n;
}

int PrimalCertificate::depth() const {
  int d = 0;
  for (const auto& [label, child] : children) d = std::max(d, child->depth());
  return d + 1;
}

PrimalCertificate primal_decompose(const BipartiteGraft& g, VertexIx root) {
  if (!is_primal(g.graft(), root))
    fail(Errc::NotPrimal,
         "graft is not primal at '" + g.graph().label(root) + "'");
  const Join f = min_join(g.graft());

  PrimalCertificate cert;
  cert.root = g.graph().label(root);

  // leaf: the graft itself is already a comb with the root on its spine
  {
    const bool root_in_a = g.in_class_a(root);
    const BipartiteGraft oriented =
        root_in_a ? g
                  : BipartiteGraft::make(g.graft(),
                                         VertexSet(g.class_b().begin(), g.class_b().end()),
                                         VertexSet(g.class_a().begin(), g.class_a().end()));
    if (is_comb(oriented, f)) {
      cert.comb = oriented;
      cert.base_case = true;
      return cert;
    }
  }

  const RootProfile profile = root_profile(g.graft(), f, root);
  const CathedralDecomposition dec = decompose(g, f, profile.zero_part);
  internal_check(dec.fringe.empty(), "primal graft produced a fringe");

  const VertexIx root_sk = dec.skeleton.graft.graph().index_of(cert.root);
  internal_check(is_primal(dec.skeleton.graft.graft(), root_sk),
                 "skeleton comb is not primal at the root");
  cert.comb = dec.skeleton.graft;

  // comb edges are the original cut edges; each attaches back to its non-spine end
  for (const Edge& e : g.graph().edges()) {
    if (!dec.skeleton.graft.graph().has_edge(e.id)) continue;
    const bool u_in_x = setops::contains(dec.base, e.u);
    cert.attachments[e.id] = g.graph().label(u_in_x ? e.v : e.u);
  }

  for (const Tooth& tooth : dec.teeth) {
    const Label tooth_label =
        contracted_label(g.graph(), tooth.original_vertices);
    const BipartiteGraft tooth_bg = tooth_as_bipartite(g, tooth);
    auto child = std::make_unique<PrimalCertificate>(
        primal_decompose(tooth_bg, tooth.root));
    cert.children.emplace_back(tooth_label, std::move(child));
  }
  std::sort(cert.children.begin(), cert.children.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return cert;
}

BipartiteGraft resynthesize(const PrimalCertificate& cert) {
  if (cert.base_case) return cert.comb;
  SynthesisSpec spec;
  spec.comb = cert.comb;
  for (const auto& [label, child] : cert.children) {
    ToothSpec tooth;
    tooth.graft = resynthesize(*child);
    tooth.root = tooth.graft.graph().index_of(child->root);
    spec.teeth.emplace(label, std::move(tooth));
  }
  spec.attachments = cert.attachments;
  return synthesize(spec);
}

BipartiteGraft tooth_as_bipartite(const BipartiteGraft& parent, const Tooth& tooth) {
  VertexSet sub_a, sub_b;
  for (VertexIx v : tooth.original_vertices) {
    const VertexIx local =
        tooth.graft.graph().index_of(parent.graph().label(v));
    (parent.in_class_a(v) ? sub_a : sub_b).push_back(local);
  }
  return BipartiteGraft::make(tooth.graft,
                              setops::sorted_unique(std::move(sub_a)),
                              setops::sorted_unique(std::move(sub_b)));
}

SynthesisSpec spec_from_decomposition(const BipartiteGraft& g,
                                      const CathedralDecomposition& dec) {
  SynthesisSpec spec;
  spec.comb = dec.skeleton.graft;
  for (const Tooth& tooth : dec.teeth) {
    ToothSpec ts;
    ts.graft = tooth_as_bipartite(g, tooth);
    ts.root = tooth.root;
    spec.teeth.emplace(contracted_label(g.graph(), tooth.original_vertices),
                       std::move(ts));
  }
  // skeleton edges are original cut edges; targets are their non-spine ends
  for (const Edge& e : spec.comb.graph().edges()) {
    const Edge& orig = g.graph().edge(e.id);
    const bool u_in_x = setops::contains(dec.base, orig.u);
    spec.attachments[e.id] = g.graph().label(u_in_x ? orig.v : orig.u);
  }
  return spec;
}

CombReport comb_primality_checks(const BipartiteGraft& comb, VertexIx root) {
  const Join f = min_join(comb.graft());
  if (!is_comb(comb, f)) fail(Errc::NotComb, "graft fails the comb test");
  if (!comb.in_class_a(root))
    fail(Errc::NotInA, "root '" + comb.graph().label(root) + "' is not on the spine");

  CombReport report;
  auto note = [&](bool ok, const std::string& what) {
    if (!ok) report.failures.push_back(what);
    return ok;
  };

  report.factor_components = factor_components(comb.graft());
  for (std::size_t i = 0; i < report.factor_components.components.size(); ++i)
    if (setops::contains(report.factor_components.components[i], root))
      report.root_component = static_cast<int>(i);

  report.primal = is_primal(comb.graft(), root);
  if (!report.primal) return report;  // claims only apply to primal combs
  report.claims_checked = true;

  const VertexSet& g_r =
      report.factor_components.components[report.root_component];
  const VertexSet spine_inside =
      setops::set_intersection(g_r, VertexSet(comb.class_a().begin(),
                                              comb.class_a().end()));
  VertexSet teeth_outside;
  for (VertexIx b : comb.class_b())
    if (!setops::contains(g_r, b)) teeth_outside.push_back(b);
  report.cross_edges_absent =
      note(edges_between(comb.graph(), spine_inside, teeth_outside).empty(),
           "edges leave the root component from its spine side");

  if (static_cast<int>(g_r.size()) == comb.graph().vertex_count()) {
    // factor-connected comb: nothing to contract, claims hold vacuously
    report.contraction_join_minimum = true;
    report.contraction_distances = true;
    return report;
  }

  const ContractionResult contracted = contract_sets(comb.graph(), {g_r});
  VertexSet terminals;
  {
    std::map<VertexIx, int> parity;
    for (VertexIx v : comb.graft().terminals()) parity[contracted.vertex_map[v]] ^= 1;
    for (const auto& [cv, p] : parity)
      if (p) terminals.push_back(cv);
  }
  const Graft quotient =
      Graft::make(contracted.graph, setops::sorted_unique(std::move(terminals)));
  const EdgeIds remaining =
      setops::set_difference(f.edges, induced_edges(comb.graph(), g_r));
  report.contraction_join_minimum =
      note(is_join(quotient, remaining) &&
               static_cast<int>(remaining.size()) == min_join_size(quotient),
           "join restricted outside the root component is not minimum in the quotient");

  const VertexIx hub = contracted.set_vertices.front();
  bool dist_ok = true;
  for (VertexIx v = 0; v < comb.graph().vertex_count(); ++v) {
    if (setops::contains(g_r, v)) continue;
    auto d = join_distance(quotient, hub, contracted.vertex_map[v]);
    const int expected = comb.in_class_a(v) ? 1 : 0;
    if (!d || *d != expected) dist_ok = false;
  }
  report.contraction_distances =
      note(dist_ok, "quotient distances to the contracted component are off");
  return report;
}

}  // namespace graft
