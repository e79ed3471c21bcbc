#include "graft/structure.hpp"

#include <algorithm>

namespace graft {

bool is_extreme(const Graft& g, const Join& f, std::span<const VertexIx> x) {
  require_minimum_join(g, f.edges);
  g.graph().require_vertices(x);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      auto d = join_distance(g, x[i], x[j]);
      if (d && *d < 0) return false;
    }
  return true;
}

namespace {

// X extreme and v a candidate: X + v stays extreme iff v keeps nonnegative
// distance to every member.
bool blocked(const Graft& g, std::span<const VertexIx> x, VertexIx v) {
  for (VertexIx w : x) {
    auto d = join_distance(g, w, v);
    if (d && *d < 0) return true;
  }
  return false;
}

}  // namespace

VertexSet grow_maximal_bipartitic_extreme(const BipartiteGraft& g, const Join& f,
                                          VertexIx seed) {
  require_minimum_join(g.graft(), f.edges);
  g.graph().require_vertex(seed);
  VertexSet x{seed};
  for (VertexIx v : g.class_of(seed)) {
    if (v == seed) continue;
    if (!blocked(g.graft(), x, v)) x.push_back(v);
    std::sort(x.begin(), x.end());
  }
  internal_check(is_extreme(g.graft(), f, x), "grown set is not extreme");
  for (VertexIx v : g.class_of(seed))
    internal_check(setops::contains(x, v) || blocked(g.graft(), x, v),
                   "grown set admits a single-vertex extension");
  return x;
}

bool is_maximal_bipartitic_extreme(const BipartiteGraft& g, const Join& f,
                                   std::span<const VertexIx> x) {
  if (x.empty()) return false;
  const bool in_a = g.in_class_a(x.front());
  for (VertexIx v : x)
    if (g.in_class_a(v) != in_a) return false;
  if (!is_extreme(g.graft(), f, x)) return false;
  for (VertexIx v : g.class_of(x.front()))
    if (!setops::contains(x, v) && !blocked(g.graft(), x, v)) return false;
  return true;
}

ExtremePartition extreme_partition(const BipartiteGraft& g, const Join& f,
                                   std::span<const VertexIx> x) {
  require_minimum_join(g.graft(), f.edges);
  g.graph().require_vertices(x);
  if (x.empty() || !is_extreme(g.graft(), f, x))
    fail(Errc::NotExtreme, "set is empty or not extreme");
  {
    const bool in_a = g.in_class_a(x.front());
    for (VertexIx v : x)
      if (g.in_class_a(v) != in_a)
        fail(Errc::NotExtreme, "set is not contained in one color class");
  }

  ExtremePartition out;
  out.base.assign(x.begin(), x.end());
  for (VertexIx v = 0; v < g.graph().vertex_count(); ++v) {
    if (setops::contains(out.base, v)) continue;
    bool negative = false;
    for (VertexIx w : out.base) {
      auto d = join_distance(g.graft(), w, v);
      if (d && *d < 0) {
        negative = true;
        break;
      }
    }
    (negative ? out.below : out.fringe).push_back(v);
  }

  if (is_maximal_bipartitic_extreme(g, f, x)) {
    internal_check(edges_between(g.graph(), out.below, out.fringe).empty(),
                   "maximal extreme set leaves edges between below and fringe");
    const FactorComponents fc = factor_components(g.graft());
    for (VertexIx v : out.fringe)
      internal_check(setops::contains(fc.trivial, v),
                     "fringe vertex is not trivial");
  }
  return out;
}

bool is_combic(const Graft& g, const Join& f, std::span<const VertexIx> x) {
  require_minimum_join(g, f.edges);
  g.graph().require_vertices(x);
  const EdgeIds inside = induced_edges(g.graph(), x);
  if (!setops::set_intersection(inside, f.edges).empty()) return false;
  const ComponentPartition parts = components_with_parity(g, x);
  for (std::size_t i = 0; i < parts.components.size(); ++i) {
    const EdgeIds cut = boundary_cut(g.graph(), parts.components[i]);
    const std::size_t hits = setops::set_intersection(cut, f.edges).size();
    const bool odd = std::binary_search(parts.odd_indices.begin(),
                                        parts.odd_indices.end(), i);
    if (odd ? hits != 1 : hits != 0) return false;
  }
  return true;
}

Skeleton skeleton_of(const Graft& g, const Join& f, std::span<const VertexIx> x) {
  if (!is_combic(g, f, x))
    fail(Errc::NotCombic, "set is not combic for the given join");
  const Graph& graph = g.graph();
  const ComponentPartition parts = components_with_parity(g, x);

  // keep X and the odd components; drop induced X edges and even components
  VertexSet kept(x.begin(), x.end());
  std::vector<VertexSet> odd_components;
  for (std::size_t i : parts.odd_indices) {
    odd_components.push_back(parts.components[i]);
    kept = setops::set_union(kept, parts.components[i]);
  }

  std::vector<Label> labels;
  for (VertexIx v : kept) labels.push_back(graph.label(v));
  std::vector<std::tuple<EdgeId, Label, Label>> edges;
  const EdgeIds inside = induced_edges(graph, x);
  for (const Edge& e : graph.edges()) {
    if (!setops::contains(kept, e.u) || !setops::contains(kept, e.v)) continue;
    if (setops::contains(inside, e.id)) continue;
    edges.emplace_back(e.id, graph.label(e.u), graph.label(e.v));
  }
  const Graph sub = Graph::from_parts(std::move(labels), std::move(edges), true);

  std::vector<VertexSet> to_contract;
  for (const VertexSet& comp : odd_components) {
    VertexSet local;
    for (VertexIx v : comp) local.push_back(sub.index_of(graph.label(v)));
    to_contract.push_back(setops::sorted_unique(std::move(local)));
  }
  ContractionResult contracted = contract_sets(sub, to_contract);

  // terminals: surviving X terminals, plus every contracted component (their
  // terminal intersections are odd by definition)
  VertexSet terminals;
  for (VertexIx v : x)
    if (g.is_terminal(v))
      terminals.push_back(contracted.graph.index_of(graph.label(v)));
  for (VertexIx cv : contracted.set_vertices) terminals.push_back(cv);
  terminals = setops::sorted_unique(std::move(terminals));

  VertexSet spine;
  for (VertexIx v : x) spine.push_back(contracted.graph.index_of(graph.label(v)));
  spine = setops::sorted_unique(std::move(spine));
  VertexSet teeth_vertices = setops::sorted_unique(contracted.set_vertices);

  Skeleton out;
  Graft skeleton_graft = Graft::make(contracted.graph, terminals);
  out.graft = BipartiteGraft::make(std::move(skeleton_graft), spine, teeth_vertices);
  out.spine = std::move(spine);
  for (std::size_t i = 0; i < to_contract.size(); ++i)
    out.teeth[contracted.set_vertices[i]] = odd_components[i];

  EdgeIds join_edges;
  for (const VertexSet& comp : odd_components) {
    const EdgeIds cut = boundary_cut(graph, comp);
    for (EdgeId e : setops::set_intersection(cut, f.edges))
      join_edges.push_back(e);
  }
  out.join = Join{setops::sorted_unique(std::move(join_edges))};

  require_minimum_join(out.graft.graft(), out.join.edges);
  return out;
}

Tooth tooth_extract(const Graft& g, const Join& f, std::span<const VertexIx> x,
                    std::span<const VertexIx> component) {
  if (!is_combic(g, f, x))
    fail(Errc::NotCombic, "set is not combic for the given join");
  const Graph& graph = g.graph();
  graph.require_vertices(component);

  const EdgeIds cut = boundary_cut(graph, component);
  const EdgeIds cut_join = setops::set_intersection(cut, f.edges);
  internal_check(cut_join.size() == 1,
                 "component cut holds " + std::to_string(cut_join.size()) +
                     " join edges; expected exactly one");
  const Edge& attachment = graph.edge(cut_join.front());
  const VertexIx root_orig = setops::contains(component, attachment.u)
                                 ? attachment.u
                                 : attachment.v;

  Tooth out;
  out.attachment = attachment.id;
  out.original_vertices.assign(component.begin(), component.end());

  const Graph sub = graph.induced_subgraph(component);
  VertexSet terminals;
  for (VertexIx v : component)
    if (g.is_terminal(v)) terminals.push_back(sub.index_of(graph.label(v)));
  terminals = setops::sorted_unique(std::move(terminals));
  out.root = sub.index_of(graph.label(root_orig));
  terminals = setops::toggled(terminals, out.root);
  out.graft = Graft::make(sub, std::move(terminals));

  EdgeIds join_edges =
      setops::set_intersection(induced_edges(graph, component), f.edges);
  out.join = Join{std::move(join_edges)};
  require_minimum_join(out.graft, out.join.edges);
  return out;
}

namespace {

void check_fringe_invariants(const BipartiteGraft& before, const Join& f,
                             std::span<const VertexIx> x_before,
                             const BipartiteGraft& after) {
  // same minimum size, same join viability, distances from the set preserved
  const Join f_after = Join{f.edges};
  require_minimum_join(after.graft(), f_after.edges);

  VertexSet x_after;
  for (VertexIx v : x_before)
    x_after.push_back(after.graph().index_of(before.graph().label(v)));
  x_after = setops::sorted_unique(std::move(x_after));

  const ExtremePartition part_before = extreme_partition(before, f, x_before);
  for (VertexIx y : part_before.below) {
    const Label label = before.graph().label(y);
    auto y_after = after.graph().try_index_of(label);
    internal_check(y_after.has_value(), "below-vertex disappeared");
    std::optional<int> before_min, after_min;
    for (VertexIx w : x_before) {
      auto d = join_distance(before.graft(), w, y);
      if (d && (!before_min || *d < *before_min)) before_min = *d;
    }
    for (VertexIx w : x_after) {
      auto d = join_distance(after.graft(), w, *y_after);
      if (d && (!after_min || *d < *after_min)) after_min = *d;
    }
    internal_check(before_min == after_min,
                   "fringe operation changed a minimum distance to '" + label + "'");
  }
  internal_check(is_maximal_bipartitic_extreme(after, f_after, x_after),
                 "set is no longer maximal bipartitic extreme");
}

}  // namespace

BipartiteGraft fringe_remove(const BipartiteGraft& g, std::span<const VertexIx> x) {
  const Join f = min_join(g.graft());
  if (!is_maximal_bipartitic_extreme(g, f, x))
    fail(Errc::NotMaximalExtreme, "set is not maximal bipartitic extreme");
  const ExtremePartition part = extreme_partition(g, f, x);

  VertexSet all(g.graph().vertex_count());
  for (VertexIx v = 0; v < g.graph().vertex_count(); ++v) all[v] = v;
  const VertexSet keep = setops::set_difference(all, part.fringe);
  const Graph sub = g.graph().induced_subgraph(keep);

  VertexSet terminals, class_a, class_b;
  for (VertexIx v : keep) {
    const VertexIx nv = sub.index_of(g.graph().label(v));
    if (g.graft().is_terminal(v)) terminals.push_back(nv);
    (g.in_class_a(v) ? class_a : class_b).push_back(nv);
  }
  BipartiteGraft out = BipartiteGraft::make(
      Graft::make(sub, setops::sorted_unique(std::move(terminals))),
      setops::sorted_unique(std::move(class_a)),
      setops::sorted_unique(std::move(class_b)));
  check_fringe_invariants(g, f, x, out);
  return out;
}

BipartiteGraft fringe_add(const BipartiteGraft& g, std::span<const VertexIx> x,
                          const std::vector<Label>& added_vertices,
                          const std::vector<std::pair<Label, Label>>& added_edges) {
  const Join f = min_join(g.graft());
  if (!is_maximal_bipartitic_extreme(g, f, x))
    fail(Errc::NotMaximalExtreme, "set is not maximal bipartitic extreme");

  VertexSet x_sorted(x.begin(), x.end());
  std::sort(x_sorted.begin(), x_sorted.end());
  auto is_new = [&](const Label& l) {
    return std::find(added_vertices.begin(), added_vertices.end(), l) !=
           added_vertices.end();
  };
  for (const auto& [a, b] : added_edges) {
    const bool a_new = is_new(a), b_new = is_new(b);
    if (a_new == b_new)
      fail(Errc::IllegalAttachment,
           "edge {" + a + "," + b + "} must join one new vertex to the set");
    const Label& old_label = a_new ? b : a;
    auto ix = g.graph().try_index_of(old_label);
    if (!ix || !setops::contains(x_sorted, *ix))
      fail(Errc::IllegalAttachment,
           "edge {" + a + "," + b + "} does not land in the extreme set");
  }

  const Graph augmented = g.graph().augmented(added_vertices, added_edges);
  VertexSet terminals, class_a, class_b;
  for (VertexIx v : g.graft().terminals())
    terminals.push_back(augmented.index_of(g.graph().label(v)));
  for (VertexIx v : g.class_a())
    class_a.push_back(augmented.index_of(g.graph().label(v)));
  for (VertexIx v : g.class_b())
    class_b.push_back(augmented.index_of(g.graph().label(v)));
  const bool x_in_a = x_sorted.empty() || g.in_class_a(x_sorted.front());
  for (const Label& l : added_vertices)
    (x_in_a ? class_b : class_a).push_back(augmented.index_of(l));

  BipartiteGraft out = BipartiteGraft::make(
      Graft::make(augmented, setops::sorted_unique(std::move(terminals))),
      setops::sorted_unique(std::move(class_a)),
      setops::sorted_unique(std::move(class_b)));
  check_fringe_invariants(g, f, x, out);

  // every added vertex lands in the fringe
  const Join f_after = Join{f.edges};
  VertexSet x_after;
  for (VertexIx v : x_sorted)
    x_after.push_back(out.graph().index_of(g.graph().label(v)));
  x_after = setops::sorted_unique(std::move(x_after));
  for (const Label& l : added_vertices) {
    const VertexIx nv = out.graph().index_of(l);
    for (VertexIx w : x_after) {
      auto d = join_distance(out.graft(), w, nv);
      internal_check(!d || *d > 0, "added vertex fell below the extreme set");
    }
  }
  return out;
}

RootlizedGraft rootlize(const Graft& g, std::span<const VertexIx> x,
                        const Label& root_label, const Label& attachment_label) {
  const Join f = min_join(g);
  if (!is_extreme(g, f, x)) fail(Errc::NotExtreme, "mount is not extreme");
  if (root_label == attachment_label)
    fail(Errc::LabelCollision, "root and attachment share a label");
  if (g.graph().try_index_of(root_label) || g.graph().try_index_of(attachment_label))
    fail(Errc::LabelCollision, "root or attachment label already in use");

  std::vector<std::pair<Label, Label>> new_edges{{root_label, attachment_label}};
  for (VertexIx v : x) new_edges.emplace_back(attachment_label, g.graph().label(v));
  const Graph augmented =
      g.graph().augmented({root_label, attachment_label}, new_edges);

  VertexSet terminals;
  for (VertexIx v : g.terminals())
    terminals.push_back(augmented.index_of(g.graph().label(v)));
  terminals.push_back(augmented.index_of(root_label));
  terminals.push_back(augmented.index_of(attachment_label));

  RootlizedGraft out;
  out.graft = Graft::make(augmented, setops::sorted_unique(std::move(terminals)));
  out.root = out.graft.graph().index_of(root_label);
  out.attachment = out.graft.graph().index_of(attachment_label);
  for (VertexIx v : x)
    out.mount.push_back(out.graft.graph().index_of(g.graph().label(v)));
  out.mount = setops::sorted_unique(std::move(out.mount));
  out.vertex_map.resize(g.graph().vertex_count());
  for (VertexIx v = 0; v < g.graph().vertex_count(); ++v)
    out.vertex_map[v] = out.graft.graph().index_of(g.graph().label(v));

  // minimum joins extend the old ones by exactly the root edge
  const EdgeId root_edge = [&] {
    const auto& gr = out.graft.graph();
    for (const auto& [w, id] : gr.incident(out.root)) {
      if (w == out.attachment) return id;
    }
    internal_check(false, "root edge missing");
    return EdgeId{-1};
  }();
  internal_check(min_join_size(out.graft) == f.size() + 1,
                 "rootlization changed the minimum size by something else than one");
  const Join lifted = min_join(out.graft);
  internal_check(setops::contains(lifted.edges, root_edge),
                 "minimum join of the rootlization misses the root edge");
  {
    EdgeIds rest = setops::set_difference(lifted.edges, EdgeIds{root_edge});
    for (EdgeId id : rest) {
      const Edge& e = out.graft.graph().edge(id);
      internal_check(!e.touches(out.attachment),
                     "minimum join of the rootlization uses a mount edge");
    }
    VertexSet old_terminals(g.terminals().begin(), g.terminals().end());
    VertexSet mapped;
    for (VertexIx v : old_terminals) mapped.push_back(out.vertex_map[v]);
    internal_check(is_join(out.graft.graph(), setops::sorted_unique(std::move(mapped)), rest) &&
                       static_cast<int>(rest.size()) == f.size(),
                   "rootlized minimum join does not restrict to a minimum join");
  }
  // distances from the new root agree with minimum distances from the mount
  internal_check(join_distance(out.graft, out.root, out.attachment) == -1,
                 "root-to-attachment distance is not -1");
  for (VertexIx v = 0; v < g.graph().vertex_count(); ++v) {
    std::optional<int> expect;
    for (VertexIx w : x) {
      auto d = join_distance(g, w, v);
      if (d && (!expect || *d < *expect)) expect = *d;
    }
    auto got = join_distance(out.graft, out.root, out.vertex_map[v]);
    internal_check(got == expect,
                   "root distance mismatch at '" + g.graph().label(v) + "'");
  }
  return out;
}

}  // namespace graft
