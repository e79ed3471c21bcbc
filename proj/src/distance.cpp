#include "graft/distance.hpp"

#include <algorithm>
#include <limits>

namespace graft {

int f_weight(const Graph& g, std::span<const EdgeId> f,
             std::span<const EdgeId> subset) {
  g.require_edge_ids(f);
  g.require_edge_ids(subset);
  int w = 0;
  for (EdgeId e : subset) w += setops::contains(f, e) ? -1 : +1;
  return w;
}

int DistanceTable::at(VertexIx v) const {
  if (!has(v))
    fail(Errc::Disconnected,
         "no distance entry for vertex index " + std::to_string(v));
  return *dist[v];
}

std::optional<int> join_distance(const Graft& g, VertexIx x, VertexIx y) {
  g.graph().require_vertex(x);
  g.graph().require_vertex(y);
  if (x == y) return 0;
  if (!g.graph().same_component(x, y)) return std::nullopt;
  VertexSet t = setops::toggled(g.terminals(), x);
  t = setops::toggled(t, y);
  auto nu = solve_min_join_size(g.graph(), t);
  internal_check(nu.has_value(), "toggled graft in one component has a join");
  return *nu - min_join_size(g);
}

DistanceTable f_distance_from(const Graft& g, const Join& f, VertexIx r) {
  g.graph().require_vertex(r);
  require_minimum_join(g, f.edges);
  DistanceTable out;
  out.source = r;
  out.dist.resize(g.graph().vertex_count());
  for (VertexIx v = 0; v < g.graph().vertex_count(); ++v)
    out.dist[v] = join_distance(g, r, v);
  return out;
}

FPath f_shortest_path(const Graft& g, const Join& f, VertexIx x, VertexIx y) {
  const Graph& graph = g.graph();
  graph.require_vertex(x);
  graph.require_vertex(y);
  if (x == y) fail(Errc::SameVertex, "path endpoints coincide");
  if (!graph.same_component(x, y))
    fail(Errc::Disconnected, "'" + graph.label(x) + "' and '" + graph.label(y) +
                                 "' lie in different components");
  require_minimum_join(g, f.edges);

  // F symdiff F' has odd degrees exactly at {x,y}; any simple x-y path inside
  // it is F-shortest, because the leftover is a disjoint union of circuits of
  // weight zero.
  const Graft toggled = g.with_toggled(x, y);
  const Join other = min_join(toggled);
  const EdgeIds sym = setops::set_symdiff(f.edges, other.edges);

  const int n = graph.vertex_count();
  std::vector<std::vector<std::pair<VertexIx, EdgeId>>> local(n);
  for (EdgeId id : sym) {
    const Edge& e = graph.edge(id);
    local[e.u].emplace_back(e.v, id);
    local[e.v].emplace_back(e.u, id);
  }
  for (auto& nb : local) std::sort(nb.begin(), nb.end());

  // depth-first search restricted to the symmetric difference
  std::vector<bool> used(n, false);
  FPath out;
  std::vector<VertexIx> vpath{x};
  EdgeIds epath;
  bool found = false;
  auto dfs = [&](auto&& self, VertexIx v) -> void {
    if (found) return;
    if (v == y) {
      out.vertices = vpath;
      out.edges = epath;
      found = true;
      return;
    }
    for (const auto& [w, id] : local[v]) {
      if (used[w] || found) continue;
      used[w] = true;
      vpath.push_back(w);
      epath.push_back(id);
      self(self, w);
      vpath.pop_back();
      epath.pop_back();
      used[w] = false;
    }
  };
  used[x] = true;
  dfs(dfs, x);
  internal_check(found, "join symmetric difference connects the toggled pair");

  out.weight = f_weight(graph, f.edges, out.edges);
  const int expected = other.size() - f.size();
  internal_check(out.weight == expected,
                 "extracted path weight differs from the distance");
  return out;
}

JoinSwitch join_switch(const Graft& g, const Join& f, VertexIx x, VertexIx y) {
  FPath path = f_shortest_path(g, f, x, y);
  JoinSwitch out;
  out.graft = g.with_toggled(x, y);
  out.join = Join{setops::set_symdiff(f.edges, path.sorted_edges())};
  out.path = std::move(path);

  require_minimum_join(out.graft, out.join.edges);
  for (VertexIx z = 0; z < g.graph().vertex_count(); ++z) {
    auto before = join_distance(g, x, z);
    auto after = join_distance(out.graft, y, z);
    internal_check(before.has_value() == after.has_value(),
                   "switch changed reachability");
    if (before)
      internal_check(*after == *before - out.path.weight,
                     "switch did not shift distances by the path weight");
  }
  return out;
}

EdgeIds FPath::sorted_edges() const {
  EdgeIds out = edges;
  std::sort(out.begin(), out.end());
  return out;
}

RootProfile root_profile(const Graft& g, const Join& f, VertexIx r) {
  RootProfile out;
  out.root = r;
  out.table = f_distance_from(g, f, r);
  const Graph& graph = g.graph();
  for (VertexIx v = 0; v < graph.vertex_count(); ++v) {
    if (!out.table.has(v)) continue;
    const int d = out.table.at(v);
    if (d == 0) out.level0.push_back(v);
    else if (d < 0) out.lay0.push_back(v);
  }
  const VertexSet reach = setops::set_union(out.level0, out.lay0);
  const Graph sub = graph.induced_subgraph(reach);
  const VertexSet local = sub.component_of(sub.index_of(graph.label(r)));
  for (VertexIx v : local)
    out.initial_component.push_back(graph.index_of(sub.label(v)));
  out.initial_component = setops::sorted_unique(std::move(out.initial_component));
  out.zero_part = setops::set_intersection(out.initial_component, out.level0);
  out.negative_part = setops::set_difference(out.initial_component, out.zero_part);
  VertexSet all(graph.vertex_count());
  for (VertexIx v = 0; v < graph.vertex_count(); ++v) all[v] = v;
  out.outside_part = setops::set_difference(all, out.initial_component);

  // primality is the same thing as the initial component swallowing the graph
  const bool primal = is_primal(g, r);
  const bool covers = out.outside_part.empty() &&
                      static_cast<int>(reach.size()) == graph.vertex_count();
  internal_check(primal == covers,
                 "root profile disagrees with the primality test");
  return out;
}

bool is_primal(const Graft& g, VertexIx r) {
  g.graph().require_vertex(r);
  for (VertexIx v = 0; v < g.graph().vertex_count(); ++v) {
    auto d = join_distance(g, r, v);
    if (!d || *d > 0) return false;
  }
  return true;
}

JoinSwitch tower_shift(const Graft& g, const Join& f, VertexIx root,
                       VertexIx new_root) {
  require_minimum_join(g, f.edges);
  if (!is_primal(g, root))
    fail(Errc::NotPrimal, "graft is not primal at '" + g.graph().label(root) + "'");
  if (new_root == root)
    fail(Errc::NotInA, "new root must differ from the root");
  RootProfile before = root_profile(g, f, root);
  if (!setops::contains(before.zero_part, new_root))
    fail(Errc::NotInA, "'" + g.graph().label(new_root) +
                           "' is outside the root's zero part");

  JoinSwitch out = join_switch(g, f, root, new_root);
  internal_check(is_primal(out.graft, new_root),
                 "shifted graft lost primality");
  RootProfile after = root_profile(out.graft, out.join, new_root);
  internal_check(after.zero_part == before.zero_part,
                 "tower shift changed the zero part");
  internal_check(after.negative_part == before.negative_part,
                 "tower shift changed the negative part");
  return out;
}

}  // namespace graft
