#include "graft/join.hpp"

#include <algorithm>
#include <limits>

#include "graft/oracle.hpp"

namespace graft {

bool is_join(const Graph& g, std::span<const VertexIx> terminals,
             std::span<const EdgeId> f) {
  g.require_vertices(terminals);
  g.require_edge_ids(f);
  std::vector<std::uint8_t> odd(g.vertex_count(), 0);
  for (EdgeId id : f) {
    const Edge& e = g.edge(id);
    odd[e.u] ^= 1;
    odd[e.v] ^= 1;
  }
  for (VertexIx v = 0; v < g.vertex_count(); ++v) {
    const bool want = setops::contains(terminals, v);
    if (static_cast<bool>(odd[v]) != want) return false;
  }
  return true;
}

bool is_join(const Graft& g, std::span<const EdgeId> f) {
  return is_join(g.graph(), g.terminals(), f);
}

Join min_join_bruteforce(const Graft& g, int max_edges) {
  auto best = oracle::min_join_enumerated(g.graph(), g.terminals(), max_edges);
  if (!best) fail(Errc::NoJoinExists, "graft admits no join");
  return Join{std::move(*best)};
}

namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 4;

struct MatchingSearch {
  const std::vector<std::vector<int>>& cost;  // terminal-by-terminal distances
  int k;
  bool prune;
  std::vector<int> partner, best_partner, cheapest;
  int best = kInf;

  MatchingSearch(const std::vector<std::vector<int>>& c, bool prune_)
      : cost(c), k(static_cast<int>(c.size())), prune(prune_) {
    partner.assign(k, -1);
    best_partner.assign(k, -1);
    cheapest.assign(k, kInf);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        if (j != i && cost[i][j] < cheapest[i]) cheapest[i] = cost[i][j];
  }

  int lower_bound(int first_unmatched) const {
    long sum = 0;
    for (int i = first_unmatched; i < k; ++i)
      if (partner[i] < 0) {
        if (cheapest[i] >= kInf) return kInf;
        sum += cheapest[i];
      }
    return static_cast<int>(sum / 2);
  }

  void run(int acc) {
    int i = 0;
    while (i < k && partner[i] >= 0) ++i;
    if (i == k) {
      if (acc < best) {
        best = acc;
        best_partner = partner;
      }
      return;
    }
    if (prune && best < kInf && acc + lower_bound(i) >= best) return;
    for (int j = i + 1; j < k; ++j) {
      if (partner[j] >= 0 || cost[i][j] >= kInf) continue;
      const int cand = acc + cost[i][j];
      if (cand >= best) continue;  // only strictly better; keeps first-found ties
      partner[i] = j;
      partner[j] = i;
      run(cand);
      partner[i] = -1;
      partner[j] = -1;
    }
  }
};

// Deterministic shortest unit path between two vertices: walk back from the
// target choosing the smallest (vertex, edge id) predecessor each step.
EdgeIds shortest_unit_path(const Graph& g, VertexIx from, VertexIx to) {
  EdgeIds path;
  VertexIx cur = to;
  while (cur != from) {
    const int d = g.unit_distance(from, cur);
    internal_check(d > 0, "walk-back from unreachable vertex");
    VertexIx next = -1;
    EdgeId via = -1;
    for (const auto& [w, id] : g.incident(cur)) {
      if (g.unit_distance(from, w) == d - 1) {
        next = w;
        via = id;
        break;  // incident lists are sorted by (vertex, id)
      }
    }
    internal_check(next >= 0, "no predecessor on a shortest path");
    path.push_back(via);
    cur = next;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

std::optional<Join> solve_min_join(const Graph& g,
                                   std::span<const VertexIx> terminals) {
  g.require_vertices(terminals);
  const int k = static_cast<int>(terminals.size());
  if (k % 2 == 1) return std::nullopt;
  if (k == 0) return Join{};

  std::vector<std::vector<int>> cost(k, std::vector<int>(k, kInf));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (i == j) continue;
      const int d = g.unit_distance(terminals[i], terminals[j]);
      cost[i][j] = d < 0 ? kInf : d;
    }

  MatchingSearch search(cost, k > kExhaustiveMatchingLimit);
  search.run(0);
  if (search.best >= kInf) return std::nullopt;

  // Symmetric difference of the matched shortest paths. For a minimum
  // matching the paths are edge-disjoint, so the size equals the matching
  // weight; the check below pins that.
  std::vector<std::uint8_t> take(g.max_edge_id() + 1, 0);
  for (int i = 0; i < k; ++i) {
    const int j = search.best_partner[i];
    if (j < i) continue;
    for (EdgeId id : shortest_unit_path(g, terminals[i], terminals[j]))
      take[id] ^= 1;
  }
  Join out;
  for (const Edge& e : g.edges())
    if (take[e.id]) out.edges.push_back(e.id);
  internal_check(out.size() == search.best,
                 "matched shortest paths were not edge-disjoint");
  internal_check(is_join(g, terminals, out.edges),
                 "solver produced a non-join");
  return out;
}

std::optional<int> solve_min_join_size(const Graph& g,
                                       std::span<const VertexIx> terminals) {
  auto j = solve_min_join(g, terminals);
  if (!j) return std::nullopt;
  return j->size();
}

Join min_join(const Graft& g) {
  auto j = solve_min_join(g.graph(), g.terminals());
  internal_check(j.has_value(), "valid graft admits no join");
  return std::move(*j);
}

int min_join_size(const Graft& g) { return min_join(g).size(); }

bool is_allowed_edge(const Graft& g, EdgeId id) {
  const Edge& e = g.graph().edge(id);
  const Graph reduced = g.graph().without_edge(id);
  VertexSet t = setops::toggled(g.terminals(), e.u);
  t = setops::toggled(t, e.v);
  auto nu_reduced = solve_min_join_size(reduced, t);
  if (!nu_reduced) return false;
  return *nu_reduced == min_join_size(g) - 1;
}

EdgeIds allowed_edges(const Graft& g) {
  const int nu = min_join_size(g);
  EdgeIds out;
  for (const Edge& e : g.graph().edges()) {
    const Graph reduced = g.graph().without_edge(e.id);
    VertexSet t = setops::toggled(g.terminals(), e.u);
    t = setops::toggled(t, e.v);
    auto nu_reduced = solve_min_join_size(reduced, t);
    if (nu_reduced && *nu_reduced == nu - 1) out.push_back(e.id);
  }
  return out;
}

FactorComponents factor_components(const Graft& g) {
  const EdgeIds allowed = allowed_edges(g);
  const Graph& graph = g.graph();
  const int n = graph.vertex_count();
  std::vector<VertexIx> rep(n);
  for (VertexIx v = 0; v < n; ++v) rep[v] = v;
  auto root = [&](VertexIx v) {
    while (rep[v] != v) v = rep[v] = rep[rep[v]];
    return v;
  };
  for (EdgeId id : allowed) {
    const Edge& e = graph.edge(id);
    VertexIx a = root(e.u), b = root(e.v);
    if (a != b) rep[std::max(a, b)] = std::min(a, b);
  }
  std::vector<VertexSet> groups(n);
  for (VertexIx v = 0; v < n; ++v) groups[root(v)].push_back(v);

  FactorComponents out;
  for (VertexIx v = 0; v < n; ++v) {
    if (groups[v].empty()) continue;
    if (groups[v].size() == 1) {
      out.trivial.push_back(v);
      internal_check(!g.is_terminal(v),
                     "trivial factor-component on a terminal");
    }
    out.components.push_back(std::move(groups[v]));
  }
  return out;
}

void require_minimum_join(const Graft& g, std::span<const EdgeId> f) {
  if (!is_join(g, f))
    fail(Errc::NotMinimumJoin, "edge set is not a join of the graft");
  if (static_cast<int>(f.size()) != min_join_size(g))
    fail(Errc::NotMinimumJoin,
         "join has size " + std::to_string(f.size()) + ", minimum is " +
             std::to_string(min_join_size(g)));
}

}  // namespace graft
