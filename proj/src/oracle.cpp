#include "graft/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>

namespace graft::oracle {

namespace {

using Mask = std::uint64_t;

struct EnumSetup {
  int m = 0;
  std::vector<Mask> endpoint_mask;  // per edge position: bits of its two ends
  Mask terminal_mask = 0;
};

EnumSetup setup(const Graph& g, std::span<const VertexIx> terminals,
                int max_edges) {
  if (g.edge_count() > max_edges || g.edge_count() > kMaxEnumerableEdges)
    fail(Errc::TooLarge, "graph has " + std::to_string(g.edge_count()) +
                             " edges; enumeration bound is " +
                             std::to_string(std::min(max_edges, kMaxEnumerableEdges)));
  if (g.vertex_count() > 63)
    fail(Errc::TooLarge, "too many vertices for parity masks");
  g.require_vertices(terminals);
  EnumSetup s;
  s.m = g.edge_count();
  s.endpoint_mask.reserve(s.m);
  for (const Edge& e : g.edges())
    s.endpoint_mask.push_back((Mask{1} << e.u) | (Mask{1} << e.v));
  for (VertexIx t : terminals) s.terminal_mask |= Mask{1} << t;
  return s;
}

EdgeIds mask_to_ids(const Graph& g, Mask mask) {
  EdgeIds out;
  auto edges = g.edges();
  for (int i = 0; i < static_cast<int>(edges.size()); ++i)
    if (mask >> i & 1) out.push_back(edges[i].id);
  return out;
}

// Lexicographic order on equal-size edge-id sets: the set containing the
// lowest differing position is the smaller sorted sequence.
bool lex_less_same_size(Mask a, Mask b) {
  Mask d = a ^ b;
  if (d == 0) return false;
  Mask low = d & (~d + 1);
  return (a & low) != 0;
}

// Gray-code walk over all edge subsets; fn(mask, size, parity) per subset,
// including the empty one.
template <typename Fn>
void walk_subsets(const EnumSetup& s, Fn&& fn) {
  Mask cur = 0, parity = 0;
  int size = 0;
  fn(cur, size, parity);
  const Mask total = Mask{1} << s.m;
  for (Mask k = 1; k < total; ++k) {
    const int bit = std::countr_zero(k);
    const Mask flip = Mask{1} << bit;
    cur ^= flip;
    parity ^= s.endpoint_mask[bit];
    size += (cur & flip) ? 1 : -1;
    fn(cur, size, parity);
  }
}

}  // namespace

std::optional<EdgeIds> min_join_enumerated(const Graph& g,
                                           std::span<const VertexIx> terminals,
                                           int max_edges) {
  const EnumSetup s = setup(g, terminals, max_edges);
  bool found = false;
  int best_size = std::numeric_limits<int>::max();
  Mask best = 0;
  walk_subsets(s, [&](Mask cur, int size, Mask parity) {
    if (parity != s.terminal_mask) return;
    if (!found || size < best_size ||
        (size == best_size && lex_less_same_size(cur, best))) {
      found = true;
      best_size = size;
      best = cur;
    }
  });
  if (!found) return std::nullopt;
  return mask_to_ids(g, best);
}

std::optional<int> min_join_size_enumerated(const Graph& g,
                                            std::span<const VertexIx> terminals,
                                            int max_edges) {
  const EnumSetup s = setup(g, terminals, max_edges);
  int best = std::numeric_limits<int>::max();
  walk_subsets(s, [&](Mask, int size, Mask parity) {
    if (parity == s.terminal_mask && size < best) best = size;
  });
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

std::vector<EdgeIds> all_min_joins(const Graph& g,
                                   std::span<const VertexIx> terminals,
                                   int max_edges) {
  const EnumSetup s = setup(g, terminals, max_edges);
  auto nu = min_join_size_enumerated(g, terminals, max_edges);
  std::vector<EdgeIds> out;
  if (!nu) return out;
  walk_subsets(s, [&](Mask cur, int size, Mask parity) {
    if (parity == s.terminal_mask && size == *nu)
      out.push_back(mask_to_ids(g, cur));
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<EdgeIds> all_circuits(const Graph& g, int max_cycle_space_dim) {
  std::vector<EdgeIds> out;
  for (SubsetMask mask : circuit_masks(g, max_cycle_space_dim))
    out.push_back(mask_to_ids(g, mask));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SubsetMask> circuit_masks(const Graph& g, int max_cycle_space_dim) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  if (m > kMaxEnumerableEdges) fail(Errc::TooLarge, "too many edges for circuit masks");

  // spanning forest by BFS over edge positions
  std::vector<int> pos_of_id;
  {
    pos_of_id.assign(g.max_edge_id() + 1, -1);
    auto edges = g.edges();
    for (int i = 0; i < m; ++i) pos_of_id[edges[i].id] = i;
  }
  std::vector<int> parent_vertex(n, -1), parent_pos(n, -1), depth(n, 0);
  std::vector<bool> seen(n, false), in_tree(m, false);
  for (VertexIx root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    std::vector<VertexIx> queue{root};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      VertexIx v = queue[qi];
      for (const auto& [w, id] : g.incident(v)) {
        if (seen[w]) continue;
        seen[w] = true;
        const int pos = pos_of_id[id];
        in_tree[pos] = true;
        parent_vertex[w] = v;
        parent_pos[w] = pos;
        depth[w] = depth[v] + 1;
        queue.push_back(w);
      }
    }
  }

  std::vector<int> non_tree;
  for (int i = 0; i < m; ++i)
    if (!in_tree[i]) non_tree.push_back(i);
  const int k = static_cast<int>(non_tree.size());
  if (k > max_cycle_space_dim)
    fail(Errc::TooLarge, "cycle space dimension " + std::to_string(k) +
                             " exceeds bound " + std::to_string(max_cycle_space_dim));

  auto edges = g.edges();
  std::vector<Mask> fundamental(k, 0);
  for (int i = 0; i < k; ++i) {
    const int pos = non_tree[i];
    Mask mask = Mask{1} << pos;
    VertexIx a = edges[pos].u, b = edges[pos].v;
    while (a != b) {
      if (depth[a] < depth[b]) std::swap(a, b);
      mask ^= Mask{1} << parent_pos[a];
      a = parent_vertex[a];
    }
    fundamental[i] = mask;
  }

  auto is_circuit = [&](Mask mask) {
    std::vector<int> deg(n, 0);
    VertexIx start = -1;
    int count = 0;
    for (int i = 0; i < m; ++i) {
      if (!(mask >> i & 1)) continue;
      ++count;
      deg[edges[i].u]++;
      deg[edges[i].v]++;
      start = edges[i].u;
    }
    if (count == 0) return false;
    for (int d : deg)
      if (d != 0 && d != 2) return false;
    // connectivity over the selected edges
    std::vector<bool> vseen(n, false);
    std::vector<VertexIx> stack{start};
    vseen[start] = true;
    int reached_edges = 0;
    std::vector<std::vector<std::pair<VertexIx, int>>> local(n);
    for (int i = 0; i < m; ++i) {
      if (!(mask >> i & 1)) continue;
      local[edges[i].u].emplace_back(edges[i].v, i);
      local[edges[i].v].emplace_back(edges[i].u, i);
    }
    std::vector<bool> eseen(m, false);
    while (!stack.empty()) {
      VertexIx v = stack.back();
      stack.pop_back();
      for (const auto& [w, pos] : local[v]) {
        if (!eseen[pos]) {
          eseen[pos] = true;
          ++reached_edges;
        }
        if (!vseen[w]) {
          vseen[w] = true;
          stack.push_back(w);
        }
      }
    }
    return reached_edges == count;
  };

  std::vector<SubsetMask> out;
  const Mask total = Mask{1} << k;
  Mask cur = 0;
  for (Mask s = 1; s < total; ++s) {
    const int bit = std::countr_zero(s);
    cur ^= fundamental[bit];
    if (is_circuit(cur)) out.push_back(cur);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void for_each_join_mask(const Graph& g, std::span<const VertexIx> terminals,
                        int max_edges,
                        const std::function<void(SubsetMask, int)>& fn) {
  const EnumSetup s = setup(g, terminals, max_edges);
  walk_subsets(s, [&](Mask cur, int size, Mask parity) {
    if (parity == s.terminal_mask) fn(cur, size);
  });
}

SubsetMask ids_to_mask(const Graph& g, std::span<const EdgeId> ids) {
  g.require_edge_ids(ids);
  SubsetMask mask = 0;
  auto edges = g.edges();
  for (int i = 0; i < static_cast<int>(edges.size()); ++i)
    if (setops::contains(ids, edges[i].id)) mask |= SubsetMask{1} << i;
  return mask;
}

EdgeIds ids_from_mask(const Graph& g, SubsetMask mask) {
  return mask_to_ids(g, mask);
}

std::vector<std::optional<int>> min_simple_path_weights(
    const Graph& g, std::span<const EdgeId> f, VertexIx source,
    int max_vertices) {
  const int n = g.vertex_count();
  g.require_vertex(source);
  g.require_edge_ids(f);
  // the table below holds 2^n * n entries
  if (n > max_vertices || n > 20)
    fail(Errc::TooLarge, "too many vertices for simple-path enumeration");

  auto weight_of = [&](EdgeId id) {
    return setops::contains(f, id) ? -1 : +1;
  };

  constexpr int kInf = std::numeric_limits<int>::max() / 4;
  const std::uint32_t total = std::uint32_t{1} << n;
  // dp[subset * n + v]: min weight of a simple path from source to v whose
  // vertex set is exactly subset
  std::vector<int> dp(static_cast<std::size_t>(total) * n, kInf);
  const std::uint32_t start = std::uint32_t{1} << source;
  dp[static_cast<std::size_t>(start) * n + source] = 0;

  std::vector<std::optional<int>> best(n);
  best[source] = 0;

  for (std::uint32_t subset = start; subset < total; ++subset) {
    if (!(subset & start)) continue;
    const auto base = static_cast<std::size_t>(subset) * n;
    for (VertexIx v = 0; v < n; ++v) {
      const int cur = dp[base + v];
      if (cur >= kInf) continue;
      for (const auto& [w, id] : g.incident(v)) {
        const std::uint32_t wbit = std::uint32_t{1} << w;
        if (subset & wbit) continue;
        const std::uint32_t next = subset | wbit;
        const int cand = cur + weight_of(id);
        int& slot = dp[static_cast<std::size_t>(next) * n + w];
        if (cand < slot) {
          slot = cand;
          if (!best[w] || cand < *best[w]) best[w] = cand;
        }
      }
    }
  }
  return best;
}

std::vector<EdgeIds> all_simple_paths(const Graph& g, VertexIx from, VertexIx to,
                                      int max_vertices) {
  g.require_vertex(from);
  g.require_vertex(to);
  if (from == to) fail(Errc::SameVertex, "path endpoints coincide");
  if (g.vertex_count() > max_vertices)
    fail(Errc::TooLarge, "too many vertices for path enumeration");

  std::vector<EdgeIds> out;
  std::vector<bool> used(g.vertex_count(), false);
  EdgeIds path;
  auto dfs = [&](auto&& self, VertexIx v) -> void {
    if (v == to) {
      out.push_back(path);
      return;
    }
    for (const auto& [w, id] : g.incident(v)) {
      if (used[w]) continue;
      used[w] = true;
      path.push_back(id);
      self(self, w);
      path.pop_back();
      used[w] = false;
    }
  };
  used[from] = true;
  dfs(dfs, from);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace graft::oracle
