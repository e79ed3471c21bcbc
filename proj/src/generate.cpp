#include "graft/generate.hpp"

#include <algorithm>
#include <random>

namespace graft {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

std::uint64_t next_u64(std::mt19937_64& rng) { return rng(); }

// uniform in [0, bound); modulo is fine here, determinism is what matters
std::uint64_t next_below(std::mt19937_64& rng, std::uint64_t bound) {
  return next_u64(rng) % bound;
}

double next_unit(std::mt19937_64& rng) {
  return static_cast<double>(next_u64(rng) >> 11) * 0x1.0p-53;
}

template <typename T>
void shuffle_vec(std::vector<T>& xs, std::mt19937_64& rng) {
  for (std::size_t i = xs.size(); i > 1; --i)
    std::swap(xs[i - 1], xs[next_below(rng, i)]);
}

bool connected(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n == 0) return true;
  std::vector<int> rep(n);
  for (int v = 0; v < n; ++v) rep[v] = v;
  auto root = [&](int v) {
    while (rep[v] != v) v = rep[v] = rep[rep[v]];
    return v;
  };
  for (const auto& [u, v] : edges) {
    int a = root(u), b = root(v);
    if (a != b) rep[std::max(a, b)] = std::min(a, b);
  }
  for (int v = 1; v < n; ++v)
    if (root(v) != root(0)) return false;
  return true;
}

}  // namespace

GraftDocument gen_random_graft(const RandomGraftParams& params) {
  const int n = params.vertex_count;
  const int m = params.edge_count;
  if (n < 1) fail(Errc::InfeasibleParameters, "need at least one vertex");
  if (m < 0) fail(Errc::InfeasibleParameters, "negative edge count");
  if (n > 1 && m < n - 1)
    fail(Errc::InfeasibleParameters, "too few edges for a connected graph");
  const long max_simple = static_cast<long>(n) * (n - 1) / 2;
  const long max_bip = static_cast<long>(n / 2) * (n - n / 2);
  if (m > (params.bipartite ? max_bip : max_simple))
    fail(Errc::InfeasibleParameters, "too many edges for the vertex count");

  int width = 1;
  for (int rest = n - 1; rest >= 10; rest /= 10) ++width;
  auto name = [&](int i) {
    std::string digits = std::to_string(i);
    return "v" + std::string(width - digits.size(), '0') + digits;
  };

  std::mt19937_64 rng(params.seed);

  // bipartite runs assign sides first; the split is chosen wide enough for m
  std::vector<int> side(n, 0);
  if (params.bipartite && n > 1) {
    int k = 0;
    for (int attempt = 0; attempt < 64; ++attempt) {
      k = 1 + static_cast<int>(next_below(rng, static_cast<std::uint64_t>(n - 1)));
      if (static_cast<long>(k) * (n - k) >= m) break;
      k = 0;
    }
    if (k == 0) k = n / 2;
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    shuffle_vec(order, rng);
    for (int i = 0; i < k; ++i) side[order[i]] = 1;
  }

  std::vector<std::pair<int, int>> universe;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!params.bipartite || side[u] != side[v]) universe.emplace_back(u, v);

  std::vector<std::pair<int, int>> chosen;
  constexpr int kAttempts = 2000;
  bool ok = false;
  for (int attempt = 0; attempt < kAttempts && !ok; ++attempt) {
    auto pool = universe;
    shuffle_vec(pool, rng);
    chosen.assign(pool.begin(), pool.begin() + m);
    ok = connected(n, chosen);
  }
  if (!ok)
    fail(Errc::InfeasibleParameters,
         "could not sample a connected graph with the given parameters");

  std::vector<int> sampled;
  for (int v = 0; v < n; ++v)
    if (next_unit(rng) < params.terminal_density) sampled.push_back(v);

  // parity repair: drop the lexicographically last sampled vertex of any
  // component holding an odd count (labels sort like indices here)
  std::vector<std::vector<int>> comp_of(1);
  {
    std::vector<int> rep(n);
    for (int v = 0; v < n; ++v) rep[v] = v;
    auto root = [&](int v) {
      while (rep[v] != v) v = rep[v] = rep[rep[v]];
      return v;
    };
    for (const auto& [u, v] : chosen) {
      int a = root(u), b = root(v);
      if (a != b) rep[std::max(a, b)] = std::min(a, b);
    }
    std::vector<std::vector<int>> groups(n);
    for (int v : sampled) groups[root(v)].push_back(v);
    comp_of = std::move(groups);
  }
  std::vector<int> terminals;
  for (auto& group : comp_of) {
    if (group.size() % 2 == 1) group.pop_back();  // groups are in index order
    terminals.insert(terminals.end(), group.begin(), group.end());
  }
  std::sort(terminals.begin(), terminals.end());

  GraftDocument doc;
  for (int v = 0; v < n; ++v) doc.vertices.push_back(name(v));
  for (const auto& [u, v] : chosen) doc.edges.emplace_back(name(u), name(v));
  for (int v : terminals) doc.terminals.push_back(name(v));
  if (params.bipartite) {
    std::vector<Label> a, b;
    for (int v = 0; v < n; ++v) (side[v] == 0 ? a : b).push_back(name(v));
    if (a.empty() && !b.empty()) std::swap(a, b);
    doc.classes = {std::move(a), std::move(b)};
  }
  doc.canonicalize();
  return doc;
}

}  // namespace graft
