#pragma once

#include <optional>

#include "graft/core.hpp"

namespace graft {

struct Join {
  EdgeIds edges;
  int size() const noexcept { return static_cast<int>(edges.size()); }
  bool operator==(const Join&) const = default;
};

struct FactorComponents {
  std::vector<VertexSet> components;
  VertexSet trivial;  // vertices forming singleton factor-components
};

bool is_join(const Graph& g, std::span<const VertexIx> terminals,
             std::span<const EdgeId> f);
bool is_join(const Graft& g, std::span<const EdgeId> f);

inline constexpr int kBruteforceEdgeLimit = 20;

// Exhaustive oracle; lexicographically least among minima.
Join min_join_bruteforce(const Graft& g, int max_edges = kBruteforceEdgeLimit);

// Exact polynomial solver: unit-length metric closure over the terminals,
// minimum-weight perfect matching, then the symmetric difference of the
// matched shortest paths. Deterministic.
std::optional<Join> solve_min_join(const Graph& g,
                                   std::span<const VertexIx> terminals);
std::optional<int> solve_min_join_size(const Graph& g,
                                       std::span<const VertexIx> terminals);
Join min_join(const Graft& g);
int min_join_size(const Graft& g);

// Above this many terminals the matching search prunes with a lower bound;
// at or below it the search is plain exhaustive enumeration.
inline constexpr int kExhaustiveMatchingLimit = 12;

// e is allowed iff some minimum join contains it.
bool is_allowed_edge(const Graft& g, EdgeId e);
EdgeIds allowed_edges(const Graft& g);

FactorComponents factor_components(const Graft& g);

void require_minimum_join(const Graft& g, std::span<const EdgeId> f);

}  // namespace graft
