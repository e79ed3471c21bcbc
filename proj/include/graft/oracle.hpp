#pragma once

#include <functional>
#include <optional>

#include "graft/core.hpp"

// Exhaustive-enumeration reference machinery. Everything here is independent
// of the matching-based solver it is used to check: joins come from subset
// enumeration, path weights from a subset dynamic program over vertex sets.
namespace graft::oracle {

inline constexpr int kMaxEnumerableEdges = 62;

// Minimum join by enumerating all edge subsets; among minima returns the
// lexicographically least edge-id set. nullopt when no join exists.
std::optional<EdgeIds> min_join_enumerated(const Graph& g,
                                           std::span<const VertexIx> terminals,
                                           int max_edges);
std::optional<int> min_join_size_enumerated(const Graph& g,
                                            std::span<const VertexIx> terminals,
                                            int max_edges);

// Every minimum join, sorted lexicographically.
std::vector<EdgeIds> all_min_joins(const Graph& g,
                                   std::span<const VertexIx> terminals,
                                   int max_edges);

// All circuits (connected 2-regular edge sets), via the cycle space.
std::vector<EdgeIds> all_circuits(const Graph& g, int max_cycle_space_dim = 20);

// Mask variants for tight verification loops: bit i stands for the edge at
// position i of Graph::edges().
using SubsetMask = std::uint64_t;
std::vector<SubsetMask> circuit_masks(const Graph& g, int max_cycle_space_dim = 20);
void for_each_join_mask(const Graph& g, std::span<const VertexIx> terminals,
                        int max_edges,
                        const std::function<void(SubsetMask, int)>& fn);
SubsetMask ids_to_mask(const Graph& g, std::span<const EdgeId> ids);
EdgeIds ids_from_mask(const Graph& g, SubsetMask mask);

// Minimum F-weight over simple paths from source to every vertex
// (exhaustive over simple paths through a subset DP). Entries are nullopt for
// unreachable vertices; source maps to 0. Memory grows as 2^n.
std::vector<std::optional<int>> min_simple_path_weights(
    const Graph& g, std::span<const EdgeId> f, VertexIx source,
    int max_vertices = 16);

// All simple paths between two distinct vertices, as edge-id sequences in
// path order. Parallel edges yield distinct paths.
std::vector<EdgeIds> all_simple_paths(const Graph& g, VertexIx from, VertexIx to,
                                      int max_vertices = 14);

}  // namespace graft::oracle
