#pragma once

#include <map>

#include "graft/distance.hpp"

namespace graft {

// Pairwise nonnegative F-distances (cross-component pairs pass vacuously).
bool is_extreme(const Graft& g, const Join& f, std::span<const VertexIx> x);

// Greedy growth inside the seed's color class, in sorted vertex order.
// Subset-closure of extremeness makes the result inclusion-maximal.
VertexSet grow_maximal_bipartitic_extreme(const BipartiteGraft& g, const Join& f,
                                          VertexIx seed);
bool is_maximal_bipartitic_extreme(const BipartiteGraft& g, const Join& f,
                                   std::span<const VertexIx> x);

struct ExtremePartition {
  VertexSet base;    // X
  VertexSet below;   // vertices with negative minimum distance to X
  VertexSet fringe;  // the rest
};

ExtremePartition extreme_partition(const BipartiteGraft& g, const Join& f,
                                   std::span<const VertexIx> x);

// X is combic for F: X spans no F edge, every odd component of G - X catches
// exactly one F cut edge, every even component none.
bool is_combic(const Graft& g, const Join& f, std::span<const VertexIx> x);

struct Skeleton {
  BipartiteGraft graft;                // class A = spine, class B = teeth
  VertexSet spine;                     // indices in the skeleton graph
  std::map<VertexIx, VertexSet> teeth; // skeleton vertex -> original component
  Join join;                           // original cut-edge ids; minimum here
};

Skeleton skeleton_of(const Graft& g, const Join& f, std::span<const VertexIx> x);

struct Tooth {
  Graft graft;                  // (C, (T within C) toggled at the root)
  VertexIx root;                // index in the tooth graph
  EdgeId attachment;            // the single F edge of the cut
  VertexSet original_vertices;  // indices in the parent graph
  Join join;                    // F restricted to C; minimum for the tooth
};

Tooth tooth_extract(const Graft& g, const Join& f, std::span<const VertexIx> x,
                    std::span<const VertexIx> component);

// Delete / attach fringe vertices of a maximal bipartitic extreme set. Both
// directions leave the minimum join structure of the rest untouched.
BipartiteGraft fringe_remove(const BipartiteGraft& g, std::span<const VertexIx> x);
BipartiteGraft fringe_add(const BipartiteGraft& g, std::span<const VertexIx> x,
                          const std::vector<Label>& added_vertices,
                          const std::vector<std::pair<Label, Label>>& added_edges);

struct RootlizedGraft {
  Graft graft;
  VertexSet mount;                   // new indices
  VertexIx root = -1;
  VertexIx attachment = -1;
  std::vector<VertexIx> vertex_map;  // old index -> new index
};

// Attach a fresh root r and attachment s: s joins every mount vertex, rs is
// an edge, and both new vertices become terminals. Minimum joins of the
// result are exactly the old ones plus rs.
RootlizedGraft rootlize(const Graft& g, std::span<const VertexIx> x,
                        const Label& root_label, const Label& attachment_label);

}  // namespace graft
