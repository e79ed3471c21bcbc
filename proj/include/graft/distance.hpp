#pragma once

#include "graft/join.hpp"

namespace graft {

// w_F: edges outside F count +1, edges in F count -1.
int f_weight(const Graph& g, std::span<const EdgeId> f,
             std::span<const EdgeId> subset);

struct DistanceTable {
  VertexIx source = -1;
  std::vector<std::optional<int>> dist;  // absent for other components

  bool has(VertexIx v) const {
    return v >= 0 && v < static_cast<int>(dist.size()) && dist[v].has_value();
  }
  int at(VertexIx v) const;
};

// F-distance as a difference of minimum join sizes. nullopt across
// components; 0 on the diagonal. Independent of any particular minimum join.
std::optional<int> join_distance(const Graft& g, VertexIx x, VertexIx y);

DistanceTable f_distance_from(const Graft& g, const Join& f, VertexIx r);

struct FPath {
  std::vector<VertexIx> vertices;  // x .. y
  EdgeIds edges;                   // in path order
  int weight = 0;

  EdgeIds sorted_edges() const;
};

FPath f_shortest_path(const Graft& g, const Join& f, VertexIx x, VertexIx y);

struct JoinSwitch {
  Graft graft;  // terminals toggled at the path ends
  Join join;    // F symdiff the path edges
  FPath path;
};

JoinSwitch join_switch(const Graft& g, const Join& f, VertexIx x, VertexIx y);

struct RootProfile {
  VertexIx root = -1;
  VertexSet level0;              // distance exactly 0
  VertexSet lay0;                // negative distance
  VertexSet initial_component;   // component of G[level0 + lay0] holding the root
  VertexSet zero_part;           // initial component at distance 0
  VertexSet negative_part;       // initial component below 0
  VertexSet outside_part;        // everything else
  DistanceTable table;
};

RootProfile root_profile(const Graft& g, const Join& f, VertexIx r);

// Every vertex at F-distance <= 0 from r (absent entries disqualify).
bool is_primal(const Graft& g, VertexIx r);

// Move the root of a primal graft to another zero-part vertex along an
// F-shortest path. Preserves the zero/negative tripartition.
JoinSwitch tower_shift(const Graft& g, const Join& f, VertexIx root,
                       VertexIx new_root);

}  // namespace graft
