#pragma once

#include <cstdint>

#include "graft/io.hpp"

namespace graft {

struct RandomGraftParams {
  int vertex_count = 1;
  int edge_count = 0;
  double terminal_density = 0.0;
  std::uint64_t seed = 0;
  bool bipartite = false;
};

// Connected (by retry) random graft, parity-repaired per component by
// dropping the lexicographically last sampled terminal. Deterministic per
// seed and portable: no std distributions.
GraftDocument gen_random_graft(const RandomGraftParams& params);

// splitmix64-style sub-seed derivation for independent trials
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace graft
