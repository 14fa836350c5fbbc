#pragma once

#include <cstdint>

#include "dnaks/graph.hpp"

namespace dnaks {

struct GenParams {
  int n = 4;
  double density = 0.5;   // probability of each non-tree edge
  int max_weight = 9;     // weights uniform in 1..max_weight
  std::uint64_t seed = 1;
};

/// Deterministic-for-seed connected instance: random spanning tree plus
/// extra edges, disjoint random C/F, random valid k.
Instance generate_instance(const GenParams& params);

}  // namespace dnaks
