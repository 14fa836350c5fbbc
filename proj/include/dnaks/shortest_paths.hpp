#pragma once

#include <cstdint>
#include <vector>

#include "dnaks/graph.hpp"

namespace dnaks {

/// All-pairs shortest path matrix (exact integer weights).
class ShortestPaths {
public:
  /// Floyd–Warshall relaxation; throws Error(Disconnected) when some pair
  /// is unreachable.
  static ShortestPaths compute(const Graph& g);

  int n() const { return n_; }
  std::int64_t at(int i, int j) const { return sp_[idx(i, j)]; }

  /// 10 * max_{i != j} sp(i,j); 0 for n = 1. Used for buffer sizing.
  std::int64_t max_tag_mers() const { return max_tag_mers_; }

private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(j - 1);
  }

  int n_ = 0;
  std::vector<std::int64_t> sp_;
  std::int64_t max_tag_mers_ = 0;
};

struct PairEntry {
  int client = 0;
  int facility = 0;
  std::int64_t sp = 0;
};

/// All (client, facility) pairs sorted by distance descending; ties break
/// by (client asc, facility asc).
std::vector<PairEntry> descending_pairs(const ShortestPaths& spm, const Instance& inst);

}  // namespace dnaks
