#include "dnaks/shortest_paths.hpp"

#include <algorithm>
#include <limits>

namespace dnaks {

ShortestPaths ShortestPaths::compute(const Graph& g) {
  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
  const int n = g.n;

  ShortestPaths out;
  out.n_ = n;
  out.sp_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), kInf);
  for (int i = 1; i <= n; ++i) out.sp_[out.idx(i, i)] = 0;
  for (const auto& e : g.edges) {
    const auto w = std::min(e.w, out.sp_[out.idx(e.u, e.v)]);
    out.sp_[out.idx(e.u, e.v)] = w;
    out.sp_[out.idx(e.v, e.u)] = w;
  }

  for (int l = 1; l <= n; ++l)
    for (int i = 1; i <= n; ++i) {
      const auto via = out.sp_[out.idx(i, l)];
      if (via >= kInf) continue;
      for (int j = 1; j <= n; ++j) {
        const auto cand = via + out.sp_[out.idx(l, j)];
        if (cand < out.sp_[out.idx(i, j)]) out.sp_[out.idx(i, j)] = cand;
      }
    }

  std::int64_t max_sp = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const auto d = out.sp_[out.idx(i, j)];
      if (d >= kInf)
        throw Error(ErrorCode::Disconnected, "graph is not connected");
      if (i != j) max_sp = std::max(max_sp, d);
    }
  out.max_tag_mers_ = 10 * max_sp;
  return out;
}

std::vector<PairEntry> descending_pairs(const ShortestPaths& spm, const Instance& inst) {
  std::vector<PairEntry> pairs;
  pairs.reserve(inst.clients.size() * inst.facilities.size());
  for (int v : inst.clients)
    for (int u : inst.facilities) pairs.push_back({v, u, spm.at(v, u)});
  std::sort(pairs.begin(), pairs.end(), [](const PairEntry& a, const PairEntry& b) {
    if (a.sp != b.sp) return a.sp > b.sp;
    if (a.client != b.client) return a.client < b.client;
    return a.facility < b.facility;
  });
  return pairs;
}

}  // namespace dnaks
