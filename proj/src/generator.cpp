#include "dnaks/generator.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "dnaks/rng.hpp"

namespace dnaks {

Instance generate_instance(const GenParams& params) {
  if (params.n < 2) throw Error(ErrorCode::BadArgument, "generated instances need n >= 2");
  if (params.max_weight < 1)
    throw Error(ErrorCode::BadArgument, "max_weight must be >= 1");
  if (params.density < 0.0 || params.density > 1.0)
    throw Error(ErrorCode::BadArgument, "density must lie in [0, 1]");

  Rng rng(params.seed);
  const int n = params.n;

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 1);
  rng.shuffle(order);

  InstanceDescription desc;
  desc.n = n;
  std::set<std::pair<int, int>> used;
  auto add_edge = [&](int u, int v) {
    const auto key = std::minmax(u, v);
    if (!used.insert(key).second) return;
    RawEdge e;
    e.u = key.first;
    e.v = key.second;
    e.w = static_cast<double>(rng.range(1, params.max_weight));
    e.w_integral = true;
    desc.edges.push_back(e);
  };

  // random spanning tree, then extra edges with the given density
  for (int i = 1; i < n; ++i)
    add_edge(order[static_cast<std::size_t>(i)],
             order[rng.below(static_cast<std::uint64_t>(i))]);
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (!used.count({u, v}) && rng.unit() < params.density) add_edge(u, v);

  const int f_size = rng.range(1, n - 1);
  const int c_size = rng.range(1, n - f_size);
  std::vector<int> vertices(static_cast<std::size_t>(n));
  std::iota(vertices.begin(), vertices.end(), 1);
  rng.shuffle(vertices);
  desc.clients.assign(vertices.begin(), vertices.begin() + c_size);
  desc.facilities.assign(vertices.begin() + c_size, vertices.begin() + c_size + f_size);
  desc.k = rng.range(1, f_size);

  return build_instance(desc);
}

}  // namespace dnaks
