#include "wrr/random_instances.hpp"

#include <limits>
#include <numeric>
#include <vector>

namespace wrr {

std::int64_t InstanceRng::uniform(std::int64_t lo, std::int64_t hi) {
  if (hi <= lo) return lo;
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  // Rejection sampling keeps the draw unbiased.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return lo + static_cast<std::int64_t>(x % span);
}

Rational InstanceRng::rational(std::int64_t lo, std::int64_t hi, std::int64_t max_den) {
  const std::int64_t num = uniform(lo, hi);
  const std::int64_t den = uniform(1, max_den);
  return Rational(BigInt(num), BigInt(den));
}

WeightedGraph random_connected_graph(InstanceRng& rng, const GraphParams& params) {
  const std::size_t n = params.n;
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t i = n; i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(i) - 1));
    std::swap(order[i - 1], order[j]);
  }
  std::vector<std::vector<bool>> present(n, std::vector<bool>(n, false));
  for (std::size_t i = 1; i < n; ++i) {
    const std::size_t parent = order[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(i) - 1))];
    present[order[i]][parent] = present[parent][order[i]] = true;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!present[i][j] && rng.coin(params.extra_edge_one_in)) present[i][j] = present[j][i] = true;

  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (present[i][j]) edges.push_back({i, j, rng.rational(1, params.max_weight_num, params.max_weight_den)});
  return WeightedGraph::build(n, edges);
}

Divisor random_divisor(InstanceRng& rng, std::size_t n, std::int64_t max_abs_num, std::int64_t max_den) {
  Divisor d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = rng.rational(-max_abs_num, max_abs_num, max_den);
  return d;
}

Divisor random_effective_divisor(InstanceRng& rng, std::size_t n, std::int64_t max_num, std::int64_t max_den) {
  Divisor d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = rng.rational(0, max_num, max_den);
  return d;
}

}  // namespace wrr
