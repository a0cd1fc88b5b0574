#pragma once

#include <cstdint>
#include <random>

#include "wrr/graph.hpp"

namespace wrr {

/// Seeded source of test instances. mt19937_64 is fully specified by the
/// standard and the range reduction below is our own, so a seed yields the
/// same stream with any standard library.
class InstanceRng {
 public:
  explicit InstanceRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  /// Uniform rational num/den with num in [lo, hi] and den in [1, max_den].
  Rational rational(std::int64_t lo, std::int64_t hi, std::int64_t max_den);
  bool coin(std::int64_t one_in) { return uniform(0, one_in - 1) == 0; }

 private:
  std::mt19937_64 engine_;
};

struct GraphParams {
  std::size_t n = 3;
  std::int64_t max_weight_num = 10;
  std::int64_t max_weight_den = 10;
  /// Each non-tree pair becomes an edge with probability 1 / extra_edge_one_in.
  std::int64_t extra_edge_one_in = 3;
};

/// Random spanning tree plus random extra edges; weights num/den with both in
/// [1, max]. Integer graphs: set max_weight_den = 1.
WeightedGraph random_connected_graph(InstanceRng& rng, const GraphParams& params);

/// Coefficients num/den with |num| <= max_abs_num and den in [1, max_den].
Divisor random_divisor(InstanceRng& rng, std::size_t n, std::int64_t max_abs_num, std::int64_t max_den);

/// Effective divisor with coefficients num/den, num in [0, max_num].
Divisor random_effective_divisor(InstanceRng& rng, std::size_t n, std::int64_t max_num, std::int64_t max_den);

}  // namespace wrr
