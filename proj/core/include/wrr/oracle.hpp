#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "wrr/graph.hpp"
#include "wrr/matrix.hpp"

// Ground truth that does not go through Dhar's algorithm or the scaling
// pipeline: exhaustive lattice search on small integer instances, the closed
// form for two-vertex graphs, and a direct check that P_k is a nonsingular
// matrix with nonnegative inverse.

namespace wrr {

/// Bounds on the firing coefficients m_j (j != excluded, increasing vertex
/// order) of every principal H with D + H effective.
struct SearchBox {
  std::size_t excluded = 0;
  std::vector<BigInt> lower;
  std::vector<BigInt> upper;

  /// Number of integer points, 0 if some range is empty.
  BigInt point_count() const;
  bool contains(const std::vector<BigInt>& m) const;
};

struct OracleLimits {
  std::size_t max_vertices = 5;
  std::uint64_t max_box_points = 1'000'000;
};

/// Any effective D + H has coordinates in [0, deg D]; pushing that box through
/// P_k^{-1} with interval arithmetic bounds m. Requires a Z-graph and an
/// integral divisor. Throws Error(NegativeDegree) when deg D < 0.
SearchBox search_box(const WeightedGraph& g, const Divisor& d, std::size_t k);

/// An effective divisor equivalent to D found by exhausting the search box, or
/// nullopt if there is none. Throws Error(InstanceTooLarge) past the limits.
std::optional<Divisor> brute_linsys_member(const WeightedGraph& g, const Divisor& d,
                                           const OracleLimits& limits = {});
bool brute_linsys_empty_int(const WeightedGraph& g, const Divisor& d, const OracleLimits& limits = {});

/// Smallest deg E over effective integral E with |D - E| empty, by graded
/// enumeration of E.
std::int64_t brute_h0_int(const WeightedGraph& g, const Divisor& d, const OracleLimits& limits = {});

/// Two-vertex graph with edge weight p and D = (a, b): the sign of
/// floor((a+1)/p) + floor((b+1)/p), which selects the branch of the closed form.
int two_vertex_case(const Rational& a, const Rational& b, const Rational& p);
Rational two_vertex_h0(const Rational& a, const Rational& b, const Rational& p);
bool two_vertex_nonempty(const Rational& a, const Rational& b, const Rational& p);

struct MonotoneReport {
  bool nonsingular = false;
  bool inverse_nonnegative = false;
  /// P_k x >= 0 implied x >= 0 on every sampled nonnegative image.
  bool implication_holds = false;
  RationalMatrix inverse;

  bool ok() const { return nonsingular && inverse_nonnegative && implication_holds; }
};

MonotoneReport monotone_report(const WeightedGraph& g, std::size_t k, std::uint64_t seed = 0,
                               std::size_t samples = 8);
bool check_monotone(const WeightedGraph& g, std::size_t k);

}  // namespace wrr
