#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "wrr/graph.hpp"
#include "wrr/linear_equivalence.hpp"

// Baker-Norine machinery on integer-weighted graphs: chip configurations,
// Dhar's burning algorithm, q-reduced divisors, complete linear systems, and
// the rank r(D) with h0 = r + 1.

namespace wrr {

/// Integer divisor on a multigraph.
class IntDivisor {
 public:
  IntDivisor() = default;
  explicit IntDivisor(std::size_t n) : coeffs_(n, 0) {}
  explicit IntDivisor(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {}
  IntDivisor(std::initializer_list<std::int64_t> coeffs) : coeffs_(coeffs) {}

  std::size_t size() const { return coeffs_.size(); }
  std::int64_t operator[](std::size_t i) const { return coeffs_[i]; }
  std::int64_t& operator[](std::size_t i) { return coeffs_[i]; }
  std::span<const std::int64_t> coeffs() const { return coeffs_; }

  std::int64_t degree() const;
  bool is_effective() const;

  IntDivisor& operator+=(const IntDivisor& o);
  IntDivisor& operator-=(const IntDivisor& o);
  friend IntDivisor operator+(IntDivisor a, const IntDivisor& b) { return a += b; }
  friend IntDivisor operator-(IntDivisor a, const IntDivisor& b) { return a -= b; }

  friend bool operator==(const IntDivisor&, const IntDivisor&) = default;
  friend auto operator<=>(const IntDivisor&, const IntDivisor&) = default;

 private:
  std::vector<std::int64_t> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const IntDivisor& d);

Divisor to_divisor(const IntDivisor& d);
/// Throws Error(NonIntegralDivisor) or Error(Overflow).
IntDivisor to_int_divisor(const Divisor& d);

/// Connected loop-free multigraph given by edge multiplicities. Precomputes,
/// for every sink q, the adjugate and determinant of the reduced Laplacian so
/// that q-reduction can jump straight to a near-reduced configuration.
class Multigraph {
 public:
  /// Throws Error(NonIntegralWeights) or Error(Overflow) for huge weights.
  static Multigraph from_graph(const WeightedGraph& g);

  std::size_t vertex_count() const { return n_; }
  std::int64_t multiplicity(std::size_t i, std::size_t j) const { return mult_[i * n_ + j]; }
  std::int64_t degree(std::size_t v) const { return degree_[v]; }

  /// Integer genus |E| - n + 1.
  std::int64_t genus() const;
  IntDivisor canonical() const;

  const BigIntMatrix& reduced_adjugate(std::size_t q) const { return adjugate_[q]; }
  const BigInt& reduced_determinant(std::size_t q) const { return determinant_[q]; }

 private:
  Multigraph() = default;

  std::size_t n_ = 0;
  std::vector<std::int64_t> mult_;
  std::vector<std::int64_t> degree_;
  std::vector<BigIntMatrix> adjugate_;
  std::vector<BigInt> determinant_;
};

Multigraph to_multigraph(const WeightedGraph& g);
WeightedGraph to_weighted_graph(const Multigraph& m);

/// Runs Dhar's burning algorithm from q: a vertex catches fire once the number
/// of edges joining it to burnt vertices exceeds its chip count. Returns the
/// vertices left unburnt, in increasing order.
/// Throws Error(NegativeAwayFromQ) if D is negative at a vertex other than q.
std::vector<std::size_t> dhar_burn(const Multigraph& m, const IntDivisor& d, std::size_t q);

/// D is nonnegative away from q and the fire from q burns every vertex.
bool is_q_reduced(const Multigraph& m, const IntDivisor& d, std::size_t q);

/// The q-reduced representative of [D] and the firing script that produced it:
/// reduced = D - P * firing, with firing[q] = 0.
struct QReduction {
  IntDivisor reduced;
  std::vector<std::int64_t> firing;
};

QReduction q_reduce(const Multigraph& m, const IntDivisor& d, std::size_t q);

/// reduced - D = sum_{j != q} m_j H_j, as a certificate over the weighted graph.
EquivalenceCertificate certificate(const QReduction& reduction, std::size_t q);

/// |D|_BN is nonempty, i.e. the q-reduced form is effective.
bool linsys_nonempty_int(const Multigraph& m, const IntDivisor& d, std::size_t q);

/// Every effective divisor linearly equivalent to D, sorted lexicographically.
/// Walks the class by single subset firings, which connect all effective
/// members. Throws Error(InstanceTooLarge) beyond `limit` members.
std::vector<IntDivisor> linear_system(const Multigraph& m, const IntDivisor& d,
                                      std::size_t limit = 5'000'000);

/// Minimum of sum(t) over t >= 0 such that every point p has some coordinate
/// with t[i] >= p[i]. Points must be positive and of equal length `dim`.
struct ThresholdCover {
  std::int64_t total = 0;
  std::vector<std::int64_t> thresholds;
};
ThresholdCover minimum_threshold_cover(std::span<const std::vector<std::int64_t>> points, std::size_t dim);

/// h0 with a minimizing effective E: deg E = h0 and |D - E|_BN is empty.
struct RankResult {
  std::int64_t h0 = 0;
  IntDivisor witness;

  std::int64_t rank() const { return h0 - 1; }
};

/// Exact h0 = r + 1. E is removable iff no member of |D| dominates it, so the
/// optimum is a minimum threshold cover of {D' + 1 : D' in |D|}.
RankResult h0_int_witness(const Multigraph& m, const IntDivisor& d);
std::int64_t h0_int(const Multigraph& m, const IntDivisor& d);
std::int64_t rank_bn(const Multigraph& m, const IntDivisor& d);

/// Reference rank by degree-graded enumeration of effective E (lexicographic
/// within each degree) with a Dhar emptiness test for each D - E. Exponential
/// in deg(D); used to cross-check rank_bn on small inputs.
RankResult rank_bn_graded(const Multigraph& m, const IntDivisor& d);

}  // namespace wrr
