#pragma once

#include "wrr/graph.hpp"
#include "wrr/rational.hpp"

// Homothety T_a(D) = aD + (a-1)I and the scaled graph aG. Together they carry
// h0 on a rational graph to h0 on an integer graph:
//   h0_{aG}(T_a(D)) = a * h0_G(D),
// which is how every rational h0 below is computed.

namespace wrr {

/// Positive integer scale factor.
class ScaleFactor {
 public:
  /// Throws Error(NonpositiveScale) unless value > 0.
  explicit ScaleFactor(BigInt value);

  const BigInt& value() const { return value_; }
  Rational as_rational() const { return Rational(value_); }

  friend bool operator==(const ScaleFactor&, const ScaleFactor&) = default;

 private:
  BigInt value_;
};

/// Graph with every edge weight multiplied by a > 0.
WeightedGraph scale_graph(const WeightedGraph& g, const Rational& a);

Divisor transform(const Divisor& d, const Rational& a);
Divisor inverse_transform(const Divisor& d, const Rational& a);

/// Least a making aG a Z-graph and T_a(D), K_{aG} and T_a(K - D) integral.
ScaleFactor minimal_integer_scale(const WeightedGraph& g, const Divisor& d);

struct H0Result {
  Rational value;
  /// Effective E on G with deg E = h0 and |D - E| empty.
  Divisor witness;
  ScaleFactor scale;
};

/// h0 through the integer graph aG. Throws Error(NonIntegralWeights) or
/// Error(NonIntegralDivisor) when `a` does not clear the denominators.
H0Result h0_at_scale(const WeightedGraph& g, const Divisor& d, const ScaleFactor& a);
H0Result h0_witness(const WeightedGraph& g, const Divisor& d);
Rational h0(const WeightedGraph& g, const Divisor& d);

/// Both sides of h0(D) - h0(K - D) = deg(D) + 1 - g with every intermediate.
struct RRReport {
  Rational h0_d;
  Rational h0_k_minus_d;
  Rational degree;
  Rational genus;
  Rational lhs;
  Rational rhs;
  ScaleFactor scale{BigInt(1)};

  bool holds() const { return lhs == rhs; }
};

/// One scale factor serves G, D and K - D, so both h0 values live on the
/// same integer graph.
RRReport rr_report(const WeightedGraph& g, const Divisor& d);

}  // namespace wrr
