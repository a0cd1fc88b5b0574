#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "wrr/matrix.hpp"
#include "wrr/rational.hpp"

// Weighted graphs and divisors with exact rational data.
//
// The C++ API indexes vertices from 0. Text formats and the CLI use 1-based
// indices v_1..v_n and convert at the boundary.

namespace wrr {

struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;
  Rational weight;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// A divisor: one rational coefficient per vertex.
class Divisor {
 public:
  Divisor() = default;
  explicit Divisor(std::size_t n) : coeffs_(n) {}
  explicit Divisor(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {}
  Divisor(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) {}

  /// The all-ones divisor I.
  static Divisor ones(std::size_t n) { return Divisor(std::vector<Rational>(n, Rational(1))); }
  /// The divisor c * v_i.
  static Divisor unit(std::size_t n, std::size_t i, const Rational& c = Rational(1));

  std::size_t size() const { return coeffs_.size(); }
  const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
  Rational& operator[](std::size_t i) { return coeffs_[i]; }
  std::span<const Rational> coeffs() const { return coeffs_; }

  Rational degree() const;
  Divisor ceiling() const;
  bool is_integral() const;
  /// Least common multiple of the coefficient denominators.
  BigInt denominator_lcm() const;

  /// Coordinatewise comparisons against a constant.
  bool all_greater_than(const Rational& c) const;
  bool all_at_least(const Rational& c) const;
  /// Coordinatewise D >= other.
  bool dominates(const Divisor& other) const;

  Divisor& operator+=(const Divisor& o);
  Divisor& operator-=(const Divisor& o);
  Divisor& operator*=(const Rational& c);

  friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
  friend Divisor operator-(Divisor a, const Divisor& b) { return a -= b; }
  friend Divisor operator-(Divisor a) {
    for (auto& x : a.coeffs_) x = -x;
    return a;
  }
  friend Divisor operator*(const Rational& c, Divisor d) { return d *= c; }

  friend bool operator==(const Divisor&, const Divisor&) = default;

 private:
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Divisor& d);

/// Connected, loop-free graph with positive rational edge weights, stored as a
/// dense symmetric weight matrix with zero diagonal.
class WeightedGraph {
 public:
  /// Validates and builds. Throws Error with kind LoopEdge, NonpositiveWeight,
  /// DuplicateEdge, IndexOutOfRange, or Disconnected.
  static WeightedGraph build(std::size_t n, std::span<const Edge> edges);
  static WeightedGraph build(std::size_t n, std::initializer_list<Edge> edges) {
    return build(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  std::size_t vertex_count() const { return n_; }
  const Rational& weight(std::size_t i, std::size_t j) const { return weights_(i, j); }
  const RationalMatrix& weights() const { return weights_; }

  /// Edges with u < v in row-major order.
  std::vector<Edge> edges() const;

  bool is_integral() const;
  BigInt weight_denominator_lcm() const;

  friend bool operator==(const WeightedGraph&, const WeightedGraph&) = default;

 private:
  WeightedGraph(std::size_t n, RationalMatrix weights) : n_(n), weights_(std::move(weights)) {}

  std::size_t n_ = 0;
  RationalMatrix weights_;
};

using EdgeMatrix = RationalMatrix;

Rational vertex_degree(const WeightedGraph& g, std::size_t j);
EdgeMatrix edge_matrix(const WeightedGraph& g);
Rational genus(const WeightedGraph& g);
Divisor canonical_divisor(const WeightedGraph& g);
/// H_j: column j of the edge matrix, i.e. the effect of borrowing at v_j.
Divisor principal_generator(const WeightedGraph& g, std::size_t j);

inline Rational divisor_degree(const Divisor& d) { return d.degree(); }
inline Divisor ceiling(const Divisor& d) { return d.ceiling(); }

}  // namespace wrr
