#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "wrr/graph.hpp"
#include "wrr/matrix.hpp"

namespace wrr {

/// Finite abelian group Z/d_1 x ... x Z/d_r with d_i | d_{i+1}.
struct AbelianGroupDescription {
  /// Full Smith diagonal (entries equal to 1 included).
  std::vector<BigInt> invariant_factors;
  BigInt order;

  /// Nontrivial factors only: "Z/2 x Z/4", or "trivial".
  std::string to_string() const;
};

/// Diagonal of the Smith normal form of a square nonsingular integer matrix,
/// positive and ordered by divisibility.
std::vector<BigInt> smith_diagonal(BigIntMatrix a);

/// Div_0(G) / PDiv(G) for a Z-graph, read off the Smith form of P_k.
/// Throws Error(NonIntegralWeights) for other graphs.
AbelianGroupDescription jacobian(const WeightedGraph& g);
AbelianGroupDescription jacobian(const WeightedGraph& g, std::size_t k);

/// det(P_k).
Rational reduced_determinant(const WeightedGraph& g, std::size_t k);

/// Sum over spanning trees of the product of their edge weights, by direct
/// enumeration; equals det(P_k) for every k.
Rational spanning_tree_count(const WeightedGraph& g);

}  // namespace wrr
