#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "wrr/graph.hpp"
#include "wrr/matrix.hpp"

namespace wrr {

/// P_k: the edge matrix with row and column k deleted, together with its exact
/// inverse. For a connected graph P_k is nonsingular with a nonnegative
/// inverse, so construction failing means the input was not a valid graph.
class ReducedMatrix {
 public:
  /// Throws Error(SingularMatrix) if P_k cannot be inverted.
  static ReducedMatrix build(const WeightedGraph& g, std::size_t k);

  std::size_t excluded() const { return k_; }
  std::size_t dimension() const { return entries_.rows(); }
  const RationalMatrix& entries() const { return entries_; }
  const RationalMatrix& inverse() const { return inverse_; }

  /// Full vertex index of reduced row/column r.
  std::size_t vertex_of(std::size_t r) const { return r < k_ ? r : r + 1; }

 private:
  ReducedMatrix(std::size_t k, RationalMatrix entries, RationalMatrix inverse)
      : k_(k), entries_(std::move(entries)), inverse_(std::move(inverse)) {}

  std::size_t k_;
  RationalMatrix entries_;
  RationalMatrix inverse_;
};

/// Integer coefficients m_j (j != excluded, in increasing vertex order) with
/// sum_j m_j H_j equal to the certified difference.
struct EquivalenceCertificate {
  std::size_t excluded = 0;
  std::vector<BigInt> m;

  friend bool operator==(const EquivalenceCertificate&, const EquivalenceCertificate&) = default;
};

/// sum_{j != k} m_j H_j as a divisor.
Divisor principal_divisor(const WeightedGraph& g, const EquivalenceCertificate& cert);

/// Writes a degree-zero divisor as an integer combination of the H_j, j != k.
/// Returns nullopt when deg(z) != 0 or the exact solution is not integral.
std::optional<EquivalenceCertificate> decompose_principal(const WeightedGraph& g, const Divisor& z,
                                                          std::size_t k);
std::optional<EquivalenceCertificate> decompose_principal(const WeightedGraph& g, const ReducedMatrix& pk,
                                                          const Divisor& z);

/// Uses the default excluded index k = n - 1 (v_n).
std::optional<EquivalenceCertificate> equivalence_certificate(const WeightedGraph& g, const Divisor& d1,
                                                              const Divisor& d2);
bool linearly_equivalent(const WeightedGraph& g, const Divisor& d1, const Divisor& d2);

/// ceil(D) >= 0, i.e. every coordinate is strictly greater than -1.
bool ceil_effective(const Divisor& d);

/// A member of |D| (a ceil-effective divisor equivalent to D), or nullopt when
/// |D| is empty. Computed on the scaled integer graph and pulled back, so the
/// representative is deterministic but not canonical.
std::optional<Divisor> linsys_witness(const WeightedGraph& g, const Divisor& d);
bool linsys_nonempty(const WeightedGraph& g, const Divisor& d);

}  // namespace wrr
