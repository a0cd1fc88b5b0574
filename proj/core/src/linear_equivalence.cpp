#include "wrr/linear_equivalence.hpp"

#include "wrr/bn_engine.hpp"
#include "wrr/error.hpp"
#include "wrr/scaling.hpp"

namespace wrr {

ReducedMatrix ReducedMatrix::build(const WeightedGraph& g, std::size_t k) {
  const std::size_t n = g.vertex_count();
  if (k >= n) throw Error(ErrorKind::IndexOutOfRange, "excluded index");
  const EdgeMatrix p = edge_matrix(g);
  RationalMatrix reduced(n - 1, n - 1);
  for (std::size_t r = 0; r + 1 < n; ++r)
    for (std::size_t c = 0; c + 1 < n; ++c) reduced(r, c) = p(r < k ? r : r + 1, c < k ? c : c + 1);
  RationalMatrix inv = wrr::inverse(reduced);
  return ReducedMatrix(k, std::move(reduced), std::move(inv));
}

Divisor principal_divisor(const WeightedGraph& g, const EquivalenceCertificate& cert) {
  const std::size_t n = g.vertex_count();
  if (cert.m.size() + 1 != n || cert.excluded >= n) {
    throw Error(ErrorKind::DimensionMismatch, "certificate does not match the graph");
  }
  Divisor out(n);
  std::size_t r = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (j == cert.excluded) continue;
    const Rational mj(cert.m[r++]);
    if (mj.is_zero()) continue;
    out += mj * principal_generator(g, j);
  }
  return out;
}

std::optional<EquivalenceCertificate> decompose_principal(const WeightedGraph& g, const ReducedMatrix& pk,
                                                          const Divisor& z) {
  const std::size_t n = g.vertex_count();
  if (z.size() != n) throw Error(ErrorKind::DimensionMismatch, "divisor length differs from vertex count");
  if (!z.degree().is_zero()) return std::nullopt;

  const std::size_t dim = pk.dimension();
  EquivalenceCertificate cert{pk.excluded(), std::vector<BigInt>(dim)};
  for (std::size_t r = 0; r < dim; ++r) {
    Rational mr;
    for (std::size_t c = 0; c < dim; ++c) mr += pk.inverse()(r, c) * z[pk.vertex_of(c)];
    if (!mr.is_integer()) return std::nullopt;
    cert.m[r] = mr.numerator();
  }
  // Coordinate k is not part of the solve; it agrees because both sides have
  // degree zero. Check every coordinate anyway.
  if (principal_divisor(g, cert) != z) {
    throw Error(ErrorKind::InvariantViolation, "principal reconstruction disagrees with the solved divisor");
  }
  return cert;
}

std::optional<EquivalenceCertificate> decompose_principal(const WeightedGraph& g, const Divisor& z,
                                                          std::size_t k) {
  return decompose_principal(g, ReducedMatrix::build(g, k), z);
}

std::optional<EquivalenceCertificate> equivalence_certificate(const WeightedGraph& g, const Divisor& d1,
                                                              const Divisor& d2) {
  if (d1.size() != g.vertex_count() || d2.size() != g.vertex_count()) {
    throw Error(ErrorKind::DimensionMismatch, "divisor length differs from vertex count");
  }
  return decompose_principal(g, d1 - d2, g.vertex_count() - 1);
}

bool linearly_equivalent(const WeightedGraph& g, const Divisor& d1, const Divisor& d2) {
  return equivalence_certificate(g, d1, d2).has_value();
}

bool ceil_effective(const Divisor& d) { return d.all_greater_than(Rational(-1)); }

std::optional<Divisor> linsys_witness(const WeightedGraph& g, const Divisor& d) {
  if (d.size() != g.vertex_count()) throw Error(ErrorKind::DimensionMismatch, "divisor length differs from vertex count");
  if (ceil_effective(d)) return d;
  const ScaleFactor a = minimal_integer_scale(g, d);
  const Multigraph m = to_multigraph(scale_graph(g, a.as_rational()));
  const IntDivisor scaled = to_int_divisor(transform(d, a.as_rational()));
  const std::size_t q = g.vertex_count() - 1;
  const QReduction red = q_reduce(m, scaled, q);
  if (red.reduced[q] < 0) return std::nullopt;
  Divisor witness = inverse_transform(to_divisor(red.reduced), a.as_rational());
  if (!ceil_effective(witness)) {
    throw Error(ErrorKind::InvariantViolation, "pulled-back witness is not ceil-effective");
  }
  return witness;
}

bool linsys_nonempty(const WeightedGraph& g, const Divisor& d) { return linsys_witness(g, d).has_value(); }

}  // namespace wrr
