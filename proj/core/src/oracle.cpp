#include "wrr/oracle.hpp"

#include <random>

#include "wrr/error.hpp"

namespace wrr {
namespace {

RationalMatrix delete_row_and_column(const RationalMatrix& p, std::size_t k) {
  const std::size_t n = p.rows();
  RationalMatrix out(n - 1, n - 1);
  for (std::size_t r = 0; r + 1 < n; ++r)
    for (std::size_t c = 0; c + 1 < n; ++c) out(r, c) = p(r < k ? r : r + 1, c < k ? c : c + 1);
  return out;
}

void require_integral(const WeightedGraph& g, const Divisor& d) {
  if (d.size() != g.vertex_count()) throw Error(ErrorKind::DimensionMismatch, "divisor length differs from vertex count");
  if (!g.is_integral()) throw Error(ErrorKind::NonIntegralWeights, "the lattice oracle needs a Z-graph");
  if (!d.is_integral()) throw Error(ErrorKind::NonIntegralDivisor, "the lattice oracle needs an integral divisor");
}

// Integer copy of the edge matrix; entries of a Z-graph are small.
std::vector<std::vector<std::int64_t>> integer_edge_matrix(const WeightedGraph& g) {
  const EdgeMatrix p = edge_matrix(g);
  std::vector<std::vector<std::int64_t>> out(p.rows(), std::vector<std::int64_t>(p.cols()));
  for (std::size_t i = 0; i < p.rows(); ++i)
    for (std::size_t j = 0; j < p.cols(); ++j) out[i][j] = p(i, j).to_int64();
  return out;
}

}  // namespace

BigInt SearchBox::point_count() const {
  BigInt count = 1;
  for (std::size_t i = 0; i < lower.size(); ++i) {
    if (upper[i] < lower[i]) return 0;
    count *= upper[i] - lower[i] + 1;
  }
  return count;
}

bool SearchBox::contains(const std::vector<BigInt>& m) const {
  if (m.size() != lower.size()) return false;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] < lower[i] || m[i] > upper[i]) return false;
  return true;
}

SearchBox search_box(const WeightedGraph& g, const Divisor& d, std::size_t k) {
  require_integral(g, d);
  const std::size_t n = g.vertex_count();
  if (k >= n) throw Error(ErrorKind::IndexOutOfRange, "excluded index");
  const Rational deg = d.degree();
  if (deg.sign() < 0) throw Error(ErrorKind::NegativeDegree, "deg(D) = " + deg.to_string() + " < 0");

  const RationalMatrix inv = inverse(delete_row_and_column(edge_matrix(g), k));
  const std::size_t dim = n - 1;
  std::vector<Rational> lo(dim), hi(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    const std::size_t v = r < k ? r : r + 1;
    lo[r] = -d[v];
    hi[r] = deg - d[v];
  }
  SearchBox box;
  box.excluded = k;
  box.lower.resize(dim);
  box.upper.resize(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    Rational min_m, max_m;
    for (std::size_t c = 0; c < dim; ++c) {
      const Rational& w = inv(r, c);
      if (w.sign() >= 0) {
        min_m += w * lo[c];
        max_m += w * hi[c];
      } else {
        min_m += w * hi[c];
        max_m += w * lo[c];
      }
    }
    box.lower[r] = min_m.ceil();
    box.upper[r] = max_m.floor();
  }
  return box;
}

std::optional<Divisor> brute_linsys_member(const WeightedGraph& g, const Divisor& d, const OracleLimits& limits) {
  require_integral(g, d);
  const std::size_t n = g.vertex_count();
  if (n > limits.max_vertices) throw Error(ErrorKind::InstanceTooLarge, "too many vertices for the lattice oracle");
  if (d.degree().sign() < 0) return std::nullopt;

  const std::size_t k = n - 1;
  const SearchBox box = search_box(g, d, k);
  const BigInt count = box.point_count();
  if (count == 0) return std::nullopt;
  if (count > limits.max_box_points) throw Error(ErrorKind::InstanceTooLarge, "search box has " + count.str() + " points");

  const auto p = integer_edge_matrix(g);
  std::vector<std::int64_t> base(n);
  for (std::size_t i = 0; i < n; ++i) base[i] = d[i].to_int64();
  const std::size_t dim = n - 1;
  std::vector<std::int64_t> lower(dim), upper(dim), m(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    lower[r] = to_int64_checked(box.lower[r]);
    upper[r] = to_int64_checked(box.upper[r]);
  }
  m = lower;
  std::vector<std::int64_t> candidate(n);
  for (;;) {
    bool effective = true;
    for (std::size_t i = 0; i < n && effective; ++i) {
      std::int64_t value = base[i];
      for (std::size_t r = 0; r < dim; ++r) value += p[i][r] * m[r];  // k = n - 1 is the last column
      candidate[i] = value;
      effective = value >= 0;
    }
    if (effective) {
      Divisor out(n);
      for (std::size_t i = 0; i < n; ++i) out[i] = Rational(candidate[i]);
      return out;
    }
    std::size_t r = 0;
    while (r < dim && m[r] == upper[r]) {
      m[r] = lower[r];
      ++r;
    }
    if (r == dim) break;
    ++m[r];
  }
  return std::nullopt;
}

bool brute_linsys_empty_int(const WeightedGraph& g, const Divisor& d, const OracleLimits& limits) {
  return !brute_linsys_member(g, d, limits).has_value();
}

std::int64_t brute_h0_int(const WeightedGraph& g, const Divisor& d, const OracleLimits& limits) {
  require_integral(g, d);
  const std::size_t n = g.vertex_count();
  const std::int64_t deg = d.degree().to_int64();
  if (deg < 0) return 0;

  Divisor e(n);
  auto some_e_empties = [&](auto&& self, std::size_t pos, std::int64_t left) -> bool {
    if (pos + 1 == n) {
      e[pos] = Rational(left);
      return brute_linsys_empty_int(g, d - e, limits);
    }
    for (std::int64_t c = 0; c <= left; ++c) {
      e[pos] = Rational(c);
      if (self(self, pos + 1, left - c)) return true;
    }
    e[pos] = Rational(0);
    return false;
  };
  for (std::int64_t t = 0; t <= deg + 1; ++t) {
    if (some_e_empties(some_e_empties, 0, t)) return t;
  }
  throw Error(ErrorKind::InvariantViolation, "no effective E of degree deg(D)+1 empties |D|");
}

int two_vertex_case(const Rational& a, const Rational& b, const Rational& p) {
  if (p.sign() <= 0) throw Error(ErrorKind::NonpositiveWeight, "p must be positive");
  const BigInt s = ((a + Rational(1)) / p).floor() + ((b + Rational(1)) / p).floor();
  return s < 0 ? -1 : (s == 0 ? 0 : 1);
}

Rational two_vertex_h0(const Rational& a, const Rational& b, const Rational& p) {
  const int which = two_vertex_case(a, b, p);
  if (which < 0) return Rational(0);
  if (which == 0) {
    const Rational fa(((a + Rational(1)) / p).floor());
    const Rational fb(((b + Rational(1)) / p).floor());
    return std::min(a + Rational(1) - p * fa, b + Rational(1) - p * fb);
  }
  return a + b - p + Rational(2);
}

bool two_vertex_nonempty(const Rational& a, const Rational& b, const Rational& p) {
  if (p.sign() <= 0) throw Error(ErrorKind::NonpositiveWeight, "p must be positive");
  return ((Rational(1) + a) / p).ceil() + ((Rational(1) + b) / p).ceil() >= 2;
}

MonotoneReport monotone_report(const WeightedGraph& g, std::size_t k, std::uint64_t seed, std::size_t samples) {
  const std::size_t n = g.vertex_count();
  if (k >= n) throw Error(ErrorKind::IndexOutOfRange, "excluded index");
  MonotoneReport report;
  const RationalMatrix pk = delete_row_and_column(edge_matrix(g), k);
  const std::size_t dim = pk.rows();
  try {
    report.inverse = inverse(pk);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::SingularMatrix) throw;
    return report;
  }
  report.nonsingular = multiply(pk, report.inverse) == RationalMatrix::identity(dim);
  report.inverse_nonnegative = true;
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c)
      if (report.inverse(r, c).sign() < 0) report.inverse_nonnegative = false;

  // Solve P_k x = y for random y >= 0 and confirm x >= 0.
  std::mt19937_64 rng(seed);
  report.implication_holds = true;
  for (std::size_t s = 0; s < samples && dim > 0; ++s) {
    std::vector<Rational> y(dim);
    for (auto& yi : y) yi = Rational(static_cast<std::int64_t>(rng() % 7), static_cast<std::int64_t>(1 + rng() % 5));
    const std::vector<Rational> x = solve(pk, y);
    for (const auto& xi : x)
      if (xi.sign() < 0) report.implication_holds = false;
  }
  return report;
}

bool check_monotone(const WeightedGraph& g, std::size_t k) { return monotone_report(g, k).ok(); }

}  // namespace wrr
