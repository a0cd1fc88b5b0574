#include "wrr/matrix.hpp"

#include <utility>

#include "wrr/error.hpp"

namespace wrr {
namespace {

BigInt exact_div(const BigInt& num, const BigInt& den) {
  BigInt q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0) throw Error(ErrorKind::InvariantViolation, "inexact division in fraction-free elimination");
  return q;
}

// Forward Bareiss pass over the first `n` columns of an n-row matrix. Returns
// the sign of the row permutation, or 0 when a pivot is missing.
int bareiss_forward(BigIntMatrix& m, std::size_t n) {
  int sign = 1;
  BigInt prev = 1;
  const std::size_t width = m.cols();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m(pivot, k) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      for (std::size_t j = 0; j < width; ++j) std::swap(m(k, j), m(pivot, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < width; ++j) {
        m(i, j) = exact_div(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign;
}

// Multiply each row by the lcm of the denominators it contains (including the
// matching entry of `extra`, if any) so the row becomes integral.
BigIntMatrix clear_row_denominators(const RationalMatrix& a, std::vector<BigInt>& row_scale,
                                    std::span<const Rational> extra = {}) {
  BigIntMatrix out(a.rows(), a.cols());
  row_scale.assign(a.rows(), BigInt(1));
  for (std::size_t r = 0; r < a.rows(); ++r) {
    BigInt s = 1;
    for (std::size_t c = 0; c < a.cols(); ++c) s = lcm(s, a(r, c).denominator());
    if (!extra.empty()) s = lcm(s, extra[r].denominator());
    row_scale[r] = s;
    for (std::size_t c = 0; c < a.cols(); ++c) {
      out(r, c) = a(r, c).numerator() * (s / a(r, c).denominator());
    }
  }
  return out;
}

}  // namespace

FractionFreeSolution bareiss_solve(BigIntMatrix a, BigIntMatrix b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.rows() != n) {
    throw Error(ErrorKind::DimensionMismatch, "bareiss_solve expects square A and matching B");
  }
  const std::size_t m = b.cols();
  if (n == 0) return {BigInt(1), BigIntMatrix(0, m)};

  BigIntMatrix aug(n, n + m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = std::move(a(i, j));
    for (std::size_t j = 0; j < m; ++j) aug(i, n + j) = std::move(b(i, j));
  }
  const int sign = bareiss_forward(aug, n);
  if (sign == 0) throw Error(ErrorKind::SingularMatrix, "matrix is singular");

  const BigInt det_permuted = aug(n - 1, n - 1);
  BigIntMatrix y(n, m);
  for (std::size_t col = 0; col < m; ++col) {
    for (std::size_t ii = n; ii-- > 0;) {
      BigInt acc = det_permuted * aug(ii, n + col);
      for (std::size_t j = ii + 1; j < n; ++j) acc -= aug(ii, j) * y(j, col);
      y(ii, col) = exact_div(acc, aug(ii, ii));
    }
  }
  if (sign < 0) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < m; ++j) y(i, j) = -y(i, j);
  }
  return {sign * det_permuted, std::move(y)};
}

BigInt bareiss_determinant(BigIntMatrix a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw Error(ErrorKind::DimensionMismatch, "determinant of a non-square matrix");
  if (n == 0) return 1;
  const int sign = bareiss_forward(a, n);
  if (sign == 0) return 0;
  return sign * a(n - 1, n - 1);
}

Rational determinant(const RationalMatrix& a) {
  std::vector<BigInt> scale;
  BigIntMatrix integral = clear_row_denominators(a, scale);
  BigInt denom = 1;
  for (const auto& s : scale) denom *= s;
  return Rational(bareiss_determinant(std::move(integral)), denom);
}

RationalMatrix inverse(const RationalMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<BigInt> scale;
  BigIntMatrix integral = clear_row_denominators(a, scale);
  BigIntMatrix rhs(n, n);
  for (std::size_t i = 0; i < n; ++i) rhs(i, i) = scale[i];
  FractionFreeSolution sol = bareiss_solve(std::move(integral), std::move(rhs));
  RationalMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = Rational(sol.scaled(i, j), sol.det);
  return out;
}

std::vector<Rational> solve(const RationalMatrix& a, std::span<const Rational> rhs) {
  const std::size_t n = a.rows();
  if (rhs.size() != n) throw Error(ErrorKind::DimensionMismatch, "solve: rhs length");
  std::vector<BigInt> scale;
  BigIntMatrix integral = clear_row_denominators(a, scale, rhs);
  BigIntMatrix b(n, 1);
  for (std::size_t i = 0; i < n; ++i) b(i, 0) = rhs[i].numerator() * (scale[i] / rhs[i].denominator());
  FractionFreeSolution sol = bareiss_solve(std::move(integral), std::move(b));
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = Rational(sol.scaled(i, 0), sol.det);
  return x;
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "multiply: inner dimensions");
  RationalMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

std::vector<Rational> multiply(const RationalMatrix& a, std::span<const Rational> x) {
  if (a.cols() != x.size()) throw Error(ErrorKind::DimensionMismatch, "multiply: vector length");
  std::vector<Rational> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * x[j];
  return out;
}

}  // namespace wrr
