#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "wrr/rational.hpp"

namespace wrr {

/// Dense row-major matrix. Only what the exact solvers need.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;
using BigIntMatrix = Matrix<BigInt>;

/// Result of a fraction-free solve of A X = B: det(A) and det(A) * X, both
/// integral.
struct FractionFreeSolution {
  BigInt det;
  BigIntMatrix scaled;
};

/// Bareiss elimination on the augmented system [A | B]. Every division is
/// exact. Throws Error(SingularMatrix) when det(A) = 0.
FractionFreeSolution bareiss_solve(BigIntMatrix a, BigIntMatrix b);

/// Determinant by Bareiss elimination; zero is a legal answer here.
BigInt bareiss_determinant(BigIntMatrix a);

Rational determinant(const RationalMatrix& a);
RationalMatrix inverse(const RationalMatrix& a);
std::vector<Rational> solve(const RationalMatrix& a, std::span<const Rational> rhs);

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b);
std::vector<Rational> multiply(const RationalMatrix& a, std::span<const Rational> x);

}  // namespace wrr
