#pragma once

#include <cstdint>
#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace wrr {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Thin value wrapper over boost's cpp_rational.
class Rational {
 public:
  using Backend = boost::multiprecision::cpp_rational;

  Rational() = default;
  Rational(std::int64_t value) : value_(value) {}  // NOLINT(implicit)
  Rational(const BigInt& value) : value_(value) {}  // NOLINT(implicit)
  Rational(const BigInt& num, const BigInt& den);

  static Rational from_backend(Backend value) {
    Rational r;
    r.value_ = std::move(value);
    return r;
  }

  /// Accepts an optional '-', digits, and an optional '/' followed by digits.
  static std::optional<Rational> parse(std::string_view text);

  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const { return boost::multiprecision::denominator(value_); }

  bool is_integer() const { return denominator() == 1; }
  bool is_zero() const { return value_.is_zero(); }
  int sign() const { return value_.sign(); }

  BigInt floor() const;
  BigInt ceil() const;

  /// Integer value; the caller guarantees is_integer() and that it fits.
  std::int64_t to_int64() const;

  /// "num" or "num/den".
  std::string to_string() const;

  /// Decimal approximation with `digits` fractional digits, rounded half away
  /// from zero. Computed with integer arithmetic only.
  std::string to_decimal(int digits) const;

  const Backend& backend() const { return value_; }

  Rational operator-() const { return from_backend(-value_); }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ > b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  Backend value_;
};

/// Floor division for integers with a positive divisor.
BigInt floor_div(const BigInt& num, const BigInt& den);

BigInt lcm(const BigInt& a, const BigInt& b);

/// Checked narrowing; throws Error(Overflow) when the value does not fit.
std::int64_t to_int64_checked(const BigInt& value);

}  // namespace wrr
