#include "wrr/rational.hpp"

#include <limits>

#include "wrr/error.hpp"

namespace wrr {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::LoopEdge: return "LoopEdge";
    case ErrorKind::NonpositiveWeight: return "NonpositiveWeight";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::NonIntegralWeights: return "NonIntegralWeights";
    case ErrorKind::NonIntegralDivisor: return "NonIntegralDivisor";
    case ErrorKind::NegativeAwayFromQ: return "NegativeAwayFromQ";
    case ErrorKind::NonpositiveScale: return "NonpositiveScale";
    case ErrorKind::NegativeDegree: return "NegativeDegree";
    case ErrorKind::InstanceTooLarge: return "InstanceTooLarge";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  // The backend expects a positive denominator.
  value_ = den < 0 ? Backend(BigInt(-num), BigInt(-den)) : Backend(num, den);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  value_ /= o.value_;
  return *this;
}

std::optional<Rational> Rational::parse(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && text[pos] == '-') {
    negative = true;
    ++pos;
  }
  auto read_digits = [&](BigInt& out) {
    const std::size_t start = pos;
    out = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      out = out * 10 + (text[pos] - '0');
      ++pos;
    }
    return pos > start;
  };
  BigInt num;
  if (!read_digits(num)) return std::nullopt;
  BigInt den = 1;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    if (!read_digits(den) || den == 0) return std::nullopt;
  }
  if (pos != text.size()) return std::nullopt;
  return Rational(negative ? BigInt(-num) : num, den);
}

BigInt floor_div(const BigInt& num, const BigInt& den) {
  BigInt q = num / den;  // truncates toward zero
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  if (a == 0 || b == 0) return 0;
  BigInt g = boost::multiprecision::gcd(a, b);
  BigInt r = (a / g) * b;
  return r < 0 ? BigInt(-r) : r;
}

std::int64_t to_int64_checked(const BigInt& value) {
  if (value > std::numeric_limits<std::int64_t>::max() ||
      value < std::numeric_limits<std::int64_t>::min()) {
    throw Error(ErrorKind::Overflow, "integer " + value.str() + " does not fit in 64 bits");
  }
  return value.convert_to<std::int64_t>();
}

BigInt Rational::floor() const { return floor_div(numerator(), denominator()); }

BigInt Rational::ceil() const { return -floor_div(-numerator(), denominator()); }

std::int64_t Rational::to_int64() const { return to_int64_checked(numerator()); }

std::string Rational::to_string() const {
  if (is_integer()) return numerator().str();
  return numerator().str() + "/" + denominator().str();
}

std::string Rational::to_decimal(int digits) const {
  if (digits < 0) digits = 0;
  BigInt scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  const BigInt num = numerator();
  const BigInt den = denominator();
  BigInt magnitude = (num < 0 ? BigInt(-num) : num) * scale;
  BigInt scaled = (2 * magnitude + den) / (2 * den);
  std::string body = scaled.str();
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits)) {
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    }
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  }
  if (num < 0 && scaled != 0) body.insert(0, "-");
  return body;
}

}  // namespace wrr
