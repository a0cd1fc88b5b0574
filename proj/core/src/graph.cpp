#include "wrr/graph.hpp"

#include <ostream>
#include <string>

#include "wrr/error.hpp"

namespace wrr {

Divisor Divisor::unit(std::size_t n, std::size_t i, const Rational& c) {
  Divisor d(n);
  d.coeffs_.at(i) = c;
  return d;
}

Rational Divisor::degree() const {
  Rational total;
  for (const auto& x : coeffs_) total += x;
  return total;
}

Divisor Divisor::ceiling() const {
  Divisor out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = Rational(coeffs_[i].ceil());
  return out;
}

bool Divisor::is_integral() const {
  for (const auto& x : coeffs_)
    if (!x.is_integer()) return false;
  return true;
}

BigInt Divisor::denominator_lcm() const {
  BigInt out = 1;
  for (const auto& x : coeffs_) out = lcm(out, x.denominator());
  return out;
}

bool Divisor::all_greater_than(const Rational& c) const {
  for (const auto& x : coeffs_)
    if (!(x > c)) return false;
  return true;
}

bool Divisor::all_at_least(const Rational& c) const {
  for (const auto& x : coeffs_)
    if (x < c) return false;
  return true;
}

bool Divisor::dominates(const Divisor& other) const {
  if (other.size() != size()) throw Error(ErrorKind::DimensionMismatch, "divisor lengths differ");
  for (std::size_t i = 0; i < size(); ++i)
    if (coeffs_[i] < other.coeffs_[i]) return false;
  return true;
}

Divisor& Divisor::operator+=(const Divisor& o) {
  if (o.size() != size()) throw Error(ErrorKind::DimensionMismatch, "divisor lengths differ");
  for (std::size_t i = 0; i < size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

Divisor& Divisor::operator-=(const Divisor& o) {
  if (o.size() != size()) throw Error(ErrorKind::DimensionMismatch, "divisor lengths differ");
  for (std::size_t i = 0; i < size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

Divisor& Divisor::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Divisor& d) {
  os << '(';
  for (std::size_t i = 0; i < d.size(); ++i) os << (i ? ", " : "") << d[i];
  return os << ')';
}

WeightedGraph WeightedGraph::build(std::size_t n, std::span<const Edge> edges) {
  if (n == 0) throw Error(ErrorKind::IndexOutOfRange, "a graph needs at least one vertex");
  RationalMatrix w(n, n);
  for (const Edge& e : edges) {
    const std::string where = "edge {" + std::to_string(e.u + 1) + "," + std::to_string(e.v + 1) + "}";
    if (e.u >= n || e.v >= n) throw Error(ErrorKind::IndexOutOfRange, where + " has an endpoint outside 1.." + std::to_string(n));
    if (e.u == e.v) throw Error(ErrorKind::LoopEdge, where + " is a loop");
    if (e.weight.sign() <= 0) throw Error(ErrorKind::NonpositiveWeight, where + " has weight " + e.weight.to_string());
    if (!w(e.u, e.v).is_zero()) throw Error(ErrorKind::DuplicateEdge, where + " appears twice");
    w(e.u, e.v) = e.weight;
    w(e.v, e.u) = e.weight;
  }

  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t u = 0; u < n; ++u) {
      if (!seen[u] && w(v, u).sign() > 0) {
        seen[u] = true;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  if (reached != n) {
    std::size_t first_missing = 0;
    while (seen[first_missing]) ++first_missing;
    throw Error(ErrorKind::Disconnected, "vertex " + std::to_string(first_missing + 1) + " is not reachable from vertex 1");
  }
  return WeightedGraph(n, std::move(w));
}

std::vector<Edge> WeightedGraph::edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if (!weights_(i, j).is_zero()) out.push_back({i, j, weights_(i, j)});
  return out;
}

bool WeightedGraph::is_integral() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if (!weights_(i, j).is_integer()) return false;
  return true;
}

BigInt WeightedGraph::weight_denominator_lcm() const {
  BigInt out = 1;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j) out = lcm(out, weights_(i, j).denominator());
  return out;
}

Rational vertex_degree(const WeightedGraph& g, std::size_t j) {
  if (j >= g.vertex_count()) throw Error(ErrorKind::IndexOutOfRange, "vertex index");
  Rational total;
  for (std::size_t i = 0; i < g.vertex_count(); ++i) total += g.weight(i, j);
  return total;
}

EdgeMatrix edge_matrix(const WeightedGraph& g) {
  const std::size_t n = g.vertex_count();
  EdgeMatrix p(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) {
        p(i, j) = -g.weight(i, j);
        p(i, i) += g.weight(i, j);
      }
    }
  }
  return p;
}

Rational genus(const WeightedGraph& g) {
  Rational total;
  for (const Edge& e : g.edges()) total += e.weight;
  const auto n = static_cast<std::int64_t>(g.vertex_count());
  return total - Rational(n) + Rational(1);
}

Divisor canonical_divisor(const WeightedGraph& g) {
  Divisor k(g.vertex_count());
  for (std::size_t i = 0; i < g.vertex_count(); ++i) k[i] = vertex_degree(g, i) - Rational(2);
  return k;
}

Divisor principal_generator(const WeightedGraph& g, std::size_t j) {
  const std::size_t n = g.vertex_count();
  if (j >= n) throw Error(ErrorKind::IndexOutOfRange, "vertex index");
  Divisor h(n);
  for (std::size_t i = 0; i < n; ++i) h[i] = (i == j) ? vertex_degree(g, j) : -g.weight(i, j);
  return h;
}

}  // namespace wrr
