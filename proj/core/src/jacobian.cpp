#include "wrr/jacobian.hpp"

#include <numeric>
#include <utility>

#include "wrr/error.hpp"

namespace wrr {
namespace {

BigInt abs_value(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

void swap_rows(BigIntMatrix& a, std::size_t r1, std::size_t r2) {
  if (r1 == r2) return;
  for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(r1, c), a(r2, c));
}

void swap_cols(BigIntMatrix& a, std::size_t c1, std::size_t c2) {
  if (c1 == c2) return;
  for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, c1), a(r, c2));
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }
  std::vector<std::size_t>& parents() { return parent_; }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

std::string AbelianGroupDescription::to_string() const {
  std::string out;
  for (const auto& f : invariant_factors) {
    if (f == 1) continue;
    if (!out.empty()) out += " x ";
    out += "Z/" + f.str();
  }
  return out.empty() ? "trivial" : out;
}

std::vector<BigInt> smith_diagonal(BigIntMatrix a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw Error(ErrorKind::DimensionMismatch, "Smith form of a non-square matrix");
  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pr = n, pc = n;
      for (std::size_t r = t; r < n; ++r)
        for (std::size_t c = t; c < n; ++c)
          if (a(r, c) != 0 && (pr == n || abs_value(a(r, c)) < abs_value(a(pr, pc)))) {
            pr = r;
            pc = c;
          }
      if (pr == n) throw Error(ErrorKind::SingularMatrix, "Smith form of a singular matrix");
      swap_rows(a, t, pr);
      swap_cols(a, t, pc);

      bool clean = true;
      for (std::size_t r = t + 1; r < n; ++r) {
        const BigInt q = a(r, t) / a(t, t);
        if (q != 0)
          for (std::size_t c = t; c < n; ++c) a(r, c) -= q * a(t, c);
        if (a(r, t) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < n; ++c) {
        const BigInt q = a(t, c) / a(t, t);
        if (q != 0)
          for (std::size_t r = t; r < n; ++r) a(r, c) -= q * a(r, t);
        if (a(t, c) != 0) clean = false;
      }
      if (!clean) continue;

      // The pivot must divide the rest of the block; otherwise fold in the
      // offending row and go again.
      std::size_t bad = n;
      for (std::size_t r = t + 1; r < n && bad == n; ++r)
        for (std::size_t c = t + 1; c < n; ++c)
          if (a(r, c) % a(t, t) != 0) {
            bad = r;
            break;
          }
      if (bad == n) break;
      for (std::size_t c = t; c < n; ++c) a(t, c) += a(bad, c);
    }
  }
  std::vector<BigInt> diag(n);
  for (std::size_t i = 0; i < n; ++i) diag[i] = abs_value(a(i, i));
  return diag;
}

AbelianGroupDescription jacobian(const WeightedGraph& g, std::size_t k) {
  if (!g.is_integral()) throw Error(ErrorKind::NonIntegralWeights, "the Jacobian is computed for Z-graphs only");
  const std::size_t n = g.vertex_count();
  if (k >= n) throw Error(ErrorKind::IndexOutOfRange, "excluded index");
  const EdgeMatrix p = edge_matrix(g);
  BigIntMatrix reduced(n - 1, n - 1);
  for (std::size_t r = 0; r + 1 < n; ++r)
    for (std::size_t c = 0; c + 1 < n; ++c) reduced(r, c) = p(r < k ? r : r + 1, c < k ? c : c + 1).numerator();

  AbelianGroupDescription out;
  out.invariant_factors = smith_diagonal(std::move(reduced));
  out.order = 1;
  for (const auto& f : out.invariant_factors) out.order *= f;
  return out;
}

AbelianGroupDescription jacobian(const WeightedGraph& g) { return jacobian(g, g.vertex_count() - 1); }

Rational reduced_determinant(const WeightedGraph& g, std::size_t k) {
  const std::size_t n = g.vertex_count();
  if (k >= n) throw Error(ErrorKind::IndexOutOfRange, "excluded index");
  const EdgeMatrix p = edge_matrix(g);
  RationalMatrix reduced(n - 1, n - 1);
  for (std::size_t r = 0; r + 1 < n; ++r)
    for (std::size_t c = 0; c + 1 < n; ++c) reduced(r, c) = p(r < k ? r : r + 1, c < k ? c : c + 1);
  return determinant(reduced);
}

Rational spanning_tree_count(const WeightedGraph& g) {
  const std::size_t n = g.vertex_count();
  const std::vector<Edge> edges = g.edges();
  if (n > 12) throw Error(ErrorKind::InstanceTooLarge, "spanning tree enumeration is limited to 12 vertices");

  Rational total;
  UnionFind forest(n);
  // Include/exclude each edge in turn, keeping the chosen edges acyclic.
  auto walk = [&](auto&& self, std::size_t next, std::size_t chosen, const Rational& product) -> void {
    if (chosen + 1 == n) {
      total += product;
      return;
    }
    if (edges.size() - next < n - 1 - chosen) return;
    const Edge& e = edges[next];
    const std::size_t ru = forest.find(e.u);
    const std::size_t rv = forest.find(e.v);
    if (ru != rv) {
      forest.parents()[ru] = rv;
      self(self, next + 1, chosen + 1, product * e.weight);
      forest.parents()[ru] = ru;
    }
    self(self, next + 1, chosen, product);
  };
  walk(walk, 0, 0, Rational(1));
  return total;
}

}  // namespace wrr
