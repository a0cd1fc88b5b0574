#include "wrr/bn_engine.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <ostream>
#include <string>
#include <unordered_set>

#include "wrr/error.hpp"

namespace wrr {
namespace {

// Edge multiplicities and chip counts are kept well inside int64 so that the
// firing arithmetic below cannot overflow.
constexpr std::int64_t kMaxMultiplicity = std::int64_t{1} << 40;
constexpr std::int64_t kMaxChips = std::int64_t{1} << 56;

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw Error(ErrorKind::Overflow, "chip count overflow");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw Error(ErrorKind::Overflow, "chip count overflow");
  return out;
}

void check_shape(const Multigraph& m, const IntDivisor& d) {
  if (d.size() != m.vertex_count()) throw Error(ErrorKind::DimensionMismatch, "divisor length differs from vertex count");
  for (auto c : d.coeffs()) {
    if (c > kMaxChips || c < -kMaxChips) throw Error(ErrorKind::Overflow, "divisor coefficient too large");
  }
}

void check_sink(const Multigraph& m, std::size_t q) {
  if (q >= m.vertex_count()) throw Error(ErrorKind::IndexOutOfRange, "sink index");
}

struct VectorHash {
  std::size_t operator()(const std::vector<std::int64_t>& v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

// Burns from q and records, for every vertex, how many edges join it to the
// burnt set. Assumes D is nonnegative away from q.
std::vector<bool> burn(const Multigraph& m, const IntDivisor& d, std::size_t q,
                       std::vector<std::int64_t>& edges_to_burnt) {
  const std::size_t n = m.vertex_count();
  std::vector<bool> burnt(n, false);
  edges_to_burnt.assign(n, 0);
  std::vector<std::size_t> frontier{q};
  burnt[q] = true;
  while (!frontier.empty()) {
    const std::size_t b = frontier.back();
    frontier.pop_back();
    for (std::size_t v = 0; v < n; ++v) {
      if (burnt[v] || m.multiplicity(v, b) == 0) continue;
      edges_to_burnt[v] += m.multiplicity(v, b);
      if (edges_to_burnt[v] > d[v]) {
        burnt[v] = true;
        frontier.push_back(v);
      }
    }
  }
  return burnt;
}

// Borrow at every vertex other than q just enough times that all of them end
// up nonnegative: m = ceil(P_q^{-1} (deg - d)) gives d + P_q m >= 0.
void normalize_away_from_q(const Multigraph& m, IntDivisor& d, std::vector<std::int64_t>& firing,
                           std::size_t q) {
  const std::size_t n = m.vertex_count();
  bool needed = false;
  for (std::size_t v = 0; v < n; ++v)
    if (v != q && d[v] < 0) needed = true;
  if (!needed) return;

  const BigIntMatrix& adj = m.reduced_adjugate(q);
  const BigInt& det = m.reduced_determinant(q);
  auto full = [q](std::size_t r) { return r < q ? r : r + 1; };

  std::vector<BigInt> rhs(n - 1);
  for (std::size_t r = 0; r + 1 < n; ++r) rhs[r] = BigInt(m.degree(full(r))) - d[full(r)];
  std::vector<BigInt> borrow(n, BigInt(0));
  for (std::size_t r = 0; r + 1 < n; ++r) {
    BigInt y = 0;
    for (std::size_t c = 0; c + 1 < n; ++c) y += adj(r, c) * rhs[c];
    borrow[full(r)] = -floor_div(-y, det);
  }

  for (std::size_t v = 0; v < n; ++v) {
    // Borrowing is the inverse of firing.
    BigInt value = BigInt(d[v]) + BigInt(m.degree(v)) * borrow[v];
    for (std::size_t u = 0; u < n; ++u) {
      if (u != v) value -= BigInt(m.multiplicity(v, u)) * borrow[u];
    }
    d[v] = to_int64_checked(value);
    firing[v] = to_int64_checked(BigInt(firing[v]) - borrow[v]);
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (v != q && d[v] < 0) throw Error(ErrorKind::InvariantViolation, "normalization left a negative vertex");
  }
}

}  // namespace

std::int64_t IntDivisor::degree() const {
  std::int64_t total = 0;
  for (auto c : coeffs_) total = checked_add(total, c);
  return total;
}

bool IntDivisor::is_effective() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::int64_t c) { return c >= 0; });
}

IntDivisor& IntDivisor::operator+=(const IntDivisor& o) {
  if (o.size() != size()) throw Error(ErrorKind::DimensionMismatch, "divisor lengths differ");
  for (std::size_t i = 0; i < size(); ++i) coeffs_[i] = checked_add(coeffs_[i], o.coeffs_[i]);
  return *this;
}

IntDivisor& IntDivisor::operator-=(const IntDivisor& o) {
  if (o.size() != size()) throw Error(ErrorKind::DimensionMismatch, "divisor lengths differ");
  for (std::size_t i = 0; i < size(); ++i) coeffs_[i] = checked_add(coeffs_[i], -o.coeffs_[i]);
  return *this;
}

std::ostream& operator<<(std::ostream& os, const IntDivisor& d) {
  os << '(';
  for (std::size_t i = 0; i < d.size(); ++i) os << (i ? ", " : "") << d[i];
  return os << ')';
}

Divisor to_divisor(const IntDivisor& d) {
  Divisor out(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) out[i] = Rational(d[i]);
  return out;
}

IntDivisor to_int_divisor(const Divisor& d) {
  IntDivisor out(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (!d[i].is_integer()) {
      throw Error(ErrorKind::NonIntegralDivisor, "coefficient " + d[i].to_string() + " at vertex " + std::to_string(i + 1));
    }
    out[i] = d[i].to_int64();
  }
  return out;
}

Multigraph Multigraph::from_graph(const WeightedGraph& g) {
  if (!g.is_integral()) throw Error(ErrorKind::NonIntegralWeights, "multigraph view needs integral edge weights");
  Multigraph m;
  const std::size_t n = g.vertex_count();
  m.n_ = n;
  m.mult_.assign(n * n, 0);
  m.degree_.assign(n, 0);
  for (const Edge& e : g.edges()) {
    const std::int64_t w = e.weight.to_int64();
    if (w > kMaxMultiplicity) throw Error(ErrorKind::Overflow, "edge multiplicity too large");
    m.mult_[e.u * n + e.v] = w;
    m.mult_[e.v * n + e.u] = w;
    m.degree_[e.u] += w;
    m.degree_[e.v] += w;
  }
  m.adjugate_.reserve(n);
  m.determinant_.reserve(n);
  for (std::size_t q = 0; q < n; ++q) {
    BigIntMatrix reduced(n - 1, n - 1);
    for (std::size_t r = 0; r + 1 < n; ++r) {
      const std::size_t vr = r < q ? r : r + 1;
      for (std::size_t c = 0; c + 1 < n; ++c) {
        const std::size_t vc = c < q ? c : c + 1;
        reduced(r, c) = vr == vc ? BigInt(m.degree_[vr]) : BigInt(-m.mult_[vr * n + vc]);
      }
    }
    FractionFreeSolution sol = bareiss_solve(std::move(reduced), BigIntMatrix::identity(n - 1));
    if (sol.det <= 0) throw Error(ErrorKind::InvariantViolation, "reduced Laplacian determinant is not positive");
    m.determinant_.push_back(std::move(sol.det));
    m.adjugate_.push_back(std::move(sol.scaled));
  }
  return m;
}

std::int64_t Multigraph::genus() const {
  std::int64_t edges = 0;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j) edges += multiplicity(i, j);
  return edges - static_cast<std::int64_t>(n_) + 1;
}

IntDivisor Multigraph::canonical() const {
  IntDivisor k(n_);
  for (std::size_t v = 0; v < n_; ++v) k[v] = degree_[v] - 2;
  return k;
}

Multigraph to_multigraph(const WeightedGraph& g) { return Multigraph::from_graph(g); }

WeightedGraph to_weighted_graph(const Multigraph& m) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < m.vertex_count(); ++i)
    for (std::size_t j = i + 1; j < m.vertex_count(); ++j)
      if (m.multiplicity(i, j) > 0) edges.push_back({i, j, Rational(m.multiplicity(i, j))});
  return WeightedGraph::build(m.vertex_count(), edges);
}

std::vector<std::size_t> dhar_burn(const Multigraph& m, const IntDivisor& d, std::size_t q) {
  check_shape(m, d);
  check_sink(m, q);
  for (std::size_t v = 0; v < d.size(); ++v) {
    if (v != q && d[v] < 0) {
      throw Error(ErrorKind::NegativeAwayFromQ, "vertex " + std::to_string(v + 1) + " holds " + std::to_string(d[v]));
    }
  }
  std::vector<std::int64_t> edges_to_burnt;
  const std::vector<bool> burnt = burn(m, d, q, edges_to_burnt);
  std::vector<std::size_t> unburnt;
  for (std::size_t v = 0; v < burnt.size(); ++v)
    if (!burnt[v]) unburnt.push_back(v);
  return unburnt;
}

bool is_q_reduced(const Multigraph& m, const IntDivisor& d, std::size_t q) {
  check_shape(m, d);
  check_sink(m, q);
  for (std::size_t v = 0; v < d.size(); ++v)
    if (v != q && d[v] < 0) return false;
  return dhar_burn(m, d, q).empty();
}

QReduction q_reduce(const Multigraph& m, const IntDivisor& d, std::size_t q) {
  check_shape(m, d);
  check_sink(m, q);
  const std::size_t n = m.vertex_count();
  QReduction out{d, std::vector<std::int64_t>(n, 0)};
  if (n == 1) return out;

  IntDivisor& cur = out.reduced;
  normalize_away_from_q(m, cur, out.firing, q);

  std::vector<std::int64_t> edges_to_burnt;
  for (;;) {
    const std::vector<bool> burnt = burn(m, cur, q, edges_to_burnt);
    // Fire the unburnt set as many times as it stays nonnegative.
    std::int64_t times = std::numeric_limits<std::int64_t>::max();
    bool any = false;
    for (std::size_t v = 0; v < n; ++v) {
      if (burnt[v]) continue;
      any = true;
      if (edges_to_burnt[v] > 0) times = std::min(times, cur[v] / edges_to_burnt[v]);
    }
    if (!any) break;
    if (times < 1 || times == std::numeric_limits<std::int64_t>::max()) {
      throw Error(ErrorKind::InvariantViolation, "unburnt set cannot fire");
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (!burnt[v]) {
        cur[v] -= checked_mul(times, edges_to_burnt[v]);
        out.firing[v] = checked_add(out.firing[v], times);
      } else {
        std::int64_t gained = 0;
        for (std::size_t u = 0; u < n; ++u)
          if (!burnt[u]) gained += m.multiplicity(v, u);
        cur[v] = checked_add(cur[v], checked_mul(times, gained));
      }
    }
  }
  return out;
}

EquivalenceCertificate certificate(const QReduction& reduction, std::size_t q) {
  EquivalenceCertificate cert;
  cert.excluded = q;
  for (std::size_t v = 0; v < reduction.firing.size(); ++v) {
    if (v == q) continue;
    cert.m.emplace_back(-BigInt(reduction.firing[v]));
  }
  return cert;
}

bool linsys_nonempty_int(const Multigraph& m, const IntDivisor& d, std::size_t q) {
  if (d.degree() < 0) return false;
  return q_reduce(m, d, q).reduced[q] >= 0;
}

std::vector<IntDivisor> linear_system(const Multigraph& m, const IntDivisor& d, std::size_t limit) {
  check_shape(m, d);
  const std::size_t n = m.vertex_count();
  if (d.degree() < 0) return {};
  const std::size_t q = n - 1;
  const QReduction red = q_reduce(m, d, q);
  if (red.reduced[q] < 0) return {};
  if (n > 16) throw Error(ErrorKind::InstanceTooLarge, "linear system walk supports at most 16 vertices");

  // Chip change caused by firing each nonempty proper subset once.
  const std::size_t masks = (std::size_t{1} << n) - 1;
  std::vector<std::vector<std::int64_t>> delta;
  delta.reserve(masks);
  for (std::size_t s = 1; s < masks; ++s) {
    std::vector<std::int64_t> change(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
      const bool in_v = (s >> v) & 1U;
      for (std::size_t u = 0; u < n; ++u) {
        if (((s >> u) & 1U) == in_v) continue;
        change[v] += in_v ? -m.multiplicity(v, u) : m.multiplicity(v, u);
      }
    }
    delta.push_back(std::move(change));
  }

  std::unordered_set<std::vector<std::int64_t>, VectorHash> seen;
  std::deque<std::vector<std::int64_t>> queue;
  std::vector<std::int64_t> start(red.reduced.coeffs().begin(), red.reduced.coeffs().end());
  seen.insert(start);
  queue.push_back(std::move(start));
  std::vector<std::int64_t> next(n);
  while (!queue.empty()) {
    const std::vector<std::int64_t> cur = std::move(queue.front());
    queue.pop_front();
    for (const auto& change : delta) {
      bool effective = true;
      for (std::size_t v = 0; v < n && effective; ++v) {
        next[v] = cur[v] + change[v];
        effective = next[v] >= 0;
      }
      if (!effective || seen.contains(next)) continue;
      if (seen.size() >= limit) {
        throw Error(ErrorKind::InstanceTooLarge, "linear system has more than " + std::to_string(limit) + " members");
      }
      seen.insert(next);
      queue.push_back(next);
    }
  }

  std::vector<IntDivisor> out;
  out.reserve(seen.size());
  for (const auto& v : seen) out.emplace_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Branch and bound over one coordinate at a time. A threshold t_d only matters
// at 0 or at some point's d-th coordinate; fixing it leaves the points with
// p_d > t_d to be covered by the remaining coordinates.
class CoverSearch {
 public:
  CoverSearch(std::span<const std::vector<std::int64_t>> points, std::size_t dim)
      : points_(points), dim_(dim), current_(dim, 0) {}

  ThresholdCover run() {
    best_.thresholds.assign(dim_, 0);
    best_.total = std::numeric_limits<std::int64_t>::max();
    if (points_.empty()) {
      best_.total = 0;
      return best_;
    }
    // Seed the bound with the best single-coordinate cover.
    for (std::size_t d = 0; d < dim_; ++d) {
      std::int64_t top = 0;
      for (const auto& p : points_) top = std::max(top, p[d]);
      if (top < best_.total) {
        best_.total = top;
        best_.thresholds.assign(dim_, 0);
        best_.thresholds[d] = top;
      }
    }
    std::vector<std::uint32_t> all(points_.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<std::uint32_t>(i);
    std::vector<std::size_t> dims(dim_);
    for (std::size_t d = 0; d < dim_; ++d) dims[d] = d;
    search(all, dims, 0);
    return best_;
  }

 private:
  std::int64_t coord(std::uint32_t p, std::size_t d) const { return points_[p][d]; }

  void record(std::int64_t total) {
    best_.total = total;
    best_.thresholds = current_;
  }

  void search(std::vector<std::uint32_t>& pts, const std::vector<std::size_t>& dims, std::int64_t base) {
    if (pts.empty()) {
      if (base < best_.total) record(base);
      return;
    }
    if (dims.size() == 1) {
      std::int64_t top = 0;
      for (auto p : pts) top = std::max(top, coord(p, dims[0]));
      if (base + top < best_.total) {
        current_[dims[0]] = top;
        record(base + top);
        current_[dims[0]] = 0;
      }
      return;
    }

    // Branch on the coordinate with the fewest distinct values.
    std::size_t pick = 0;
    std::size_t fewest = std::numeric_limits<std::size_t>::max();
    std::vector<std::int64_t> values;
    for (std::size_t k = 0; k < dims.size(); ++k) {
      values.clear();
      for (auto p : pts) values.push_back(coord(p, dims[k]));
      std::sort(values.begin(), values.end());
      const auto distinct = static_cast<std::size_t>(std::unique(values.begin(), values.end()) - values.begin());
      if (distinct < fewest) {
        fewest = distinct;
        pick = k;
      }
    }
    const std::size_t d = dims[pick];
    std::vector<std::size_t> rest;
    for (std::size_t k = 0; k < dims.size(); ++k)
      if (k != pick) rest.push_back(dims[k]);

    std::sort(pts.begin(), pts.end(), [&](std::uint32_t a, std::uint32_t b) { return coord(a, d) > coord(b, d); });

    // bound[r]: a lower bound on covering the first r points with `rest`; exact
    // when one coordinate remains.
    std::vector<std::int64_t> bound(pts.size() + 1, 0);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      std::int64_t need = std::numeric_limits<std::int64_t>::max();
      for (auto e : rest) need = std::min(need, coord(pts[i], e));
      bound[i + 1] = std::max(bound[i], need);
    }

    // Thresholds for d in increasing order: 0, then each distinct value. The
    // points left uncovered always form a prefix of `pts`.
    std::size_t remaining = pts.size();
    std::int64_t t = 0;
    for (;;) {
      while (remaining > 0 && coord(pts[remaining - 1], d) <= t) --remaining;
      if (base + t >= best_.total) break;
      if (base + t + bound[remaining] < best_.total) {
        current_[d] = t;
        if (rest.size() == 1) {
          current_[rest[0]] = bound[remaining];
          record(base + t + bound[remaining]);
          current_[rest[0]] = 0;
        } else {
          std::vector<std::uint32_t> sub(pts.begin(), pts.begin() + static_cast<std::ptrdiff_t>(remaining));
          search(sub, rest, base + t);
        }
        current_[d] = 0;
      }
      if (remaining == 0) break;
      t = coord(pts[remaining - 1], d);
    }
  }

  std::span<const std::vector<std::int64_t>> points_;
  std::size_t dim_;
  std::vector<std::int64_t> current_;
  ThresholdCover best_;
};

}  // namespace

ThresholdCover minimum_threshold_cover(std::span<const std::vector<std::int64_t>> points, std::size_t dim) {
  for (const auto& p : points) {
    if (p.size() != dim) throw Error(ErrorKind::DimensionMismatch, "cover point length");
  }
  return CoverSearch(points, dim).run();
}

RankResult h0_int_witness(const Multigraph& m, const IntDivisor& d) {
  check_shape(m, d);
  const std::size_t n = m.vertex_count();
  const std::vector<IntDivisor> members = linear_system(m, d);
  if (members.empty()) return {0, IntDivisor(n)};

  std::vector<std::vector<std::int64_t>> points;
  points.reserve(members.size());
  for (const auto& member : members) {
    std::vector<std::int64_t> p(member.coeffs().begin(), member.coeffs().end());
    for (auto& x : p) x += 1;
    points.push_back(std::move(p));
  }
  ThresholdCover cover = minimum_threshold_cover(points, n);
  RankResult result{cover.total, IntDivisor(std::move(cover.thresholds))};
  if (linsys_nonempty_int(m, d - result.witness, n - 1)) {
    throw Error(ErrorKind::InvariantViolation, "h0 witness does not empty the linear system");
  }
  return result;
}

std::int64_t h0_int(const Multigraph& m, const IntDivisor& d) { return h0_int_witness(m, d).h0; }

std::int64_t rank_bn(const Multigraph& m, const IntDivisor& d) { return h0_int(m, d) - 1; }

RankResult rank_bn_graded(const Multigraph& m, const IntDivisor& d) {
  check_shape(m, d);
  const std::size_t n = m.vertex_count();
  const std::size_t q = n - 1;
  const std::int64_t limit = std::max<std::int64_t>(0, d.degree() + 1);
  IntDivisor e(n);

  // Lexicographic walk over effective E of degree t.
  auto first_emptying = [&](auto&& self, std::size_t pos, std::int64_t left) -> bool {
    if (pos + 1 == n) {
      e[pos] = left;
      return !linsys_nonempty_int(m, d - e, q);
    }
    for (std::int64_t c = 0; c <= left; ++c) {
      e[pos] = c;
      if (self(self, pos + 1, left - c)) return true;
    }
    e[pos] = 0;
    return false;
  };

  for (std::int64_t t = 0; t <= limit; ++t) {
    if (first_emptying(first_emptying, 0, t)) return {t, e};
  }
  throw Error(ErrorKind::InvariantViolation, "no effective divisor of degree deg(D)+1 empties |D|");
}

}  // namespace wrr
