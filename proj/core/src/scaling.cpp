#include "wrr/scaling.hpp"

#include "wrr/bn_engine.hpp"
#include "wrr/error.hpp"

namespace wrr {
namespace {

void require_positive(const Rational& a) {
  if (a.sign() <= 0) throw Error(ErrorKind::NonpositiveScale, "scale " + a.to_string() + " is not positive");
}

}  // namespace

ScaleFactor::ScaleFactor(BigInt value) : value_(std::move(value)) {
  if (value_ <= 0) throw Error(ErrorKind::NonpositiveScale, "scale " + value_.str() + " is not positive");
}

WeightedGraph scale_graph(const WeightedGraph& g, const Rational& a) {
  require_positive(a);
  std::vector<Edge> edges = g.edges();
  for (Edge& e : edges) e.weight *= a;
  return WeightedGraph::build(g.vertex_count(), edges);
}

Divisor transform(const Divisor& d, const Rational& a) {
  require_positive(a);
  Divisor out(d.size());
  const Rational shift = a - Rational(1);
  for (std::size_t i = 0; i < d.size(); ++i) out[i] = a * d[i] + shift;
  return out;
}

Divisor inverse_transform(const Divisor& d, const Rational& a) {
  require_positive(a);
  Divisor out(d.size());
  const Rational shift = a - Rational(1);
  for (std::size_t i = 0; i < d.size(); ++i) out[i] = (d[i] - shift) / a;
  return out;
}

ScaleFactor minimal_integer_scale(const WeightedGraph& g, const Divisor& d) {
  if (d.size() != g.vertex_count()) throw Error(ErrorKind::DimensionMismatch, "divisor length differs from vertex count");
  BigInt a = lcm(g.weight_denominator_lcm(), d.denominator_lcm());
  a = lcm(a, canonical_divisor(g).denominator_lcm());
  return ScaleFactor(a);
}

H0Result h0_at_scale(const WeightedGraph& g, const Divisor& d, const ScaleFactor& a) {
  if (d.size() != g.vertex_count()) throw Error(ErrorKind::DimensionMismatch, "divisor length differs from vertex count");
  const Rational ar = a.as_rational();
  const Multigraph m = to_multigraph(scale_graph(g, ar));
  const IntDivisor scaled = to_int_divisor(transform(d, ar));
  const RankResult r = h0_int_witness(m, scaled);
  Divisor witness = to_divisor(r.witness);
  witness *= Rational(1) / ar;
  return {Rational(r.h0) / ar, std::move(witness), a};
}

H0Result h0_witness(const WeightedGraph& g, const Divisor& d) {
  return h0_at_scale(g, d, minimal_integer_scale(g, d));
}

Rational h0(const WeightedGraph& g, const Divisor& d) { return h0_witness(g, d).value; }

RRReport rr_report(const WeightedGraph& g, const Divisor& d) {
  const Divisor k_minus_d = canonical_divisor(g) - d;
  const ScaleFactor a(lcm(minimal_integer_scale(g, d).value(), k_minus_d.denominator_lcm()));

  RRReport report;
  report.scale = a;
  report.h0_d = h0_at_scale(g, d, a).value;
  report.h0_k_minus_d = h0_at_scale(g, k_minus_d, a).value;
  report.degree = d.degree();
  report.genus = genus(g);
  report.lhs = report.h0_d - report.h0_k_minus_d;
  report.rhs = report.degree + Rational(1) - report.genus;
  return report;
}

}  // namespace wrr
