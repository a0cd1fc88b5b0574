#include <gtest/gtest.h>

#include "support.hpp"
#include "wrr/error.hpp"
#include "wrr/linear_equivalence.hpp"
#include "wrr/random_instances.hpp"
#include "wrr/scaling.hpp"

namespace wrr {
namespace {

using testing::Q;
using testing::triangle;
using testing::two_vertex;

const Rational kScales[] = {Rational(1), Rational(2), Rational(3), Rational(5), Q("7/3"), Q("1/2")};

TEST(ScaleGraph, Examples) {
  const WeightedGraph g = scale_graph(two_vertex(Q("3/2")), Rational(2));
  EXPECT_EQ(g, two_vertex(Rational(3)));
  EXPECT_EQ(genus(g), Rational(2));
  EXPECT_EQ(scale_graph(triangle(), Rational(1)), triangle());
  EXPECT_EQ(genus(scale_graph(triangle(), Rational(3))), Rational(7));
  EXPECT_THROW(scale_graph(triangle(), Rational(0)), Error);
  EXPECT_THROW(ScaleFactor(BigInt(-2)), Error);
}

TEST(Transform, Examples) {
  EXPECT_EQ(inverse_transform(Divisor{2, 1}, Rational(2)), (Divisor{Q("1/2"), 0}));
  const Divisor d{Q("1/3"), Q("-5/2")};
  EXPECT_EQ(transform(d, Rational(1)), d);
  EXPECT_EQ(transform(d, Rational(3)), (Divisor{Rational(3), Q("-11/2")}));
  EXPECT_EQ(inverse_transform(transform(d, Q("7/3")), Q("7/3")), d);
}

TEST(MinimalScale, Examples) {
  EXPECT_EQ(minimal_integer_scale(two_vertex(Q("3/2")), Divisor{Q("1/3"), 0}).value(), 6);
  EXPECT_EQ(minimal_integer_scale(triangle(), Divisor{1, -2, 0}).value(), 1);
  EXPECT_EQ(minimal_integer_scale(two_vertex(Q("1/2")), Divisor{0, 0}).value(), 2);
}

TEST(MinimalScale, ClearsEveryDenominator) {
  InstanceRng rng(30);
  for (int t = 0; t < 200; ++t) {
    const WeightedGraph g = random_connected_graph(rng, {static_cast<std::size_t>(rng.uniform(1, 5)), 10, 10, 3});
    const Divisor d = random_divisor(rng, g.vertex_count(), 5, 10);
    const Rational a = minimal_integer_scale(g, d).as_rational();
    EXPECT_TRUE(scale_graph(g, a).is_integral());
    EXPECT_TRUE(transform(d, a).is_integral());
    EXPECT_TRUE(transform(canonical_divisor(g) - d, a).is_integral());
  }
}

TEST(ScalingIdentities, HoldExactly) {
  InstanceRng rng(31);
  for (int t = 0; t < 200; ++t) {
    const WeightedGraph g = random_connected_graph(rng, {static_cast<std::size_t>(rng.uniform(1, 5)), 10, 10, 3});
    const std::size_t n = g.vertex_count();
    const Divisor d = random_divisor(rng, n, 5, 10);
    const Rational a = kScales[rng.uniform(0, 5)];
    const Rational b = kScales[rng.uniform(0, 5)];
    const Divisor ones = Divisor::ones(n);
    const WeightedGraph ag = scale_graph(g, a);

    EXPECT_EQ(transform(transform(d, b), a), transform(d, a * b));
    Divisor h(n);
    for (std::size_t j = 0; j < n; ++j) h += Rational(rng.uniform(-2, 2)) * principal_generator(g, j);
    EXPECT_EQ(transform(d + h, a), transform(d, a) + a * h);
    EXPECT_EQ(ceil_effective(d), ceil_effective(transform(d, a)));

    EXPECT_EQ(canonical_divisor(ag), transform(canonical_divisor(g), a) + (a - Rational(1)) * ones);
    EXPECT_EQ(canonical_divisor(ag) - transform(d, a), transform(canonical_divisor(g) - d, a));
    EXPECT_EQ(transform(d, a).degree(), a * d.degree() + (a - Rational(1)) * Rational(static_cast<std::int64_t>(n)));
    EXPECT_EQ(genus(ag), a * genus(g) + (a - Rational(1)) * Rational(static_cast<std::int64_t>(n) - 1));
  }
}

TEST(ScalingIdentities, NonemptinessTransfersToScaledGraph) {
  InstanceRng rng(32);
  for (int t = 0; t < 100; ++t) {
    const WeightedGraph g = random_connected_graph(rng, {static_cast<std::size_t>(rng.uniform(2, 4)), 6, 4, 3});
    const Divisor d = random_divisor(rng, g.vertex_count(), 4, 4);
    const Rational a = minimal_integer_scale(g, d).as_rational();
    for (const Rational& c : {a, Rational(2) * a})
      EXPECT_EQ(linsys_nonempty(g, d), linsys_nonempty(scale_graph(g, c), transform(d, c)));
  }
}

TEST(H0, Examples) {
  EXPECT_EQ(h0(two_vertex(Q("1/2")), Divisor{0, 0}), Q("3/2"));
  EXPECT_EQ(h0(two_vertex(Rational(1)), Divisor{0, 0}), Rational(1));
  EXPECT_EQ(h0(two_vertex(Rational(2)), Divisor{-1, -1}), Rational(0));
  EXPECT_EQ(h0(triangle(), Divisor{0, 0, 0}), Rational(1));
}

TEST(H0, WitnessCertifiesTheValue) {
  InstanceRng rng(33);
  for (int t = 0; t < 100; ++t) {
    const WeightedGraph g = random_connected_graph(rng, {static_cast<std::size_t>(rng.uniform(2, 4)), 10, 10, 3});
    const Divisor d = random_divisor(rng, g.vertex_count(), 5, 10);
    const H0Result r = h0_witness(g, d);
    EXPECT_EQ(r.witness.degree(), r.value);
    EXPECT_TRUE(r.witness.all_at_least(Rational(0)));
    EXPECT_FALSE(linsys_nonempty(g, d - r.witness));
  }
}

TEST(H0, IndependentOfScale) {
  InstanceRng rng(34);
  for (int t = 0; t < 60; ++t) {
    const WeightedGraph g = random_connected_graph(rng, {static_cast<std::size_t>(rng.uniform(2, 4)), 10, 10, 3});
    const Divisor d = random_divisor(rng, g.vertex_count(), 5, 10);
    const ScaleFactor a = minimal_integer_scale(g, d);
    const Rational base = h0_at_scale(g, d, a).value;
    EXPECT_EQ(h0_at_scale(g, d, ScaleFactor(a.value() * 2)).value, base);
    EXPECT_EQ(h0_at_scale(g, d, ScaleFactor(a.value() * 3)).value, base);
  }
}

TEST(H0, ScaleMustClearDenominators) {
  const WeightedGraph g = two_vertex(Q("3/2"));
  try {
    h0_at_scale(g, Divisor{0, 0}, ScaleFactor(BigInt(1)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonIntegralWeights);
  }
  try {
    h0_at_scale(g, Divisor{Q("1/3"), 0}, ScaleFactor(BigInt(2)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonIntegralDivisor);
  }
}

TEST(RiemannRoch, Examples) {
  const RRReport half = rr_report(two_vertex(Q("1/2")), Divisor{0, 0});
  EXPECT_EQ(half.h0_d, Q("3/2"));
  EXPECT_EQ(half.h0_k_minus_d, Rational(0));
  EXPECT_EQ(half.lhs, Q("3/2"));
  EXPECT_EQ(half.rhs, Q("3/2"));

  const RRReport tri = rr_report(triangle(), Divisor{0, 0, 0});
  EXPECT_EQ(tri.lhs, Rational(0));
  EXPECT_TRUE(tri.holds());

  const RRReport k2 = rr_report(two_vertex(Rational(1)), Divisor{1, 0});
  EXPECT_EQ(k2.h0_d, Rational(2));
  EXPECT_EQ(k2.h0_k_minus_d, Rational(0));
  EXPECT_EQ(k2.rhs, Rational(2));
}

TEST(RiemannRoch, HoldsOnRandomRationalGraphs) {
  InstanceRng rng(35);
  for (int t = 0; t < 100; ++t) {
    const WeightedGraph g = random_connected_graph(rng, {static_cast<std::size_t>(rng.uniform(1, 5)), 10, 10, 3});
    const Divisor d = random_divisor(rng, g.vertex_count(), 5, 10);
    const RRReport r = rr_report(g, d);
    EXPECT_TRUE(r.holds()) << d;
    EXPECT_EQ(r.rhs, d.degree() + Rational(1) - genus(g));
  }
}

}  // namespace
}  // namespace wrr
