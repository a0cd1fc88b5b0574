#include <gtest/gtest.h>

#include "support.hpp"
#include "wrr/error.hpp"
#include "wrr/graph.hpp"
#include "wrr/random_instances.hpp"

namespace wrr {
namespace {

using testing::Q;
using testing::triangle;
using testing::two_vertex;

ErrorKind build_error(std::size_t n, std::initializer_list<Edge> edges) {
  try {
    WeightedGraph::build(n, edges);
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "build succeeded";
  return ErrorKind::InvariantViolation;
}

TEST(Graph, TwoVertexBasics) {
  const WeightedGraph g = two_vertex(Q("3/2"));
  EXPECT_EQ(vertex_degree(g, 0), Q("3/2"));
  EXPECT_EQ(vertex_degree(g, 1), Q("3/2"));
  EXPECT_EQ(genus(g), Q("1/2"));
  EXPECT_EQ(canonical_divisor(g), (Divisor{Q("-1/2"), Q("-1/2")}));
  EXPECT_FALSE(g.is_integral());
  EXPECT_EQ(g.weight_denominator_lcm(), 2);
}

TEST(Graph, TriangleBasics) {
  const WeightedGraph g = triangle();
  for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(vertex_degree(g, j), Rational(2));
  EXPECT_EQ(genus(g), Rational(1));
  EXPECT_EQ(canonical_divisor(g), (Divisor{0, 0, 0}));
  EXPECT_EQ(principal_generator(g, 1), (Divisor{-1, 2, -1}));
  const EdgeMatrix p = edge_matrix(g);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(p(i, j), Rational(i == j ? 2 : -1));
}

TEST(Graph, StarCenterDegree) {
  const WeightedGraph g = WeightedGraph::build(3, {Edge{0, 1, Q("1/2")}, Edge{0, 2, Q("1/3")}});
  EXPECT_EQ(vertex_degree(g, 0), Q("5/6"));
}

TEST(Graph, GenusSamples) {
  EXPECT_EQ(genus(two_vertex(Q("1/2"))), Q("-1/2"));
  EXPECT_EQ(genus(two_vertex(Rational(1))), Rational(0));
  EXPECT_EQ(canonical_divisor(two_vertex(Q("1/2"))).degree(), Rational(-3));
}

TEST(Graph, EdgeMatrixOfTwoVertexGraph) {
  const Rational p = Q("7/3");
  const EdgeMatrix m = edge_matrix(two_vertex(p));
  EXPECT_EQ(m(0, 0), p);
  EXPECT_EQ(m(0, 1), -p);
  EXPECT_EQ(m(1, 0), -p);
  EXPECT_EQ(m(1, 1), p);
  EXPECT_EQ(principal_generator(two_vertex(p), 0), (Divisor{p, -p}));
}

TEST(Graph, ValidationErrors) {
  EXPECT_EQ(build_error(3, {Edge{0, 1, 1}}), ErrorKind::Disconnected);
  EXPECT_EQ(build_error(2, {Edge{0, 0, 1}, Edge{0, 1, 1}}), ErrorKind::LoopEdge);
  EXPECT_EQ(build_error(2, {Edge{0, 1, 0}}), ErrorKind::NonpositiveWeight);
  EXPECT_EQ(build_error(2, {Edge{0, 1, -1}}), ErrorKind::NonpositiveWeight);
  EXPECT_EQ(build_error(2, {Edge{0, 1, 1}, Edge{1, 0, 2}}), ErrorKind::DuplicateEdge);
  EXPECT_EQ(build_error(2, {Edge{0, 2, 1}}), ErrorKind::IndexOutOfRange);
}

TEST(Graph, DivisorOperations) {
  const Divisor d{Q("-1/2"), Q("3/2")};
  EXPECT_EQ(d.ceiling(), (Divisor{0, 2}));
  EXPECT_EQ((Divisor{1, -2}).ceiling(), (Divisor{1, -2}));
  EXPECT_EQ((Divisor{Q("1/3"), Q("1/6"), Q("-1/2")}).degree(), Rational(0));
  EXPECT_EQ((Divisor{Q("1/4"), Q("1/6")}).denominator_lcm(), 12);
  EXPECT_TRUE((Divisor{2, 1}).dominates(Divisor{1, 1}));
  EXPECT_FALSE((Divisor{2, 0}).dominates(Divisor{1, 1}));
  EXPECT_EQ(Divisor::unit(3, 1, Rational(5)), (Divisor{0, 5, 0}));
}

TEST(Graph, DegreeSumAndCanonicalDegree) {
  InstanceRng rng(21);
  for (int t = 0; t < 200; ++t) {
    const WeightedGraph g = random_connected_graph(rng, {static_cast<std::size_t>(rng.uniform(1, 6)), 10, 10, 3});
    Rational weight_sum;
    for (const Edge& e : g.edges()) weight_sum += e.weight;
    Rational degree_sum;
    for (std::size_t j = 0; j < g.vertex_count(); ++j) degree_sum += vertex_degree(g, j);
    EXPECT_EQ(degree_sum, Rational(2) * weight_sum);
    EXPECT_EQ(canonical_divisor(g).degree(), Rational(2) * genus(g) - Rational(2));
    // Every H_j has degree zero.
    for (std::size_t j = 0; j < g.vertex_count(); ++j) EXPECT_TRUE(principal_generator(g, j).degree().is_zero());
  }
}

TEST(Graph, RandomGraphsAreReproducible) {
  InstanceRng a(99), b(99);
  for (int t = 0; t < 20; ++t) {
    EXPECT_EQ(random_connected_graph(a, {5, 10, 10, 3}), random_connected_graph(b, {5, 10, 10, 3}));
    EXPECT_EQ(random_divisor(a, 5, 5, 10), random_divisor(b, 5, 5, 10));
  }
}

}  // namespace
}  // namespace wrr
