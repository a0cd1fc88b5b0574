#pragma once

#include <stdexcept>
#include <string>

#include "wrr/graph.hpp"
#include "wrr/rational.hpp"

namespace wrr::testing {

inline Rational Q(const std::string& text) {
  auto r = Rational::parse(text);
  if (!r) throw std::invalid_argument("bad rational literal " + text);
  return *r;
}

inline WeightedGraph two_vertex(const Rational& p) { return WeightedGraph::build(2, {Edge{0, 1, p}}); }

inline WeightedGraph triangle() {
  return WeightedGraph::build(3, {Edge{0, 1, 1}, Edge{1, 2, 1}, Edge{0, 2, 1}});
}

inline WeightedGraph path3() { return WeightedGraph::build(3, {Edge{0, 1, 1}, Edge{1, 2, 1}}); }

}  // namespace wrr::testing
