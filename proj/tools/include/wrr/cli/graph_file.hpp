#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "wrr/graph.hpp"

// Text formats.
//
//   vertices <n>
//   edge <i> <j> <rational>      (1-based vertices, one line per edge)
//
// '#' starts a comment and blank lines are ignored. A rational is an optional
// '-', digits, and optionally '/' and digits. Divisors are whitespace-separated
// rationals, one per vertex.

namespace wrr::cli {

class ParseError : public std::runtime_error {
 public:
  enum class Kind { Syntax, Semantic };

  ParseError(Kind kind, std::size_t line, const std::string& message);

  Kind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }

 private:
  Kind kind_;
  std::size_t line_;
};

WeightedGraph parse_graph(std::string_view text);
Divisor parse_divisor(std::string_view text, std::size_t n);

/// Canonical form: edges in row-major order, weights in lowest terms.
std::string serialize_graph(const WeightedGraph& g);
std::string serialize_divisor(const Divisor& d);

}  // namespace wrr::cli
