#include "wrr/cli/graph_file.hpp"

#include <sstream>
#include <vector>

#include "wrr/error.hpp"

namespace wrr::cli {
namespace {

std::string describe(ParseError::Kind kind, std::size_t line, const std::string& message) {
  std::string out = kind == ParseError::Kind::Syntax ? "syntax error" : "invalid input";
  if (line > 0) out += " at line " + std::to_string(line);
  return out + ": " + message;
}

std::vector<std::string> tokens_of(std::string_view line) {
  if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

bool parse_index(const std::string& tok, std::size_t& out) {
  if (tok.empty() || tok.size() > 9) return false;
  out = 0;
  for (char c : tok) {
    if (c < '0' || c > '9') return false;
    out = out * 10 + static_cast<std::size_t>(c - '0');
  }
  return true;
}

}  // namespace

ParseError::ParseError(Kind kind, std::size_t line, const std::string& message)
    : std::runtime_error(describe(kind, line, message)), kind_(kind), line_(line) {}

WeightedGraph parse_graph(std::string_view text) {
  std::size_t line_no = 0;
  std::size_t header_line = 0;
  std::size_t n = 0;
  std::vector<Edge> edges;
  std::vector<std::vector<bool>> seen;

  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;

    const std::vector<std::string> tok = tokens_of(line);
    if (tok.empty()) continue;

    if (header_line == 0) {
      if (tok.size() != 2 || tok[0] != "vertices") {
        throw ParseError(ParseError::Kind::Syntax, line_no, "expected 'vertices <n>'");
      }
      if (!parse_index(tok[1], n) || n == 0) {
        throw ParseError(ParseError::Kind::Syntax, line_no, "vertex count must be a positive integer");
      }
      header_line = line_no;
      seen.assign(n, std::vector<bool>(n, false));
      continue;
    }

    if (tok.size() != 4 || tok[0] != "edge") {
      throw ParseError(ParseError::Kind::Syntax, line_no, "expected 'edge <i> <j> <weight>'");
    }
    std::size_t i = 0, j = 0;
    if (!parse_index(tok[1], i) || !parse_index(tok[2], j)) {
      throw ParseError(ParseError::Kind::Syntax, line_no, "edge endpoints must be positive integers");
    }
    const auto weight = Rational::parse(tok[3]);
    if (!weight) throw ParseError(ParseError::Kind::Syntax, line_no, "malformed rational '" + tok[3] + "'");
    if (i < 1 || i > n || j < 1 || j > n) {
      throw ParseError(ParseError::Kind::Semantic, line_no, "endpoint outside 1.." + std::to_string(n));
    }
    if (i == j) throw ParseError(ParseError::Kind::Semantic, line_no, "loop at vertex " + std::to_string(i));
    if (weight->sign() <= 0) {
      throw ParseError(ParseError::Kind::Semantic, line_no, "weight " + weight->to_string() + " is not positive");
    }
    if (seen[i - 1][j - 1]) {
      throw ParseError(ParseError::Kind::Semantic, line_no,
                       "duplicate edge {" + std::to_string(i) + "," + std::to_string(j) + "}");
    }
    seen[i - 1][j - 1] = seen[j - 1][i - 1] = true;
    edges.push_back({i - 1, j - 1, *weight});
  }

  if (header_line == 0) throw ParseError(ParseError::Kind::Syntax, line_no, "missing 'vertices <n>'");
  try {
    return WeightedGraph::build(n, edges);
  } catch (const Error& e) {
    throw ParseError(ParseError::Kind::Semantic, header_line, e.what());
  }
}

Divisor parse_divisor(std::string_view text, std::size_t n) {
  std::vector<Rational> coeffs;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    for (const std::string& tok : tokens_of(line)) {
      const auto value = Rational::parse(tok);
      if (!value) throw ParseError(ParseError::Kind::Syntax, line_no, "malformed rational '" + tok + "'");
      coeffs.push_back(*value);
    }
  }
  if (coeffs.size() != n) {
    throw ParseError(ParseError::Kind::Semantic, line_no,
                     "divisor has " + std::to_string(coeffs.size()) + " coefficients, graph has " + std::to_string(n) +
                         " vertices");
  }
  return Divisor(std::move(coeffs));
}

std::string serialize_graph(const WeightedGraph& g) {
  std::string out = "vertices " + std::to_string(g.vertex_count()) + "\n";
  for (const Edge& e : g.edges()) {
    out += "edge " + std::to_string(e.u + 1) + " " + std::to_string(e.v + 1) + " " + e.weight.to_string() + "\n";
  }
  return out;
}

std::string serialize_divisor(const Divisor& d) {
  std::string out;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) out += ' ';
    out += d[i].to_string();
  }
  return out;
}

}  // namespace wrr::cli
