#include "wrr/cli/scan.hpp"

#include <stdexcept>

#include "wrr/linear_equivalence.hpp"
#include "wrr/oracle.hpp"
#include "wrr/scaling.hpp"

namespace wrr::cli {

std::vector<ScanRow> scan2v(const Rational& p, const Rational& lo, const Rational& hi, const Rational& step,
                            bool verify) {
  if (p.sign() <= 0) throw std::invalid_argument("p must be positive");
  if (step.sign() <= 0) throw std::invalid_argument("step must be positive");
  std::vector<Rational> axis;
  for (Rational x = lo; x <= hi; x += step) axis.push_back(x);

  const WeightedGraph g = WeightedGraph::build(2, {Edge{0, 1, p}});
  std::vector<ScanRow> rows;
  rows.reserve(axis.size() * axis.size());
  for (const Rational& a : axis) {
    for (const Rational& b : axis) {
      ScanRow row{a, b, two_vertex_h0(a, b, p), two_vertex_nonempty(a, b, p), std::nullopt, std::nullopt};
      if (verify) {
        const Divisor d{a, b};
        row.pipeline_h0 = h0(g, d);
        row.pipeline_nonempty = linsys_nonempty(g, d);
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

void write_scan_csv(std::ostream& out, const std::vector<ScanRow>& rows, std::optional<int> decimal_digits) {
  out << "a,b,h0,nonempty";
  if (decimal_digits) out << ",h0_decimal";
  out << '\n';
  for (const auto& row : rows) {
    out << row.a << ',' << row.b << ',' << row.h0 << ',' << (row.nonempty ? "true" : "false");
    if (decimal_digits) out << ',' << row.h0.to_decimal(*decimal_digits);
    out << '\n';
  }
}

}  // namespace wrr::cli
