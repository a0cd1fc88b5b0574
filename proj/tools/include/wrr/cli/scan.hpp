#pragma once

#include <optional>
#include <ostream>
#include <vector>

#include "wrr/rational.hpp"

namespace wrr::cli {

struct ScanRow {
  Rational a;
  Rational b;
  Rational h0;
  bool nonempty = false;
  /// h0 through the scaling pipeline, filled in when verification is on.
  std::optional<Rational> pipeline_h0;
  std::optional<bool> pipeline_nonempty;

  bool agrees() const {
    return (!pipeline_h0 || *pipeline_h0 == h0) && (!pipeline_nonempty || *pipeline_nonempty == nonempty);
  }
};

/// h0 landscape of D = (a, b) on the two-vertex graph of weight p, over the
/// grid lo, lo + step, ... <= hi in both coordinates (a outer, b inner).
std::vector<ScanRow> scan2v(const Rational& p, const Rational& lo, const Rational& hi, const Rational& step,
                            bool verify);

/// Header "a,b,h0,nonempty" (plus "h0_decimal" when digits is set).
void write_scan_csv(std::ostream& out, const std::vector<ScanRow>& rows, std::optional<int> decimal_digits);

}  // namespace wrr::cli
