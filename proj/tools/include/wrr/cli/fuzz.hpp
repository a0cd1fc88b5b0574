#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

namespace wrr::cli {

struct FuzzConfig {
  std::uint64_t seed = 42;
  std::size_t trials = 100;
  std::size_t max_n = 5;
  std::int64_t max_weight_num = 10;
  std::int64_t max_weight_den = 10;
  std::int64_t max_coeff_num = 5;
  std::int64_t max_coeff_den = 10;
};

struct CheckTally {
  std::size_t run = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
};

struct FuzzFailure {
  std::size_t trial = 0;
  std::string check;
  std::string detail;
  std::string graph_text;
  std::string divisor_text;
  /// An exception that points at a bug in the library rather than a finding.
  bool internal = false;
};

struct FuzzSummary {
  FuzzConfig config;
  CheckTally rr_identity;
  CheckTally scale_independence;
  CheckTally equivalence_invariance;
  CheckTally oracle_agreement;
  std::optional<FuzzFailure> first_failure;

  std::size_t discrepancies() const {
    return rr_identity.failed + scale_independence.failed + equivalence_invariance.failed + oracle_agreement.failed;
  }
  /// Deterministic plain-text report; byte-identical for equal configs.
  std::string render() const;
};

/// Each trial draws a connected rational graph and divisor and checks the
/// Riemann-Roch identity, h0 at scale a versus 2a, and h0 invariance under
/// adding a random principal divisor. Every fourth trial is drawn as an
/// integer instance (weights <= 3, |d_i| <= 4, n <= 4) and additionally
/// compared against the lattice brute-force oracle.
FuzzSummary fuzz(const FuzzConfig& config);

}  // namespace wrr::cli
