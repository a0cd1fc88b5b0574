#include "wrr/cli/fuzz.hpp"

#include <exception>
#include <sstream>
#include <string>

#include "wrr/cli/graph_file.hpp"
#include "wrr/error.hpp"
#include "wrr/linear_equivalence.hpp"
#include "wrr/oracle.hpp"
#include "wrr/random_instances.hpp"
#include "wrr/scaling.hpp"

namespace wrr::cli {
namespace {

constexpr std::size_t kIntegerCadence = 4;

struct Instance {
  WeightedGraph graph;
  Divisor divisor;
  bool integral;
};

Instance draw(InstanceRng& rng, const FuzzConfig& config, std::size_t trial) {
  if (trial % kIntegerCadence == kIntegerCadence - 1) {
    const auto n = static_cast<std::size_t>(rng.uniform(2, 4));
    GraphParams params{n, 3, 1, 3};
    WeightedGraph g = random_connected_graph(rng, params);
    Divisor d = random_divisor(rng, n, 4, 1);
    return {std::move(g), std::move(d), true};
  }
  const auto n = static_cast<std::size_t>(rng.uniform(2, static_cast<std::int64_t>(config.max_n)));
  GraphParams params{n, config.max_weight_num, config.max_weight_den, 3};
  WeightedGraph g = random_connected_graph(rng, params);
  Divisor d = random_divisor(rng, n, config.max_coeff_num, config.max_coeff_den);
  return {std::move(g), std::move(d), false};
}

Divisor random_principal(InstanceRng& rng, const WeightedGraph& g) {
  Divisor h(g.vertex_count());
  for (std::size_t j = 0; j < g.vertex_count(); ++j) {
    const std::int64_t m = rng.uniform(-2, 2);
    if (m != 0) h += Rational(m) * principal_generator(g, j);
  }
  return h;
}

void render_tally(std::ostringstream& out, const char* name, const CheckTally& t) {
  out << name << ": run=" << t.run << " failed=" << t.failed << " skipped=" << t.skipped << '\n';
}

}  // namespace

FuzzSummary fuzz(const FuzzConfig& config) {
  FuzzSummary summary;
  summary.config = config;
  InstanceRng rng(config.seed);

  for (std::size_t trial = 0; trial < config.trials; ++trial) {
    Instance inst = draw(rng, config, trial);
    // Drawn up front so the stream does not depend on which checks fail.
    const Divisor h = random_principal(rng, inst.graph);

    std::string current = "generate";
    auto fail = [&](CheckTally& tally, const std::string& detail, bool internal) {
      ++tally.failed;
      if (!summary.first_failure) {
        summary.first_failure =
            FuzzFailure{trial, current, detail, serialize_graph(inst.graph), serialize_divisor(inst.divisor), internal};
      }
    };
    // Runs one check; resource limits count as skips, library errors as failures.
    auto run = [&](const char* name, CheckTally& tally, auto&& body) {
      current = name;
      ++tally.run;
      try {
        body();
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::InstanceTooLarge) {
          --tally.run;
          ++tally.skipped;
          return;
        }
        fail(tally, e.what(), e.is_internal());
      } catch (const std::exception& e) {
        fail(tally, e.what(), true);
      }
    };

    run("rr-identity", summary.rr_identity, [&] {
      const RRReport r = rr_report(inst.graph, inst.divisor);
      if (!r.holds()) fail(summary.rr_identity, "lhs=" + r.lhs.to_string() + " rhs=" + r.rhs.to_string(), false);
    });
    run("scale-independence", summary.scale_independence, [&] {
      const ScaleFactor a = minimal_integer_scale(inst.graph, inst.divisor);
      const Rational at_a = h0_at_scale(inst.graph, inst.divisor, a).value;
      const Rational at_2a = h0_at_scale(inst.graph, inst.divisor, ScaleFactor(a.value() * 2)).value;
      if (at_a != at_2a) {
        fail(summary.scale_independence, "a=" + a.value().str() + " h0=" + at_a.to_string() +
                                             " 2a gives " + at_2a.to_string(), false);
      }
    });
    run("equivalence-invariance", summary.equivalence_invariance, [&] {
      const Rational before = h0(inst.graph, inst.divisor);
      const Rational after = h0(inst.graph, inst.divisor + h);
      if (before != after) {
        fail(summary.equivalence_invariance, "h0(D)=" + before.to_string() + " h0(D+H)=" + after.to_string() +
                                                 " H=" + serialize_divisor(h), false);
      }
    });
    if (inst.integral) {
      run("oracle-agreement", summary.oracle_agreement, [&] {
        const Rational engine = h0(inst.graph, inst.divisor);
        const Rational brute(brute_h0_int(inst.graph, inst.divisor));
        const bool empty_engine = !linsys_nonempty(inst.graph, inst.divisor);
        const bool empty_brute = brute_linsys_empty_int(inst.graph, inst.divisor);
        if (engine != brute || empty_engine != empty_brute) {
          fail(summary.oracle_agreement, "h0 engine=" + engine.to_string() + " brute=" + brute.to_string() +
                                             " empty engine=" + (empty_engine ? "yes" : "no") +
                                             " brute=" + (empty_brute ? "yes" : "no"), false);
        }
      });
    }
  }
  return summary;
}

std::string FuzzSummary::render() const {
  std::ostringstream out;
  out << "seed=" << config.seed << " trials=" << config.trials << " max_n=" << config.max_n
      << " weights<=" << config.max_weight_num << '/' << config.max_weight_den << " coefficients<="
      << config.max_coeff_num << '/' << config.max_coeff_den << '\n';
  render_tally(out, "rr-identity", rr_identity);
  render_tally(out, "scale-independence", scale_independence);
  render_tally(out, "equivalence-invariance", equivalence_invariance);
  render_tally(out, "oracle-agreement", oracle_agreement);
  out << "discrepancies=" << discrepancies() << '\n';
  if (first_failure) {
    const FuzzFailure& f = *first_failure;
    out << "first failure: trial " << f.trial << " check " << f.check << (f.internal ? " (internal)" : "") << '\n'
        << "  " << f.detail << '\n'
        << "reproducer (seed " << config.seed << ", trial " << f.trial << "):\n"
        << "--- graph\n"
        << f.graph_text << "--- divisor\n"
        << f.divisor_text << '\n';
  }
  return out.str();
}

}  // namespace wrr::cli
