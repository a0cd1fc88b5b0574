#include "wrr/cli/commands.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "wrr/bn_engine.hpp"
#include "wrr/cli/fuzz.hpp"
#include "wrr/cli/graph_file.hpp"
#include "wrr/cli/scan.hpp"
#include "wrr/error.hpp"
#include "wrr/jacobian.hpp"
#include "wrr/linear_equivalence.hpp"
#include "wrr/oracle.hpp"
#include "wrr/scaling.hpp"

namespace wrr::cli {
namespace {

/// Input problem detected by the CLI itself (unreadable file, bad flag value).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/// What has been loaded so far, for the reproducer on internal errors.
struct Context {
  std::string graph_text;
  std::vector<std::string> divisor_texts;
};

struct Options {
  std::string graph;
  std::string divisor;
  std::string other;
  std::optional<std::size_t> k;
  std::optional<std::size_t> q;
  std::optional<int> decimal;
  bool verify = false;
  FuzzConfig fuzz;
  std::string p;
  std::string lo = "-3";
  std::string hi = "3";
  std::string step = "1/4";
};

class Session {
 public:
  Session(const Options& opt, std::ostream& out) : opt_(opt), out_(out) {}

  Context& context() { return ctx_; }

  WeightedGraph graph() {
    if (opt_.graph.empty()) throw UsageError("a graph file is required");
    ctx_.graph_text = read_file(opt_.graph);
    try {
      return parse_graph(ctx_.graph_text);
    } catch (const ParseError& e) {
      throw InputError(opt_.graph + ": " + e.what());
    }
  }

  /// An existing file path is read; anything else is an inline list.
  Divisor divisor(const std::string& arg, std::size_t n) {
    if (arg.empty()) throw UsageError("a divisor is required");
    std::error_code ec;
    const bool is_file = std::filesystem::is_regular_file(arg, ec);
    const std::string text = is_file ? read_file(arg) : arg;
    ctx_.divisor_texts.push_back(text);
    try {
      return parse_divisor(text, n);
    } catch (const ParseError& e) {
      throw InputError((is_file ? arg : std::string("divisor")) + ": " + e.what());
    }
  }

  /// 1-based flag value to a 0-based vertex, defaulting to v_n.
  std::size_t vertex(const std::optional<std::size_t>& flag, std::size_t n, const char* name) const {
    if (!flag) return n - 1;
    if (*flag < 1 || *flag > n) {
      throw UsageError(std::string("--") + name + " must lie in 1.." + std::to_string(n));
    }
    return *flag - 1;
  }

  void decimal_column(const Rational& x) {
    if (opt_.decimal) out_ << ' ' << x.to_decimal(*opt_.decimal);
  }

  int info();
  int h0_cmd();
  int rank();
  int equiv();
  int reduce();
  int rr_check();
  int jacobian_cmd();
  int oracle_verify();
  int scan();
  int fuzz_cmd();

 private:
  const Options& opt_;
  std::ostream& out_;
  Context ctx_;
};

int Session::info() {
  const WeightedGraph g = graph();
  const std::size_t n = g.vertex_count();
  out_ << "vertices=" << n << '\n' << "edges=" << g.edges().size() << '\n';
  out_ << "genus=" << genus(g);
  decimal_column(genus(g));
  out_ << '\n' << "canonical=" << serialize_divisor(canonical_divisor(g)) << '\n';
  Divisor degrees(n);
  for (std::size_t i = 0; i < n; ++i) degrees[i] = vertex_degree(g, i);
  out_ << "degrees=" << serialize_divisor(degrees) << '\n';
  out_ << "integral=" << (g.is_integral() ? "true" : "false") << '\n';
  out_ << "weight_denominator_lcm=" << g.weight_denominator_lcm() << '\n';
  const std::size_t k = vertex(opt_.k, n, "k");
  out_ << "det_reduced=" << reduced_determinant(g, k) << '\n';
  return exit_code::ok;
}

int Session::h0_cmd() {
  const WeightedGraph g = graph();
  const Divisor d = divisor(opt_.divisor, g.vertex_count());
  const H0Result r = h0_witness(g, d);
  out_ << r.value;
  decimal_column(r.value);
  out_ << '\n';
  if (opt_.verify) {
    out_ << "witness=" << serialize_divisor(r.witness) << '\n' << "scale=" << r.scale.value() << '\n';
    if (r.witness.degree() != r.value || !r.witness.all_at_least(Rational(0)) || linsys_nonempty(g, d - r.witness)) {
      throw Error(ErrorKind::InvariantViolation, "h0 witness does not empty the linear system");
    }
  }
  return exit_code::ok;
}

int Session::rank() {
  const WeightedGraph g = graph();
  const Divisor d = divisor(opt_.divisor, g.vertex_count());
  const Multigraph m = to_multigraph(g);
  out_ << rank_bn(m, to_int_divisor(d)) << '\n';
  return exit_code::ok;
}

int Session::equiv() {
  const WeightedGraph g = graph();
  const std::size_t n = g.vertex_count();
  const Divisor d1 = divisor(opt_.divisor, n);
  const Divisor d2 = divisor(opt_.other, n);
  const auto cert = decompose_principal(g, d1 - d2, vertex(opt_.k, n, "k"));
  if (!cert) {
    out_ << "equivalent=false\n";
    return exit_code::finding;
  }
  out_ << "equivalent=true\n" << "excluded=" << cert->excluded + 1 << '\n' << "m=";
  for (std::size_t i = 0; i < cert->m.size(); ++i) out_ << (i ? " " : "") << cert->m[i];
  out_ << '\n';
  return exit_code::ok;
}

int Session::reduce() {
  const WeightedGraph g = graph();
  const std::size_t n = g.vertex_count();
  const Divisor d = divisor(opt_.divisor, n);
  const Multigraph m = to_multigraph(g);
  const std::size_t q = vertex(opt_.q, n, "q");
  const QReduction red = q_reduce(m, to_int_divisor(d), q);
  if (!is_q_reduced(m, red.reduced, q)) throw Error(ErrorKind::InvariantViolation, "q_reduce output is not q-reduced");
  out_ << "reduced=" << serialize_divisor(to_divisor(red.reduced)) << '\n' << "firing=";
  for (std::size_t i = 0; i < n; ++i) out_ << (i ? " " : "") << red.firing[i];
  out_ << '\n' << "nonempty=" << (red.reduced[q] >= 0 ? "true" : "false") << '\n';
  return exit_code::ok;
}

int Session::rr_check() {
  const WeightedGraph g = graph();
  const Divisor d = divisor(opt_.divisor, g.vertex_count());
  const RRReport r = rr_report(g, d);
  auto line = [&](const char* key, const Rational& x) {
    out_ << key << '=' << x;
    decimal_column(x);
    out_ << '\n';
  };
  line("h0(D)", r.h0_d);
  line("h0(K-D)", r.h0_k_minus_d);
  line("deg(D)", r.degree);
  line("genus", r.genus);
  out_ << "scale=" << r.scale.value() << '\n';
  line("lhs", r.lhs);
  line("rhs", r.rhs);
  out_ << "holds=" << (r.holds() ? "true" : "false") << '\n';
  return r.holds() ? exit_code::ok : exit_code::finding;
}

int Session::jacobian_cmd() {
  const WeightedGraph g = graph();
  const std::size_t k = vertex(opt_.k, g.vertex_count(), "k");
  const AbelianGroupDescription jac = jacobian(g, k);
  out_ << jac.to_string() << '\n';
  if (!opt_.verify) return exit_code::ok;
  const Rational det = reduced_determinant(g, k);
  out_ << "order=" << jac.order << '\n' << "det_reduced=" << det << '\n';
  bool agree = det == Rational(jac.order);
  if (g.vertex_count() <= 12) {
    const Rational trees = spanning_tree_count(g);
    out_ << "spanning_trees=" << trees << '\n';
    agree = agree && trees == det;
  }
  return agree ? exit_code::ok : exit_code::finding;
}

int Session::oracle_verify() {
  const WeightedGraph g = graph();
  const std::size_t n = g.vertex_count();
  const Divisor d = divisor(opt_.divisor, n);
  bool agree = true;
  auto compare = [&](const char* key, const auto& engine, const auto& oracle) {
    const bool same = engine == oracle;
    out_ << key << ": engine=" << engine << " oracle=" << oracle << (same ? "" : "  MISMATCH") << '\n';
    agree = agree && same;
  };
  const Rational engine_h0 = h0(g, d);
  const std::string engine_empty = linsys_nonempty(g, d) ? "nonempty" : "empty";
  bool compared = false;
  if (n == 2) {
    const Rational p = g.weight(0, 1);
    compare("h0 (closed form)", engine_h0, two_vertex_h0(d[0], d[1], p));
    compare("|D| (closed form)", engine_empty, std::string(two_vertex_nonempty(d[0], d[1], p) ? "nonempty" : "empty"));
    compared = true;
  }
  if (g.is_integral() && d.is_integral() && n <= OracleLimits{}.max_vertices) {
    compare("h0 (lattice search)", engine_h0, Rational(brute_h0_int(g, d)));
    compare("|D| (lattice search)", engine_empty, std::string(brute_linsys_empty_int(g, d) ? "empty" : "nonempty"));
    compared = true;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const MonotoneReport rep = monotone_report(g, k);
    out_ << "P_" << k + 1 << ": nonsingular=" << rep.nonsingular << " inverse_nonnegative=" << rep.inverse_nonnegative
         << " implication=" << rep.implication_holds << '\n';
    agree = agree && rep.ok();
  }
  if (!compared) out_ << "no h0 oracle applies (needs two vertices, or integral data with at most 5 vertices)\n";
  return agree ? exit_code::ok : exit_code::finding;
}

Rational rational_flag(const std::string& text, const char* name) {
  const auto x = Rational::parse(text);
  if (!x) throw UsageError(std::string("--") + name + " expects a rational, got '" + text + "'");
  return *x;
}

int Session::scan() {
  if (opt_.p.empty()) throw UsageError("--p is required");
  const Rational p = rational_flag(opt_.p, "p");
  const Rational step = rational_flag(opt_.step, "step");
  if (p.sign() <= 0 || step.sign() <= 0) throw UsageError("--p and --step must be positive");
  const auto rows = scan2v(p, rational_flag(opt_.lo, "lo"), rational_flag(opt_.hi, "hi"), step, opt_.verify);
  write_scan_csv(out_, rows, opt_.decimal);
  for (const auto& row : rows) {
    if (!row.agrees()) return exit_code::finding;
  }
  return exit_code::ok;
}

int Session::fuzz_cmd() {
  if (opt_.fuzz.max_n < 2 || opt_.fuzz.max_weight_num < 1 || opt_.fuzz.max_weight_den < 1 ||
      opt_.fuzz.max_coeff_num < 0 || opt_.fuzz.max_coeff_den < 1) {
    throw UsageError("fuzz bounds must be positive and --max-n at least 2");
  }
  const FuzzSummary summary = fuzz(opt_.fuzz);
  out_ << summary.render();
  if (summary.first_failure && summary.first_failure->internal) return exit_code::internal;
  return summary.discrepancies() == 0 ? exit_code::ok : exit_code::finding;
}

void print_reproducer(std::ostream& err, const Context& ctx, std::span<const std::string> args) {
  err << "reproducer:\n  command:";
  for (const auto& a : args) err << " '" << a << "'";
  err << '\n';
  if (!ctx.graph_text.empty()) err << "--- graph\n" << ctx.graph_text << (ctx.graph_text.ends_with('\n') ? "" : "\n");
  for (const auto& d : ctx.divisor_texts) err << "--- divisor\n" << d << (d.ends_with('\n') ? "" : "\n");
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Exact divisor theory on rational edge-weighted graphs"};
  app.name("wrr");
  app.require_subcommand(1);

  auto add_graph = [&](CLI::App* sub) { sub->add_option("--graph,graph", opt.graph, "graph file"); };
  auto add_divisor = [&](CLI::App* sub) {
    sub->add_option("--divisor,divisor", opt.divisor, "divisor: inline list of rationals or a file");
  };
  auto add_decimal = [&](CLI::App* sub) {
    sub->add_option("--decimal", opt.decimal, "add an approximate decimal column with this many digits")
        ->check(CLI::Range(0, 200));
  };
  auto add_k = [&](CLI::App* sub) { sub->add_option("--k", opt.k, "excluded vertex (1-based, default n)"); };

  std::vector<std::pair<CLI::App*, int (Session::*)()>> commands;
  auto command = [&](const char* name, const char* help, int (Session::*fn)()) {
    CLI::App* sub = app.add_subcommand(name, help);
    commands.emplace_back(sub, fn);
    return sub;
  };

  {
    auto* s = command("info", "genus, canonical divisor and degrees", &Session::info);
    add_graph(s);
    add_k(s);
    add_decimal(s);
  }
  {
    auto* s = command("h0", "h0(D) through the scaling reduction", &Session::h0_cmd);
    add_graph(s);
    add_divisor(s);
    add_decimal(s);
    s->add_flag("--verify", opt.verify, "print and check the minimizing witness");
  }
  {
    auto* s = command("rank", "Baker-Norine rank of an integral divisor on an integer graph", &Session::rank);
    add_graph(s);
    add_divisor(s);
  }
  {
    auto* s = command("equiv", "decide linear equivalence and print the firing certificate", &Session::equiv);
    add_graph(s);
    add_divisor(s);
    s->add_option("--other,other", opt.other, "second divisor");
    add_k(s);
  }
  {
    auto* s = command("reduce", "q-reduced representative (integer data only)", &Session::reduce);
    add_graph(s);
    add_divisor(s);
    s->add_option("--q", opt.q, "sink vertex (1-based, default n)");
  }
  {
    auto* s = command("rr-check", "both sides of the Riemann-Roch identity", &Session::rr_check);
    add_graph(s);
    add_divisor(s);
    add_decimal(s);
  }
  {
    auto* s = command("jacobian", "Jacobian group of an integer graph", &Session::jacobian_cmd);
    add_graph(s);
    add_k(s);
    s->add_flag("--verify", opt.verify, "compare the order with det(P_k) and the spanning tree count");
  }
  {
    auto* s = command("oracle-verify", "compare the engine with the independent oracles", &Session::oracle_verify);
    add_graph(s);
    add_divisor(s);
  }
  {
    auto* s = command("scan2v", "CSV h0 landscape on the two-vertex graph", &Session::scan);
    s->add_option("--p", opt.p, "edge weight")->required();
    s->add_option("--lo", opt.lo, "grid start")->capture_default_str();
    s->add_option("--hi", opt.hi, "grid end")->capture_default_str();
    s->add_option("--step", opt.step, "grid step")->capture_default_str();
    s->add_flag("--verify", opt.verify, "recompute every row through the scaling pipeline");
    add_decimal(s);
  }
  {
    auto* s = command("fuzz", "seeded cross-check of the engine against identities and oracles", &Session::fuzz_cmd);
    s->add_option("--seed", opt.fuzz.seed)->capture_default_str();
    s->add_option("--trials", opt.fuzz.trials)->capture_default_str();
    s->add_option("--max-n", opt.fuzz.max_n)->capture_default_str();
    s->add_option("--max-weight-num", opt.fuzz.max_weight_num)->capture_default_str();
    s->add_option("--max-weight-den", opt.fuzz.max_weight_den)->capture_default_str();
    s->add_option("--max-coeff-num", opt.fuzz.max_coeff_num)->capture_default_str();
    s->add_option("--max-coeff-den", opt.fuzz.max_coeff_den)->capture_default_str();
  }

  // CLI11 consumes a reversed argument vector.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_code::ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_code::ok;
  } catch (const CLI::ParseError& e) {
    err << "wrr: " << e.what() << '\n';
    return exit_code::usage;
  }

  Session session(opt, out);
  try {
    for (const auto& [sub, fn] : commands) {
      if (sub->parsed()) return (session.*fn)();
    }
    return exit_code::usage;
  } catch (const UsageError& e) {
    err << "wrr: " << e.what() << '\n';
    return exit_code::usage;
  } catch (const InputError& e) {
    err << "wrr: " << e.what() << '\n';
    return exit_code::input;
  } catch (const Error& e) {
    err << "wrr: " << e.what() << '\n';
    if (!e.is_internal()) return exit_code::input;
    print_reproducer(err, session.context(), args);
    return exit_code::internal;
  } catch (const std::exception& e) {
    err << "wrr: internal error: " << e.what() << '\n';
    print_reproducer(err, session.context(), args);
    return exit_code::internal;
  }
}

}  // namespace wrr::cli
