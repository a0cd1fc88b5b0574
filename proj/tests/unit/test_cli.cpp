#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "support.hpp"
#include "wrr/cli/commands.hpp"
#include "wrr/cli/fuzz.hpp"
#include "wrr/cli/graph_file.hpp"
#include "wrr/cli/scan.hpp"
#include "wrr/random_instances.hpp"

namespace wrr::cli {
namespace {

using wrr::testing::Q;

ParseError parse_failure(const std::string& text) {
  try {
    parse_graph(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "parsed: " << text;
  return ParseError(ParseError::Kind::Syntax, 0, "");
}

TEST(GraphFile, ParsesExample) {
  const WeightedGraph g = parse_graph("vertices 2\nedge 1 2 3/2\n");
  EXPECT_EQ(g, wrr::testing::two_vertex(Q("3/2")));
}

TEST(GraphFile, CommentsAndBlankLines) {
  const WeightedGraph g = parse_graph("# triangle\n\nvertices 3   # n\nedge 1 2 1\n  edge 2 3 1\nedge 3 1 1\n");
  EXPECT_EQ(g, wrr::testing::triangle());
}

TEST(GraphFile, ErrorsCarryLineNumbers) {
  const ParseError loop = parse_failure("vertices 2\nedge 1 1 2\nedge 1 2 1\n");
  EXPECT_EQ(loop.kind(), ParseError::Kind::Semantic);
  EXPECT_EQ(loop.line(), 2u);

  const ParseError dup = parse_failure("vertices 2\nedge 1 2 1\n\nedge 2 1 1\n");
  EXPECT_EQ(dup.kind(), ParseError::Kind::Semantic);
  EXPECT_EQ(dup.line(), 4u);

  EXPECT_EQ(parse_failure("vertices 2\nedge 1 2 -1\n").kind(), ParseError::Kind::Semantic);
  EXPECT_EQ(parse_failure("vertices 2\nedge 1 2 0\n").kind(), ParseError::Kind::Semantic);
  EXPECT_EQ(parse_failure("vertices 3\nedge 1 2 1\n").kind(), ParseError::Kind::Semantic);
  EXPECT_EQ(parse_failure("vertices 2\nedge 1 3 1\n").kind(), ParseError::Kind::Semantic);

  const ParseError bad_weight = parse_failure("vertices 2\nedge 1 2 1.5\n");
  EXPECT_EQ(bad_weight.kind(), ParseError::Kind::Syntax);
  EXPECT_EQ(bad_weight.line(), 2u);
  EXPECT_EQ(parse_failure("edge 1 2 1\n").kind(), ParseError::Kind::Syntax);
  EXPECT_EQ(parse_failure("").kind(), ParseError::Kind::Syntax);
  EXPECT_EQ(parse_failure("vertices 2\nvertices 2\n").kind(), ParseError::Kind::Syntax);
  EXPECT_EQ(parse_failure("vertices 2\nedge 1 2 1 extra\n").kind(), ParseError::Kind::Syntax);
}

TEST(GraphFile, Divisors) {
  EXPECT_EQ(parse_divisor("1/3 0", 2), (Divisor{Q("1/3"), 0}));
  EXPECT_EQ(parse_divisor("  -1\n-2/4\n", 2), (Divisor{-1, Q("-1/2")}));
  EXPECT_THROW(parse_divisor("1 2 3", 2), ParseError);
  EXPECT_THROW(parse_divisor("1 x", 2), ParseError);
}

TEST(GraphFile, RoundTripIsExact) {
  InstanceRng rng(60);
  for (int t = 0; t < 200; ++t) {
    const WeightedGraph g = random_connected_graph(rng, {static_cast<std::size_t>(rng.uniform(1, 7)), 50, 30, 3});
    const std::string text = serialize_graph(g);
    EXPECT_EQ(parse_graph(text), g);
    EXPECT_EQ(serialize_graph(parse_graph(text)), text);
    const Divisor d = random_divisor(rng, g.vertex_count(), 100, 50);
    EXPECT_EQ(parse_divisor(serialize_divisor(d), d.size()), d);
  }
}

TEST(Scan2v, RowsAndGridSize) {
  const auto rows = scan2v(Rational(1), Rational(-1), Rational(1), Q("1/2"), true);
  EXPECT_EQ(rows.size(), 25u);
  for (const auto& r : rows) EXPECT_TRUE(r.agrees());
  std::ostringstream csv;
  write_scan_csv(csv, rows, std::nullopt);
  EXPECT_NE(csv.str().find("a,b,h0,nonempty\n"), std::string::npos);
  EXPECT_NE(csv.str().find("\n0,0,1,true\n"), std::string::npos);

  std::ostringstream two;
  write_scan_csv(two, scan2v(Rational(2), Rational(-1), Rational(-1), Rational(1), false), 2);
  EXPECT_EQ(two.str(), "a,b,h0,nonempty,h0_decimal\n-1,-1,0,false,0.00\n");
}

TEST(Fuzz, DeterministicAndClean) {
  FuzzConfig config;
  config.trials = 24;
  const FuzzSummary first = fuzz(config);
  EXPECT_EQ(first.discrepancies(), 0u);
  EXPECT_FALSE(first.first_failure);
  EXPECT_EQ(first.oracle_agreement.run + first.oracle_agreement.skipped, 6u);
  EXPECT_EQ(first.render(), fuzz(config).render());
  config.seed = 43;
  EXPECT_NE(first.render(), fuzz(config).render());
}

TEST(Fuzz, ZeroTrials) {
  FuzzConfig config;
  config.trials = 0;
  const FuzzSummary s = fuzz(config);
  EXPECT_EQ(s.discrepancies(), 0u);
  EXPECT_EQ(s.rr_identity.run, 0u);
}

class RunTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("wrr_cli_test_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& text) {
    const auto path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }

  int run_cli(std::vector<std::string> args) {
    out_.str("");
    err_.str("");
    return run(args, out_, err_);
  }

  std::filesystem::path dir_;
  std::ostringstream out_, err_;
};

TEST_F(RunTest, RrCheckOnHalfEdge) {
  const std::string g = file("g.graph", "vertices 2\nedge 1 2 1/2\n");
  EXPECT_EQ(run_cli({"rr-check", g, "0 0"}), exit_code::ok);
  EXPECT_NE(out_.str().find("lhs=3/2\n"), std::string::npos);
  EXPECT_NE(out_.str().find("rhs=3/2\n"), std::string::npos);
}

TEST_F(RunTest, H0PrintsExactValue) {
  const std::string g = file("g.graph", "vertices 2\nedge 1 2 2\n");
  EXPECT_EQ(run_cli({"h0", g, "-1 -1"}), exit_code::ok);
  EXPECT_EQ(out_.str(), "0\n");
  const std::string half = file("half.graph", "vertices 2\nedge 1 2 1/2\n");
  EXPECT_EQ(run_cli({"h0", "--graph", half, "--divisor", "0 0", "--decimal", "3"}), exit_code::ok);
  EXPECT_EQ(out_.str(), "3/2 1.500\n");
}

TEST_F(RunTest, DivisorFromFile) {
  const std::string g = file("g.graph", "vertices 2\nedge 1 2 1/2\n");
  const std::string d = file("d.div", "0\n0\n");
  EXPECT_EQ(run_cli({"h0", g, d}), exit_code::ok);
  EXPECT_EQ(out_.str(), "3/2\n");
}

TEST_F(RunTest, JacobianOfTriangle) {
  const std::string g = file("tri.graph", "vertices 3\nedge 1 2 1\nedge 2 3 1\nedge 1 3 1\n");
  EXPECT_EQ(run_cli({"jacobian", g}), exit_code::ok);
  EXPECT_EQ(out_.str(), "Z/3\n");
  EXPECT_EQ(run_cli({"jacobian", g, "--verify", "--k", "1"}), exit_code::ok);
}

TEST_F(RunTest, EquivAndReduce) {
  const std::string g = file("tri.graph", "vertices 3\nedge 1 2 1\nedge 2 3 1\nedge 1 3 1\n");
  EXPECT_EQ(run_cli({"equiv", g, "2 0 0", "0 1 1"}), exit_code::ok);
  EXPECT_EQ(run_cli({"equiv", g, "1 0 0", "0 1 0"}), exit_code::finding);
  EXPECT_EQ(run_cli({"reduce", g, "0 2 0", "--q", "1"}), exit_code::ok);
  EXPECT_NE(out_.str().find("reduced=1 0 1\n"), std::string::npos);
  EXPECT_EQ(run_cli({"rank", g, "1 0 0"}), exit_code::ok);
  EXPECT_EQ(out_.str(), "0\n");
}

TEST_F(RunTest, OracleVerifyAndScan) {
  const std::string g = file("g.graph", "vertices 2\nedge 1 2 2/3\n");
  EXPECT_EQ(run_cli({"oracle-verify", g, "1/4 -1/2"}), exit_code::ok);
  EXPECT_EQ(run_cli({"scan2v", "--p", "1", "--lo", "0", "--hi", "0", "--verify"}), exit_code::ok);
  EXPECT_EQ(out_.str(), "a,b,h0,nonempty\n0,0,1,true\n");
}

TEST_F(RunTest, FuzzExitCodes) {
  EXPECT_EQ(run_cli({"fuzz", "--trials", "0"}), exit_code::ok);
  EXPECT_NE(out_.str().find("discrepancies=0"), std::string::npos);
  EXPECT_EQ(run_cli({"fuzz", "--trials", "8", "--seed", "7"}), exit_code::ok);
}

TEST_F(RunTest, UsageErrors) {
  EXPECT_EQ(run_cli({}), exit_code::usage);
  EXPECT_EQ(run_cli({"frobnicate"}), exit_code::usage);
  EXPECT_EQ(run_cli({"h0", "--bogus"}), exit_code::usage);
  EXPECT_EQ(run_cli({"h0"}), exit_code::usage);
  EXPECT_EQ(run_cli({"scan2v", "--p", "x"}), exit_code::usage);
  const std::string g = file("g.graph", "vertices 2\nedge 1 2 1\n");
  EXPECT_EQ(run_cli({"reduce", g, "0 0", "--q", "3"}), exit_code::usage);
  EXPECT_EQ(run_cli({"--help"}), exit_code::ok);
}

TEST_F(RunTest, InputErrors) {
  EXPECT_EQ(run_cli({"info", (dir_ / "missing.graph").string()}), exit_code::input);
  const std::string loop = file("loop.graph", "vertices 2\nedge 1 1 2\n");
  EXPECT_EQ(run_cli({"info", loop}), exit_code::input);
  EXPECT_NE(err_.str().find("line 2"), std::string::npos);
  const std::string half = file("half.graph", "vertices 2\nedge 1 2 3/2\n");
  EXPECT_EQ(run_cli({"h0", half, "0"}), exit_code::input);
  EXPECT_EQ(run_cli({"rank", half, "0 0"}), exit_code::input);
  EXPECT_EQ(run_cli({"reduce", half, "0 0"}), exit_code::input);
  EXPECT_EQ(run_cli({"jacobian", half}), exit_code::input);
}

}  // namespace
}  // namespace wrr::cli
