#include "qmb/expr.hpp"
#include "qmb/report.hpp"
#include "qmb/suite.hpp"

#include <gtest/gtest.h>

#include <cstdlib>

using namespace qmb;

namespace {

const AlgebraConfig k22{2, 2};

std::string tree(const std::string& text, const AlgebraConfig& cfg = k22) {
  return parse_expression(text, cfg)->to_string();
}

std::size_t error_position(const std::string& text, const AlgebraConfig& cfg = k22) {
  try {
    parse_expression(text, cfg);
  } catch (const ParseError& e) {
    return e.position;
  }
  ADD_FAILURE() << "no error for " << text;
  return 0;
}

}  // namespace

TEST(Parser, Atoms) {
  EXPECT_EQ(tree("z*[1,1]*z[1,1]"), "(z*[1,1] * z[1,1])");
  EXPECT_EQ(tree("t[4,1]"), "t[4,1]");
  EXPECT_EQ(tree("3/6"), "1/2");
  EXPECT_EQ(tree(" q "), "q");
}

TEST(Parser, PrecedenceAndAssociativity) {
  EXPECT_EQ(tree("1 + 2 * q^2"), "(1 + (2 * (q^2)))");
  EXPECT_EQ(tree("1 - 2 - 3"), "((1 - 2) - 3)");
  EXPECT_EQ(tree("z[1,1]*z[1,2]*z[2,1]"), "((z[1,1] * z[1,2]) * z[2,1])");
  EXPECT_EQ(tree("-q^2"), "(-(q^2))");
  EXPECT_EQ(tree("q^-1"), "(q^-1)");
  EXPECT_EQ(tree("(1 + q)^2"), "((1 + q)^2)");
  EXPECT_EQ(tree("z[1,1]*z[2,2] - (q - q^-1)*z[1,2]*z[2,1]"),
            "((z[1,1] * z[2,2]) - (((q - (q^-1)) * z[1,2]) * z[2,1]))");
}

TEST(Parser, SyntaxErrorsCarryPositions) {
  EXPECT_EQ(error_position("z[1,1] z[1,1]"), 7u);  // no juxtaposition
  EXPECT_EQ(error_position("z[1,1]*"), 7u);
  EXPECT_EQ(error_position("(q"), 2u);
  EXPECT_EQ(error_position("z(1,1)"), 1u);
  EXPECT_EQ(error_position("1/0"), 2u);
  EXPECT_EQ(error_position("q^q"), 2u);
  EXPECT_EQ(error_position("x"), 0u);
  EXPECT_EQ(error_position("q^2^2"), 3u);
}

TEST(Parser, IndexRanges) {
  const AlgebraConfig cfg{2, 3};
  EXPECT_EQ(error_position("z[1,3]", cfg), 4u);  // alpha <= m = 2
  EXPECT_NO_THROW(parse_expression("z[3,2]", cfg));
  EXPECT_EQ(error_position("z*[4,1]", cfg), 3u);
  EXPECT_EQ(error_position("t[6,1]", cfg), 2u);
  EXPECT_EQ(error_position("z[0,1]", cfg), 2u);
  EXPECT_THROW(parse_expression("q", AlgebraConfig{3, 2}), ConfigError);
}

TEST(Evaluate, NormalForms) {
  PolAlgebra<Laurent> one({1, 1}, Field<Laurent>());
  EXPECT_EQ(to_string(evaluate(*parse_expression("z*[1,1]*z[1,1]", one.config()), one)),
            "q^2*z[1,1]*z*[1,1] + (1-q^2)");
  PolAlgebra<Laurent> two(k22, Field<Laurent>());
  auto lhs = evaluate(*parse_expression("z[2,2]*z[1,1]", k22), two);
  auto rhs = evaluate(*parse_expression("z[1,1]*z[2,2] - (q - q^-1)*z[1,2]*z[2,1]", k22), two);
  EXPECT_EQ(lhs, rhs);
  EXPECT_EQ(evaluate(*parse_expression("(1 + q)^2 - 1 - 2*q - q^2", k22), two), Element<Laurent>{});
}

TEST(Evaluate, ScalarsAtFixedQ) {
  PolAlgebra<Rational> alg(k22, Field<Rational>(Rational(1, 2)));
  EXPECT_EQ(evaluate(*parse_expression("q^-2 + 1/4", k22), alg), alg.scalar(Rational(17, 4)));
  EXPECT_EQ(evaluate(*parse_expression("-(2/3)", k22), alg), alg.scalar(Rational(-2, 3)));
  EXPECT_THROW(evaluate(*parse_expression("z[1,1]^-1", k22), alg), ParseError);
  EXPECT_THROW(evaluate(*parse_expression("(1 - 1)^-1", k22), alg), ParseError);
  EXPECT_THROW(evaluate(*parse_expression("t[1,1]", k22), alg), ParseError);
}

TEST(Evaluate, Operators) {
  TildeG<Rational> g(k22, Field<Rational>(Rational(1, 2)), 3);
  auto det = evaluate_operator(*parse_expression("t[1,1]*t[2,2] - q*t[1,2]*t[2,1]", k22), g);
  auto minor = g.q_minor_t({1, 2}, {1, 2});
  EXPECT_FALSE(compare_on_valid(det, minor).has_value());
  auto z = evaluate_operator(*parse_expression("z[1,1]", k22), g);
  EXPECT_EQ(z.exact_shift(), std::optional<int>(1));
}

TEST(Report, QParsing) {
  EXPECT_EQ(parse_q("1/2", false), Rational(1, 2));
  EXPECT_EQ(parse_q("0.25", true), Rational(1, 4));
  EXPECT_EQ(parse_q(".5", true), Rational(1, 2));
  EXPECT_THROW(parse_q("0.5", false), ConfigError);
  EXPECT_THROW(parse_q("-1/2", false), ConfigError);
  EXPECT_THROW(parse_q("abc", false), ConfigError);
  EXPECT_THROW(parse_q("1/0", false), ConfigError);
  EXPECT_THROW(parse_q("0.5e3", true), ConfigError);
}

TEST(Report, CsvQuoting) {
  EXPECT_EQ(csv_field("plain"), "plain");
  EXPECT_EQ(csv_field("a,b"), "\"a,b\"");
  EXPECT_EQ(csv_field("say \"x\""), "\"say \"\"x\"\"\"");
}

TEST(Report, JsonHasFixedKeyOrderAndNoTimingByDefault) {
  CheckReport r;
  r.name = "x";
  r.q = "1/2";
  r.seconds = 1.5;
  r.details.emplace_back("k", "v");
  EXPECT_EQ(report_json(r, false).dump(),
            R"({"name":"x","m":0,"n":0,"q":"1/2","cutoff":0,"verdict":"pass","witness":"","details":{"k":"v"}})");
  EXPECT_TRUE(report_json(r, true).contains("seconds"));
}

TEST(Suite, GroupsAndOrder) {
  SuiteOptions o;
  o.config = {1, 1};
  o.cutoff = 3;
  auto all = suite_jobs("all", o);
  std::size_t total = 0;
  for (const auto& g : suite_groups())
    if (g != "all") total += suite_jobs(g, o).size();
  EXPECT_EQ(all.size(), total);
  EXPECT_THROW(suite_jobs("nonsense", o), ConfigError);
  o.cutoff = -1;
  EXPECT_THROW(suite_jobs("fock", o), ConfigError);
}

TEST(Suite, ParallelRunKeepsOrder) {
  SuiteOptions o;
  o.config = {1, 2};
  o.cutoff = 3;
  auto jobs = suite_jobs("all", o);
  auto serial = run_jobs(jobs, 1);
  auto parallel = run_jobs(jobs, 4);
  ASSERT_EQ(serial.size(), parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    EXPECT_EQ(serial[i].name, parallel[i].name);
    EXPECT_EQ(serial[i].verdict, Verdict::Pass) << serial[i].name << ": " << serial[i].witness;
    EXPECT_EQ(report_json(serial[i], false), report_json(parallel[i], false));
  }
}

TEST(Suite, SymbolicMode) {
  SuiteOptions o;
  o.config = {1, 2};
  o.cutoff = 2;
  o.symbolic = true;
  for (const auto& r : run_suite("all", o)) {
    EXPECT_EQ(r.q, "symbolic");
    EXPECT_EQ(r.verdict, Verdict::Pass) << r.name << ": " << r.witness;
  }
}

TEST(Suite, ThreadsFromEnvironment) {
  setenv("QMB_THREADS", "3", 1);
  EXPECT_EQ(threads_from_env(), 3);
  setenv("QMB_THREADS", "zero", 1);
  EXPECT_EQ(threads_from_env(), 0);
  unsetenv("QMB_THREADS");
  EXPECT_EQ(threads_from_env(), 0);
}
