#include "qmb/equivalence.hpp"

#include <Eigen/Dense>
#include <gtest/gtest.h>

#include <cmath>

using namespace qmb;

namespace {

const Rational kHalf(1, 2);
Field<Rational> half() { return Field<Rational>(kHalf); }

void expect_pass(const CheckReport& r) {
  EXPECT_EQ(r.verdict, Verdict::Pass) << r.name << " (" << r.m << "," << r.n << ") q=" << r.q << " D=" << r.cutoff
                                      << ": " << r.witness;
}

double eigen_norm(const std::vector<std::vector<double>>& b) {
  if (b.empty() || b[0].empty()) return 0.0;
  Eigen::MatrixXd m(b.size(), b[0].size());
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b[0].size(); ++j) m(i, j) = b[i][j];
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  return svd.singularValues()(0);
}

}  // namespace

TEST(Realizations, VacuumAndFirstLevel) {
  Realizations<Rational> r({1, 2}, half(), 3);
  auto e0 = r.image_of_word({});
  ASSERT_EQ(e0.size(), 1u);
  EXPECT_EQ(e0.begin()->first, 0u);
  auto j1 = r.build_J(1);
  EXPECT_EQ(j1.rows(), 2u);
  EXPECT_EQ(j1.cols(), 2u);
  EXPECT_EQ(matrix_rank(j1), 2u);
}

TEST(Realizations, ApplyJIsLinear) {
  Realizations<Rational> r({2, 2}, half(), 3);
  const auto& alg = r.algebra();
  auto a = alg.generator(Generator::z(1, 1));
  auto b = alg.multiply(alg.generator(Generator::z(2, 2)), alg.generator(Generator::z(1, 2)));
  auto lhs = r.apply_J(a * Rational(3) + b);
  auto ja = r.apply_J(a);
  auto jb = r.apply_J(b);
  SparseVector<Rational> rhs = jb;
  for (auto& [i, c] : ja) {
    rhs[i] += Rational(3) * c;
    if (rhs[i].is_zero()) rhs.erase(i);
  }
  EXPECT_EQ(lhs, rhs);
}

TEST(Checks, PassOnSmallShapes) {
  for (auto [m, n] : {std::pair{1, 1}, {1, 2}, {2, 2}}) {
    Realizations<Rational> r({m, n}, half(), 4);
    expect_pass(j_rank_check(r));
    expect_pass(intertwiner_check(r));
    expect_pass(gram_match_check(r));
    expect_pass(minor_embedding_check(r));
    expect_pass(y_image_check(r));
    expect_pass(resolution_check(r.tildeg()));
    expect_pass(t_star_formula_check(r.tildeg()));
  }
}

TEST(Checks, PassSymbolically) {
  Realizations<Laurent> r({1, 2}, Field<Laurent>(), 3);
  expect_pass(j_rank_check(r));
  expect_pass(intertwiner_check(r));
  expect_pass(gram_match_check(r));
  expect_pass(minor_embedding_check(r));
  expect_pass(resolution_check(r.tildeg()));
}

TEST(Checks, OtherValuesOfQ) {
  for (const Rational& q : {Rational(1, 10), Rational(9, 10), Rational(3)}) {
    Realizations<Rational> r({1, 2}, Field<Rational>(q), 3);
    expect_pass(intertwiner_check(r));
    expect_pass(gram_match_check(r));
  }
}

TEST(Checks, TooSmallCutoffIsSkipped) {
  // 2x2 minors raise the degree by two, nothing is exact below cutoff 2.
  Realizations<Rational> real({2, 2}, half(), 1);
  auto r = minor_embedding_check(real);
  EXPECT_EQ(r.verdict, Verdict::SkippedValidity);
  EXPECT_FALSE(r.witness.empty());
}

TEST(Checks, ReportFields) {
  Realizations<Rational> r({1, 2}, half(), 2);
  auto rep = gram_match_check(r);
  EXPECT_EQ(rep.name, "gram_match");
  EXPECT_EQ(rep.m, 1);
  EXPECT_EQ(rep.n, 2);
  EXPECT_EQ(rep.q, "1/2");
  EXPECT_EQ(rep.cutoff, 2);
  EXPECT_GE(rep.seconds, 0.0);
  EXPECT_EQ(to_string(Verdict::SkippedValidity), "skipped-validity");
}

TEST(Faithfulness, FullRank) {
  PolAlgebra<Rational> alg({2, 2}, half());
  FockSpace<Rational> fock(alg);
  for (auto [k, l] : {std::pair{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 1}, {1, 2}}) {
    auto r = faithfulness_rank_check(fock, k, l);
    expect_pass(r);
  }
}

TEST(Faithfulness, SymbolicRank) {
  PolAlgebra<Laurent> alg({1, 2}, Field<Laurent>());
  FockSpace<Laurent> fock(alg);
  expect_pass(faithfulness_rank_check(fock, 1, 1));
}

TEST(Norm, PowerIterationOnDiagonal) {
  std::vector<std::vector<double>> b{{0.5, 0, 0}, {0, -0.9, 0}, {0, 0, 0.1}, {0, 0, 0}};
  int it = 0;
  bool ok = false;
  EXPECT_NEAR(largest_singular_value(b, 1e-12, 10000, &it, &ok), 0.9, 1e-9);
  EXPECT_TRUE(ok);
  EXPECT_EQ(largest_singular_value({}, 1e-12, 10, nullptr, nullptr), 0.0);
}

TEST(Norm, OneByOneClosedForm) {
  // For the (1,1) disc the block H_k -> H_{k+1} has norm sqrt(1 - q^{2k+2}).
  for (const Rational& q : {Rational(1, 2), Rational(1, 10), Rational(9, 10)}) {
    auto res = norm_Z({1, 1}, 6, q);
    ASSERT_EQ(res.per_degree.size(), 6u);
    const double qd = q.to_double();
    for (int k = 0; k < 6; ++k) EXPECT_NEAR(res.per_degree[k], std::sqrt(1 - std::pow(qd, 2 * k + 2)), 1e-9);
    EXPECT_TRUE(res.converged);
  }
}

TEST(Norm, AgreesWithSvd) {
  for (auto [m, n] : {std::pair{1, 2}, {2, 2}}) {
    TildeG<Rational> g({m, n}, half(), 4);
    for (int d = 0; d < 4; ++d) {
      auto b = normalized_Z_block(g, d);
      EXPECT_NEAR(largest_singular_value(b, 1e-12, 10000, nullptr, nullptr), eigen_norm(b), 1e-8)
          << m << "," << n << " degree " << d;
    }
  }
}

TEST(Norm, BoundedByOneAndIncreasing) {
  auto res = norm_Z({2, 2}, 5, kHalf);
  ASSERT_EQ(res.per_degree.size(), 5u);
  for (std::size_t d = 0; d < res.per_degree.size(); ++d) {
    EXPECT_LE(res.per_degree[d], 1.0 + 1e-9);
    if (d) EXPECT_GE(res.per_degree[d], res.per_degree[d - 1] - 1e-9);
  }
  EXPECT_DOUBLE_EQ(res.norm, res.per_degree.back());
}
