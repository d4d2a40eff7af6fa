#include "qmb/errors.hpp"
#include "qmb/uqaction.hpp"

#include <gtest/gtest.h>

using namespace qmb;

namespace {

Laurent q(int k) { return Laurent::q_pow(k); }
Laurent h(int e) { return Laurent::monomial(e); }  // q^{e/2}

struct Fixture {
  explicit Fixture(int m, int n) : alg({m, n}, Field<Laurent>()), uq(alg) {}
  Element<Laurent> z(int a, int alpha) const { return alg.generator(Generator::z(a, alpha)); }
  PolAlgebra<Laurent> alg;
  UqAction<Laurent> uq;
};

void expect_pass(const CheckReport& r) { EXPECT_EQ(r.verdict, Verdict::Pass) << r.name << ": " << r.witness; }

}  // namespace

TEST(UqAction, PrintedValues) {
  Fixture f(2, 2);
  const int n = 2, m = 2;
  auto znm = f.z(n, m);
  EXPECT_EQ(f.uq.act(UqGenerator::F(n), znm), f.alg.scalar(h(1)));
  EXPECT_EQ(f.uq.act(UqGenerator::E(n), znm), f.alg.power(znm, 2) * -h(1));
  EXPECT_EQ(f.uq.act(UqGenerator::K(n), znm), znm * q(2));
  EXPECT_EQ(f.uq.act(UqGenerator::Kinv(n), znm), znm * q(-2));
  // k < n
  EXPECT_EQ(f.uq.act(UqGenerator::F(1), f.z(1, 2)), f.z(2, 2) * h(1));
  EXPECT_EQ(f.uq.act(UqGenerator::E(1), f.z(2, 1)), f.z(1, 1) * h(-1));
  EXPECT_TRUE(f.uq.act(UqGenerator::F(1), f.z(2, 1)).is_zero());
  // k > n: k = 3, N - k = 1
  EXPECT_EQ(f.uq.act(UqGenerator::F(3), f.z(1, 1)), f.z(1, 2) * h(1));
  EXPECT_EQ(f.uq.act(UqGenerator::E(3), f.z(2, 2)), f.z(2, 1) * h(-1));
  EXPECT_EQ(f.uq.act(UqGenerator::K(3), f.z(2, 2)), f.z(2, 2) * q(-1));
  // E_n on the remaining cases
  EXPECT_EQ(f.uq.act(UqGenerator::E(n), f.z(1, 1)), f.alg.multiply(f.z(1, 2), f.z(2, 1)) * (-h(1) * q(-1)));
  EXPECT_EQ(f.uq.act(UqGenerator::E(n), f.z(1, 2)), f.alg.multiply(znm, f.z(1, 2)) * -h(1));
  EXPECT_TRUE(f.uq.act(UqGenerator::F(n), f.z(1, 2)).is_zero());
}

TEST(UqAction, CommutatorByHand) {
  // (E_n F_n - F_n E_n) z_n^m = (q + q^-1) z_n^m
  Fixture f(2, 2);
  auto v = f.z(2, 2);
  auto lhs = f.uq.act_word({UqGenerator::E(2), UqGenerator::F(2)}, v) -
             f.uq.act_word({UqGenerator::F(2), UqGenerator::E(2)}, v);
  EXPECT_EQ(lhs, v * (q(1) + q(-1)));
}

TEST(UqAction, WeightsOfGenerators) {
  Fixture f(2, 3);
  EXPECT_EQ(f.uq.weight(Generator::z(3, 2)), (WeightVector{0, -1, 2, -1}));
  EXPECT_EQ(f.uq.weight(Generator::z(1, 1)), (WeightVector{1, 0, 0, 1}));
  EXPECT_EQ(f.uq.weight(Word{Generator::z(1, 1), Generator::z(3, 2)}), (WeightVector{1, -1, 2, 0}));
}

TEST(UqAction, RejectsStarLetters) {
  Fixture f(1, 1);
  auto e = f.alg.generator(Generator::zstar(1, 1));
  EXPECT_THROW(f.uq.act(UqGenerator::E(1), e), UnsupportedElement);
  EXPECT_THROW(f.uq.act(UqGenerator::E(2), f.z(1, 1)), ConfigError);
}

TEST(UqAction, NeedsSquareRootOfQ) {
  PolAlgebra<Rational> alg({1, 1}, Field<Rational>(Rational(1, 2)));
  UqAction<Rational> uq(alg);
  EXPECT_THROW(uq.act(UqGenerator::F(1), alg.generator(Generator::z(1, 1))), NonSquareEvaluation);
  PolAlgebra<Rational> alg4({1, 1}, Field<Rational>(Rational(1, 4)));
  UqAction<Rational> uq4(alg4);
  EXPECT_EQ(uq4.act(UqGenerator::F(1), alg4.generator(Generator::z(1, 1))), alg4.scalar(Rational(1, 2)));
}

TEST(H0, Degrees) {
  Fixture f(2, 2);
  EXPECT_EQ(h0_degree(f.uq, f.z(2, 2)), 1);
  EXPECT_EQ(h0_degree(f.uq, f.alg.one()), 0);
  EXPECT_EQ(h0_degree(f.uq, f.alg.q_minor_z({1, 2}, {1, 2})), 2);
  EXPECT_THROW(h0_degree(f.uq, f.z(1, 1) + f.alg.one()), std::logic_error);
  Fixture g(2, 3);
  EXPECT_EQ(h0_degree(g.uq, g.alg.power(g.z(1, 2), 3)), 3);
}

TEST(UqRelations, Symbolic) {
  for (auto [m, n] : {std::pair{1, 1}, {1, 2}, {2, 2}}) {
    Fixture f(m, n);
    expect_pass(uq_relations_check(f.uq, 2));
  }
}

TEST(UqRelations, AtFixedSquareQ) {
  PolAlgebra<Rational> alg({2, 2}, Field<Rational>(Rational(1, 4)));
  UqAction<Rational> uq(alg);
  expect_pass(uq_relations_check(uq, 2));
  expect_pass(module_algebra_check(uq, 1));
}

TEST(ModuleAlgebra, Symbolic) {
  Fixture f(2, 2);
  expect_pass(module_algebra_check(f.uq, 2));
  Fixture g(1, 3);
  expect_pass(module_algebra_check(g.uq, 2));
}

TEST(LowestWeight, AnnihilatedByF) {
  Fixture f(2, 2);
  auto r = lowest_weight_check(f.uq, 3);
  expect_pass(r);
  EXPECT_EQ(r.details.back().second, "6");  // k1 + 2 k2 <= 3
}
