#include "qmb/errors.hpp"
#include "qmb/fock.hpp"

#include <gtest/gtest.h>

using namespace qmb;

namespace {

Laurent q(int k) { return Laurent::q_pow(k); }
Generator z(int a, int alpha) { return Generator::z(a, alpha); }
Generator zs(int a, int alpha) { return Generator::zstar(a, alpha); }

std::vector<Generator> all_generators(const AlgebraConfig& cfg) {
  std::vector<Generator> out;
  for (int a = 1; a <= cfg.n; ++a)
    for (int alpha = 1; alpha <= cfg.m; ++alpha) {
      out.push_back(z(a, alpha));
      out.push_back(zs(a, alpha));
    }
  return out;
}

}  // namespace

TEST(Fock, DimensionsFollowBinomials) {
  for (auto [m, n] : {std::pair{1, 1}, {1, 2}, {2, 2}}) {
    PolAlgebra<Laurent> alg({m, n}, {});
    FockSpace<Laurent> fock(alg);
    for (int k = 0; k <= 4; ++k) EXPECT_EQ(fock.dim(k), static_cast<std::size_t>(binomial(m * n + k - 1, k)));
  }
}

TEST(Fock, AnnihilatorOnFirstLevel) {
  PolAlgebra<Laurent> alg({1, 1}, {});
  FockSpace<Laurent> fock(alg);
  auto m = fock.act_block(alg.generator(zs(1, 1)), 1, 0);
  ASSERT_EQ(m.rows(), 1u);
  EXPECT_EQ(m(0, 0), Laurent(1) - q(2));
  // the vacuum is killed
  EXPECT_TRUE(fock.apply_letter(zs(1, 1), alg.one()).is_zero());
}

TEST(Fock, DegreeShiftOfGenerators) {
  PolAlgebra<Laurent> alg({2, 2}, {});
  FockSpace<Laurent> fock(alg);
  for (const auto& g : all_generators(alg.config()))
    for (int k = 0; k <= 2; ++k) {
      auto blocks = fock.act(alg.generator(g), k);
      for (const auto& [t, b] : blocks) EXPECT_EQ(t, g.is_star() ? k - 1 : k + 1) << g.to_string();
      if (!g.is_star()) EXPECT_EQ(blocks.size(), 1u);
    }
}

TEST(Fock, SmallGramMatrices) {
  PolAlgebra<Laurent> alg({2, 2}, {});
  FockSpace<Laurent> fock(alg);
  EXPECT_EQ(fock.gram(0), Matrix<Laurent>::identity(1));
  auto g1 = Matrix<Laurent>::identity(4);
  g1 *= Laurent(1) - q(2);
  EXPECT_EQ(fock.gram(1), g1);

  PolAlgebra<Laurent> one({1, 1}, {});
  FockSpace<Laurent> f1(one);
  EXPECT_EQ(f1.gram(2)(0, 0), (Laurent(1) - q(2)) * (Laurent(1) - q(4)));
}

TEST(Fock, GramAgreesWithVacuumFunctional) {
  for (auto [m, n] : {std::pair{1, 2}, {2, 2}}) {
    PolAlgebra<Laurent> alg({m, n}, {});
    FockSpace<Laurent> fock(alg);
    for (int k = 0; k <= 2; ++k) {
      const auto g = fock.gram(k);
      const auto& b = fock.basis(k);
      for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) {
          auto fi = Element<Laurent>::term(b[i]);
          auto fj = Element<Laurent>::term(b[j]);
          EXPECT_EQ(g(i, j), alg.omega(alg.multiply(alg.involution(fj), fi)));
        }
    }
  }
}

TEST(Fock, GramIsSymmetric) {
  PolAlgebra<Laurent> alg({2, 2}, {});
  FockSpace<Laurent> fock(alg);
  for (int k = 0; k <= 3; ++k) EXPECT_EQ(fock.gram(k), fock.gram(k).transpose());
}

TEST(Fock, GeneratorsAreAdjointForTheForm) {
  for (auto [m, n] : {std::pair{1, 2}, {2, 2}}) {
    PolAlgebra<Laurent> alg({m, n}, {});
    FockSpace<Laurent> fock(alg);
    for (const auto& g : all_generators(alg.config())) {
      if (g.is_star()) continue;
      for (int k = 0; k <= 2; ++k) {
        auto up = fock.act_block(alg.generator(g), k, k + 1);
        auto down = fock.act_block(alg.generator(g.adjoint()), k + 1, k);
        EXPECT_EQ(fock.gram(k + 1) * up, down.transpose() * fock.gram(k)) << g.to_string() << " k=" << k;
      }
    }
  }
}

TEST(Positivity, TwistedCcrGramDiagonal) {
  PolAlgebra<Rational> alg({1, 1}, Field<Rational>(Rational(1, 2)));
  FockSpace<Rational> fock(alg);
  Rational expected(1);
  for (int k = 0; k <= 5; ++k) {
    if (k > 0) expected *= Rational(1) - Rational(1, 2).pow(2 * k);
    EXPECT_EQ(fock.gram(k)(0, 0), expected);
  }
  for (const auto& e : positivity_check(fock, 5)) EXPECT_TRUE(e.positive) << e.degree;
}

TEST(Positivity, TwoByTwoAtSeveralQ) {
  for (auto qv : {Rational(1, 10), Rational(1, 2), Rational(9, 10)}) {
    PolAlgebra<Rational> alg({2, 2}, Field<Rational>(qv));
    FockSpace<Rational> fock(alg);
    for (const auto& e : positivity_check(fock, 3)) EXPECT_TRUE(e.positive) << qv << " k=" << e.degree;
  }
}

TEST(Positivity, DetectsIndefiniteFormOutsideTheUnitInterval) {
  // q > 1 flips the sign of 1 - q^2, so the checker must object at degree 1.
  PolAlgebra<Rational> alg({1, 2}, Field<Rational>(Rational(2)));
  FockSpace<Rational> fock(alg);
  auto report = positivity_check(fock, 1);
  EXPECT_TRUE(report[0].positive);
  EXPECT_FALSE(report[1].positive);
  ASSERT_TRUE(report[1].failing_index.has_value());
  EXPECT_EQ(*report[1].failing_index, 0u);
  EXPECT_EQ(report[1].failing_pivot, Rational(-3));
}

TEST(VacuumKernel, TrivialInPositiveDegree) {
  PolAlgebra<Laurent> sym({2, 2}, {});
  FockSpace<Laurent> fs(sym);
  for (int k = 1; k <= 3; ++k) EXPECT_EQ(vacuum_kernel_dim(fs, k), 0u) << k;

  PolAlgebra<Rational> alg({1, 2}, Field<Rational>(Rational(1, 2)));
  FockSpace<Rational> fock(alg);
  for (int k = 1; k <= 4; ++k) EXPECT_EQ(vacuum_kernel_dim(fock, k), 0u) << k;
  // the vacuum itself is the common kernel in degree 0
  EXPECT_EQ(vacuum_kernel_dim(fock, 0), 1u);
}

TEST(YSpectrum, ScalarOnEachLevel) {
  for (auto [m, n] : {std::pair{1, 1}, {1, 2}, {2, 2}}) {
    PolAlgebra<Laurent> alg({m, n}, {});
    FockSpace<Laurent> fock(alg);
    auto spec = y_spectrum(fock, 3);
    ASSERT_EQ(spec.size(), 4u);
    for (const auto& [k, v] : spec) EXPECT_EQ(v, q(2 * k));
  }
}

TEST(YSpectrum, FixedQValues) {
  PolAlgebra<Rational> alg({1, 1}, Field<Rational>(Rational(1, 3)));
  FockSpace<Rational> fock(alg);
  auto spec = y_spectrum(fock, 2);
  EXPECT_EQ(spec[2].second, Rational(1, 81));
}
