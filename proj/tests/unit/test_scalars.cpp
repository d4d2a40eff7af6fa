#include "qmb/field.hpp"
#include "qmb/errors.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using qmb::Laurent;
using qmb::Rational;

namespace {

Laurent q(int k) { return Laurent::q_pow(k); }

Laurent random_laurent(std::mt19937& rng, int max_exp = 6) {
  std::uniform_int_distribution<int> exp(-max_exp, max_exp), coeff(-5, 5), count(0, 4);
  Laurent p;
  int terms = count(rng);
  for (int i = 0; i < terms; ++i) p += Laurent::monomial(exp(rng), Rational(coeff(rng), 1 + (i % 3)));
  return p;
}

}  // namespace

TEST(Rational, NormalizesAndParses) {
  EXPECT_EQ(Rational(2, 4), Rational(1, 2));
  EXPECT_EQ(Rational(3, -6).to_string(), "-1/2");
  EXPECT_EQ(Rational::parse("-10/4"), Rational(-5, 2));
  EXPECT_EQ(Rational::parse("7"), Rational(7));
  EXPECT_THROW(Rational::parse("1/0"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("abc"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("1/-2"), std::invalid_argument);
  EXPECT_EQ(Rational::from_double(0.375), Rational(3, 8));
}

TEST(Rational, SqrtAndPow) {
  EXPECT_EQ(*Rational(9, 4).exact_sqrt(), Rational(3, 2));
  EXPECT_FALSE(Rational(1, 2).exact_sqrt().has_value());
  EXPECT_EQ(Rational(2, 3).pow(-2), Rational(9, 4));
  EXPECT_EQ(Rational(5).pow(0), Rational(1));
}

TEST(Laurent, Arithmetic) {
  EXPECT_TRUE(((q(1) - q(-1)) + (q(-1) - q(1))).is_zero());
  EXPECT_EQ(Laurent::monomial(1) * Laurent::monomial(1), q(1));
  EXPECT_EQ((Laurent(1) - q(2)) * (Laurent(1) + q(2)), Laurent(1) - q(4));
}

TEST(Laurent, Evaluate) {
  EXPECT_EQ((Laurent(1) - q(2)).evaluate(Rational(1, 2)), Rational(3, 4));
  EXPECT_EQ((q(-2) - Laurent(1)).evaluate(Rational(1, 2)), Rational(3));
  EXPECT_EQ(Laurent::monomial(1).evaluate(Rational(1, 4)), Rational(1, 2));
  EXPECT_THROW(Laurent::monomial(1).evaluate(Rational(1, 2)), qmb::NonSquareEvaluation);
}

TEST(Laurent, ToDouble) {
  EXPECT_DOUBLE_EQ(q(1).to_double(0.5), 0.5);
  EXPECT_DOUBLE_EQ(q(-1).to_double(0.5), 2.0);
  EXPECT_DOUBLE_EQ((Laurent(1) - q(2)).to_double(0.5), 0.75);
}

TEST(Laurent, TextForms) {
  EXPECT_EQ((Laurent(1) - q(2)).to_string(), "1-q^2");
  EXPECT_EQ(Laurent::monomial(1).to_string(), "q^(1/2)");
  EXPECT_EQ((q(-1) * Rational(-3)).to_string(), "-3*q^-1");
  EXPECT_EQ((Laurent(1) - q(2)).to_json_string(), "1*q^(0/2) + -1*q^(4/2)");
  EXPECT_EQ(Laurent().to_string(), "0");
}

TEST(Laurent, RingAxiomsOnRandomTriples) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Laurent a = random_laurent(rng), b = random_laurent(rng), c = random_laurent(rng);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(Laurent, EvaluationIsMultiplicative) {
  std::mt19937 rng(11);
  const Rational values[] = {Rational(1, 2), Rational(1, 10), Rational(9, 10), Rational(1, 4)};
  for (int trial = 0; trial < 100; ++trial) {
    Laurent a = random_laurent(rng), b = random_laurent(rng);
    for (const auto& v : values) {
      if (!v.exact_sqrt() && (a.has_odd_powers() || b.has_odd_powers() || (a * b).has_odd_powers())) continue;
      EXPECT_EQ((a * b).evaluate(v), a.evaluate(v) * b.evaluate(v));
    }
  }
}

TEST(Laurent, ExactAndFloatEvaluationAgree) {
  for (int e = -40; e <= 40; ++e) {
    Laurent p = Laurent::q_pow(e) * Rational(3, 7) + Laurent(1);
    double exact = p.evaluate(Rational(1, 2)).to_double();
    double approx = p.to_double(0.5);
    EXPECT_LE(std::abs(exact - approx), 1e-12 * std::abs(exact)) << "exponent " << e;
  }
}

TEST(Field, RationalHalfPowers) {
  qmb::Field<Rational> quarter(Rational(1, 4));
  EXPECT_EQ(quarter.q_half_pow(1), Rational(1, 2));
  EXPECT_EQ(quarter.q_half_pow(-3), Rational(8));
  qmb::Field<Rational> half(Rational(1, 2));
  EXPECT_EQ(half.q_pow(-2), Rational(4));
  EXPECT_THROW(half.q_half_pow(1), qmb::NonSquareEvaluation);
  EXPECT_THROW(qmb::Field<Rational>(Rational(0)), qmb::ConfigError);
}
