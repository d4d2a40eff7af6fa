#include "qmb/errors.hpp"
#include "qmb/tildeg.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace qmb;

namespace {

const Rational kHalf(1, 2);
Field<Rational> half() { return Field<Rational>(kHalf); }
Laurent q(int k) { return Laurent::q_pow(k); }

template <Scalar S>
void expect_same(const TruncatedOperator<S>& a, const TruncatedOperator<S>& b, const std::string& what) {
  ASSERT_GE(std::min(a.valid_degree(), b.valid_degree()), 0) << what << ": nothing left to compare";
  auto mm = compare_on_valid(a, b);
  EXPECT_FALSE(mm.has_value()) << what << ": source " << mm->source << " target " << mm->target << " lhs "
                               << mm->lhs << " rhs " << mm->rhs;
}

std::vector<int> range(int from, int to) {
  std::vector<int> v(to - from + 1);
  std::iota(v.begin(), v.end(), from);
  return v;
}

}  // namespace

TEST(ReducedWord, Examples) {
  auto w = reduced_word(2, 3);
  std::vector<int> ps;
  for (auto s : w) ps.push_back(s.p);
  EXPECT_EQ(ps, (std::vector<int>{2, 3, 4, 1, 2, 3}));
  ASSERT_EQ(reduced_word(1, 1).size(), 1u);
  EXPECT_EQ(reduced_word(1, 1)[0].p, 1);
  EXPECT_EQ(reduced_word(1, 2), (std::vector<Transposition>{{1}, {2}}));
}

TEST(ReducedWord, ComposesToU) {
  // u sends k to m+k for k <= n and n+k to k.
  for (auto [m, n] : {std::pair{1, 1}, {1, 3}, {2, 2}, {2, 3}, {3, 3}}) {
    const int N = m + n;
    std::vector<int> u(N + 1);
    std::iota(u.begin(), u.end(), 0);
    for (auto s : reduced_word(m, n)) {
      std::vector<int> next = u;
      for (int i = 1; i <= N; ++i) next[i] = u[i == s.p ? s.p + 1 : (i == s.p + 1 ? s.p : i)];
      u = next;
    }
    for (int k = 1; k <= n; ++k) EXPECT_EQ(u[k], m + k);
    for (int k = 1; k <= m; ++k) EXPECT_EQ(u[n + k], k);
  }
}

TEST(TensorSpace, CountsAndOrder) {
  TensorSpace sp(4, 3);
  EXPECT_EQ(sp.size(), 35u);  // C(3+4, 4)
  EXPECT_EQ(sp.index(0), (std::vector<int>{0, 0, 0, 0}));
  for (std::size_t i = 1; i < sp.size(); ++i) EXPECT_LE(sp.degree(i - 1), sp.degree(i));
  EXPECT_EQ(sp.of_degree(2).size(), 10u);
  EXPECT_FALSE(sp.find({4, 0, 0, 0}).has_value());
}

TEST(PiPlus, MatrixEntries) {
  Field<Laurent> f;
  auto t11 = pi_plus(1, 1, 4, f);
  auto t22 = pi_plus(2, 2, 4, f);
  auto t12 = pi_plus(1, 2, 4, f);
  auto t21 = pi_plus(2, 1, 4, f);
  EXPECT_EQ(t11.entry(1, 0), Laurent(1));
  EXPECT_TRUE(t22.column(0).empty());
  EXPECT_EQ(t22.entry(0, 1), Laurent(1) - q(-2));
  EXPECT_EQ(t22.entry(2, 3), Laurent(1) - q(-6));
  EXPECT_EQ(t12.entry(3, 3), q(-3));
  EXPECT_EQ(t21.entry(2, 2), -q(-3));
  // t11 raises, so its top column is not trusted
  EXPECT_EQ(t11.valid_degree(), 3);
  EXPECT_THROW(t11.apply({{4, Laurent(1)}}), ValidityError);
}

TEST(PiPlus, DeterminantIsOne) {
  Field<Laurent> f;
  auto det = pi_plus(1, 1, 5, f).compose(pi_plus(2, 2, 5, f)) -
             pi_plus(1, 2, 5, f).compose(pi_plus(2, 1, 5, f)).scaled(q(1));
  expect_same(det, TruncatedOperator<Laurent>::identity(std::make_shared<TensorSpace>(1, 5)), "det_q");
}

TEST(Ttilde, OneByOneIsPiPlus) {
  TildeG<Laurent> g({1, 1}, {}, 4);
  for (std::size_t k = 0; k <= 4; ++k) EXPECT_EQ(g.ttilde(1, 2).entry(k, k), q(-static_cast<int>(k)));
}

TEST(Ttilde, TwoByTwoPatterns) {
  TildeG<Rational> g({2, 2}, half(), 4);
  EXPECT_EQ(g.ttilde(1, 4).nonzeros(), 0u);
  // t13 acts as 1 (x) 1 (x) t12 (x) t12
  const auto op = g.ttilde(1, 3);
  const auto& sp = g.rep().space();
  for (std::size_t i = 0; i < sp->size(); ++i) {
    const auto& k = sp->index(i);
    ASSERT_EQ(op.column(i).size(), 1u);
    EXPECT_EQ(op.entry(i, i), kHalf.pow(-(k[2] + k[3])));
  }
}

TEST(Ttilde, DiagonalElements) {
  for (auto [m, n] : {std::pair{1, 1}, {1, 2}, {2, 2}}) {
    TildeG<Rational> g({m, n}, half(), 4);
    const auto& sp = *g.rep().space();
    auto t = g.t();
    auto x = g.x();
    for (std::size_t i = 0; i < sp.size(); ++i) {
      EXPECT_EQ(t.column(i).size(), 1u);
      EXPECT_EQ(t.entry(i, i), kHalf.pow(-sp.degree(i)));
      EXPECT_EQ(x.entry(i, i), kHalf.pow(-2 * sp.degree(i)));
    }
    expect_same(g.t_inverse().compose(t), g.rep().identity(), "t^-1 t");
    expect_same(g.x_inverse().compose(x), g.rep().identity(), "x^-1 x");
    expect_same(g.t_inverse().compose(g.adjoint(g.t_inverse())), g.x_inverse(), "x^-1 = t^-1 t^-1*");
    expect_same(g.adjoint(t), t, "t self adjoint");
  }
}

TEST(Adjoint, Involutive) {
  TildeG<Rational> g({1, 2}, half(), 5);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) expect_same(g.adjoint(g.adjoint(g.ttilde(i, j))), g.ttilde(i, j), "A++");
}

TEST(Adjoint, OneByOneRaisingOperator) {
  // t11^* = -t22 for m = n = 1
  TildeG<Laurent> g({1, 1}, {}, 4);
  expect_same(g.adjoint(g.ttilde(1, 1)), g.ttilde(2, 2).scaled(Laurent(-1)), "t11^+");
  expect_same(g.star_of_generator(1, 1), g.ttilde(2, 2).scaled(Laurent(-1)), "star formula");
}

TEST(Adjoint, WeightedInnerProduct) {
  TildeG<Rational> g({1, 2}, half(), 4);
  auto a = g.ttilde(1, 2);
  auto ad = g.adjoint(a);
  const auto& sp = *g.rep().space();
  for (std::size_t u = 0; u < sp.size(); ++u)
    for (std::size_t v = 0; v < sp.size(); ++v) {
      if (!a.is_valid_source(u) || !ad.is_valid_source(v)) continue;
      SparseVector<Rational> eu{{u, Rational(1)}}, ev{{v, Rational(1)}};
      EXPECT_EQ(g.rep().inner(a.apply(eu), ev), g.rep().inner(eu, ad.apply(ev)));
    }
}

TEST(Types, ChainAndSigns) {
  EXPECT_EQ(lambda1(1, 1), -1);
  EXPECT_EQ(lambda1(2, 1), 1);
  EXPECT_EQ(lambda2(1, 1), 1);
  EXPECT_EQ(lambda2(2, 1), -1);
  auto chain = type_chain(1, 1);
  ASSERT_EQ(chain.size(), 2u);
  EXPECT_EQ(chain[0], (std::vector<int>{-1, 1}));
  EXPECT_EQ(chain[1], (std::vector<int>{1, -1}));
  for (auto [m, n] : {std::pair{1, 2}, {2, 2}, {2, 3}, {3, 3}}) {
    auto c = type_chain(m, n);
    ASSERT_EQ(c.size(), static_cast<std::size_t>(m * n + 1));
    for (int k = 1; k <= m + n; ++k) EXPECT_EQ(c.back()[k - 1], lambda2(k, n));
  }
}

TEST(Types, EachFactorHasItsType) {
  EXPECT_TRUE(factor_has_type(2, 1, {-1, 1}, {1, -1}, 4, half()));
  EXPECT_FALSE(factor_has_type(2, 1, {1, -1}, {1, -1}, 4, half()));
  for (auto [m, n] : {std::pair{1, 2}, {2, 2}}) {
    auto chain = type_chain(m, n);
    auto word = reduced_word(m, n);
    for (std::size_t r = 0; r < word.size(); ++r)
      EXPECT_TRUE(factor_has_type(m + n, word[r].p, chain[r], chain[r + 1], 3, half())) << r;
  }
}

TEST(Types, StarIdentityForEveryGenerator) {
  for (auto [m, n] : {std::pair{1, 1}, {1, 2}, {2, 2}}) {
    TildeG<Rational> g({m, n}, half(), 4);
    for (int i = 1; i <= m + n; ++i)
      for (int j = 1; j <= m + n; ++j)
        expect_same(g.adjoint(g.ttilde(i, j)), g.star_of_generator(i, j),
                    "t" + std::to_string(i) + std::to_string(j));
  }
}

TEST(Types, StarIdentitySymbolic) {
  TildeG<Laurent> g({1, 2}, {}, 3);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) expect_same(g.adjoint(g.ttilde(i, j)), g.star_of_generator(i, j), "sym");
}

TEST(Relations, QuantumMatrixRelations) {
  TildeG<Rational> g({2, 2}, half(), 4);
  const int N = 4;
  const Rational qv = kHalf;
  for (int al = 1; al <= N; ++al)
    for (int a = 1; a <= N; ++a)
      for (int be = 1; be <= N; ++be)
        for (int b = 1; b <= N; ++b) {
          auto x = g.ttilde(al, a), y = g.ttilde(be, b);
          auto xy = x.compose(y), yx = y.compose(x);
          if ((a == b && al < be) || (a < b && al == be)) expect_same(xy, yx.scaled(qv), "taa1");
          if (al < be && a > b) expect_same(xy, yx, "taa2");
          if (al < be && a < b)
            expect_same(xy - yx, g.ttilde(be, a).compose(g.ttilde(al, b)).scaled(qv - Rational(1) / qv), "taa3");
        }
  expect_same(g.q_minor_t(range(1, 4), range(1, 4)), g.rep().identity(), "det_q");
}

TEST(Relations, QuasiCommutationWithX) {
  TildeG<Rational> g({2, 2}, half(), 5);
  auto x = g.x();
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) {
      auto t = g.ttilde(i, j);
      const int d = g.t_degree(i, j);
      expect_same(t.compose(x), x.compose(t).scaled(kHalf.pow(2 * d)), "x quasi-commutes");
    }
}

TEST(Embedding, ColumnsAndDegree) {
  TildeG<Rational> g23({2, 3}, half(), 2);
  EXPECT_EQ(g23.embedding_columns(1, 2), (std::vector<int>{1, 5}));
  TildeG<Rational> g({2, 2}, half(), 4);
  for (int a = 1; a <= 2; ++a)
    for (int al = 1; al <= 2; ++al) {
      EXPECT_EQ(g.embed_z(a, al).exact_shift(), std::optional<int>(1));
      EXPECT_EQ(g.embed(Generator::zstar(a, al)).exact_shift(), std::optional<int>(-1));
    }
}

TEST(Embedding, OneByOneNormRatio) {
  TildeG<Laurent> g({1, 1}, {}, 4);
  auto z = g.embed_z(1, 1);
  SparseVector<Laurent> e0{{0, Laurent(1)}};
  auto v = z.apply(e0);
  EXPECT_EQ(g.rep().inner(v, v), Laurent(1) - q(2));
}
