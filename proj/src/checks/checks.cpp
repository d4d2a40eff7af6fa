#include "qmb/checks.hpp"

#include <functional>
#include <numeric>
#include <random>
#include <sstream>

namespace qmb {

namespace {

void fail(CheckReport& rep, const std::string& witness) {
  if (rep.verdict == Verdict::Fail) return;
  rep.verdict = Verdict::Fail;
  rep.witness = witness;
}

template <Scalar S>
std::vector<Word> words_up_to(const PolAlgebra<S>& alg, int max_degree) {
  std::vector<Word> out;
  for (int d = 0; d <= max_degree; ++d)
    for (int i = 0; i <= d; ++i)
      for (auto& w : alg.graded_basis(i, d - i)) out.push_back(std::move(w));
  return out;
}

template <Scalar S>
std::vector<Generator> all_generators(const AlgebraConfig& cfg) {
  std::vector<Generator> out;
  for (int a = 1; a <= cfg.n; ++a)
    for (int alpha = 1; alpha <= cfg.m; ++alpha) {
      out.push_back(Generator::z(a, alpha));
      out.push_back(Generator::zstar(a, alpha));
    }
  return out;
}

std::string mismatch_text(const OperatorMismatch& mm) {
  return "entry (" + std::to_string(mm.target) + "," + std::to_string(mm.source) + "): " + mm.lhs + " vs " + mm.rhs;
}

template <Scalar S>
bool same_on_valid(CheckReport& rep, const TruncatedOperator<S>& a, const TruncatedOperator<S>& b,
                   const std::string& what) {
  if (std::min(a.valid_degree(), b.valid_degree()) < 0) throw ValidityError(what + " has no exact range at this cutoff");
  if (auto mm = compare_on_valid(a, b)) {
    fail(rep, what + ": " + mismatch_text(*mm));
    return false;
  }
  return true;
}

}  // namespace

template <Scalar S>
CheckReport dimension_check(const PolAlgebra<S>& alg, int max_degree) {
  const auto& cfg = alg.config();
  return timed(make_report("dimensions", cfg, alg.field(), max_degree), [&](CheckReport& rep) {
    const int mn = cfg.m * cfg.n;
    std::ostringstream counts;
    for (int d = 0; d <= max_degree; ++d)
      for (int i = 0; i <= d; ++i) {
        const int j = d - i;
        const auto got = static_cast<long long>(alg.graded_basis(i, j).size());
        const long long want = binomial(mn + i - 1, i) * binomial(mn + j - 1, j);
        if (j == 0) counts << (i ? "," : "") << got;
        if (got != want)
          fail(rep, "bidegree (" + std::to_string(i) + "," + std::to_string(-j) + "): " + std::to_string(got) +
                        " words, expected " + std::to_string(want));
      }
    rep.details.emplace_back("holomorphic_dims", counts.str());
  });
}

template <Scalar S>
CheckReport associativity_check(const PolAlgebra<S>& alg, int max_degree, int samples) {
  return timed(make_report("associativity", alg.config(), alg.field(), max_degree), [&](CheckReport& rep) {
    std::size_t checked = 0;
    auto probe = [&](const Word& a, const Word& b, const Word& c) {
      const auto ea = Element<S>::term(a), eb = Element<S>::term(b), ec = Element<S>::term(c);
      ++checked;
      if (alg.multiply(alg.multiply(ea, eb), ec) != alg.multiply(ea, alg.multiply(eb, ec))) {
        fail(rep, "(" + to_string(a) + ")(" + to_string(b) + ")(" + to_string(c) + ")");
        return false;
      }
      return true;
    };
    const auto small = words_up_to(alg, std::min(1, max_degree));
    for (const auto& a : small)
      for (const auto& b : small)
        for (const auto& c : small)
          if (!probe(a, b, c)) return;
    const auto big = words_up_to(alg, max_degree);
    std::mt19937 rng(20240917u);
    std::uniform_int_distribution<std::size_t> pick(0, big.size() - 1);
    for (int s = 0; s < samples; ++s)
      if (!probe(big[pick(rng)], big[pick(rng)], big[pick(rng)])) return;
    rep.details.emplace_back("triples", std::to_string(checked));
  });
}

template <Scalar S>
CheckReport involution_check(const PolAlgebra<S>& alg, int max_degree) {
  return timed(make_report("involution", alg.config(), alg.field(), max_degree), [&](CheckReport& rep) {
    const auto words = words_up_to(alg, max_degree);
    std::size_t checked = 0;
    for (const auto& a : words) {
      const auto ea = Element<S>::term(a);
      if (alg.involution(alg.involution(ea)) != ea) return fail(rep, "** != id on " + to_string(a));
      for (const auto& b : words) {
        if (static_cast<int>(a.size() + b.size()) > max_degree) continue;
        const auto eb = Element<S>::term(b);
        ++checked;
        if (alg.involution(alg.multiply(ea, eb)) != alg.multiply(alg.involution(eb), alg.involution(ea)))
          return fail(rep, "(ab)^* != b^* a^* for a = " + to_string(a) + ", b = " + to_string(b));
      }
    }
    rep.details.emplace_back("pairs", std::to_string(checked));
  });
}

template <Scalar S>
CheckReport y_commutation_check(const PolAlgebra<S>& alg) {
  return timed(make_report("y_commutation", alg.config(), alg.field(), 0), [&](CheckReport& rep) {
    const auto y = alg.element_y();
    for (const auto& g : all_generators<S>(alg.config())) {
      const auto e = alg.generator(g);
      const S c = alg.field().q_pow(g.is_star() ? 2 : -2);
      if (alg.multiply(e, y) != alg.multiply(y, e) * c)
        return fail(rep, g.to_string() + " y != q^" + std::string(g.is_star() ? "2" : "-2") + " y " + g.to_string());
    }
    rep.details.emplace_back("y_terms", std::to_string(y.size()));
  });
}

CheckReport positivity_report(const FockSpace<Rational>& fock, int k_max) {
  const auto& alg = fock.algebra();
  return timed(make_report("positivity", alg.config(), alg.field(), k_max), [&](CheckReport& rep) {
    for (const auto& e : positivity_check(fock, k_max))
      if (!e.positive) {
        fail(rep, "G_" + std::to_string(e.degree) + " pivot " + std::to_string(e.failing_index.value_or(0)) + " is " +
                      e.failing_pivot.to_string());
        return;
      }
    rep.details.emplace_back("degrees", std::to_string(k_max + 1));
  });
}

template <Scalar S>
CheckReport y_spectrum_check(const FockSpace<S>& fock, int k_max) {
  const auto& alg = fock.algebra();
  return timed(make_report("y_spectrum", alg.config(), alg.field(), k_max), [&](CheckReport& rep) {
    try {
      std::ostringstream ev;
      for (const auto& [k, value] : y_spectrum(fock, k_max)) ev << (k ? "; " : "") << scalar_repr(value);
      rep.details.emplace_back("eigenvalues", ev.str());
    } catch (const SpectrumMismatch& e) {
      fail(rep, e.what());
    }
  });
}

template <Scalar S>
CheckReport vacuum_kernel_check(const FockSpace<S>& fock, int k_max) {
  const auto& alg = fock.algebra();
  return timed(make_report("vacuum_kernel", alg.config(), alg.field(), k_max), [&](CheckReport& rep) {
    for (int k = 1; k <= k_max; ++k)
      if (const auto d = vacuum_kernel_dim(fock, k); d != 0)
        return fail(rep, "degree " + std::to_string(k) + " has a " + std::to_string(d) + "-dimensional vacuum space");
  });
}

template <Scalar S>
CheckReport fock_adjointness_check(const FockSpace<S>& fock, int k_max) {
  const auto& alg = fock.algebra();
  return timed(make_report("fock_adjointness", alg.config(), alg.field(), k_max), [&](CheckReport& rep) {
    for (int k = 0; k < k_max; ++k) {
      const auto gk = fock.gram(k), gk1 = fock.gram(k + 1);
      for (const auto& g : all_generators<S>(alg.config())) {
        if (g.is_star()) continue;
        const auto up = fock.act_block(alg.generator(g), k, k + 1);
        const auto down = fock.act_block(alg.generator(g.adjoint()), k + 1, k);
        if (gk1 * up != down.transpose() * gk)
          return fail(rep, g.to_string() + " on degree " + std::to_string(k));
      }
    }
  });
}

template <Scalar S>
CheckReport t_relations_check(const TildeG<S>& g) {
  return timed(make_report("t_relations", g.config(), g.rep().field(), g.cutoff()), [&](CheckReport& rep) {
    const int N = g.config().N();
    const S q = g.rep().field().q_pow(1);
    const S q_diff = q - g.rep().field().q_pow(-1);
    std::size_t checked = 0;
    for (int al = 1; al <= N; ++al)
      for (int a = 1; a <= N; ++a)
        for (int be = 1; be <= N; ++be)
          for (int b = 1; b <= N; ++b) {
            const auto x = g.ttilde(al, a), y = g.ttilde(be, b);
            const std::string idx = "t" + std::to_string(al) + std::to_string(a) + " t" + std::to_string(be) +
                                    std::to_string(b);
            bool ok = true;
            if ((a == b && al < be) || (a < b && al == be)) {
              ok = same_on_valid(rep, x.compose(y), y.compose(x).scaled(q), idx + " = q t t");
              ++checked;
            } else if (al < be && a > b) {
              ok = same_on_valid(rep, x.compose(y), y.compose(x), idx + " commute");
              ++checked;
            } else if (al < be && a < b) {
              ok = same_on_valid(rep, x.compose(y) - y.compose(x),
                                 g.ttilde(be, a).compose(g.ttilde(al, b)).scaled(q_diff), idx + " cross relation");
              ++checked;
            }
            if (!ok) return;
          }
    std::vector<int> all(N);
    std::iota(all.begin(), all.end(), 1);
    if (!same_on_valid(rep, g.q_minor_t(all, all), g.rep().identity(), "det_q t = 1")) return;
    rep.details.emplace_back("relations", std::to_string(checked + 1));
  });
}

template <Scalar S>
CheckReport diagonal_check(const TildeG<S>& g) {
  return timed(make_report("diagonal_t_x", g.config(), g.rep().field(), g.cutoff()), [&](CheckReport& rep) {
    const auto& sp = *g.rep().space();
    const auto t = g.t(), x = g.x();
    const auto& f = g.rep().field();
    for (std::size_t i = 0; i < sp.size(); ++i) {
      if (t.is_valid_source(i)) {
        const auto& col = t.column(i);
        if (col.size() != 1 || !(t.entry(i, i) == f.q_pow(-sp.degree(i))))
          return fail(rep, "t is not q^{-sum k} at basis vector " + std::to_string(i));
      }
      if (x.is_valid_source(i)) {
        const auto& col = x.column(i);
        if (col.size() != 1 || !(x.entry(i, i) == f.q_pow(-2 * sp.degree(i))))
          return fail(rep, "x is not q^{-2 sum k} at basis vector " + std::to_string(i));
      }
    }
    same_on_valid(rep, g.x_inverse().compose(x), g.rep().identity(), "x^-1 x = 1");
  });
}

template <Scalar S>
CheckReport star_identity_check(const TildeG<S>& g) {
  return timed(make_report("star_identity", g.config(), g.rep().field(), g.cutoff()), [&](CheckReport& rep) {
    const int N = g.config().N();
    for (int i = 1; i <= N; ++i)
      for (int j = 1; j <= N; ++j)
        if (!same_on_valid(rep, g.adjoint(g.ttilde(i, j)), g.star_of_generator(i, j),
                           "t" + std::to_string(i) + std::to_string(j) + "^*"))
          return;
  });
}

template <Scalar S>
CheckReport weighted_adjoint_check(const TildeG<S>& g) {
  return timed(make_report("weighted_adjoint", g.config(), g.rep().field(), g.cutoff()), [&](CheckReport& rep) {
    const int N = g.config().N();
    const auto& sp = *g.rep().space();
    std::size_t checked = 0;
    for (int i = 1; i <= N; ++i)
      for (int j = 1; j <= N; ++j) {
        const auto a = g.ttilde(i, j);
        const auto ad = g.adjoint(a);
        for (std::size_t u = 0; u < sp.size(); ++u) {
          if (!a.is_valid_source(u)) continue;
          const SparseVector<S> eu{{u, S(1)}};
          const auto au = a.apply(eu);
          for (std::size_t v = 0; v < sp.size(); ++v) {
            if (!ad.is_valid_source(v)) continue;
            const SparseVector<S> ev{{v, S(1)}};
            ++checked;
            if (!(g.rep().inner(au, ev) == g.rep().inner(eu, ad.apply(ev))))
              return fail(rep, "t" + std::to_string(i) + std::to_string(j) + " on (" + std::to_string(u) + "," +
                                   std::to_string(v) + ")");
          }
        }
      }
    rep.details.emplace_back("pairs", std::to_string(checked));
  });
}

#define QMB_INSTANTIATE(S)                                                  \
  template CheckReport dimension_check(const PolAlgebra<S>&, int);         \
  template CheckReport associativity_check(const PolAlgebra<S>&, int, int); \
  template CheckReport involution_check(const PolAlgebra<S>&, int);        \
  template CheckReport y_commutation_check(const PolAlgebra<S>&);          \
  template CheckReport y_spectrum_check(const FockSpace<S>&, int);         \
  template CheckReport vacuum_kernel_check(const FockSpace<S>&, int);      \
  template CheckReport fock_adjointness_check(const FockSpace<S>&, int);   \
  template CheckReport t_relations_check(const TildeG<S>&);                \
  template CheckReport diagonal_check(const TildeG<S>&);                   \
  template CheckReport star_identity_check(const TildeG<S>&);              \
  template CheckReport weighted_adjoint_check(const TildeG<S>&);

QMB_INSTANTIATE(Rational)
QMB_INSTANTIATE(Laurent)
#undef QMB_INSTANTIATE

}  // namespace qmb
