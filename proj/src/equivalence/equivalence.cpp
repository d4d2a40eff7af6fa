#include "qmb/equivalence.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace qmb {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "pass";
    case Verdict::Fail:
      return "fail";
    case Verdict::SkippedValidity:
      return "skipped-validity";
  }
  return "fail";
}

template <Scalar S>
CheckReport make_report(const std::string& name, const AlgebraConfig& cfg, const Field<S>& field, int cutoff) {
  CheckReport r;
  r.name = name;
  r.m = cfg.m;
  r.n = cfg.n;
  r.q = field.describe();
  r.cutoff = cutoff;
  return r;
}

namespace {

template <Scalar S>
void fail(CheckReport& r, const std::string& witness) {
  if (r.verdict == Verdict::Fail) return;
  r.verdict = Verdict::Fail;
  r.witness = witness;
}

template <Scalar S>
std::string vector_text(const SparseVector<S>& v, const TensorSpace& sp) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [i, c] : v) {
    if (!first) os << ", ";
    first = false;
    os << "e(";
    for (std::size_t j = 0; j < sp.index(i).size(); ++j) os << (j ? "," : "") << sp.index(i)[j];
    os << "): " << scalar_repr(c);
  }
  return os.str() + "}";
}

std::vector<Generator> generators(const AlgebraConfig& cfg, bool star) {
  std::vector<Generator> out;
  for (int a = 1; a <= cfg.n; ++a)
    for (int alpha = 1; alpha <= cfg.m; ++alpha)
      out.push_back(star ? Generator::zstar(a, alpha) : Generator::z(a, alpha));
  return out;
}

}  // namespace

// --------------------------------------------------------------- Realizations

template <Scalar S>
SparseVector<S> Realizations<S>::image_of_word(const Word& w) const {
  SparseVector<S> v{{0, S(1)}};
  for (auto it = w.rbegin(); it != w.rend(); ++it) v = tildeg_.embed(*it).apply(v);
  return v;
}

template <Scalar S>
SparseVector<S> Realizations<S>::apply_J(const Element<S>& v) const {
  SparseVector<S> out;
  for (const auto& [w, c] : v.terms())
    for (const auto& [i, x] : image_of_word(w)) {
      auto [it, inserted] = out.emplace(i, x * c);
      if (!inserted) {
        it->second += x * c;
        if (qmb::is_zero(it->second)) out.erase(it);
      }
    }
  return out;
}

template <Scalar S>
Matrix<S> Realizations<S>::build_J(int k) const {
  const auto& sp = *tildeg_.rep().space();
  const auto rows = sp.of_degree(k);
  std::map<std::size_t, std::size_t> row_of;
  for (std::size_t i = 0; i < rows.size(); ++i) row_of.emplace(rows[i], i);
  const auto& words = fock_.basis(k);
  Matrix<S> j(rows.size(), words.size());
  for (std::size_t c = 0; c < words.size(); ++c)
    for (const auto& [i, x] : image_of_word(words[c])) {
      auto it = row_of.find(i);
      if (it == row_of.end())
        throw std::logic_error("J does not preserve degree on " + to_string(words[c]));
      j(it->second, c) = x;
    }
  return j;
}

// --------------------------------------------------------------------- checks

template <Scalar S>
CheckReport j_rank_check(const Realizations<S>& r) {
  const auto& cfg = r.config();
  return timed(make_report("J_rank", cfg, r.algebra().field(), r.cutoff()), [&](CheckReport& rep) {
    std::ostringstream ranks;
    for (int k = 0; k <= r.cutoff(); ++k) {
      Matrix<S> j;
      try {
        j = r.build_J(k);
      } catch (const ValidityError&) {
        throw;
      } catch (const std::logic_error& e) {
        fail<S>(rep, e.what());
        return;
      }
      const std::size_t expected = static_cast<std::size_t>(binomial(cfg.m * cfg.n + k - 1, k));
      const std::size_t got = matrix_rank(j);
      ranks << (k ? "," : "") << got;
      if (j.rows() != expected || j.cols() != expected || got != expected)
        fail<S>(rep, "degree " + std::to_string(k) + ": J is " + std::to_string(j.rows()) + "x" +
                         std::to_string(j.cols()) + " of rank " + std::to_string(got) + ", expected " +
                         std::to_string(expected));
    }
    rep.details.emplace_back("ranks", ranks.str());
  });
}

template <Scalar S>
CheckReport intertwiner_check(const Realizations<S>& r) {
  const auto& cfg = r.config();
  return timed(make_report("intertwiner", cfg, r.algebra().field(), r.cutoff()), [&](CheckReport& rep) {
    const auto& sp = *r.tildeg().rep().space();
    std::size_t compared = 0;
    for (bool star : {false, true})
      for (const auto& g : generators(cfg, star)) {
        const int k_lo = star ? 1 : 0;
        const int k_hi = star ? r.cutoff() : r.cutoff() - 1;
        const auto op = r.tildeg().embed(g);
        for (int k = k_lo; k <= k_hi; ++k)
          for (const auto& w : r.fock().basis(k)) {
            const auto lhs = r.apply_J(r.fock().apply_letter(g, Element<S>::term(w)));
            const auto rhs = op.apply(r.image_of_word(w));
            ++compared;
            if (lhs != rhs) {
              fail<S>(rep, g.to_string() + " on " + to_string(w) + ": J T(g) = " + vector_text(lhs, sp) +
                               ", T(g) J = " + vector_text(rhs, sp));
              return;
            }
          }
      }
    rep.details.emplace_back("comparisons", std::to_string(compared));
  });
}

template <Scalar S>
CheckReport gram_match_check(const Realizations<S>& r) {
  const auto& cfg = r.config();
  return timed(make_report("gram_match", cfg, r.algebra().field(), r.cutoff()), [&](CheckReport& rep) {
    std::size_t compared = 0;
    for (int k = 0; k <= r.cutoff(); ++k) {
      const auto& words = r.fock().basis(k);
      std::vector<SparseVector<S>> images;
      for (const auto& w : words) images.push_back(r.image_of_word(w));
      const Matrix<S> g = r.fock().gram(k);
      for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = 0; j < words.size(); ++j) {
          const S lhs = r.tildeg().rep().inner(images[i], images[j]);
          ++compared;
          if (!(lhs == g(i, j))) {
            fail<S>(rep, "degree " + std::to_string(k) + " (" + to_string(words[i]) + ", " + to_string(words[j]) +
                             "): operator side " + scalar_repr(lhs) + ", Fock side " + scalar_repr(g(i, j)));
            return;
          }
        }
    }
    rep.details.emplace_back("comparisons", std::to_string(compared));
  });
}

template <Scalar S>
CheckReport minor_embedding_check(const Realizations<S>& r) {
  const auto& cfg = r.config();
  return timed(make_report("minor_embedding", cfg, r.algebra().field(), r.cutoff()), [&](CheckReport& rep) {
    const auto& g = r.tildeg();
    std::vector<int> top(cfg.m);
    std::iota(top.begin(), top.end(), 1);
    std::size_t compared = 0;
    for (int k = 1; k <= cfg.m; ++k)
      for (const auto& alphas : subsets(cfg.m, k))
        for (const auto& as : subsets(cfg.n, k)) {
          std::vector<int> rows;
          for (auto it = alphas.rbegin(); it != alphas.rend(); ++it) rows.push_back(cfg.m + 1 - *it);
          std::vector<int> cols;
          for (int c = cfg.n + 1; c <= cfg.N(); ++c)
            if (std::find(alphas.begin(), alphas.end(), c - cfg.n) == alphas.end()) cols.push_back(c);
          cols.insert(cols.end(), as.begin(), as.end());
          std::sort(cols.begin(), cols.end());
          const auto lhs = g.represent(r.algebra().q_minor_z(rows, as));
          const auto rhs = g.t_inverse().compose(g.q_minor_t(top, cols));
          if (std::min(lhs.valid_degree(), rhs.valid_degree()) < 0)
            throw ValidityError("minor of size " + std::to_string(k) + " has no exact range at this cutoff");
          ++compared;
          if (auto mm = compare_on_valid(lhs, rhs)) {
            std::ostringstream os;
            os << "rows";
            for (int x : rows) os << " " << x;
            os << " cols";
            for (int x : as) os << " " << x;
            os << ": entry (" << mm->target << "," << mm->source << ") " << mm->lhs << " vs " << mm->rhs;
            fail<S>(rep, os.str());
            return;
          }
        }
    rep.details.emplace_back("minors", std::to_string(compared));
  });
}

template <Scalar S>
CheckReport resolution_check(const TildeG<S>& g) {
  const auto& cfg = g.config();
  return timed(make_report("resolution_of_identity", cfg, g.rep().field(), g.cutoff()), [&](CheckReport& rep) {
    std::vector<int> top(cfg.m);
    std::iota(top.begin(), top.end(), 1);
    std::optional<TruncatedOperator<S>> sum;
    const auto js = subsets(cfg.N(), cfg.m);
    for (const auto& J : js) {
      const auto cnt = std::count_if(J.begin(), J.end(), [&](int j) { return j <= cfg.n; });
      const auto a = g.q_minor_t(top, J);
      auto term = a.compose(g.adjoint(a)).scaled(S(cnt % 2 ? -1L : 1L));
      sum = sum ? *sum + term : term;
    }
    if (sum->valid_degree() < 0) throw ValidityError("resolution sum has no exact range at this cutoff");
    rep.details.emplace_back("subsets", std::to_string(js.size()));
    rep.details.emplace_back("valid_degree", std::to_string(sum->valid_degree()));
    if (auto mm = compare_on_valid(*sum, g.rep().identity()))
      fail<S>(rep, "entry (" + std::to_string(mm->target) + "," + std::to_string(mm->source) + ") is " + mm->lhs +
                       ", expected " + mm->rhs);
  });
}

template <Scalar S>
CheckReport y_image_check(const Realizations<S>& r) {
  return timed(make_report("y_image", r.config(), r.algebra().field(), r.cutoff()), [&](CheckReport& rep) {
    const auto lhs = r.tildeg().represent(r.algebra().element_y());
    if (lhs.valid_degree() < 0) throw ValidityError("T(y) has no exact range at this cutoff");
    rep.details.emplace_back("valid_degree", std::to_string(lhs.valid_degree()));
    if (auto mm = compare_on_valid(lhs, r.tildeg().x_inverse()))
      fail<S>(rep, "entry (" + std::to_string(mm->target) + "," + std::to_string(mm->source) + ") is " + mm->lhs +
                       ", expected " + mm->rhs);
  });
}

template <Scalar S>
CheckReport t_star_formula_check(const TildeG<S>& g) {
  const auto& cfg = g.config();
  return timed(make_report("t_star_formula", cfg, g.rep().field(), g.cutoff()), [&](CheckReport& rep) {
    std::vector<int> rows(cfg.n), cols(cfg.n);
    std::iota(rows.begin(), rows.end(), cfg.m + 1);
    std::iota(cols.begin(), cols.end(), 1);
    const auto rhs = g.q_minor_t(rows, cols).scaled(g.rep().field().from_laurent(minus_q_pow(cfg.m * cfg.n)));
    const auto lhs = g.t_star();
    if (std::min(lhs.valid_degree(), rhs.valid_degree()) < 0)
      throw ValidityError("t^* has no exact range at this cutoff");
    if (auto mm = compare_on_valid(lhs, rhs))
      fail<S>(rep, "entry (" + std::to_string(mm->target) + "," + std::to_string(mm->source) + ") is " + mm->lhs +
                       ", expected " + mm->rhs);
  });
}

template <Scalar S>
CheckReport faithfulness_rank_check(const FockSpace<S>& fock, int k, int l) {
  const auto& alg = fock.algebra();
  auto rep0 = make_report("faithfulness_rank(" + std::to_string(k) + "," + std::to_string(l) + ")", alg.config(),
                          alg.field(), k + l);
  return timed(rep0, [&](CheckReport& rep) {
    const auto& plus = fock.basis(k);
    const auto minus = alg.graded_basis(0, l);
    const std::size_t dk = plus.size(), dl = fock.dim(l);
    Matrix<S> big(dk * dl, plus.size() * minus.size());
    std::size_t col = 0;
    for (const auto& fp : plus)
      for (const auto& fm : minus) {
        Word w = fp;
        w.insert(w.end(), fm.begin(), fm.end());
        const Matrix<S> block = fock.act_block(Element<S>::term(w), l, k);
        for (std::size_t i = 0; i < dk; ++i)
          for (std::size_t j = 0; j < dl; ++j) big(i * dl + j, col) = block(i, j);
        ++col;
      }
    const std::size_t expected = dk * minus.size();
    const std::size_t got = matrix_rank(big);
    rep.details.emplace_back("rank", std::to_string(got));
    rep.details.emplace_back("expected", std::to_string(expected));
    if (got != expected || minus.size() != dl)
      fail<S>(rep, "rank " + std::to_string(got) + " < " + std::to_string(expected));
  });
}

// ----------------------------------------------------------------------- norm

std::vector<std::vector<double>> normalized_Z_block(const TildeG<Rational>& g, int d) {
  const auto& cfg = g.config();
  const auto& sp = *g.rep().space();
  const auto src = sp.of_degree(d);
  const auto tgt = sp.of_degree(d + 1);
  std::map<std::size_t, std::size_t> row_of;
  for (std::size_t i = 0; i < tgt.size(); ++i) row_of.emplace(tgt[i], i);
  const Rational& q = g.rep().field().q();
  std::vector<std::vector<double>> b(cfg.m * tgt.size(), std::vector<double>(cfg.n * src.size(), 0.0));
  for (int alpha = 1; alpha <= cfg.m; ++alpha) {
    const double c = (-q).pow(alpha - 1).to_double();
    for (int a = 1; a <= cfg.n; ++a) {
      const auto op = g.embed_z(a, cfg.m + 1 - alpha);
      for (std::size_t s = 0; s < src.size(); ++s)
        for (const auto& [t, x] : op.column(src[s])) {
          const double scale = std::sqrt((g.rep().weight(t) / g.rep().weight(src[s])).to_double());
          b[(alpha - 1) * tgt.size() + row_of.at(t)][(a - 1) * src.size() + s] += c * x.to_double() * scale;
        }
    }
  }
  return b;
}

// Power iteration on C = B^T B, accelerated by repeated squaring: step k
// applies C^(2^k) to the start vector.  The spectrum of these blocks clusters
// just below the top singular value, so the plain iteration creeps towards it
// and a small change between consecutive steps says little about the error.
// With doubling powers the change between steps tracks the error itself.
double largest_singular_value(const std::vector<std::vector<double>>& b, double tol, int max_iter, int* iterations,
                              bool* converged) {
  const std::size_t rows = b.size();
  const std::size_t cols = rows ? b[0].size() : 0;
  if (iterations) *iterations = 0;
  if (converged) *converged = true;
  if (rows == 0 || cols == 0) return 0.0;
  using Square = std::vector<std::vector<double>>;
  Square c(cols, std::vector<double>(cols, 0.0));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t i = 0; i < cols; ++i)
      if (b[r][i] != 0.0)
        for (std::size_t j = 0; j < cols; ++j) c[i][j] += b[r][i] * b[r][j];
  std::vector<double> x0(cols);
  for (std::size_t i = 0; i < cols; ++i) x0[i] = 1.0 + 1e-3 * static_cast<double>(i % 7);

  auto rayleigh = [&](const Square& p) {
    std::vector<double> v(cols, 0.0);
    for (std::size_t i = 0; i < cols; ++i)
      for (std::size_t j = 0; j < cols; ++j) v[i] += p[i][j] * x0[j];
    double vv = 0, vcv = 0;
    for (std::size_t i = 0; i < cols; ++i) {
      vv += v[i] * v[i];
      double cv = 0;
      for (std::size_t j = 0; j < cols; ++j) cv += c[i][j] * v[j];
      vcv += v[i] * cv;
    }
    return vv > 0 ? vcv / vv : 0.0;
  };
  auto square = [&](const Square& p) {
    Square out(cols, std::vector<double>(cols, 0.0));
    double big = 0;
    for (std::size_t i = 0; i < cols; ++i)
      for (std::size_t k = 0; k < cols; ++k)
        if (p[i][k] != 0.0)
          for (std::size_t j = 0; j < cols; ++j) out[i][j] += p[i][k] * p[k][j];
    for (const auto& row : out)
      for (double t : row) big = std::max(big, std::abs(t));
    if (big > 0)
      for (auto& row : out)
        for (double& t : row) t /= big;
    return out;
  };

  Square p = c;
  double lambda = rayleigh(p);
  for (int it = 1; it <= max_iter; ++it) {
    if (iterations) *iterations = it;
    if (lambda == 0.0) return 0.0;
    p = square(p);
    const double next = rayleigh(p);
    if (std::abs(next - lambda) <= tol * next) return std::sqrt(next);
    lambda = next;
  }
  if (converged) *converged = false;
  return std::sqrt(lambda);
}

NormResult norm_Z(const AlgebraConfig& cfg, int cutoff, const Rational& q) {
  TildeG<Rational> g(cfg, Field<Rational>(q), cutoff);
  NormResult out;
  for (int d = 0; d < cutoff; ++d) {
    int iters = 0;
    bool ok = true;
    const double s = largest_singular_value(normalized_Z_block(g, d), 1e-10, 10000, &iters, &ok);
    out.per_degree.push_back(s);
    out.norm = std::max(out.norm, s);
    out.iterations = std::max(out.iterations, iters);
    out.converged = out.converged && ok;
  }
  return out;
}

template class Realizations<Rational>;
template class Realizations<Laurent>;

#define QMB_INSTANTIATE(S)                                                                                     \
  template CheckReport make_report(const std::string&, const AlgebraConfig&, const Field<S>&, int);            \
  template CheckReport j_rank_check(const Realizations<S>&);                                                   \
  template CheckReport intertwiner_check(const Realizations<S>&);                                              \
  template CheckReport gram_match_check(const Realizations<S>&);                                               \
  template CheckReport minor_embedding_check(const Realizations<S>&);                                          \
  template CheckReport resolution_check(const TildeG<S>&);                                                     \
  template CheckReport y_image_check(const Realizations<S>&);                                                  \
  template CheckReport t_star_formula_check(const TildeG<S>&);                                                 \
  template CheckReport faithfulness_rank_check(const FockSpace<S>&, int, int);

QMB_INSTANTIATE(Rational)
QMB_INSTANTIATE(Laurent)
#undef QMB_INSTANTIATE

}  // namespace qmb
