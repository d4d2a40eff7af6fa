#include "qmb/uqaction.hpp"

#include "qmb/errors.hpp"

#include <functional>
#include <sstream>

namespace qmb {

std::string UqGenerator::to_string() const {
  switch (kind) {
    case UqKind::E:
      return "E" + std::to_string(index);
    case UqKind::F:
      return "F" + std::to_string(index);
    case UqKind::Kplus:
      return "K" + std::to_string(index);
    case UqKind::Kminus:
      return "K" + std::to_string(index) + "^-1";
  }
  return "?";
}

int cartan(int i, int j) {
  if (i == j) return 2;
  if (std::abs(i - j) == 1) return -1;
  return 0;
}

template <Scalar S>
UqAction<S>::UqAction(const PolAlgebra<S>& algebra) : algebra_(algebra) {}

template <Scalar S>
WeightVector UqAction<S>::weight(const Generator& z) const {
  const auto& cfg = algebra_.config();
  const int n = cfg.n, m = cfg.m, N = cfg.N();
  const int a = z.col, alpha = z.row;
  WeightVector mu(N - 1, 0);
  for (int k = 1; k < N; ++k) {
    int& w = mu[k - 1];
    if (k < n)
      w = (a == k) - (a == k + 1);
    else if (k > n)
      w = (alpha == N - k) - (alpha == N - k + 1);
    else
      w = (a == n) + (alpha == m);
  }
  return mu;
}

template <Scalar S>
WeightVector UqAction<S>::weight(const Word& w) const {
  WeightVector mu(rank(), 0);
  for (const auto& z : w) {
    const auto wz = weight(z);
    for (int k = 0; k < rank(); ++k) mu[k] += wz[k];
  }
  return mu;
}

template <Scalar S>
Element<S> UqAction<S>::act_letter(const UqGenerator& g, const Generator& z) const {
  if (z.is_star()) throw UnsupportedElement("U_q acts on the holomorphic part only, got " + z.to_string());
  algebra_.check_generator(z);
  const auto& cfg = algebra_.config();
  const int n = cfg.n, m = cfg.m, N = cfg.N();
  const int k = g.index, a = z.col, alpha = z.row;
  const auto& f = algebra_.field();
  const Element<S> self = Element<S>::term({z});
  auto gen = [&](int col, int row) { return algebra_.generator(Generator::z(col, row)); };

  switch (g.kind) {
    case UqKind::Kplus:
      return self * q_pow(weight(z)[k - 1]);
    case UqKind::Kminus:
      return self * q_pow(-weight(z)[k - 1]);
    case UqKind::F:
      if (k == n) return (a == n && alpha == m) ? algebra_.scalar(f.q_half_pow(1)) : Element<S>{};
      if (k < n && a == k) return gen(a + 1, alpha) * f.q_half_pow(1);
      if (k > n && alpha == N - k) return gen(a, alpha + 1) * f.q_half_pow(1);
      return {};
    case UqKind::E:
      if (k == n) {
        const S c = -f.q_half_pow(1);
        if (a != n && alpha != m) return algebra_.multiply(gen(a, m), gen(n, alpha)) * (c * q_pow(-1));
        if (a == n && alpha == m) return algebra_.power(gen(n, m), 2) * c;
        return algebra_.multiply(gen(n, m), self) * c;
      }
      if (k < n && a == k + 1) return gen(a - 1, alpha) * f.q_half_pow(-1);
      if (k > n && alpha == N - k + 1) return gen(a, alpha - 1) * f.q_half_pow(-1);
      return {};
  }
  return {};
}

template <Scalar S>
Element<S> UqAction<S>::act_word_term(const UqGenerator& g, const Word& w) const {
  if (g.kind == UqKind::Kplus || g.kind == UqKind::Kminus) {
    const int mu = weight(w)[g.index - 1];
    return Element<S>::term(w, q_pow(g.kind == UqKind::Kplus ? mu : -mu));
  }
  if (w.empty()) return {};
  if (w.size() == 1) return act_letter(g, w[0]);
  const auto key = std::make_pair(g, w);
  {
    std::lock_guard lock(mutex_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }
  const Generator& x = w.front();
  const Word rest(w.begin() + 1, w.end());
  const Element<S> xe = Element<S>::term({x});
  const Element<S> re = Element<S>::term(rest);
  Element<S> out;
  if (g.kind == UqKind::E) {
    out = algebra_.multiply(act_letter(g, x), re);
    out += algebra_.multiply(xe, act_word_term(g, rest)) * q_pow(weight(x)[g.index - 1]);
  } else {
    out = algebra_.multiply(act_letter(g, x), re) * q_pow(-weight(rest)[g.index - 1]);
    out += algebra_.multiply(xe, act_word_term(g, rest));
  }
  std::lock_guard lock(mutex_);
  memo_.emplace(key, out);
  return out;
}

template <Scalar S>
Element<S> UqAction<S>::act(const UqGenerator& g, const Element<S>& e) const {
  if (g.index < 1 || g.index > rank())
    throw ConfigError("U_q generator index " + std::to_string(g.index) + " outside 1.." + std::to_string(rank()));
  if (!e.is_z_only()) throw UnsupportedElement("U_q acts on the holomorphic part only");
  Element<S> out;
  for (const auto& [w, c] : e.terms()) out += act_word_term(g, w) * c;
  return out;
}

template <Scalar S>
Element<S> UqAction<S>::act_word(const std::vector<UqGenerator>& gs, const Element<S>& e) const {
  Element<S> v = e;
  for (auto it = gs.rbegin(); it != gs.rend(); ++it) v = act(*it, v);
  return v;
}

template <Scalar S>
int h0_degree(const UqAction<S>& uq, const Element<S>& e) {
  if (e.is_zero()) throw std::logic_error("h0_degree: zero element");
  const auto& cfg = uq.algebra().config();
  const int m = cfg.m, n = cfg.n, N = cfg.N();
  std::optional<int> degree;
  for (const auto& [w, c] : e.terms()) {
    const auto mu = uq.weight(w);
    long num = 0;
    for (int j = 1; j < n; ++j) num += static_cast<long>(m) * j * mu[j - 1];
    for (int j = 1; j < m; ++j) num += static_cast<long>(n) * j * mu[N - j - 1];
    num += static_cast<long>(m) * n * mu[n - 1];
    // H_0 = 2 num / (m+n) and the degree is H_0 / 2.
    if (num % (m + n) != 0) throw std::logic_error("h0_degree: non-integral H_0 on " + to_string(w));
    const int d = static_cast<int>(num / (m + n));
    if (d != static_cast<int>(w.size()))
      throw std::logic_error("h0_degree: H_0 gives " + std::to_string(d) + " on " + to_string(w));
    if (degree && *degree != d) throw std::logic_error("h0_degree: element is not homogeneous");
    degree = d;
  }
  return *degree;
}

template <Scalar S>
Element<S> lowest_weight_vector(const PolAlgebra<S>& algebra, const std::vector<int>& k) {
  const auto& cfg = algebra.config();
  if (static_cast<int>(k.size()) != cfg.m) throw ConfigError("lowest_weight_vector needs m exponents");
  Element<S> out = algebra.one();
  for (int j = 1; j <= cfg.m; ++j) {
    if (k[j - 1] < 0) throw ConfigError("lowest_weight_vector: negative exponent");
    std::vector<int> rows, cols;
    for (int r = cfg.m - j + 1; r <= cfg.m; ++r) rows.push_back(r);
    for (int c = cfg.n - j + 1; c <= cfg.n; ++c) cols.push_back(c);
    out = algebra.multiply(out, algebra.power(algebra.q_minor_z(rows, cols), k[j - 1]));
  }
  return out;
}

namespace {

template <Scalar S>
std::vector<Word> monomials(const PolAlgebra<S>& alg, int max_degree) {
  std::vector<Word> out;
  for (int d = 0; d <= max_degree; ++d)
    for (auto& w : alg.graded_basis(d, 0)) out.push_back(std::move(w));
  return out;
}

template <Scalar S>
CheckReport uq_report(const std::string& name, const UqAction<S>& uq, int max_degree) {
  return make_report(name, uq.algebra().config(), uq.algebra().field(), max_degree);
}

template <Scalar S>
bool record(CheckReport& rep, bool ok, const std::function<std::string()>& what) {
  if (!ok && rep.verdict != Verdict::Fail) {
    rep.verdict = Verdict::Fail;
    rep.witness = what();
  }
  return ok;
}

}  // namespace

template <Scalar S>
CheckReport uq_relations_check(const UqAction<S>& uq, int max_degree) {
  return timed(uq_report("uq_relations", uq, max_degree), [&](CheckReport& rep) {
    const auto& alg = uq.algebra();
    const auto& f = alg.field();
    const int r = uq.rank();
    const S q_diff = f.q_pow(1) - f.q_pow(-1);
    using G = UqGenerator;
    std::size_t checked = 0;
    for (const auto& w : monomials(alg, max_degree)) {
      const auto v = Element<S>::term(w);
      const auto mu = uq.weight(w);
      auto act = [&](std::vector<G> gs) { return uq.act_word(gs, v); };
      auto check = [&](bool ok, const std::string& rel) {
        ++checked;
        return record<S>(rep, ok, [&] { return rel + " fails on " + to_string(w); });
      };
      for (int i = 1; i <= r; ++i) {
        if (!check(act({G::K(i), G::Kinv(i)}) == v && act({G::Kinv(i), G::K(i)}) == v, "K" + std::to_string(i) + " K" + std::to_string(i) + "^-1 = 1"))
          return;
        for (int j = 1; j <= r; ++j) {
          const std::string ij = std::to_string(i) + "," + std::to_string(j);
          const S qa = f.q_pow(cartan(i, j));
          const S qma = f.q_pow(-cartan(i, j));
          bool ok = act({G::K(i), G::K(j)}) == act({G::K(j), G::K(i)});
          ok = check(ok, "K_i K_j = K_j K_i (" + ij + ")") &&
               check(act({G::K(i), G::E(j)}) == act({G::E(j), G::K(i)}) * qa, "K_i E_j = q^a E_j K_i (" + ij + ")") &&
               check(act({G::K(i), G::F(j)}) == act({G::F(j), G::K(i)}) * qma, "K_i F_j = q^-a F_j K_i (" + ij + ")");
          if (!ok) return;
          Element<S> comm = act({G::E(i), G::F(j)}) - act({G::F(j), G::E(i)});
          Element<S> expected;
          if (i == j) expected = v * divide(f.q_pow(mu[i - 1]) - f.q_pow(-mu[i - 1]), q_diff);
          if (!check(comm == expected, "[E_i, F_j] (" + ij + ")")) return;
          if (std::abs(i - j) == 1) {
            const S qq = f.q_pow(1) + f.q_pow(-1);
            const auto serre_e = act({G::E(i), G::E(i), G::E(j)}) - act({G::E(i), G::E(j), G::E(i)}) * qq +
                                 act({G::E(j), G::E(i), G::E(i)});
            const auto serre_f = act({G::F(i), G::F(i), G::F(j)}) - act({G::F(i), G::F(j), G::F(i)}) * qq +
                                 act({G::F(j), G::F(i), G::F(i)});
            if (!check(serre_e.is_zero(), "Serre E (" + ij + ")") || !check(serre_f.is_zero(), "Serre F (" + ij + ")"))
              return;
          } else if (i != j) {
            if (!check(act({G::E(i), G::E(j)}) == act({G::E(j), G::E(i)}), "[E_i, E_j] = 0 (" + ij + ")") ||
                !check(act({G::F(i), G::F(j)}) == act({G::F(j), G::F(i)}), "[F_i, F_j] = 0 (" + ij + ")"))
              return;
          }
        }
      }
    }
    rep.details.emplace_back("relations", std::to_string(checked));
  });
}

template <Scalar S>
CheckReport module_algebra_check(const UqAction<S>& uq, int max_degree) {
  return timed(uq_report("module_algebra", uq, max_degree), [&](CheckReport& rep) {
    const auto& alg = uq.algebra();
    const auto& fld = alg.field();
    const auto words = monomials(alg, max_degree);
    std::size_t checked = 0;
    for (const auto& fw : words)
      for (const auto& gw : words) {
        const auto f = Element<S>::term(fw), g = Element<S>::term(gw);
        const auto fg = alg.multiply(f, g);
        const auto mf = uq.weight(fw), mg = uq.weight(gw);
        for (const auto& [w, c] : fg.terms()) {
          auto mw = uq.weight(w);
          bool ok = true;
          for (int k = 0; k < uq.rank(); ++k) ok = ok && mw[k] == mf[k] + mg[k];
          if (!record<S>(rep, ok, [&] { return "weight of " + to_string(w) + " in " + to_string(fw) + "*" + to_string(gw); }))
            return;
        }
        for (int k = 1; k <= uq.rank(); ++k) {
          const auto lhs_e = uq.act(UqGenerator::E(k), fg);
          const auto rhs_e = alg.multiply(uq.act(UqGenerator::E(k), f), g) +
                             alg.multiply(f, uq.act(UqGenerator::E(k), g)) * fld.q_pow(mf[k - 1]);
          const auto lhs_f = uq.act(UqGenerator::F(k), fg);
          const auto rhs_f = alg.multiply(uq.act(UqGenerator::F(k), f), g) * fld.q_pow(-mg[k - 1]) +
                             alg.multiply(f, uq.act(UqGenerator::F(k), g));
          const auto lhs_k = uq.act(UqGenerator::K(k), fg);
          const auto rhs_k = fg * fld.q_pow(mf[k - 1] + mg[k - 1]);
          checked += 3;
          const std::string where = " on " + to_string(fw) + " * " + to_string(gw);
          if (!record<S>(rep, lhs_e == rhs_e, [&] { return "E" + std::to_string(k) + where; }) ||
              !record<S>(rep, lhs_f == rhs_f, [&] { return "F" + std::to_string(k) + where; }) ||
              !record<S>(rep, lhs_k == rhs_k, [&] { return "K" + std::to_string(k) + where; }))
            return;
        }
      }
    rep.details.emplace_back("identities", std::to_string(checked));
  });
}

template <Scalar S>
CheckReport lowest_weight_check(const UqAction<S>& uq, int max_degree) {
  return timed(uq_report("lowest_weight_vectors", uq, max_degree), [&](CheckReport& rep) {
    const auto& alg = uq.algebra();
    const auto& cfg = alg.config();
    std::size_t vectors = 0;
    std::vector<int> k(cfg.m, 0);
    std::function<void(int, int)> walk = [&](int j, int budget) {
      if (rep.verdict == Verdict::Fail) return;
      if (j == cfg.m) {
        int deg = 0;
        for (int i = 0; i < cfg.m; ++i) deg += (i + 1) * k[i];
        std::ostringstream name;
        name << "f(";
        for (int i = 0; i < cfg.m; ++i) name << (i ? "," : "") << k[i];
        name << ")";
        const auto f = lowest_weight_vector(alg, k);
        ++vectors;
        if (!record<S>(rep, !f.is_zero(), [&] { return name.str() + " is zero"; })) return;
        for (int i = 1; i <= uq.rank(); ++i) {
          if (i == cfg.n) continue;
          if (!record<S>(rep, uq.act(UqGenerator::F(i), f).is_zero(),
                         [&] { return "F" + std::to_string(i) + " " + name.str() + " != 0"; }))
            return;
        }
        std::optional<WeightVector> mu;
        for (const auto& [w, c] : f.terms()) {
          auto mw = uq.weight(w);
          if (!record<S>(rep, !mu || *mu == mw, [&] { return name.str() + " is not a weight vector"; })) return;
          mu = mw;
        }
        int h0 = -1;
        try {
          h0 = h0_degree(uq, f);
        } catch (const std::logic_error& e) {
          record<S>(rep, false, [&] { return name.str() + ": " + e.what(); });
          return;
        }
        record<S>(rep, h0 == deg, [&] { return name.str() + " has H_0 degree " + std::to_string(h0); });
        return;
      }
      for (int c = 0; (j + 1) * c <= budget; ++c) {
        k[j] = c;
        walk(j + 1, budget - (j + 1) * c);
      }
      k[j] = 0;
    };
    walk(0, max_degree);
    rep.details.emplace_back("vectors", std::to_string(vectors));
  });
}

template class UqAction<Rational>;
template class UqAction<Laurent>;

#define QMB_INSTANTIATE(S)                                                              \
  template int h0_degree(const UqAction<S>&, const Element<S>&);                        \
  template Element<S> lowest_weight_vector(const PolAlgebra<S>&, const std::vector<int>&); \
  template CheckReport uq_relations_check(const UqAction<S>&, int);                     \
  template CheckReport module_algebra_check(const UqAction<S>&, int);                   \
  template CheckReport lowest_weight_check(const UqAction<S>&, int);

QMB_INSTANTIATE(Rational)
QMB_INSTANTIATE(Laurent)
#undef QMB_INSTANTIATE

}  // namespace qmb
