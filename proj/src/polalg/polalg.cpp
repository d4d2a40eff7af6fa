#include "qmb/polalg.hpp"

#include "qmb/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qmb {

void AlgebraConfig::validate() const {
  if (m < 1 || n < 1) throw ConfigError("m and n must be positive");
  if (m > n) throw ConfigError("m <= n is required (got m=" + std::to_string(m) + ", n=" + std::to_string(n) + ")");
}

std::string Generator::to_string() const {
  return std::string(is_star() ? "z*[" : "z[") + std::to_string(col) + "," + std::to_string(row) + "]";
}

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += "*";
    out += w[i].to_string();
  }
  return out;
}

Bidegree bidegree(const Word& w) {
  Bidegree d;
  for (const auto& g : w) {
    if (g.is_star())
      --d.j;
    else
      ++d.i;
  }
  return d;
}

// ---------------------------------------------------------------------------
// Element

template <Scalar S>
Element<S> Element<S>::term(const Word& w, const S& c) {
  Element e;
  e.add(w, c);
  return e;
}

template <Scalar S>
S Element<S>::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? S(0) : it->second;
}

template <Scalar S>
void Element<S>::add(const Word& w, const S& c) {
  if (qmb::is_zero(c)) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (qmb::is_zero(it->second)) terms_.erase(it);
  }
}

template <Scalar S>
std::set<Bidegree> Element<S>::bidegrees() const {
  std::set<Bidegree> out;
  for (const auto& [w, c] : terms_) out.insert(bidegree(w));
  return out;
}

template <Scalar S>
bool Element<S>::is_z_only() const {
  for (const auto& [w, c] : terms_)
    for (const auto& g : w)
      if (g.is_star()) return false;
  return true;
}

template <Scalar S>
Element<S>& Element<S>::operator+=(const Element& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

template <Scalar S>
Element<S>& Element<S>::operator-=(const Element& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

template <Scalar S>
Element<S>& Element<S>::operator*=(const S& c) {
  if (qmb::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

template <Scalar S>
Element<S> Element<S>::operator-() const {
  Element r = *this;
  for (auto& [w, v] : r.terms_) v = -v;
  return r;
}

// ---------------------------------------------------------------------------
// Combinatorics

int inversion_count(const std::vector<int>& perm) {
  int count = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++count;
  return count;
}

std::vector<std::vector<int>> permutations(int k) {
  std::vector<int> p(static_cast<std::size_t>(k));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v <= n; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// ---------------------------------------------------------------------------
// PolAlgebra

template <Scalar S>
PolAlgebra<S>::PolAlgebra(AlgebraConfig config, Field<S> field)
    : config_(config), field_(std::move(field)) {
  config_.validate();
}

template <Scalar S>
void PolAlgebra<S>::check_generator(const Generator& g) const {
  if (g.col < 1 || g.col > config_.n || g.row < 1 || g.row > config_.m)
    throw ConfigError("generator " + g.to_string() + " out of range for m=" + std::to_string(config_.m) +
                      ", n=" + std::to_string(config_.n));
}

template <Scalar S>
Element<S> PolAlgebra<S>::generator(const Generator& g) const {
  check_generator(g);
  return Element<S>::term(Word{g});
}

template <Scalar S>
Laurent PolAlgebra<S>::r_matrix(int i, int j, int k, int l) {
  if (i != j && i == k && j == l) return Laurent::q_pow(-1);
  if (i == j && j == k && k == l) return Laurent(1);
  if (i == j && k == l && l > j) return -(Laurent::q_pow(-2) - Laurent(1));
  return Laurent();
}

template <Scalar S>
bool PolAlgebra<S>::is_normal(const Word& w) const {
  std::size_t i = 0;
  while (i < w.size() && !w[i].is_star()) {
    if (i > 0 && z_key(w[i - 1]) > z_key(w[i])) return false;
    ++i;
  }
  std::size_t first_star = i;
  for (; i < w.size(); ++i) {
    if (!w[i].is_star()) return false;
    if (i > first_star && star_key(w[i - 1]) > star_key(w[i])) return false;
  }
  return true;
}

// x y for Z letters with z_key(x) > z_key(y), written in sorted pairs.
template <Scalar S>
Element<S> PolAlgebra<S>::swap_z(const Generator& x, const Generator& y) const {
  const int a = x.col, alpha = x.row, b = y.col, beta = y.row;
  Element<S> r;
  if (a == b || alpha == beta) {
    r.add(Word{y, x}, c(Laurent::q_pow(-1)));
  } else if (alpha > beta) {
    r.add(Word{y, x}, S(1));
    r.add(Word{Generator::z(b, alpha), Generator::z(a, beta)}, c(Laurent::q_pow(-1) - Laurent::q_pow(1)));
  } else {
    r.add(Word{y, x}, S(1));
  }
  return r;
}

// x y for ZStar letters with star_key(x) > star_key(y).  x = (z_b^beta)^*,
// y = (z_a^alpha)^*.
template <Scalar S>
Element<S> PolAlgebra<S>::swap_star(const Generator& x, const Generator& y) const {
  const int b = x.col, beta = x.row, a = y.col, alpha = y.row;
  Element<S> r;
  if (beta == alpha || b == a) {
    r.add(Word{y, x}, c(Laurent::q_pow(1)));
  } else if (b > a) {
    r.add(Word{y, x}, S(1));
    r.add(Word{Generator::zstar(b, alpha), Generator::zstar(a, beta)},
          c(Laurent::q_pow(1) - Laurent::q_pow(-1)));
  } else {
    r.add(Word{y, x}, S(1));
  }
  return r;
}

// (z_b^beta)^* z_a^alpha.
template <Scalar S>
Element<S> PolAlgebra<S>::swap_cross(const Generator& star, const Generator& z) const {
  const int b = star.col, beta = star.row, a = z.col, alpha = z.row;
  Element<S> r;
  const Laurent q2 = Laurent::q_pow(2);
  for (int a2 = 1; a2 <= config_.n; ++a2)
    for (int b2 = 1; b2 <= config_.n; ++b2) {
      Laurent col_part = r_matrix(b, a, b2, a2);
      if (col_part.is_zero()) continue;
      for (int alpha2 = 1; alpha2 <= config_.m; ++alpha2)
        for (int beta2 = 1; beta2 <= config_.m; ++beta2) {
          Laurent row_part = r_matrix(beta, alpha, beta2, alpha2);
          if (row_part.is_zero()) continue;
          r.add(Word{Generator::z(a2, alpha2), Generator::zstar(b2, beta2)}, c(q2 * col_part * row_part));
        }
    }
  if (a == b && alpha == beta) r.add(Word{}, c(Laurent(1) - q2));
  return r;
}

template <Scalar S>
bool PolAlgebra<S>::lookup(const Cache& cache, const Key& key, Element<S>& out) const {
  std::lock_guard lock(cache_mutex_);
  auto it = cache.find(key);
  if (it == cache.end()) return false;
  out = it->second;
  return true;
}

template <Scalar S>
void PolAlgebra<S>::store(Cache& cache, const Key& key, const Element<S>& value) const {
  std::lock_guard lock(cache_mutex_);
  cache.emplace(key, value);
}

template <Scalar S>
Element<S> PolAlgebra<S>::z_insert(const Word& w, const Generator& z) const {
  if (w.empty() || z_key(w.back()) <= z_key(z)) {
    Word out = w;
    out.push_back(z);
    return Element<S>::term(out);
  }
  Key key{w, z};
  Element<S> result;
  if (lookup(z_cache_, key, result)) return result;

  const Word prefix(w.begin(), w.end() - 1);
  for (const auto& [pair, coeff] : swap_z(w.back(), z).terms()) {
    for (const auto& [v, c1] : z_insert(prefix, pair[0]).terms())
      for (const auto& [v2, c2] : z_insert(v, pair[1]).terms()) result.add(v2, coeff * c1 * c2);
  }
  store(z_cache_, key, result);
  return result;
}

template <Scalar S>
Element<S> PolAlgebra<S>::star_insert(const Word& w, const Generator& s) const {
  if (w.empty() || star_key(w.back()) <= star_key(s)) {
    Word out = w;
    out.push_back(s);
    return Element<S>::term(out);
  }
  Key key{w, s};
  Element<S> result;
  if (lookup(star_cache_, key, result)) return result;

  const Word prefix(w.begin(), w.end() - 1);
  for (const auto& [pair, coeff] : swap_star(w.back(), s).terms()) {
    for (const auto& [v, c1] : star_insert(prefix, pair[0]).terms())
      for (const auto& [v2, c2] : star_insert(v, pair[1]).terms()) result.add(v2, coeff * c1 * c2);
  }
  store(star_cache_, key, result);
  return result;
}

// Normal form of (sorted star word) * z.  Every resulting word has at most
// one Z letter, in front.
template <Scalar S>
Element<S> PolAlgebra<S>::cross(const Word& w, const Generator& z) const {
  if (w.empty()) return Element<S>::term(Word{z});
  Key key{w, z};
  Element<S> result;
  if (lookup(cross_cache_, key, result)) return result;

  const Word prefix(w.begin(), w.end() - 1);
  for (const auto& [pair, coeff] : swap_cross(w.back(), z).terms()) {
    if (pair.empty()) {
      result.add(prefix, coeff);
      continue;
    }
    // pair = z' s'
    for (const auto& [v, c1] : cross(prefix, pair[0]).terms()) {
      const bool has_z = !v.empty() && !v.front().is_star();
      const Word z_part = has_z ? Word{v.front()} : Word{};
      const Word star_part(v.begin() + (has_z ? 1 : 0), v.end());
      for (const auto& [s2, c2] : star_insert(star_part, pair[1]).terms()) {
        Word out = z_part;
        out.insert(out.end(), s2.begin(), s2.end());
        result.add(out, coeff * c1 * c2);
      }
    }
  }
  store(cross_cache_, key, result);
  return result;
}

template <Scalar S>
Element<S> PolAlgebra<S>::mul_letter(const Element<S>& e, const Generator& g) const {
  check_generator(g);
  Element<S> result;
  for (const auto& [w, coeff] : e.terms()) {
    auto split = std::find_if(w.begin(), w.end(), [](const Generator& x) { return x.is_star(); });
    const Word z_part(w.begin(), split);
    const Word star_part(split, w.end());
    if (g.is_star()) {
      for (const auto& [s, c1] : star_insert(star_part, g).terms()) {
        Word out = z_part;
        out.insert(out.end(), s.begin(), s.end());
        result.add(out, coeff * c1);
      }
      continue;
    }
    for (const auto& [v, c1] : cross(star_part, g).terms()) {
      const bool has_z = !v.empty() && !v.front().is_star();
      const Word tail(v.begin() + (has_z ? 1 : 0), v.end());
      if (!has_z) {
        Word out = z_part;
        out.insert(out.end(), tail.begin(), tail.end());
        result.add(out, coeff * c1);
        continue;
      }
      for (const auto& [zz, c2] : z_insert(z_part, v.front()).terms()) {
        Word out = zz;
        out.insert(out.end(), tail.begin(), tail.end());
        result.add(out, coeff * c1 * c2);
      }
    }
  }
  return result;
}

template <Scalar S>
Element<S> PolAlgebra<S>::normal_form(const Word& w) const {
  Element<S> e = one();
  for (const auto& g : w) e = mul_letter(e, g);
  return e;
}

template <Scalar S>
Element<S> PolAlgebra<S>::multiply(const Element<S>& a, const Element<S>& b) const {
  Element<S> result;
  for (const auto& [w, coeff] : b.terms()) {
    Element<S> partial = a;
    for (const auto& g : w) partial = mul_letter(partial, g);
    partial *= coeff;
    result += partial;
  }
  return result;
}

template <Scalar S>
Element<S> PolAlgebra<S>::power(const Element<S>& a, int exponent) const {
  if (exponent < 0) throw std::invalid_argument("negative power of an algebra element");
  Element<S> r = one();
  for (int i = 0; i < exponent; ++i) r = multiply(r, a);
  return r;
}

template <Scalar S>
Element<S> PolAlgebra<S>::involution(const Element<S>& e) const {
  Element<S> result;
  for (const auto& [w, coeff] : e.terms()) {
    Word rev;
    rev.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) rev.push_back(it->adjoint());
    result += normal_form(rev) * coeff;
  }
  return result;
}

template <Scalar S>
Element<S> PolAlgebra<S>::q_minor_z(const std::vector<int>& rows, const std::vector<int>& cols) const {
  if (rows.size() != cols.size()) throw ConfigError("q-minor needs equally many rows and columns");
  const int k = static_cast<int>(rows.size());
  Element<S> result;
  for (const auto& s : permutations(k)) {
    Word w;
    for (int p = 0; p < k; ++p) w.push_back(Generator::z(cols[p], rows[s[p]]));
    for (const auto& g : w) check_generator(g);
    result += normal_form(w) * c(minus_q_pow(inversion_count(s)));
  }
  return result;
}

template <Scalar S>
Element<S> PolAlgebra<S>::element_y() const {
  Element<S> y = one();
  for (int k = 1; k <= config_.m; ++k) {
    const S sign = (k % 2 == 0) ? S(1) : S(-1);
    for (const auto& rows : subsets(config_.m, k))
      for (const auto& cols : subsets(config_.n, k)) {
        Element<S> minor = q_minor_z(rows, cols);
        y += multiply(minor, involution(minor)) * sign;
      }
  }
  return y;
}

template <Scalar S>
std::vector<Word> PolAlgebra<S>::graded_basis(int i, int j) const {
  if (i < 0 || j < 0) throw std::invalid_argument("graded_basis: negative degree");
  const int mn = config_.generator_count();
  std::vector<Generator> by_z(static_cast<std::size_t>(mn)), by_star(static_cast<std::size_t>(mn));
  for (int a = 1; a <= config_.n; ++a)
    for (int alpha = 1; alpha <= config_.m; ++alpha) {
      by_z[static_cast<std::size_t>(z_key(Generator::z(a, alpha)))] = Generator::z(a, alpha);
      by_star[static_cast<std::size_t>(star_key(Generator::zstar(a, alpha)))] = Generator::zstar(a, alpha);
    }
  auto multisets = [mn](int len) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
      if (static_cast<int>(cur.size()) == len) {
        out.push_back(cur);
        return;
      }
      for (int v = start; v < mn; ++v) {
        cur.push_back(v);
        self(self, v);
        cur.pop_back();
      }
    };
    rec(rec, 0);
    return out;
  };
  std::vector<Word> out;
  const auto zs = multisets(i);
  const auto ss = multisets(j);
  for (const auto& zk : zs)
    for (const auto& sk : ss) {
      Word w;
      for (int v : zk) w.push_back(by_z[static_cast<std::size_t>(v)]);
      for (int v : sk) w.push_back(by_star[static_cast<std::size_t>(v)]);
      out.push_back(std::move(w));
    }
  return out;
}

// ---------------------------------------------------------------------------
// Printing

std::string scalar_text(const Rational& r) { return r.to_string(); }
std::string scalar_text(const Laurent& p) { return p.to_string(); }

namespace {

bool is_compound(const Rational&) { return false; }
bool is_compound(const Laurent& p) { return p.terms().size() > 1; }

}  // namespace

template <Scalar S>
std::string to_string(const Element<S>& e) {
  if (e.is_zero()) return "0";
  std::vector<std::pair<const Word*, const S*>> order;
  for (const auto& [w, c] : e.terms()) order.emplace_back(&w, &c);
  std::stable_sort(order.begin(), order.end(),
                   [](const auto& x, const auto& y) { return x.first->size() > y.first->size(); });
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : order) {
    std::string coeff = scalar_text(*c);
    bool negative = false;
    if (is_compound(*c)) {
      coeff = "(" + coeff + ")";
    } else if (coeff[0] == '-') {
      negative = true;
      coeff.erase(0, 1);
    }
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    if (w->empty()) {
      os << coeff;
    } else {
      if (coeff != "1") os << coeff << "*";
      os << to_string(*w);
    }
    first = false;
  }
  return os.str();
}

template class Element<Rational>;
template class Element<Laurent>;
template class PolAlgebra<Rational>;
template class PolAlgebra<Laurent>;
template std::string to_string(const Element<Rational>&);
template std::string to_string(const Element<Laurent>&);

}  // namespace qmb
