#include "qmb/tildeg.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace qmb {

std::vector<Transposition> reduced_word(int m, int n) {
  if (m < 1 || n < 1) throw ConfigError("reduced_word: m and n must be positive");
  std::vector<Transposition> out;
  for (int i = m; i >= 1; --i)
    for (int p = i; p <= i + n - 1; ++p) out.push_back({p});
  return out;
}

// ---------------------------------------------------------------- TensorSpace

TensorSpace::TensorSpace(int factors, int cutoff) : factors_(factors), cutoff_(cutoff) {
  if (factors < 1) throw ConfigError("TensorSpace: need at least one factor");
  if (cutoff < 0) throw ConfigError("TensorSpace: cutoff must be nonnegative");
  std::vector<int> cur(factors, 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == factors) {
      basis_.push_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[pos] = v;
      self(self, pos + 1, left - v);
    }
    cur[pos] = 0;
  };
  rec(rec, 0, cutoff);
  auto deg = [](const std::vector<int>& k) { return std::accumulate(k.begin(), k.end(), 0); };
  std::stable_sort(basis_.begin(), basis_.end(), [&](const auto& a, const auto& b) {
    const int da = deg(a), db = deg(b);
    return da != db ? da < db : a < b;
  });
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    degree_.push_back(deg(basis_[i]));
    lookup_.emplace(basis_[i], i);
  }
}

std::optional<std::size_t> TensorSpace::find(const std::vector<int>& k) const {
  auto it = lookup_.find(k);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t TensorSpace::position(const std::vector<int>& k) const {
  auto p = find(k);
  if (!p) throw std::out_of_range("TensorSpace: index outside the cutoff");
  return *p;
}

std::vector<std::size_t> TensorSpace::of_degree(int d) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i)
    if (degree_[i] == d) out.push_back(i);
  return out;
}

// ---------------------------------------------------------- TruncatedOperator

template <Scalar S>
TruncatedOperator<S>::TruncatedOperator(std::shared_ptr<const TensorSpace> space, int max_shift, int min_shift,
                                        int valid_degree)
    : space_(std::move(space)),
      max_shift_(max_shift),
      min_shift_(min_shift),
      valid_(std::min(valid_degree, space_->cutoff())),
      cols_(space_->size()) {}

template <Scalar S>
TruncatedOperator<S> TruncatedOperator<S>::identity(std::shared_ptr<const TensorSpace> space) {
  TruncatedOperator op(space, 0, 0, space->cutoff());
  for (std::size_t i = 0; i < space->size(); ++i) op.cols_[i].emplace(i, S(1));
  return op;
}

template <Scalar S>
TruncatedOperator<S> TruncatedOperator<S>::zero(std::shared_ptr<const TensorSpace> space) {
  return TruncatedOperator(space, 0, 0, space->cutoff());
}

template <Scalar S>
S TruncatedOperator<S>::entry(std::size_t target, std::size_t source) const {
  auto it = cols_[source].find(target);
  return it == cols_[source].end() ? S(0) : it->second;
}

template <Scalar S>
void TruncatedOperator<S>::add_entry(std::size_t target, std::size_t source, const S& value) {
  if (!is_valid_source(source)) throw std::logic_error("TruncatedOperator: entry outside the valid range");
  if (qmb::is_zero(value)) return;
  auto& col = cols_[source];
  auto [it, inserted] = col.emplace(target, value);
  if (!inserted) {
    it->second += value;
    if (qmb::is_zero(it->second)) col.erase(it);
  }
}

template <Scalar S>
std::size_t TruncatedOperator<S>::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : cols_) n += c.size();
  return n;
}

template <Scalar S>
SparseVector<S> TruncatedOperator<S>::apply(const SparseVector<S>& v) const {
  SparseVector<S> out;
  for (const auto& [src, c] : v) {
    if (qmb::is_zero(c)) continue;
    if (!is_valid_source(src))
      throw ValidityError("operator applied to degree " + std::to_string(space_->degree(src)) +
                          " but is exact only up to degree " + std::to_string(valid_));
    for (const auto& [tgt, a] : cols_[src]) {
      auto [it, inserted] = out.emplace(tgt, a * c);
      if (!inserted) {
        it->second += a * c;
        if (qmb::is_zero(it->second)) out.erase(it);
      }
    }
  }
  return out;
}

template <Scalar S>
TruncatedOperator<S> TruncatedOperator<S>::compose(const TruncatedOperator& rhs) const {
  if (space_ != rhs.space_ && space_->size() != rhs.space_->size())
    throw std::invalid_argument("compose: operators live on different spaces");
  TruncatedOperator out(space_, max_shift_ + rhs.max_shift_, min_shift_ + rhs.min_shift_,
                        std::min(rhs.valid_, valid_ - rhs.max_shift_));
  for (std::size_t src = 0; src < cols_.size(); ++src) {
    if (!out.is_valid_source(src)) continue;
    out.cols_[src] = apply(rhs.cols_[src]);
  }
  return out;
}

template <Scalar S>
TruncatedOperator<S> TruncatedOperator<S>::scaled(const S& c) const {
  TruncatedOperator out = *this;
  if (qmb::is_zero(c)) {
    for (auto& col : out.cols_) col.clear();
    return out;
  }
  for (auto& col : out.cols_)
    for (auto& [t, a] : col) a *= c;
  return out;
}

template <Scalar S>
TruncatedOperator<S> TruncatedOperator<S>::combine(const TruncatedOperator& o, bool subtract) const {
  TruncatedOperator out(space_, std::max(max_shift_, o.max_shift_), std::min(min_shift_, o.min_shift_),
                        std::min(valid_, o.valid_));
  for (std::size_t src = 0; src < cols_.size(); ++src) {
    if (!out.is_valid_source(src)) continue;
    out.cols_[src] = cols_[src];
    for (const auto& [t, a] : o.cols_[src]) out.add_entry(t, src, subtract ? -a : a);
  }
  return out;
}

template <Scalar S>
TruncatedOperator<S> TruncatedOperator<S>::operator+(const TruncatedOperator& o) const {
  return combine(o, false);
}

template <Scalar S>
TruncatedOperator<S> TruncatedOperator<S>::operator-(const TruncatedOperator& o) const {
  return combine(o, true);
}

template <Scalar S>
std::optional<int> TruncatedOperator<S>::exact_shift() const {
  std::optional<int> shift;
  for (std::size_t src = 0; src < cols_.size(); ++src)
    for (const auto& [t, a] : cols_[src]) {
      const int s = space_->degree(t) - space_->degree(src);
      if (shift && *shift != s) return std::nullopt;
      shift = s;
    }
  return shift;
}

template <Scalar S>
std::string scalar_repr(const S& s) {
  return s.to_string();
}

template <Scalar S>
std::optional<OperatorMismatch> compare_on_valid(const TruncatedOperator<S>& a, const TruncatedOperator<S>& b) {
  const int valid = std::min(a.valid_degree(), b.valid_degree());
  const auto& sp = a.space();
  for (std::size_t src = 0; src < sp.size(); ++src) {
    if (sp.degree(src) > valid) continue;
    const auto& ca = a.column(src);
    const auto& cb = b.column(src);
    if (ca == cb) continue;
    std::set<std::size_t> targets;
    for (const auto& [t, x] : ca) targets.insert(t);
    for (const auto& [t, x] : cb) targets.insert(t);
    for (std::size_t t : targets) {
      S x = a.entry(t, src), y = b.entry(t, src);
      if (!(x == y)) return OperatorMismatch{src, t, scalar_repr(x), scalar_repr(y)};
    }
  }
  return std::nullopt;
}

// ------------------------------------------------------------------ TensorRep

template <Scalar S>
TensorRep<S>::TensorRep(int N, std::vector<Transposition> word, int cutoff, Field<S> field)
    : N_(N),
      word_(std::move(word)),
      field_(std::move(field)),
      space_(std::make_shared<TensorSpace>(static_cast<int>(word_.size()), cutoff)) {
  for (const auto& s : word_)
    if (s.p < 1 || s.p >= N_) throw ConfigError("TensorRep: transposition outside 1..N");
  std::vector<S> w_plus{S(1)};
  for (int k = 0; k <= cutoff + 1; ++k) {
    q_neg_.push_back(field_.q_pow(-k));
    c21_.push_back(-field_.q_pow(-(k + 1)));
    c22_.push_back(S(1) - field_.q_pow(-2 * k));
    if (k >= 1) w_plus.push_back(w_plus.back() * (field_.q_pow(-2 * k) - S(1)));
  }
  for (std::size_t i = 0; i < space_->size(); ++i) {
    S w(1);
    for (int k : space_->index(i)) w *= w_plus[k];
    weights_.push_back(w);
  }
}

template <Scalar S>
std::optional<std::pair<int, S>> TensorRep<S>::pi_plus(int a, int b, int k) const {
  if (a == 1 && b == 1) return std::pair{k + 1, S(1)};
  if (a == 1 && b == 2) return std::pair{k, q_neg_[k]};
  if (a == 2 && b == 1) return std::pair{k, c21_[k]};
  if (k == 0) return std::nullopt;
  return std::pair{k - 1, c22_[k]};
}

template <Scalar S>
TruncatedOperator<S> TensorRep<S>::generator(int i, int j) const {
  if (i < 1 || i > N_ || j < 1 || j > N_) throw ConfigError("t index outside 1..N");
  {
    std::lock_guard lock(mutex_);
    auto it = gens_.find({i, j});
    if (it != gens_.end()) return it->second;
  }
  // Each path i = k_0, k_1, ..., k_L = j through the psi factors; a factor is
  // either the identity (0, 0) or an SL_2 generator (a, b).
  using Path = std::vector<std::pair<int, int>>;
  std::vector<Path> paths;
  Path cur;
  const int L = static_cast<int>(word_.size());
  auto rec = [&](auto&& self, int r, int c) -> void {
    if (r == L) {
      if (c == j) paths.push_back(cur);
      return;
    }
    const int p = word_[r].p;
    if (c == p || c == p + 1) {
      for (int next : {p, p + 1}) {
        cur.emplace_back(c - p + 1, next - p + 1);
        self(self, r + 1, next);
        cur.pop_back();
      }
    } else {
      cur.emplace_back(0, 0);
      self(self, r + 1, c);
      cur.pop_back();
    }
  };
  rec(rec, 0, i);

  int max_shift = 0, min_shift = 0;
  for (std::size_t k = 0; k < paths.size(); ++k) {
    int s = 0;
    for (auto [a, b] : paths[k]) s += (a == 1 && b == 1) - (a == 2 && b == 2);
    max_shift = k == 0 ? s : std::max(max_shift, s);
    min_shift = k == 0 ? s : std::min(min_shift, s);
  }
  TruncatedOperator<S> op(space_, max_shift, min_shift, cutoff() - std::max(max_shift, 0));
  for (std::size_t src = 0; src < space_->size(); ++src) {
    if (!op.is_valid_source(src)) continue;
    const auto& k = space_->index(src);
    for (const auto& path : paths) {
      std::vector<int> tgt = k;
      S coeff(1);
      bool alive = true;
      for (int r = 0; r < L && alive; ++r) {
        auto [a, b] = path[r];
        if (a == 0) continue;
        auto img = pi_plus(a, b, k[r]);
        if (!img) {
          alive = false;
          break;
        }
        tgt[r] = img->first;
        coeff *= img->second;
      }
      if (alive) op.add_entry(space_->position(tgt), src, coeff);
    }
  }
  std::lock_guard lock(mutex_);
  return gens_.emplace(std::pair{i, j}, std::move(op)).first->second;
}

template <Scalar S>
TruncatedOperator<S> TensorRep<S>::minor(const std::vector<int>& rows, const std::vector<int>& cols) const {
  if (rows.size() != cols.size() || rows.empty()) throw ConfigError("minor: row and column sets must match in size");
  auto check = [&](const std::vector<int>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] < 1 || v[i] > N_) throw ConfigError("minor: index outside 1..N");
      if (i > 0 && v[i] <= v[i - 1]) throw ConfigError("minor: indices must be strictly ascending");
    }
  };
  check(rows);
  check(cols);
  {
    std::lock_guard lock(mutex_);
    auto it = minors_.find({rows, cols});
    if (it != minors_.end()) return it->second;
  }
  std::optional<TruncatedOperator<S>> sum;
  for (const auto& s : permutations(static_cast<int>(rows.size()))) {
    TruncatedOperator<S> term = generator(rows[0], cols[s[0]]);
    for (std::size_t l = 1; l < rows.size(); ++l) term = term.compose(generator(rows[l], cols[s[l]]));
    term = term.scaled(field_.from_laurent(minus_q_pow(inversion_count(s))));
    sum = sum ? *sum + term : term;
  }
  std::lock_guard lock(mutex_);
  return minors_.emplace(std::pair{rows, cols}, std::move(*sum)).first->second;
}

template <Scalar S>
S TensorRep<S>::inner(const SparseVector<S>& u, const SparseVector<S>& v) const {
  S sum(0);
  for (const auto& [i, a] : u) {
    auto it = v.find(i);
    if (it != v.end()) sum += a * it->second * weights_[i];
  }
  return sum;
}

template <Scalar S>
TruncatedOperator<S> TensorRep<S>::adjoint(const TruncatedOperator<S>& a) const {
  TruncatedOperator<S> out(space_, -a.min_shift(), -a.max_shift(), a.valid_degree() + a.min_shift());
  for (std::size_t u = 0; u < space_->size(); ++u) {
    if (!a.is_valid_source(u)) continue;
    for (const auto& [v, x] : a.column(u)) {
      if (!out.is_valid_source(v)) continue;
      out.add_entry(u, v, divide(x * weights_[v], weights_[u]));
    }
  }
  return out;
}

template <Scalar S>
TruncatedOperator<S> TensorRep<S>::compact_star(int i, int j) const {
  std::vector<int> rows, cols;
  for (int k = 1; k <= N_; ++k) {
    if (k != i) rows.push_back(k);
    if (k != j) cols.push_back(k);
  }
  return minor(rows, cols).scaled(field_.from_laurent(minus_q_pow(j - i)));
}

template <Scalar S>
TruncatedOperator<S> pi_plus(int a, int b, int cutoff, const Field<S>& field) {
  if (a < 1 || a > 2 || b < 1 || b > 2) throw ConfigError("pi_plus: SL_2 indices are 1 or 2");
  TensorRep<S> rep(2, {Transposition{1}}, cutoff, field);
  return rep.generator(a, b);
}

int lambda1(int k, int m) { return k > m ? 1 : -1; }
int lambda2(int k, int n) { return k <= n ? 1 : -1; }

std::vector<std::vector<int>> type_chain(int m, int n) {
  const int N = m + n;
  std::vector<int> lam(N);
  for (int i = 1; i <= N; ++i) lam[i - 1] = lambda1(i, m);
  std::vector<std::vector<int>> chain{lam};
  for (const auto& s : reduced_word(m, n)) {
    if (lam[s.p - 1] != -1 || lam[s.p] != 1)
      throw TypeMismatch("factor (" + std::to_string(s.p) + "," + std::to_string(s.p + 1) + ") does not chain");
    std::swap(lam[s.p - 1], lam[s.p]);
    chain.push_back(lam);
  }
  for (int i = 1; i <= N; ++i)
    if (lam[i - 1] != lambda2(i, n)) throw TypeMismatch("type chain does not end at lambda_2");
  return chain;
}

template <Scalar S>
bool factor_has_type(int N, int p, const std::vector<int>& from, const std::vector<int>& to, int cutoff,
                     const Field<S>& field) {
  TensorRep<S> rep(N, {Transposition{p}}, cutoff, field);
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) {
      auto lhs = rep.adjoint(rep.generator(i, j));
      auto rhs = rep.compact_star(i, j).scaled(S(static_cast<long>(from[i - 1] * to[j - 1])));
      if (compare_on_valid(lhs, rhs)) return false;
    }
  return true;
}

// ---------------------------------------------------------------------- TildeG

namespace {
const AlgebraConfig& validated(const AlgebraConfig& c) {
  c.validate();
  return c;
}
}  // namespace

template <Scalar S>
TildeG<S>::TildeG(AlgebraConfig config, Field<S> field, int cutoff)
    : config_(validated(config)), rep_(config.N(), reduced_word(config.m, config.n), cutoff, std::move(field)) {}

template <Scalar S>
TruncatedOperator<S> TildeG<S>::t() const {
  std::vector<int> rows, cols;
  for (int k = 1; k <= config_.m; ++k) {
    rows.push_back(k);
    cols.push_back(config_.n + k);
  }
  return rep_.minor(rows, cols);
}

template <Scalar S>
TruncatedOperator<S> TildeG<S>::t_inverse() const {
  TruncatedOperator<S> op(rep_.space(), 0, 0, cutoff());
  const auto& sp = *rep_.space();
  for (std::size_t i = 0; i < sp.size(); ++i) op.add_entry(i, i, rep_.field().q_pow(sp.degree(i)));
  return op;
}

template <Scalar S>
TruncatedOperator<S> TildeG<S>::x_inverse() const {
  TruncatedOperator<S> op(rep_.space(), 0, 0, cutoff());
  const auto& sp = *rep_.space();
  for (std::size_t i = 0; i < sp.size(); ++i) op.add_entry(i, i, rep_.field().q_pow(2 * sp.degree(i)));
  return op;
}

template <Scalar S>
TruncatedOperator<S> TildeG<S>::star_of_generator(int i, int j) const {
  const long sign = lambda1(i, config_.m) * lambda2(j, config_.n);
  return rep_.compact_star(i, j).scaled(S(sign));
}

template <Scalar S>
std::vector<int> TildeG<S>::embedding_columns(int a, int alpha) const {
  if (a < 1 || a > config_.n || alpha < 1 || alpha > config_.m) throw ConfigError("generator index out of range");
  std::vector<int> cols;
  for (int k = config_.n + 1; k <= config_.N(); ++k)
    if (k != config_.N() + 1 - alpha) cols.push_back(k);
  cols.push_back(a);
  std::sort(cols.begin(), cols.end());
  return cols;
}

template <Scalar S>
TruncatedOperator<S> TildeG<S>::embed_z(int a, int alpha) const {
  return embed(Generator::z(a, alpha));
}

template <Scalar S>
TruncatedOperator<S> TildeG<S>::embed(const Generator& g) const {
  {
    std::lock_guard lock(mutex_);
    auto it = embedded_.find(g);
    if (it != embedded_.end()) return it->second;
  }
  TruncatedOperator<S> op = TruncatedOperator<S>::zero(rep_.space());
  if (g.is_star()) {
    op = adjoint(embed(g.adjoint()));
  } else {
    std::vector<int> rows(config_.m);
    std::iota(rows.begin(), rows.end(), 1);
    op = t_inverse().compose(rep_.minor(rows, embedding_columns(g.col, g.row)));
  }
  std::lock_guard lock(mutex_);
  return embedded_.emplace(g, std::move(op)).first->second;
}

template <Scalar S>
TruncatedOperator<S> TildeG<S>::represent(const Element<S>& e) const {
  std::optional<TruncatedOperator<S>> sum;
  for (const auto& [w, c] : e.terms()) {
    TruncatedOperator<S> term = rep_.identity();
    for (const auto& g : w) term = term.compose(embed(g));
    term = term.scaled(c);
    sum = sum ? *sum + term : term;
  }
  return sum ? *sum : TruncatedOperator<S>::zero(rep_.space());
}

template <Scalar S>
int TildeG<S>::t_degree(int i, int j) const {
  if (i <= config_.m && j <= config_.n) return 1;
  if (i > config_.m && j > config_.n) return -1;
  return 0;
}

template class TruncatedOperator<Rational>;
template class TruncatedOperator<Laurent>;
template class TensorRep<Rational>;
template class TensorRep<Laurent>;
template class TildeG<Rational>;
template class TildeG<Laurent>;
template std::string scalar_repr(const Rational&);
template std::string scalar_repr(const Laurent&);
template std::optional<OperatorMismatch> compare_on_valid(const TruncatedOperator<Rational>&,
                                                          const TruncatedOperator<Rational>&);
template std::optional<OperatorMismatch> compare_on_valid(const TruncatedOperator<Laurent>&,
                                                          const TruncatedOperator<Laurent>&);
template TruncatedOperator<Rational> pi_plus(int, int, int, const Field<Rational>&);
template TruncatedOperator<Laurent> pi_plus(int, int, int, const Field<Laurent>&);
template bool factor_has_type(int, int, const std::vector<int>&, const std::vector<int>&, int,
                              const Field<Rational>&);
template bool factor_has_type(int, int, const std::vector<int>&, const std::vector<int>&, int,
                              const Field<Laurent>&);

}  // namespace qmb
