#include "qmb/fock.hpp"

#include <string>

namespace qmb {

template <Scalar S>
const std::vector<Word>& FockSpace<S>::basis(int k) const {
  if (k < 0) throw ConfigError("Fock degree must be nonnegative");
  std::lock_guard lock(mutex_);
  auto it = bases_.find(k);
  if (it != bases_.end()) return it->second;
  auto words = alg_.graded_basis(k, 0);
  auto& idx = index_[k];
  for (std::size_t i = 0; i < words.size(); ++i) idx.emplace(words[i], i);
  return bases_.emplace(k, std::move(words)).first->second;
}

template <Scalar S>
std::size_t FockSpace<S>::index_of(const Word& w) const {
  const int k = static_cast<int>(w.size());
  basis(k);
  std::lock_guard lock(mutex_);
  const auto& idx = index_.at(k);
  auto it = idx.find(w);
  if (it == idx.end()) throw std::invalid_argument("not a normal Z word: " + to_string(w));
  return it->second;
}

template <Scalar S>
Element<S> FockSpace<S>::apply_letter(const Generator& g, const Element<S>& v) const {
  Element<S> product = alg_.multiply(alg_.generator(g), v);
  if (!g.is_star()) return product;
  Element<S> out;
  for (const auto& [w, c] : product.terms())
    if (w.empty() || !w.back().is_star()) out.add(w, c);
  return out;
}

template <Scalar S>
Element<S> FockSpace<S>::apply(const Element<S>& e, const Element<S>& v) const {
  Element<S> out;
  for (const auto& [w, c] : e.terms()) {
    Element<S> cur = v;
    for (auto it = w.rbegin(); it != w.rend() && !cur.is_zero(); ++it) cur = apply_letter(*it, cur);
    cur *= c;
    out += cur;
  }
  return out;
}

template <Scalar S>
std::vector<S> FockSpace<S>::coords(const Element<S>& v, int k) const {
  std::vector<S> out(dim(k), S(0));
  for (const auto& [w, c] : v.terms()) {
    if (static_cast<int>(w.size()) != k)
      throw std::logic_error("Fock vector is not homogeneous of degree " + std::to_string(k));
    out[index_of(w)] = c;
  }
  return out;
}

template <Scalar S>
std::map<int, Matrix<S>> FockSpace<S>::act(const Element<S>& e, int k) const {
  const auto& src = basis(k);
  std::map<int, Matrix<S>> blocks;
  for (std::size_t j = 0; j < src.size(); ++j) {
    const Element<S> image = apply(e, Element<S>::term(src[j]));
    for (const auto& [w, c] : image.terms()) {
      const int t = static_cast<int>(w.size());
      auto it = blocks.find(t);
      if (it == blocks.end()) it = blocks.emplace(t, Matrix<S>(dim(t), src.size())).first;
      it->second(index_of(w), j) = c;
    }
  }
  return blocks;
}

template <Scalar S>
Matrix<S> FockSpace<S>::act_block(const Element<S>& e, int k, int target) const {
  if (target < 0) return Matrix<S>(0, dim(k));
  auto blocks = act(e, k);
  auto it = blocks.find(target);
  return it == blocks.end() ? Matrix<S>(dim(target), dim(k)) : it->second;
}

template <Scalar S>
Matrix<S> FockSpace<S>::gram(int k) const {
  {
    std::lock_guard lock(mutex_);
    auto it = grams_.find(k);
    if (it != grams_.end()) return it->second;
  }
  Matrix<S> g(dim(k), dim(k));
  if (k == 0) {
    g(0, 0) = S(1);
  } else {
    // (b_i v0, z b' v0) = (T(z^*) b_i v0, b' v0) with b_j = z b'.
    const Matrix<S> prev = gram(k - 1);
    const auto& words = basis(k);
    std::map<Generator, Matrix<S>> lowered;
    for (std::size_t j = 0; j < words.size(); ++j) {
      const Generator& z = words[j].front();
      auto it = lowered.find(z);
      if (it == lowered.end()) it = lowered.emplace(z, act_block(alg_.generator(z.adjoint()), k, k - 1)).first;
      const Matrix<S>& a = it->second;
      const std::size_t rest = index_of(Word(words[j].begin() + 1, words[j].end()));
      for (std::size_t i = 0; i < words.size(); ++i) {
        S sum(0);
        for (std::size_t l = 0; l < a.rows(); ++l)
          if (!qmb::is_zero(a(l, i))) sum += a(l, i) * prev(l, rest);
        g(i, j) = sum;
      }
    }
  }
  std::lock_guard lock(mutex_);
  return grams_.emplace(k, std::move(g)).first->second;
}

std::vector<PositivityEntry> positivity_check(const FockSpace<Rational>& fock, int k_max) {
  std::vector<PositivityEntry> out;
  for (int k = 0; k <= k_max; ++k) {
    const LdltResult r = ldlt(fock.gram(k));
    PositivityEntry e;
    e.degree = k;
    e.positive = r.positive;
    e.failing_index = r.failing_index;
    if (r.failing_index) e.failing_pivot = r.pivots.back();
    out.push_back(e);
  }
  return out;
}

std::size_t matrix_rank(const Matrix<Rational>& m) { return rank(m); }

std::size_t matrix_rank(const Matrix<Laurent>& m) {
  return generic_rank(m, {Rational(3, 7), Rational(2, 9), Rational(5, 11)});
}

template <Scalar S>
std::size_t vacuum_kernel_dim(const FockSpace<S>& fock, int k) {
  const auto& cfg = fock.algebra().config();
  const std::size_t cols = fock.dim(k);
  const std::size_t lower = k > 0 ? fock.dim(k - 1) : 0;
  Matrix<S> stacked(lower * static_cast<std::size_t>(cfg.generator_count()), cols);
  std::size_t row = 0;
  for (int a = 1; a <= cfg.n; ++a)
    for (int alpha = 1; alpha <= cfg.m; ++alpha) {
      const Matrix<S> block = fock.act_block(fock.algebra().generator(Generator::zstar(a, alpha)), k, k - 1);
      for (std::size_t r = 0; r < block.rows(); ++r, ++row)
        for (std::size_t c = 0; c < cols; ++c) stacked(row, c) = block(r, c);
    }
  return cols - matrix_rank(stacked);
}

template <Scalar S>
std::vector<std::pair<int, S>> y_spectrum(const FockSpace<S>& fock, int k_max) {
  const auto& alg = fock.algebra();
  const Element<S> y = alg.element_y();
  std::vector<std::pair<int, S>> out;
  for (int k = 0; k <= k_max; ++k) {
    const S value = alg.field().q_pow(2 * k);
    auto blocks = fock.act(y, k);
    Matrix<S> expected = Matrix<S>::identity(fock.dim(k));
    expected *= value;
    const bool ok = blocks.size() == 1 && blocks.begin()->first == k && blocks.begin()->second == expected;
    if (!ok) throw SpectrumMismatch("y does not act as q^(2k) on degree " + std::to_string(k));
    out.emplace_back(k, value);
  }
  return out;
}

template class FockSpace<Rational>;
template class FockSpace<Laurent>;
template std::size_t vacuum_kernel_dim(const FockSpace<Rational>&, int);
template std::size_t vacuum_kernel_dim(const FockSpace<Laurent>&, int);
template std::vector<std::pair<int, Rational>> y_spectrum(const FockSpace<Rational>&, int);
template std::vector<std::pair<int, Laurent>> y_spectrum(const FockSpace<Laurent>&, int);

}  // namespace qmb
