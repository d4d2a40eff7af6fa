#pragma once

#include "qmb/field.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace qmb {

/// Shape of the quantum matrix space: m rows, n columns, 1 <= m <= n.
struct AlgebraConfig {
  int m = 2;
  int n = 2;

  int N() const { return m + n; }
  int generator_count() const { return m * n; }
  /// Throws ConfigError unless 1 <= m <= n.
  void validate() const;
};

enum class Kind : std::uint8_t { Z, ZStar };

/// z_a^alpha or (z_a^alpha)^*.  row = alpha in 1..m, col = a in 1..n.
struct Generator {
  Kind kind = Kind::Z;
  int row = 1;
  int col = 1;

  static Generator z(int a, int alpha) { return {Kind::Z, alpha, a}; }
  static Generator zstar(int a, int alpha) { return {Kind::ZStar, alpha, a}; }

  bool is_star() const { return kind == Kind::ZStar; }
  Generator adjoint() const { return {is_star() ? Kind::Z : Kind::ZStar, row, col}; }
  /// "z[a,alpha]" or "z*[a,alpha]"
  std::string to_string() const;

  friend auto operator<=>(const Generator&, const Generator&) = default;
};

using Word = std::vector<Generator>;

std::string to_string(const Word& w);

/// (Z-degree, -(ZStar-degree))
struct Bidegree {
  int i = 0;
  int j = 0;
  friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
};

Bidegree bidegree(const Word& w);

/// Finite linear combination of words.  Elements produced by PolAlgebra only
/// ever hold normal words; the linear operations here never reorder letters.
template <Scalar S>
class Element {
public:
  using Terms = std::map<Word, S>;

  Element() = default;
  static Element constant(const S& c) { return term(Word{}, c); }
  static Element term(const Word& w, const S& c = S(1));

  const Terms& terms() const& { return terms_; }
  // Safe in range-for over a temporary.
  Terms terms() && { return std::move(terms_); }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Coefficient of w (zero when absent).
  S coeff(const Word& w) const;
  void add(const Word& w, const S& c);

  std::set<Bidegree> bidegrees() const;
  /// True when no word contains a ZStar letter.
  bool is_z_only() const;

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const S& c);
  Element operator-() const;
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, const S& c) { return a *= c; }
  friend Element operator*(const S& c, Element a) { return a *= c; }
  friend bool operator==(const Element&, const Element&) = default;

private:
  Terms terms_;
};

/// The presented *-algebra Pol(Mat_{m,n})_q.
///
/// Normal words are Z letters sorted by (a, alpha) followed by ZStar letters
/// sorted by (alpha, a).  Every product is brought to that form by the
/// quadratic rewriting rules; the intermediate results of single-letter
/// insertions are memoised (the memo only ever stores pure function values,
/// so a shared instance is safe to use from several threads).
template <Scalar S>
class PolAlgebra {
public:
  PolAlgebra(AlgebraConfig config, Field<S> field);

  const AlgebraConfig& config() const { return config_; }
  const Field<S>& field() const { return field_; }

  Element<S> one() const { return Element<S>::constant(S(1)); }
  Element<S> scalar(const S& c) const { return Element<S>::constant(c); }
  Element<S> generator(const Generator& g) const;
  /// Throws ConfigError for indices outside 1..n / 1..m.
  void check_generator(const Generator& g) const;

  bool is_normal(const Word& w) const;
  Element<S> normal_form(const Word& w) const;
  Element<S> multiply(const Element<S>& a, const Element<S>& b) const;
  Element<S> power(const Element<S>& a, int exponent) const;
  /// Antilinear anti-automorphism z <-> z^*; coefficients are real here.
  Element<S> involution(const Element<S>& e) const;
  /// Projection onto the bidegree (0,0) component.
  S omega(const Element<S>& e) const { return e.coeff(Word{}); }

  /// sum_s (-q)^{l(s)} z_{c_1}^{r_{s(1)}} ... z_{c_k}^{r_{s(k)}}; rows are
  /// alpha indices, cols are a indices, both ascending and of equal size.
  Element<S> q_minor_z(const std::vector<int>& rows, const std::vector<int>& cols) const;
  /// y = 1 + sum_k (-1)^k sum_{J',J''} M M^*, M the k-minor on (J', J'').
  Element<S> element_y() const;

  /// All normal words with i Z letters and j ZStar letters in basis order.
  std::vector<Word> graded_basis(int i, int j) const;

  /// Sort keys of the normal order.
  int z_key(const Generator& g) const { return (g.col - 1) * config_.m + (g.row - 1); }
  int star_key(const Generator& g) const { return (g.row - 1) * config_.n + (g.col - 1); }

  /// Right multiplication of a normal element by one letter.
  Element<S> mul_letter(const Element<S>& e, const Generator& g) const;

  /// The R-matrix entry R_{ij}^{kl} of the cross relation.
  static Laurent r_matrix(int i, int j, int k, int l);

private:
  using Key = std::pair<Word, Generator>;
  using Cache = std::map<Key, Element<S>>;

  S c(const Laurent& p) const { return field_.from_laurent(p); }

  Element<S> z_insert(const Word& sorted_z, const Generator& z) const;
  Element<S> star_insert(const Word& sorted_star, const Generator& s) const;
  Element<S> cross(const Word& sorted_star, const Generator& z) const;

  Element<S> swap_z(const Generator& x, const Generator& y) const;
  Element<S> swap_star(const Generator& x, const Generator& y) const;
  Element<S> swap_cross(const Generator& star, const Generator& z) const;

  bool lookup(const Cache& cache, const Key& key, Element<S>& out) const;
  void store(Cache& cache, const Key& key, const Element<S>& value) const;

  AlgebraConfig config_;
  Field<S> field_;

  mutable std::mutex cache_mutex_;
  mutable Cache z_cache_;
  mutable Cache star_cache_;
  mutable Cache cross_cache_;
};

/// Pretty form, e.g. "q^2*z[1,1]*z*[1,1] + (1-q^2)".  Longer words first.
template <Scalar S>
std::string to_string(const Element<S>& e);

std::string scalar_text(const Rational& r);
std::string scalar_text(const Laurent& p);

/// Number of inversions of a permutation given as an image vector.
int inversion_count(const std::vector<int>& perm);
/// All permutations of {0..k-1} in lexicographic order.
std::vector<std::vector<int>> permutations(int k);
/// All ascending k-subsets of {1..n} in lexicographic order.
std::vector<std::vector<int>> subsets(int n, int k);
/// Binomial coefficient C(n, k) (0 when k < 0 or k > n).
long long binomial(int n, int k);

extern template class Element<Rational>;
extern template class Element<Laurent>;
extern template class PolAlgebra<Rational>;
extern template class PolAlgebra<Laurent>;

}  // namespace qmb
