#pragma once

#include "qmb/field.hpp"
#include "qmb/polalg.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qmb {

/// Adjacent transposition (p, p+1), stored as p.
struct Transposition {
  int p = 1;
  friend bool operator==(const Transposition&, const Transposition&) = default;
};

/// sigma_1 ... sigma_{mn}: concatenated cycles s_m, s_{m-1}, ..., s_1 with
/// s_i = (i,i+1)(i+1,i+2)...(i+n-1,i+n).
std::vector<Transposition> reduced_word(int m, int n);

/// Basis e_k of the cutoff tensor space: tuples k in Z_+^factors with
/// sum(k) <= cutoff, ordered by total degree and then lexicographically.
class TensorSpace {
public:
  TensorSpace(int factors, int cutoff);

  int factors() const { return factors_; }
  int cutoff() const { return cutoff_; }
  std::size_t size() const { return basis_.size(); }
  const std::vector<int>& index(std::size_t i) const { return basis_[i]; }
  int degree(std::size_t i) const { return degree_[i]; }
  std::optional<std::size_t> find(const std::vector<int>& k) const;
  /// Position of a tuple; throws std::out_of_range outside the cutoff.
  std::size_t position(const std::vector<int>& k) const;
  /// Positions of the basis vectors of total degree d.
  std::vector<std::size_t> of_degree(int d) const;

private:
  int factors_;
  int cutoff_;
  std::vector<std::vector<int>> basis_;
  std::vector<int> degree_;
  std::map<std::vector<int>, std::size_t> lookup_;
};

template <Scalar S>
using SparseVector = std::map<std::size_t, S>;

/// Sparse operator on a TensorSpace.
///
/// Columns are only stored for sources of degree <= valid_degree(); on those
/// sources every entry equals the entry of the untruncated operator.  Each
/// nonzero entry changes the total degree by an amount in
/// [min_shift, max_shift].
template <Scalar S>
class TruncatedOperator {
public:
  using Column = SparseVector<S>;

  TruncatedOperator(std::shared_ptr<const TensorSpace> space, int max_shift, int min_shift, int valid_degree);

  static TruncatedOperator identity(std::shared_ptr<const TensorSpace> space);
  static TruncatedOperator zero(std::shared_ptr<const TensorSpace> space);

  const TensorSpace& space() const { return *space_; }
  std::shared_ptr<const TensorSpace> space_ptr() const { return space_; }
  int max_shift() const { return max_shift_; }
  int min_shift() const { return min_shift_; }
  int valid_degree() const { return valid_; }
  bool is_valid_source(std::size_t src) const { return space_->degree(src) <= valid_; }

  const Column& column(std::size_t src) const { return cols_[src]; }
  S entry(std::size_t target, std::size_t source) const;
  /// Accumulates into (target, source); zero sums are erased.
  void add_entry(std::size_t target, std::size_t source, const S& value);
  std::size_t nonzeros() const;

  /// Throws ValidityError when v has support above valid_degree().
  SparseVector<S> apply(const SparseVector<S>& v) const;

  /// Composition this o rhs.
  TruncatedOperator compose(const TruncatedOperator& rhs) const;
  TruncatedOperator scaled(const S& c) const;
  TruncatedOperator operator+(const TruncatedOperator& o) const;
  TruncatedOperator operator-(const TruncatedOperator& o) const;

  /// Degree shift when it is the same for every entry.
  std::optional<int> exact_shift() const;

private:
  TruncatedOperator combine(const TruncatedOperator& o, bool subtract) const;

  std::shared_ptr<const TensorSpace> space_;
  int max_shift_;
  int min_shift_;
  int valid_;
  std::vector<Column> cols_;
};

/// First source column where two operators differ on their common valid range.
struct OperatorMismatch {
  std::size_t source = 0;
  std::size_t target = 0;
  std::string lhs;
  std::string rhs;
};

template <Scalar S>
std::optional<OperatorMismatch> compare_on_valid(const TruncatedOperator<S>& a, const TruncatedOperator<S>& b);

/// Tensor product representation pi_+ o psi_{sigma_1} (x) ... (x) pi_+ o psi_{sigma_L}
/// of C[SL_N]_q on the cutoff space L_+^{(x) L}, with the weighted inner product.
template <Scalar S>
class TensorRep {
public:
  TensorRep(int N, std::vector<Transposition> word, int cutoff, Field<S> field);

  int N() const { return N_; }
  const std::vector<Transposition>& word() const { return word_; }
  int cutoff() const { return space_->cutoff(); }
  const Field<S>& field() const { return field_; }
  std::shared_ptr<const TensorSpace> space() const { return space_; }

  /// Image of t_ij via the iterated coproduct.
  TruncatedOperator<S> generator(int i, int j) const;
  /// Image of the q-minor t^{wedge k}_{IJ}.
  TruncatedOperator<S> minor(const std::vector<int>& rows, const std::vector<int>& cols) const;
  TruncatedOperator<S> identity() const { return TruncatedOperator<S>::identity(space_); }

  /// (e_k, e_k) = prod_j w_+(k_j), w_+(j) = (q^-2 - 1)...(q^-2j - 1).
  const S& weight(std::size_t index) const { return weights_[index]; }
  S inner(const SparseVector<S>& u, const SparseVector<S>& v) const;
  /// Adjoint for the weighted inner product: A^+[u,v] = A[v,u] w(v) / w(u).
  TruncatedOperator<S> adjoint(const TruncatedOperator<S>& a) const;

  /// (-q)^{j-i} det_q of t with row i and column j removed, times sign.
  TruncatedOperator<S> compact_star(int i, int j) const;

  /// pi_+(t_ab) on one factor as (target k, coefficient); nullopt for zero.
  std::optional<std::pair<int, S>> pi_plus(int a, int b, int k) const;

private:
  int N_;
  std::vector<Transposition> word_;
  Field<S> field_;
  std::shared_ptr<const TensorSpace> space_;
  std::vector<S> weights_;
  std::vector<S> q_neg_;        // q^{-k}
  std::vector<S> c21_;          // -q^{-(k+1)}
  std::vector<S> c22_;          // 1 - q^{-2k}

  mutable std::mutex mutex_;
  mutable std::map<std::pair<int, int>, TruncatedOperator<S>> gens_;
  mutable std::map<std::pair<std::vector<int>, std::vector<int>>, TruncatedOperator<S>> minors_;
};

/// Single-factor operator pi_+(t_ab) on a cutoff space with one factor.
template <Scalar S>
TruncatedOperator<S> pi_plus(int a, int b, int cutoff, const Field<S>& field);

/// lambda_1(k) = sign(k - m - 1/2), lambda_2(k) = sign(n - k + 1/2).
int lambda1(int k, int m);
int lambda2(int k, int n);

/// Lambda^{(0)}, ..., Lambda^{(mn)} with Lambda^{(j)}(i) = lambda_1(u_j(i)).
/// Throws TypeMismatch when a factor does not chain.
std::vector<std::vector<int>> type_chain(int m, int n);

/// Checks numerically that pi_+ o psi_{(p,p+1)} has type (from, to), i.e.
/// pi(t_ij)^+ = from(i) to(j) pi(t_ij^star) for all i, j.
template <Scalar S>
bool factor_has_type(int N, int p, const std::vector<int>& from, const std::vector<int>& to, int cutoff,
                     const Field<S>& field);

/// The representation of C[G~]_q for Pol(Mat_{m,n})_q together with the
/// embedding T = T~ o i.
template <Scalar S>
class TildeG {
public:
  TildeG(AlgebraConfig config, Field<S> field, int cutoff);

  const AlgebraConfig& config() const { return config_; }
  const TensorRep<S>& rep() const { return rep_; }
  int cutoff() const { return rep_.cutoff(); }

  TruncatedOperator<S> ttilde(int i, int j) const { return rep_.generator(i, j); }
  TruncatedOperator<S> q_minor_t(const std::vector<int>& rows, const std::vector<int>& cols) const {
    return rep_.minor(rows, cols);
  }
  TruncatedOperator<S> adjoint(const TruncatedOperator<S>& a) const { return rep_.adjoint(a); }

  /// t = t^{wedge m}_{{1..m},{n+1..N}}.
  TruncatedOperator<S> t() const;
  TruncatedOperator<S> t_star() const { return adjoint(t()); }
  TruncatedOperator<S> x() const { return t().compose(t_star()); }
  /// Diagonal q^{sum k} and q^{2 sum k}.
  TruncatedOperator<S> t_inverse() const;
  TruncatedOperator<S> x_inverse() const;

  /// Image of t_ij^* = lambda_1(i) lambda_2(j) t_ij^star.
  TruncatedOperator<S> star_of_generator(int i, int j) const;

  /// J_{a alpha} = {n+1..N} \ {N+1-alpha} u {a}, ascending.
  std::vector<int> embedding_columns(int a, int alpha) const;
  /// T(z_a^alpha) = t^{-1} t^{wedge m}_{{1..m} J_{a alpha}}.
  TruncatedOperator<S> embed_z(int a, int alpha) const;
  TruncatedOperator<S> embed(const Generator& g) const;
  /// T of a Pol element, word by word.
  TruncatedOperator<S> represent(const Element<S>& e) const;

  /// Degree of t_ij under the grading of C[G~]_q.
  int t_degree(int i, int j) const;

private:
  AlgebraConfig config_;
  TensorRep<S> rep_;
  mutable std::mutex mutex_;
  mutable std::map<Generator, TruncatedOperator<S>> embedded_;
};

template <Scalar S>
std::string scalar_repr(const S& s);

extern template class TruncatedOperator<Rational>;
extern template class TruncatedOperator<Laurent>;
extern template class TensorRep<Rational>;
extern template class TensorRep<Laurent>;
extern template class TildeG<Rational>;
extern template class TildeG<Laurent>;

}  // namespace qmb
