#pragma once

#include "qmb/linalg.hpp"
#include "qmb/polalg.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <vector>

namespace qmb {

/// The Fock module H = C[Mat]_q v_0.  A vector is a Z-only Element whose
/// words are read as w v_0.  Bases are the graded_basis(k, 0) orders.
template <Scalar S>
class FockSpace {
public:
  explicit FockSpace(const PolAlgebra<S>& algebra) : alg_(algebra) {}

  const PolAlgebra<S>& algebra() const { return alg_; }

  const std::vector<Word>& basis(int k) const;
  std::size_t dim(int k) const { return basis(k).size(); }
  /// Position of a normal Z word inside basis(word.size()).
  std::size_t index_of(const Word& w) const;

  /// T(g) v for a single letter; words carrying ZStar letters die on v_0.
  Element<S> apply_letter(const Generator& g, const Element<S>& v) const;
  /// T(e) v, letters of each word applied right to left.
  Element<S> apply(const Element<S>& e, const Element<S>& v) const;

  /// Coordinates of a homogeneous degree-k vector.
  std::vector<S> coords(const Element<S>& v, int k) const;

  /// Blocks of T(e) restricted to H_k, keyed by target degree.
  std::map<int, Matrix<S>> act(const Element<S>& e, int k) const;
  /// The single block H_k -> H_target (zero matrix when absent).
  Matrix<S> act_block(const Element<S>& e, int k, int target) const;

  /// G_k[i][j] = (b_i v_0, b_j v_0) = omega(b_j^* b_i).
  Matrix<S> gram(int k) const;

private:
  const PolAlgebra<S>& alg_;
  mutable std::mutex mutex_;
  mutable std::map<int, std::vector<Word>> bases_;
  mutable std::map<int, std::map<Word, std::size_t>> index_;
  mutable std::map<int, Matrix<S>> grams_;
};

struct PositivityEntry {
  int degree = 0;
  bool positive = true;
  /// Offending pivot position and value when not positive.
  std::optional<std::size_t> failing_index;
  Rational failing_pivot;
};

/// Exact LDL^T of G_k for k <= k_max at the field's q.
std::vector<PositivityEntry> positivity_check(const FockSpace<Rational>& fock, int k_max);

/// dim of the common kernel of T((z_a^alpha)^*) on H_k.
template <Scalar S>
std::size_t vacuum_kernel_dim(const FockSpace<S>& fock, int k);

/// Asserts T(y) = q^{2k} I on H_k for k <= k_max; throws SpectrumMismatch.
template <Scalar S>
std::vector<std::pair<int, S>> y_spectrum(const FockSpace<S>& fock, int k_max);

/// Rank of a matrix over S (exact for Rational, at sample points for Laurent).
std::size_t matrix_rank(const Matrix<Rational>& m);
std::size_t matrix_rank(const Matrix<Laurent>& m);

extern template class FockSpace<Rational>;
extern template class FockSpace<Laurent>;

}  // namespace qmb
