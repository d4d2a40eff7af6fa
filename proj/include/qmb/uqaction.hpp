#pragma once

#include "qmb/equivalence.hpp"
#include "qmb/polalg.hpp"

#include <map>
#include <mutex>
#include <string>
#include <vector>

namespace qmb {

enum class UqKind { E, F, Kplus, Kminus };

struct UqGenerator {
  UqKind kind = UqKind::E;
  int index = 1;

  static UqGenerator E(int k) { return {UqKind::E, k}; }
  static UqGenerator F(int k) { return {UqKind::F, k}; }
  static UqGenerator K(int k) { return {UqKind::Kplus, k}; }
  static UqGenerator Kinv(int k) { return {UqKind::Kminus, k}; }

  /// "E3", "K1^-1", ...
  std::string to_string() const;
  friend auto operator<=>(const UqGenerator&, const UqGenerator&) = default;
};

/// mu_k for k = 1..N-1 (stored 0-based); K_k acts by q^{mu_k}.
using WeightVector = std::vector<int>;

/// Cartan matrix entry of sl_N.
int cartan(int i, int j);

/// The U_q sl_N action on the holomorphic part C[Mat_{m,n}]_q.
///
/// Generators act on letters by the explicit table and on products by the
/// Leibniz rules E(fg) = E(f)g + K(f)E(g), F(fg) = F(f)K^{-1}(g) + fF(g).
/// Needs q^{1/2}: use symbolic scalars, or a fixed q that is a rational square.
template <Scalar S>
class UqAction {
public:
  explicit UqAction(const PolAlgebra<S>& algebra);

  const PolAlgebra<S>& algebra() const { return algebra_; }
  int rank() const { return algebra_.config().N() - 1; }

  /// Throws UnsupportedElement on ZStar letters, ConfigError on a bad index.
  Element<S> act(const UqGenerator& g, const Element<S>& e) const;
  /// Applies g_1 ... g_r right to left (g_r first).
  Element<S> act_word(const std::vector<UqGenerator>& gs, const Element<S>& e) const;

  WeightVector weight(const Generator& z) const;
  WeightVector weight(const Word& w) const;
  /// Action on a single letter, straight from the table.
  Element<S> act_letter(const UqGenerator& g, const Generator& z) const;

private:
  Element<S> act_word_term(const UqGenerator& g, const Word& w) const;
  S q_pow(int k) const { return algebra_.field().q_pow(k); }

  const PolAlgebra<S>& algebra_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<UqGenerator, Word>, Element<S>> memo_;
};

/// H_0-degree from the weight: (2/(m+n))(m sum_j j mu_j + n sum_j j mu_{N-j} + mn mu_n) / 2.
/// Throws std::logic_error when e is not homogeneous or the value disagrees
/// with the letter count.
template <Scalar S>
int h0_degree(const UqAction<S>& uq, const Element<S>& e);

/// (z_n^m)^{k_1} (2x2 corner minor)^{k_2} ... (m x m corner minor)^{k_m}.
template <Scalar S>
Element<S> lowest_weight_vector(const PolAlgebra<S>& algebra, const std::vector<int>& k);

/// All defining relations of U_q sl_N on every monomial of degree <= max_degree.
template <Scalar S>
CheckReport uq_relations_check(const UqAction<S>& uq, int max_degree);

/// xi(fg) against the coproduct expansion for monomials f, g of degree <= max_degree.
template <Scalar S>
CheckReport module_algebra_check(const UqAction<S>& uq, int max_degree);

/// F_i f_{k} = 0 for i != n and the H_0 degree of f_k, for sum_j j k_j <= max_degree.
template <Scalar S>
CheckReport lowest_weight_check(const UqAction<S>& uq, int max_degree);

extern template class UqAction<Rational>;
extern template class UqAction<Laurent>;

}  // namespace qmb
