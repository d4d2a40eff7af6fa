#pragma once

#include "qmb/equivalence.hpp"
#include "qmb/fock.hpp"
#include "qmb/polalg.hpp"
#include "qmb/tildeg.hpp"

namespace qmb {

// Algebra side.

/// |graded_basis(i, j)| = C(mn+i-1, i) C(mn+j-1, j) for i + j <= max_degree.
template <Scalar S>
CheckReport dimension_check(const PolAlgebra<S>& alg, int max_degree);

/// (ab)c = a(bc) for all basis words of total degree <= 1, plus a fixed
/// pseudo-random sample of `samples` triples of total degree <= max_degree each.
template <Scalar S>
CheckReport associativity_check(const PolAlgebra<S>& alg, int max_degree, int samples = 200);

/// (ab)^* = b^* a^* and e^** = e on basis words of total degree <= max_degree.
template <Scalar S>
CheckReport involution_check(const PolAlgebra<S>& alg, int max_degree);

/// z y = q^-2 y z and z^* y = q^2 y z^* for every generator.
template <Scalar S>
CheckReport y_commutation_check(const PolAlgebra<S>& alg);

// Fock side.

/// Exact LDL^T of G_k for k <= k_max.
CheckReport positivity_report(const FockSpace<Rational>& fock, int k_max);

/// act(y, k) = q^{2k} I for k <= k_max.
template <Scalar S>
CheckReport y_spectrum_check(const FockSpace<S>& fock, int k_max);

/// Common kernel of the z^* on H_k is zero for 1 <= k <= k_max.
template <Scalar S>
CheckReport vacuum_kernel_check(const FockSpace<S>& fock, int k_max);

/// G_{k+1} act(g, k) = act(g^*, k+1)^T G_k for every generator, k < k_max.
template <Scalar S>
CheckReport fock_adjointness_check(const FockSpace<S>& fock, int k_max);

// Operator side.

/// The relations of the quantum matrix t and det_q t = 1.
template <Scalar S>
CheckReport t_relations_check(const TildeG<S>& g);

/// T~(t) = q^{-sum k} and T~(x) = q^{-2 sum k}, both diagonal.
template <Scalar S>
CheckReport diagonal_check(const TildeG<S>& g);

/// T~(t_ij)^+ = T~(t_ij^*) via the type signs, for every i, j.
template <Scalar S>
CheckReport star_identity_check(const TildeG<S>& g);

/// Weighted adjoint identity <A u, v> = <u, A^+ v> on basis vectors for every T~(t_ij).
template <Scalar S>
CheckReport weighted_adjoint_check(const TildeG<S>& g);

}  // namespace qmb
