#pragma once

#include "qmb/errors.hpp"
#include "qmb/fock.hpp"
#include "qmb/tildeg.hpp"

#include <chrono>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace qmb {

enum class Verdict { Pass, Fail, SkippedValidity };
std::string to_string(Verdict v);

struct CheckReport {
  std::string name;
  int m = 0;
  int n = 0;
  std::string q;
  int cutoff = 0;
  Verdict verdict = Verdict::Pass;
  /// Offending indices or entries when failing.
  std::string witness;
  double seconds = 0.0;
  /// Extra key/value facts (counts, computed norms, ...).
  std::vector<std::pair<std::string, std::string>> details;

  bool passed() const { return verdict == Verdict::Pass; }
};

/// Both realizations of Pol(Mat_{m,n})_q at one cutoff: the Fock module and
/// the operator representation T = T~ o i.
template <Scalar S>
class Realizations {
public:
  Realizations(AlgebraConfig config, Field<S> field, int cutoff)
      : algebra_(config, field), fock_(algebra_), tildeg_(config, field, cutoff) {}
  Realizations(const Realizations&) = delete;
  Realizations& operator=(const Realizations&) = delete;

  const AlgebraConfig& config() const { return algebra_.config(); }
  const PolAlgebra<S>& algebra() const { return algebra_; }
  const FockSpace<S>& fock() const { return fock_; }
  const TildeG<S>& tildeg() const { return tildeg_; }
  int cutoff() const { return tildeg_.cutoff(); }

  /// T(w) e_0 for a normal Z word.
  SparseVector<S> image_of_word(const Word& w) const;
  /// J on H_k: rows follow the degree-k tensor basis, columns the Fock basis.
  Matrix<S> build_J(int k) const;
  /// J applied to a homogeneous Fock vector.
  SparseVector<S> apply_J(const Element<S>& v) const;

private:
  PolAlgebra<S> algebra_;
  FockSpace<S> fock_;
  TildeG<S> tildeg_;
};

/// Starts a report with the shared parameter fields filled in.
template <Scalar S>
CheckReport make_report(const std::string& name, const AlgebraConfig& cfg, const Field<S>& field, int cutoff);

/// Runs body(report) and records the elapsed time.  ValidityError inside the
/// body turns into SkippedValidity.
template <class F>
CheckReport timed(CheckReport report, F&& body) {
  const auto start = std::chrono::steady_clock::now();
  try {
    body(report);
  } catch (const ValidityError& e) {
    report.verdict = Verdict::SkippedValidity;
    report.witness = e.what();
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

/// J is degree preserving and has full rank C(mn+k-1, k) on every H_k, k <= cutoff.
template <Scalar S>
CheckReport j_rank_check(const Realizations<S>& r);

/// J T(g) = T~(i(g)) J on H_k for every generator and z^*, all safe k.
template <Scalar S>
CheckReport intertwiner_check(const Realizations<S>& r);

/// <J f, J g> = G_k[f, g] for k <= cutoff.
template <Scalar S>
CheckReport gram_match_check(const Realizations<S>& r);

/// T(z-minor) = t^{-1} t^{wedge m}_{{1..m} J} for every minor of every size.
template <Scalar S>
CheckReport minor_embedding_check(const Realizations<S>& r);

/// sum_J (-1)^{|{1..n} n J|} A_J A_J^+ = I with A_J = t^{wedge m}_{{1..m} J}.
template <Scalar S>
CheckReport resolution_check(const TildeG<S>& g);

/// T(y) = x^{-1}.
template <Scalar S>
CheckReport y_image_check(const Realizations<S>& r);

/// t^* = (-q)^{mn} t^{wedge n}_{{m+1..N},{1..n}}.
template <Scalar S>
CheckReport t_star_formula_check(const TildeG<S>& g);

/// f_+ (x) f_- -> T(f_+ f_-)|H_l has full rank dim_k dim_l.
template <Scalar S>
CheckReport faithfulness_rank_check(const FockSpace<S>& fock, int k, int l);

struct NormResult {
  double norm = 0.0;
  /// Norm of the block H_d -> H_{d+1}, d = 0..cutoff-1.
  std::vector<double> per_degree;
  int iterations = 0;
  bool converged = true;
};

/// ||T(Z)|| on the truncation, Z = (z_{alpha a}), z_{alpha a} = (-q)^{alpha-1} z_a^{m+1-alpha}.
/// Exact operators at q, then power iteration in double precision per degree block.
NormResult norm_Z(const AlgebraConfig& cfg, int cutoff, const Rational& q);

/// Dense double matrix of T(Z) restricted to source degree d in the
/// orthonormalized basis (rows: alpha blocks, columns: a blocks).
std::vector<std::vector<double>> normalized_Z_block(const TildeG<Rational>& g, int d);

/// Largest singular value by power iteration on B^T B.
double largest_singular_value(const std::vector<std::vector<double>>& b, double tol, int max_iter, int* iterations,
                              bool* converged);

extern template class Realizations<Rational>;
extern template class Realizations<Laurent>;

}  // namespace qmb
