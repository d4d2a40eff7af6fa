#pragma once

#include "qmb/errors.hpp"
#include "qmb/rational.hpp"

#include <map>
#include <ostream>
#include <string>

namespace qmb {

/// Laurent polynomial in h = q^{1/2} with rational coefficients.
///
/// Exponents are stored as powers of h, so q^k is the monomial h^{2k}.
/// Zero coefficients are never stored, hence the zero polynomial has no
/// terms and equality is structural.
class Laurent {
public:
  using Terms = std::map<int, Rational>;

  Laurent() = default;
  Laurent(long constant);  // NOLINT(google-explicit-constructor)
  Laurent(const Rational& constant);  // NOLINT(google-explicit-constructor)

  /// c * h^e
  static Laurent monomial(int h_exponent, const Rational& coeff = Rational(1));
  /// q^k = h^{2k}
  static Laurent q_pow(int k) { return monomial(2 * k); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool has_odd_powers() const;
  /// Coefficient of h^e.
  Rational coeff(int h_exponent) const;

  /// Exact value at q = q_val.  Odd powers of h need a rational square root
  /// of q_val, otherwise NonSquareEvaluation is thrown.
  Rational evaluate(const Rational& q_val) const;
  /// Floating point value with h = sqrt(q_val).
  double to_double(double q_val) const;

  /// Human readable form in q, e.g. "1-q^2" or "q^(1/2)".
  std::string to_string() const;
  /// Sparse sum form "c*q^(e/2) + ..." used in JSON reports.
  std::string to_json_string() const;

  /// Exact quotient this / d.  Throws std::domain_error when d is zero or
  /// does not divide this in Q[h, 1/h].
  Laurent divide_exact(const Laurent& d) const;

  Laurent operator-() const;
  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent& operator*=(const Laurent& o);

  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);

  friend bool operator==(const Laurent& a, const Laurent& b) = default;

  friend std::ostream& operator<<(std::ostream& os, const Laurent& p) { return os << p.to_string(); }

private:
  void add_term(int e, const Rational& c);

  Terms terms_;
};

}  // namespace qmb
