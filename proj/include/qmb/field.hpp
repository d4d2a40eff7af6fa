#pragma once

#include "qmb/laurent.hpp"
#include "qmb/rational.hpp"

#include <concepts>
#include <optional>
#include <string>

namespace qmb {

/// Coefficient domain.  Both scalar kinds are commutative rings containing
/// the integers; Rational is additionally a field.
template <class S>
concept Scalar = std::same_as<S, Rational> || std::same_as<S, Laurent>;

/// Supplies the powers of q^{1/2} for a scalar kind.  Every structure
/// constant is written once as a Laurent polynomial and mapped through
/// from_laurent(), so the symbolic and fixed-q modes share one code path.
template <Scalar S>
class Field;

template <>
class Field<Laurent> {
public:
  Laurent from_laurent(const Laurent& p) const { return p; }
  Laurent q_half_pow(int e) const { return Laurent::monomial(e); }
  Laurent q_pow(int k) const { return Laurent::q_pow(k); }
  bool is_symbolic() const { return true; }
  std::string describe() const { return "symbolic"; }
  double to_double(const Laurent& p, double q_val) const { return p.to_double(q_val); }
  std::string to_json_string(const Laurent& p) const { return p.to_json_string(); }
};

template <>
class Field<Rational> {
public:
  /// q must be positive.  Throws ConfigError otherwise.
  explicit Field(Rational q);

  const Rational& q() const { return q_; }
  Rational from_laurent(const Laurent& p) const { return p.evaluate(q_); }
  /// q^{e/2}; odd e requires q to be a rational square.
  Rational q_half_pow(int e) const;
  Rational q_pow(int k) const { return q_.pow(k); }
  bool is_symbolic() const { return false; }
  std::string describe() const { return q_.to_string(); }
  double to_double(const Rational& r, double /*q_val*/ = 0.0) const { return r.to_double(); }
  std::string to_json_string(const Rational& r) const { return r.to_string(); }

private:
  Rational q_;
  std::optional<Rational> sqrt_q_;
};

inline bool is_zero(const Rational& r) { return r.is_zero(); }
inline bool is_zero(const Laurent& p) { return p.is_zero(); }

/// Exact quotient; throws std::domain_error when it does not exist.
inline Rational divide(const Rational& a, const Rational& b) { return a / b; }
inline Laurent divide(const Laurent& a, const Laurent& b) { return a.divide_exact(b); }

/// Rational value used when a rank or sign question is decided at a point.
inline Rational specialize(const Rational& r, const Rational& /*q*/) { return r; }
inline Rational specialize(const Laurent& p, const Rational& q) { return p.evaluate(q); }

/// (-q)^k as a Laurent polynomial.
inline Laurent minus_q_pow(int k) {
  Laurent p = Laurent::q_pow(k);
  return (k % 2 == 0) ? p : -p;
}

}  // namespace qmb
