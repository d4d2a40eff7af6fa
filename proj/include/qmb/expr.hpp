#pragma once

#include "qmb/errors.hpp"
#include "qmb/polalg.hpp"
#include "qmb/tildeg.hpp"

#include <memory>
#include <string>
#include <string_view>

namespace qmb {

/// Syntax error at a character offset of the input.
struct ParseError : std::invalid_argument {
  ParseError(std::size_t position, const std::string& message);
  std::size_t position;
};

/// Surface syntax: atoms z[a,alpha], z*[a,alpha], t[i,j], q, integers and
/// rationals p/r; + - * with explicit *, integer ^ powers, parentheses.
struct Expr {
  enum class Kind { Number, Q, Z, ZStar, T, Add, Sub, Mul, Neg, Pow };

  Kind kind = Kind::Number;
  std::size_t position = 0;
  Rational number;
  int i = 0;  // z: a (column), t: row
  int j = 0;  // z: alpha (row), t: column
  int exponent = 0;
  std::unique_ptr<Expr> lhs;
  std::unique_ptr<Expr> rhs;

  bool uses_t() const;
  /// Fully parenthesized form, for tests and error messages.
  std::string to_string() const;
};

/// Parses text and checks indices against the configuration
/// (z: a <= n, alpha <= m; t: 1..m+n).  Throws ParseError.
std::unique_ptr<Expr> parse_expression(std::string_view text, const AlgebraConfig& config);

/// Element of Pol(Mat_{m,n})_q.  Throws ParseError on t atoms or on a
/// negative power of a non-invertible subexpression.
template <Scalar S>
Element<S> evaluate(const Expr& e, const PolAlgebra<S>& algebra);

/// Operator on the truncated tensor space; z atoms go through the embedding T.
template <Scalar S>
TruncatedOperator<S> evaluate_operator(const Expr& e, const TildeG<S>& g);

}  // namespace qmb
