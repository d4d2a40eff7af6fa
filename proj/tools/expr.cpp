#include "qmb/expr.hpp"

#include <cctype>

namespace qmb {

ParseError::ParseError(std::size_t pos, const std::string& message)
    : std::invalid_argument("at position " + std::to_string(pos) + ": " + message), position(pos) {}

namespace {

class Parser {
public:
  Parser(std::string_view text, const AlgebraConfig& cfg) : s_(text), cfg_(cfg) {}

  std::unique_ptr<Expr> parse() {
    auto e = sum();
    skip();
    if (p_ != s_.size()) throw ParseError(p_, std::string("unexpected '") + s_[p_] + "'");
    return e;
  }

private:
  using Ptr = std::unique_ptr<Expr>;

  void skip() {
    while (p_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[p_]))) ++p_;
  }
  bool peek(char c) {
    skip();
    return p_ < s_.size() && s_[p_] == c;
  }
  void expect(char c) {
    if (!peek(c)) {
      if (p_ >= s_.size()) throw ParseError(p_, std::string("expected '") + c + "' but the input ended");
      throw ParseError(p_, std::string("expected '") + c + "', found '" + s_[p_] + "'");
    }
    ++p_;
  }

  static Ptr node(Expr::Kind k, std::size_t pos) {
    auto e = std::make_unique<Expr>();
    e->kind = k;
    e->position = pos;
    return e;
  }
  static Ptr binary(Expr::Kind k, std::size_t pos, Ptr l, Ptr r) {
    auto e = node(k, pos);
    e->lhs = std::move(l);
    e->rhs = std::move(r);
    return e;
  }

  Ptr sum() {
    auto e = product();
    while (true) {
      if (peek('+')) {
        const auto pos = p_++;
        e = binary(Expr::Kind::Add, pos, std::move(e), product());
      } else if (peek('-')) {
        const auto pos = p_++;
        e = binary(Expr::Kind::Sub, pos, std::move(e), product());
      } else {
        return e;
      }
    }
  }

  Ptr product() {
    auto e = unary();
    while (peek('*')) {
      const auto pos = p_++;
      e = binary(Expr::Kind::Mul, pos, std::move(e), unary());
    }
    return e;
  }

  Ptr unary() {
    if (peek('-')) {
      const auto pos = p_++;
      auto e = node(Expr::Kind::Neg, pos);
      e->lhs = unary();
      return e;
    }
    return power();
  }

  Ptr power() {
    auto base = primary();
    if (!peek('^')) return base;
    const auto pos = p_++;
    skip();
    bool negative = false;
    if (p_ < s_.size() && (s_[p_] == '-' || s_[p_] == '+')) negative = s_[p_++] == '-';
    skip();
    const auto digits_at = p_;
    const long k = integer("an integer exponent");
    if (k > 1000) throw ParseError(digits_at, "exponent too large");
    auto e = node(Expr::Kind::Pow, pos);
    e->lhs = std::move(base);
    e->exponent = static_cast<int>(negative ? -k : k);
    if (peek('^')) throw ParseError(p_, "chained powers need parentheses");
    return e;
  }

  long integer(const char* what) {
    skip();
    const auto start = p_;
    while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) ++p_;
    if (start == p_) {
      if (start >= s_.size()) throw ParseError(start, std::string("expected ") + what + " but the input ended");
      throw ParseError(start, std::string("expected ") + what + ", found '" + s_[start] + "'");
    }
    if (p_ - start > 9) throw ParseError(start, "number too long");
    return std::stol(std::string(s_.substr(start, p_ - start)));
  }

  std::pair<int, int> indices(int max_i, int max_j, const char* atom) {
    expect('[');
    skip();
    const auto pi = p_;
    const long i = integer("an index");
    expect(',');
    skip();
    const auto pj = p_;
    const long j = integer("an index");
    expect(']');
    if (i < 1 || i > max_i)
      throw ParseError(pi, std::string(atom) + " first index " + std::to_string(i) + " outside 1.." +
                               std::to_string(max_i));
    if (j < 1 || j > max_j)
      throw ParseError(pj, std::string(atom) + " second index " + std::to_string(j) + " outside 1.." +
                               std::to_string(max_j));
    return {static_cast<int>(i), static_cast<int>(j)};
  }

  Ptr primary() {
    skip();
    if (p_ >= s_.size()) throw ParseError(p_, "expected an operand but the input ended");
    const auto pos = p_;
    const char c = s_[p_];
    if (c == '(') {
      ++p_;
      auto e = sum();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Rational value(integer("a number"));
      if (peek('/')) {
        ++p_;
        skip();
        const auto dpos = p_;
        const long d = integer("a denominator");
        if (d == 0) throw ParseError(dpos, "zero denominator");
        value = value / Rational(d);
      }
      auto e = node(Expr::Kind::Number, pos);
      e->number = value;
      return e;
    }
    if (c == 'q') {
      ++p_;
      return node(Expr::Kind::Q, pos);
    }
    if (c == 'z') {
      ++p_;
      Expr::Kind kind = Expr::Kind::Z;
      if (peek('*')) {
        // z*[..] is a starred atom; a bare z is never an operand.
        ++p_;
        kind = Expr::Kind::ZStar;
      }
      auto e = node(kind, pos);
      auto [a, alpha] = indices(cfg_.n, cfg_.m, kind == Expr::Kind::Z ? "z" : "z*");
      e->i = a;
      e->j = alpha;
      return e;
    }
    if (c == 't') {
      ++p_;
      auto e = node(Expr::Kind::T, pos);
      auto [i, j] = indices(cfg_.N(), cfg_.N(), "t");
      e->i = i;
      e->j = j;
      return e;
    }
    throw ParseError(pos, std::string("unexpected '") + c + "'");
  }

  std::string_view s_;
  const AlgebraConfig& cfg_;
  std::size_t p_ = 0;
};

}  // namespace

bool Expr::uses_t() const {
  if (kind == Kind::T) return true;
  return (lhs && lhs->uses_t()) || (rhs && rhs->uses_t());
}

std::string Expr::to_string() const {
  auto idx = [&](const char* head) { return std::string(head) + "[" + std::to_string(i) + "," + std::to_string(j) + "]"; };
  switch (kind) {
    case Kind::Number:
      return number.to_string();
    case Kind::Q:
      return "q";
    case Kind::Z:
      return idx("z");
    case Kind::ZStar:
      return idx("z*");
    case Kind::T:
      return idx("t");
    case Kind::Add:
      return "(" + lhs->to_string() + " + " + rhs->to_string() + ")";
    case Kind::Sub:
      return "(" + lhs->to_string() + " - " + rhs->to_string() + ")";
    case Kind::Mul:
      return "(" + lhs->to_string() + " * " + rhs->to_string() + ")";
    case Kind::Neg:
      return "(-" + lhs->to_string() + ")";
    case Kind::Pow:
      return "(" + lhs->to_string() + "^" + std::to_string(exponent) + ")";
  }
  return "?";
}

std::unique_ptr<Expr> parse_expression(std::string_view text, const AlgebraConfig& config) {
  config.validate();
  return Parser(text, config).parse();
}

namespace {

template <Scalar S>
std::optional<S> as_constant(const Element<S>& e) {
  if (e.is_zero()) return S(0);
  if (e.size() == 1 && e.terms().begin()->first.empty()) return e.terms().begin()->second;
  return std::nullopt;
}

}  // namespace

template <Scalar S>
Element<S> evaluate(const Expr& e, const PolAlgebra<S>& alg) {
  using K = Expr::Kind;
  switch (e.kind) {
    case K::Number:
      return alg.scalar(alg.field().from_laurent(Laurent(e.number)));
    case K::Q:
      return alg.scalar(alg.field().q_pow(1));
    case K::Z:
      return alg.generator(Generator::z(e.i, e.j));
    case K::ZStar:
      return alg.generator(Generator::zstar(e.i, e.j));
    case K::T:
      throw ParseError(e.position, "t[i,j] is an operator atom; use it with the operator command");
    case K::Add:
      return evaluate(*e.lhs, alg) + evaluate(*e.rhs, alg);
    case K::Sub:
      return evaluate(*e.lhs, alg) - evaluate(*e.rhs, alg);
    case K::Mul:
      return alg.multiply(evaluate(*e.lhs, alg), evaluate(*e.rhs, alg));
    case K::Neg:
      return -evaluate(*e.lhs, alg);
    case K::Pow: {
      auto base = evaluate(*e.lhs, alg);
      if (e.exponent >= 0) return alg.power(base, e.exponent);
      auto c = as_constant(base);
      if (!c) throw ParseError(e.position, "negative power of a non-scalar");
      try {
        return alg.power(alg.scalar(divide(S(1), *c)), -e.exponent);
      } catch (const std::domain_error&) {
        throw ParseError(e.position, "negative power of a non-invertible scalar");
      }
    }
  }
  return {};
}

template <Scalar S>
TruncatedOperator<S> evaluate_operator(const Expr& e, const TildeG<S>& g) {
  using K = Expr::Kind;
  const auto& f = g.rep().field();
  auto id = g.rep().identity();
  switch (e.kind) {
    case K::Number:
      return id.scaled(f.from_laurent(Laurent(e.number)));
    case K::Q:
      return id.scaled(f.q_pow(1));
    case K::Z:
      return g.embed(Generator::z(e.i, e.j));
    case K::ZStar:
      return g.embed(Generator::zstar(e.i, e.j));
    case K::T:
      return g.ttilde(e.i, e.j);
    case K::Add:
      return evaluate_operator(*e.lhs, g) + evaluate_operator(*e.rhs, g);
    case K::Sub:
      return evaluate_operator(*e.lhs, g) - evaluate_operator(*e.rhs, g);
    case K::Mul:
      return evaluate_operator(*e.lhs, g).compose(evaluate_operator(*e.rhs, g));
    case K::Neg:
      return evaluate_operator(*e.lhs, g).scaled(S(-1));
    case K::Pow: {
      if (e.exponent < 0) {
        if (e.lhs->kind != K::Q) throw ParseError(e.position, "negative powers are only allowed for q here");
        return id.scaled(f.q_pow(e.exponent));
      }
      auto base = evaluate_operator(*e.lhs, g);
      auto out = id;
      for (int k = 0; k < e.exponent; ++k) out = out.compose(base);
      return out;
    }
  }
  return id;
}

template Element<Rational> evaluate(const Expr&, const PolAlgebra<Rational>&);
template Element<Laurent> evaluate(const Expr&, const PolAlgebra<Laurent>&);
template TruncatedOperator<Rational> evaluate_operator(const Expr&, const TildeG<Rational>&);
template TruncatedOperator<Laurent> evaluate_operator(const Expr&, const TildeG<Laurent>&);

}  // namespace qmb
