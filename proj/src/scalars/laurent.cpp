#include "qmb/laurent.hpp"

#include <cmath>
#include <sstream>

namespace qmb {

Laurent::Laurent(long constant) : Laurent(Rational(constant)) {}

Laurent::Laurent(const Rational& constant) {
  if (!constant.is_zero()) terms_.emplace(0, constant);
}

Laurent Laurent::monomial(int h_exponent, const Rational& coeff) {
  Laurent p;
  if (!coeff.is_zero()) p.terms_.emplace(h_exponent, coeff);
  return p;
}

bool Laurent::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

bool Laurent::has_odd_powers() const {
  for (const auto& [e, c] : terms_)
    if (e % 2 != 0) return true;
  return false;
}

Rational Laurent::coeff(int h_exponent) const {
  auto it = terms_.find(h_exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Laurent::add_term(int e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Laurent Laurent::divide_exact(const Laurent& d) const {
  if (d.is_zero()) throw std::domain_error("Laurent::divide_exact: division by zero");
  if (is_zero()) return {};
  // Long division on the top exponents; units h^e make any remainder that
  // survives below the divisor's span a genuine non-divisibility.
  const int d_top = d.terms_.rbegin()->first;
  const int d_low = d.terms_.begin()->first;
  const Rational& d_lead = d.terms_.rbegin()->second;
  Laurent rem = *this;
  Laurent quot;
  while (!rem.is_zero()) {
    const int r_top = rem.terms_.rbegin()->first;
    const int r_low = rem.terms_.begin()->first;
    const int shift = r_top - d_top;
    if (r_top - r_low < d_top - d_low)
      throw std::domain_error("Laurent::divide_exact: " + to_string() + " is not divisible by " + d.to_string());
    Laurent step = monomial(shift, rem.terms_.rbegin()->second / d_lead);
    quot += step;
    rem -= step * d;
  }
  return quot;
}

Rational Laurent::evaluate(const Rational& q_val) const {
  if (q_val.sign() <= 0) throw std::domain_error("Laurent::evaluate: q must be positive");
  Rational h;
  bool odd = has_odd_powers();
  if (odd) {
    auto root = q_val.exact_sqrt();
    if (!root)
      throw NonSquareEvaluation("q = " + q_val.to_string() +
                                " has no rational square root but odd powers of q^(1/2) occur");
    h = *root;
  }
  Rational sum;
  for (const auto& [e, c] : terms_) {
    if (e % 2 == 0)
      sum += c * q_val.pow(e / 2);
    else
      sum += c * h.pow(e);
  }
  return sum;
}

double Laurent::to_double(double q_val) const {
  double h = std::sqrt(q_val);
  double sum = 0.0;
  for (const auto& [e, c] : terms_) {
    double power = (e % 2 == 0) ? std::pow(q_val, e / 2) : std::pow(h, e);
    sum += c.to_double() * power;
  }
  return sum;
}

namespace {

std::string q_power_text(int e) {
  if (e == 0) return "";
  if (e == 2) return "q";
  if (e % 2 == 0) return "q^" + std::to_string(e / 2);
  return "q^(" + std::to_string(e) + "/2)";
}

}  // namespace

std::string Laurent::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = c.sign() < 0 ? -c : c;
    if (c.sign() < 0)
      os << "-";
    else if (!first)
      os << "+";
    std::string qp = q_power_text(e);
    if (qp.empty()) {
      os << mag;
    } else {
      if (!mag.is_one()) os << mag << "*";
      os << qp;
    }
    first = false;
  }
  return os.str();
}

std::string Laurent::to_json_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    os << c << "*q^(" << e << "/2)";
    first = false;
  }
  return os.str();
}

Laurent Laurent::operator-() const {
  Laurent r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

Laurent& Laurent::operator*=(const Laurent& o) { return *this = *this * o; }

}  // namespace qmb
