#include "qmb/errors.hpp"
#include "qmb/field.hpp"

namespace qmb {

Field<Rational>::Field(Rational q) : q_(std::move(q)) {
  if (q_.sign() <= 0) throw ConfigError("q must be positive, got " + q_.to_string());
  sqrt_q_ = q_.exact_sqrt();
}

Rational Field<Rational>::q_half_pow(int e) const {
  if (e % 2 == 0) return q_.pow(e / 2);
  if (!sqrt_q_)
    throw NonSquareEvaluation("q^(" + std::to_string(e) + "/2) is irrational at q = " + q_.to_string());
  return sqrt_q_->pow(e);
}

}  // namespace qmb
