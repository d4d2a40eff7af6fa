#include "qmb/linalg.hpp"

#include <algorithm>

namespace qmb {

std::size_t rank(Matrix<Rational> m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.rows() && m(pivot, c).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != r)
      for (std::size_t j = c; j < m.cols(); ++j) std::swap(m(pivot, j), m(r, j));
    const Rational inv = Rational(1) / m(r, c);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, c).is_zero()) continue;
      const Rational f = m(i, c) * inv;
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

std::size_t generic_rank(const Matrix<Laurent>& m, const std::vector<Rational>& points) {
  std::size_t best = 0;
  const std::size_t full = std::min(m.rows(), m.cols());
  for (const auto& q : points) {
    best = std::max(best, rank(specialize(m, q)));
    if (best == full) break;
  }
  return best;
}

LdltResult ldlt(const Matrix<Rational>& input) {
  if (input.rows() != input.cols()) throw std::invalid_argument("ldlt: matrix is not square");
  const std::size_t n = input.rows();
  // Only the lower triangle is read and updated.
  Matrix<Rational> a = input;
  LdltResult out;
  for (std::size_t k = 0; k < n; ++k) {
    const Rational d = a(k, k);
    out.pivots.push_back(d);
    if (d.sign() <= 0) {
      out.positive = false;
      out.failing_index = k;
      return out;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      const Rational l = a(i, k) / d;
      for (std::size_t j = k + 1; j <= i; ++j) a(i, j) -= l * a(j, k);
    }
  }
  return out;
}

}  // namespace qmb
