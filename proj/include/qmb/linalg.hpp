#pragma once

#include "qmb/field.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qmb {

/// Small dense row-major matrix over an exact scalar.
template <class S>
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, S(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  S& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const S& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!qmb::is_zero(x)) return false;
    return true;
  }

  Matrix& operator*=(const S& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: shape mismatch in product");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const S& aik = a(i, k);
        if (qmb::is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!qmb::is_zero(b(k, j))) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    a.check_same(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }

  friend Matrix operator-(Matrix a, const Matrix& b) {
    a.check_same(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

private:
  void check_same(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw std::invalid_argument("Matrix: shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<S> data_;
};

/// Entrywise evaluation at a rational q.
template <class S>
Matrix<Rational> specialize(const Matrix<S>& m, const Rational& q) {
  Matrix<Rational> out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = specialize(m(r, c), q);
  return out;
}

/// Exact rank by Gaussian elimination.
std::size_t rank(Matrix<Rational> m);

/// Rank of a matrix over the Laurent ring, decided at the given points.
/// A specialization never raises the rank, so the maximum over the points
/// is a lower bound that equals the generic rank for all but finitely many q.
std::size_t generic_rank(const Matrix<Laurent>& m, const std::vector<Rational>& points);

struct LdltResult {
  bool positive = true;
  /// First pivot that is not strictly positive.
  std::optional<std::size_t> failing_index;
  std::vector<Rational> pivots;
};

/// Exact LDL^T of a symmetric matrix; positive definite iff all pivots > 0.
LdltResult ldlt(const Matrix<Rational>& m);

}  // namespace qmb
