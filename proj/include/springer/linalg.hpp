#ifndef SPRINGER_LINALG_HPP
#define SPRINGER_LINALG_HPP

// Dense exact linear algebra over Q and over Q(zeta_e).

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "springer/poly.hpp"

namespace springer {

inline bool is_zero(const Rational& x) { return x == 0; }
inline bool is_zero(const Cyclotomic& x) { return x.is_zero(); }
inline Rational inverse(const Rational& x) { return 1 / x; }
inline Cyclotomic inverse(const Cyclotomic& x) { return x.inverse(); }

/// Row-major dense matrix. The zero element is passed explicitly because a
/// Cyclotomic zero carries its conductor.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& zero) : rows_(rows), cols_(cols), zero_(zero), data_(rows * cols, zero) {}

  static Matrix identity(std::size_t n, const T& zero, const T& one) {
    Matrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const T& zero() const { return zero_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<T> apply(const std::vector<T>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("Matrix::apply: dimension mismatch");
    std::vector<T> out(rows_, zero_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if (!is_zero((*this)(r, c))) out[r] += (*this)(r, c) * v[c];
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix product: dimension mismatch");
    Matrix m(a.rows_, b.cols_, a.zero_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (is_zero(a(i, k))) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += a(i, k) * b(k, j);
      }
    return m;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  T zero_{};
  std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;

template <class T>
struct Echelon {
  Matrix<T> reduced;                 // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

/// Reduced row echelon form. Elimination steps are fraction-free
/// (row_j <- p * row_j - c * row_i); rows are normalized once at the end.
/// Pivot choice is the first nonzero entry in the column.
template <class T>
Echelon<T> row_echelon(Matrix<T> m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(r, k));
    const T piv = m(r, c);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      const T f = m(i, c);
      for (std::size_t k = 0; k < m.cols(); ++k) m(i, k) = piv * m(i, k) - f * m(r, k);
    }
    pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    const T inv = inverse(m(i, pivots[i]));
    for (std::size_t k = 0; k < m.cols(); ++k)
      if (!is_zero(m(i, k))) m(i, k) = m(i, k) * inv;
  }
  return {std::move(m), std::move(pivots)};
}

template <class T>
std::size_t rank(const Matrix<T>& m) {
  return row_echelon(m).pivots.size();
}

/// Basis of the right null space {v : m v = 0}; one vector per free column,
/// with a 1 in that column.
template <class T>
std::vector<std::vector<T>> kernel_basis(const Matrix<T>& m, const T& one) {
  const auto ech = row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : ech.pivots) is_pivot[c] = true;
  std::vector<std::vector<T>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<T> v(m.cols(), m.zero());
    v[f] = one;
    for (std::size_t i = 0; i < ech.pivots.size(); ++i) v[ech.pivots[i]] = -ech.reduced(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

inline std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m) { return kernel_basis(m, Rational(1)); }

inline std::vector<std::vector<Cyclotomic>> kernel_basis(const Matrix<Cyclotomic>& m) {
  return kernel_basis(m, Cyclotomic(m.zero().conductor(), 1));
}

}  // namespace springer

#endif  // SPRINGER_LINALG_HPP
