#pragma once

#include <cstddef>
#include <vector>

#include "rational.hpp"
#include "scalar.hpp"

namespace suplie {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : r_(r), c_(c), a_(r * c, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = T(1);
    return m;
  }

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  T& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

  std::vector<T> row(std::size_t i) const { return std::vector<T>(a_.begin() + i * c_, a_.begin() + (i + 1) * c_); }
  std::vector<T> col(std::size_t j) const {
    std::vector<T> v(r_);
    for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  void set_col(std::size_t j, const std::vector<T>& v) {
    for (std::size_t i = 0; i < r_; ++i) (*this)(i, j) = v[i];
  }

  Matrix transpose() const {
    Matrix t(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!(x == T(0))) return false;
    return true;
  }

  Matrix& operator+=(const Matrix& o) {
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const T& s, Matrix m) {
    for (auto& x : m.a_) x = T(s * x);
    return m;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix m(a.r_, b.c_);
    for (std::size_t i = 0; i < a.r_; ++i)
      for (std::size_t k = 0; k < a.c_; ++k) {
        const T& x = a(i, k);
        if (x == T(0)) continue;
        for (std::size_t j = 0; j < b.c_; ++j)
          if (!(b(k, j) == T(0))) m(i, j) += T(x * b(k, j));
      }
    return m;
  }
  friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& v) {
    std::vector<T> out(a.r_, T(0));
    for (std::size_t i = 0; i < a.r_; ++i)
      for (std::size_t k = 0; k < a.c_; ++k)
        if (!(a(i, k) == T(0)) && !(v[k] == T(0))) out[i] += T(a(i, k) * v[k]);
    return out;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) { return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_; }

 private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<T> a_;
};

using RatMatrix = Matrix<Rational>;
using ScalarMatrix = Matrix<Scalar>;

inline ScalarMatrix conj_transpose(const ScalarMatrix& m) {
  ScalarMatrix t(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j).conj();
  return t;
}

inline ScalarMatrix to_scalar(const RatMatrix& m) {
  ScalarMatrix s(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) s(i, j) = Scalar(m(i, j));
  return s;
}

inline Scalar trace(const ScalarMatrix& m) {
  Scalar t;
  for (std::size_t k = 0; k < m.rows(); ++k) t += m(k, k);
  return t;
}

// supertrace with the first p coordinates even
inline Scalar supertrace(const ScalarMatrix& m, std::size_t p) {
  Scalar t;
  for (std::size_t k = 0; k < m.rows(); ++k) {
    if (k < p) t += m(k, k);
    else t -= m(k, k);
  }
  return t;
}

inline RatMatrix rat_matrix_from_rows(const std::vector<Vec>& rows, std::size_t ncols) {
  RatMatrix m(rows.size(), ncols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < ncols; ++j) m(i, j) = rows[i][j];
  return m;
}

// flatten row-major
inline Vec flatten(const RatMatrix& m) {
  Vec v(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v[i * m.cols() + j] = m(i, j);
  return v;
}

inline RatMatrix unflatten(const Vec& v, std::size_t r, std::size_t c) {
  RatMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = v[i * c + j];
  return m;
}

}  // namespace suplie
