#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "corings/scalar.hpp"

namespace corings {

// dense matrix over a field context F; column j holds the image of basis vector j
template <class F>
struct Mat {
  using K = typename F::K;

  F f;
  std::size_t rows = 0, cols = 0;
  std::vector<K> a;

  Mat() = default;
  Mat(F field, std::size_t r, std::size_t c)
      : f(field), rows(r), cols(c), a(r * c, field.zero()) {}

  K& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const K& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  static Mat identity(F field, std::size_t n) {
    Mat m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = field.one();
    return m;
  }

  static Mat unit_col(F field, std::size_t n, std::size_t i) {
    Mat m(field, n, 1);
    m.at(i, 0) = field.one();
    return m;
  }

  bool is_zero() const {
    for (const auto& x : a)
      if (!x.is_zero()) return false;
    return true;
  }

  bool is_square() const { return rows == cols; }

  Mat col(std::size_t j) const {
    Mat m(f, rows, 1);
    for (std::size_t i = 0; i < rows; ++i) m.at(i, 0) = at(i, j);
    return m;
  }

  void set_col(std::size_t j, const Mat& v) {
    if (v.rows != rows || v.cols != 1) throw std::logic_error("set_col shape");
    for (std::size_t i = 0; i < rows; ++i) at(i, j) = v.at(i, 0);
  }

  Mat transpose() const {
    Mat m(f, cols, rows);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m.at(j, i) = at(i, j);
    return m;
  }

  friend Mat operator+(const Mat& x, const Mat& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw std::logic_error("add shape");
    Mat m = x;
    for (std::size_t i = 0; i < m.a.size(); ++i) m.a[i] = m.a[i] + y.a[i];
    return m;
  }

  friend Mat operator-(const Mat& x, const Mat& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw std::logic_error("sub shape");
    Mat m = x;
    for (std::size_t i = 0; i < m.a.size(); ++i) m.a[i] = m.a[i] - y.a[i];
    return m;
  }

  friend Mat operator-(const Mat& x) {
    Mat m = x;
    for (auto& v : m.a) v = -v;
    return m;
  }

  friend Mat operator*(const Mat& x, const Mat& y) {
    if (x.cols != y.rows) throw std::logic_error("mul shape");
    Mat m(x.f, x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
      for (std::size_t k = 0; k < x.cols; ++k) {
        const K& xv = x.at(i, k);
        if (xv.is_zero()) continue;
        for (std::size_t j = 0; j < y.cols; ++j)
          m.at(i, j) = m.at(i, j) + xv * y.at(k, j);
      }
    return m;
  }

  Mat scaled(const K& c) const {
    Mat m = *this;
    for (auto& v : m.a) v = v * c;
    return m;
  }

  friend bool operator==(const Mat& x, const Mat& y) {
    if (x.rows != y.rows || x.cols != y.cols) return false;
    for (std::size_t i = 0; i < x.a.size(); ++i)
      if (x.a[i] != y.a[i]) return false;
    return true;
  }
  friend bool operator!=(const Mat& x, const Mat& y) { return !(x == y); }

  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows; ++i) {
      if (i) s += "; ";
      for (std::size_t j = 0; j < cols; ++j) {
        if (j) s += ", ";
        s += at(i, j).str();
      }
    }
    return s + "]";
  }
};

// kron(A,B): row (i,j) -> i*B.rows + j, col (k,l) -> k*B.cols + l, entry A(i,k)B(j,l)
template <class F>
Mat<F> kron(const Mat<F>& A, const Mat<F>& B) {
  Mat<F> m(A.f, A.rows * B.rows, A.cols * B.cols);
  for (std::size_t i = 0; i < A.rows; ++i)
    for (std::size_t k = 0; k < A.cols; ++k) {
      const auto& av = A.at(i, k);
      if (av.is_zero()) continue;
      for (std::size_t j = 0; j < B.rows; ++j)
        for (std::size_t l = 0; l < B.cols; ++l)
          m.at(i * B.rows + j, k * B.cols + l) = av * B.at(j, l);
    }
  return m;
}

template <class F>
Mat<F> hstack(const Mat<F>& x, const Mat<F>& y) {
  if (x.rows != y.rows) throw std::logic_error("hstack shape");
  Mat<F> m(x.f, x.rows, x.cols + y.cols);
  for (std::size_t i = 0; i < x.rows; ++i) {
    for (std::size_t j = 0; j < x.cols; ++j) m.at(i, j) = x.at(i, j);
    for (std::size_t j = 0; j < y.cols; ++j) m.at(i, x.cols + j) = y.at(i, j);
  }
  return m;
}

template <class F>
Mat<F> vstack(const Mat<F>& x, const Mat<F>& y) {
  if (x.cols != y.cols) throw std::logic_error("vstack shape");
  Mat<F> m(x.f, x.rows + y.rows, x.cols);
  for (std::size_t j = 0; j < x.cols; ++j) {
    for (std::size_t i = 0; i < x.rows; ++i) m.at(i, j) = x.at(i, j);
    for (std::size_t i = 0; i < y.rows; ++i) m.at(x.rows + i, j) = y.at(i, j);
  }
  return m;
}

template <class F>
Mat<F> from_cols(F field, std::size_t rows, const std::vector<Mat<F>>& cols) {
  Mat<F> m(field, rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) m.set_col(j, cols[j]);
  return m;
}

// row-major flattening of a matrix into a column vector
template <class F>
Mat<F> vec_rm(const Mat<F>& x) {
  Mat<F> m(x.f, x.rows * x.cols, 1);
  for (std::size_t i = 0; i < x.a.size(); ++i) m.a[i] = x.a[i];
  return m;
}

template <class F>
Mat<F> unvec_rm(F field, std::size_t rows, std::size_t cols, const Mat<F>& v) {
  if (v.rows != rows * cols || v.cols != 1) throw std::logic_error("unvec shape");
  Mat<F> m(field, rows, cols);
  for (std::size_t i = 0; i < m.a.size(); ++i) m.a[i] = v.a[i];
  return m;
}

// vec_rm(A*X*B) = kron(A, B^T) * vec_rm(X)
template <class F>
Mat<F> sandwich(const Mat<F>& A, const Mat<F>& B) {
  return kron(A, B.transpose());
}

}  // namespace corings
