#pragma once

#include <optional>
#include <vector>

#include "corings/matrix.hpp"

namespace corings {

template <class F>
struct Rref {
  Mat<F> m;
  std::vector<std::size_t> pivots;  // pivot column per pivot row
  std::size_t rank = 0;
};

// deterministic reduced row echelon: scan columns left to right, pick the
// first nonzero entry at or below the current row
template <class F>
Rref<F> rref(Mat<F> m) {
  Rref<F> out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t piv = r;
    while (piv < m.rows && m.at(piv, c).is_zero()) ++piv;
    if (piv == m.rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
    auto s = inv(m.at(r, c));
    for (std::size_t j = 0; j < m.cols; ++j) m.at(r, j) = m.at(r, j) * s;
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      auto t = m.at(i, c);
      for (std::size_t j = 0; j < m.cols; ++j)
        m.at(i, j) = m.at(i, j) - t * m.at(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  out.m = std::move(m);
  return out;
}

template <class F>
std::size_t rank(const Mat<F>& m) {
  return rref(m).rank;
}

// canonical linear span: rows of the rref of the generator list, transposed
// back into columns; bit-identical for equal subspaces
template <class F>
struct Subspace {
  std::size_t ambient = 0;
  Mat<F> basis;  // ambient x dim, reduced column echelon

  std::size_t dim() const { return basis.cols; }
};

template <class F>
Subspace<F> span_of_columns(const Mat<F>& gens) {
  auto rr = rref(gens.transpose());
  Subspace<F> s;
  s.ambient = gens.rows;
  s.basis = Mat<F>(gens.f, gens.rows, rr.rank);
  for (std::size_t i = 0; i < rr.rank; ++i)
    for (std::size_t j = 0; j < gens.rows; ++j) s.basis.at(j, i) = rr.m.at(i, j);
  return s;
}

// particular solution with free variables set to zero, for every column of b
template <class F>
std::optional<Mat<F>> solve_linear(const Mat<F>& A, const Mat<F>& b) {
  if (A.rows != b.rows) throw std::logic_error("solve shape");
  auto rr = rref(hstack(A, b));
  // any pivot inside the b block means inconsistency
  for (auto c : rr.pivots)
    if (c >= A.cols) return std::nullopt;
  Mat<F> x(A.f, A.cols, b.cols);
  for (std::size_t i = 0; i < rr.pivots.size(); ++i)
    for (std::size_t j = 0; j < b.cols; ++j)
      x.at(rr.pivots[i], j) = rr.m.at(i, A.cols + j);
  return x;
}

template <class F>
Mat<F> kernel_raw(const Mat<F>& A) {
  auto rr = rref(A);
  std::vector<bool> is_pivot(A.cols, false);
  for (auto c : rr.pivots) is_pivot[c] = true;
  std::size_t nfree = A.cols - rr.rank;
  Mat<F> k(A.f, A.cols, nfree);
  std::size_t jj = 0;
  for (std::size_t c = 0; c < A.cols; ++c) {
    if (is_pivot[c]) continue;
    k.at(c, jj) = A.f.one();
    for (std::size_t i = 0; i < rr.pivots.size(); ++i)
      k.at(rr.pivots[i], jj) = -rr.m.at(i, c);
    ++jj;
  }
  return k;
}

// canonical kernel basis (re-canonicalized through the subspace form)
template <class F>
Subspace<F> kernel(const Mat<F>& A) {
  return span_of_columns(kernel_raw(A));
}

template <class F>
std::optional<Mat<F>> inverse(const Mat<F>& A) {
  if (!A.is_square()) return std::nullopt;
  auto sol = solve_linear(A, Mat<F>::identity(A.f, A.rows));
  if (!sol) return std::nullopt;
  if (rank(A) != A.rows) return std::nullopt;
  return sol;
}

template <class F>
bool contains(const Subspace<F>& s, const Mat<F>& v) {
  return solve_linear(s.basis, v).has_value();
}

template <class F>
std::optional<Mat<F>> coords_in(const Subspace<F>& s, const Mat<F>& v) {
  return solve_linear(s.basis, v);
}

template <class F>
Subspace<F> sum(const Subspace<F>& s, const Subspace<F>& t) {
  if (s.ambient != t.ambient) throw std::logic_error("sum ambient");
  return span_of_columns(hstack(s.basis, t.basis));
}

template <class F>
Subspace<F> intersect(const Subspace<F>& s, const Subspace<F>& t) {
  if (s.ambient != t.ambient) throw std::logic_error("intersect ambient");
  if (s.dim() == 0 || t.dim() == 0) {
    Subspace<F> z;
    z.ambient = s.ambient;
    z.basis = Mat<F>(s.basis.f, s.ambient, 0);
    return z;
  }
  auto k = kernel_raw(hstack(s.basis, -t.basis));
  Mat<F> first(s.basis.f, s.dim(), k.cols);
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < k.cols; ++j) first.at(i, j) = k.at(i, j);
  return span_of_columns(s.basis * first);
}

template <class F>
bool same_space(const Subspace<F>& s, const Subspace<F>& t) {
  return s.ambient == t.ambient && s.basis == t.basis;
}

template <class F>
Subspace<F> full_space(F f, std::size_t n) {
  Subspace<F> s;
  s.ambient = n;
  s.basis = Mat<F>::identity(f, n);
  return s;
}

}  // namespace corings
