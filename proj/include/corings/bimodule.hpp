#pragma once

#include <memory>
#include <string>

#include "corings/algebra.hpp"

namespace corings {

using AlgebraPtrTag = void;

// (A,B)-bimodule; lact column (i*dim + m) = e_i.m, ract column (m*dimB + j) = m.e_j
template <class F>
struct Bimodule {
  using K = typename F::K;

  F f;
  std::shared_ptr<const Algebra<F>> A, B;
  std::size_t dim = 0;
  Mat<F> lact;  // dim x (dimA*dim)
  Mat<F> ract;  // dim x (dim*dimB)
  std::string label;

  // matrix of the action of a fixed algebra element
  Mat<F> lmat(const Mat<F>& a) const { return lact * kron(a, Mat<F>::identity(f, dim)); }
  Mat<F> rmat(const Mat<F>& b) const { return ract * kron(Mat<F>::identity(f, dim), b); }

  Report check() const {
    Report r{label.empty() ? "bimodule" : label, {}};
    auto I = Mat<F>::identity(f, dim);
    auto IA = Mat<F>::identity(f, A->dim);
    auto IB = Mat<F>::identity(f, B->dim);
    r.require(lmat(A->unit) == I, "left action unital");
    r.require(rmat(B->unit) == I, "right action unital");
    r.require(lact * kron(A->mult, I) == lact * kron(IA, lact), "left action associative");
    r.require(ract * kron(I, B->mult) == ract * kron(ract, IB), "right action associative");
    r.require(ract * kron(lact, IB) == lact * kron(IA, ract), "actions commute");
    return r;
  }
};

template <class F>
Bimodule<F> regular_bimodule(std::shared_ptr<const Algebra<F>> a) {
  Bimodule<F> m;
  m.f = a->f;
  m.A = a;
  m.B = a;
  m.dim = a->dim;
  m.lact = a->mult;
  m.ract = a->mult;
  m.label = a->label;
  return m;
}

// the scalar field as the trivial outer algebra of a one-sided module
template <class F>
std::shared_ptr<const Algebra<F>> scalar_algebra(F f) {
  return std::make_shared<Algebra<F>>(field_algebra(f));
}

template <class F>
Bimodule<F> left_module(std::shared_ptr<const Algebra<F>> a, Mat<F> lact,
                        std::string label = "") {
  Bimodule<F> m;
  m.f = a->f;
  m.A = a;
  m.B = scalar_algebra(a->f);
  m.dim = lact.rows;
  m.lact = std::move(lact);
  m.ract = Mat<F>::identity(a->f, m.dim);
  m.label = std::move(label);
  return m;
}

template <class F>
Bimodule<F> right_module(std::shared_ptr<const Algebra<F>> a, Mat<F> ract,
                         std::string label = "") {
  Bimodule<F> m;
  m.f = a->f;
  m.A = scalar_algebra(a->f);
  m.B = a;
  m.dim = ract.rows;
  m.lact = Mat<F>::identity(a->f, m.dim);
  m.ract = std::move(ract);
  m.label = std::move(label);
  return m;
}

// forget one side of a bimodule
template <class F>
Bimodule<F> as_right_module(const Bimodule<F>& m) {
  return right_module(m.B, m.ract, m.label);
}

template <class F>
Bimodule<F> as_left_module(const Bimodule<F>& m) {
  return left_module(m.A, m.lact, m.label);
}

// free right module A^n, coordinates (i, t) -> i*dimA + t
template <class F>
Bimodule<F> free_right_module(std::shared_ptr<const Algebra<F>> a, std::size_t n) {
  auto I = Mat<F>::identity(a->f, n);
  return right_module(a, kron(I, a->mult), a->label + "^" + std::to_string(n));
}

// all k-linear maps M -> N commuting with both actions, flattened row-major
template <class F>
Subspace<F> bimodule_map_space(const Bimodule<F>& m, const Bimodule<F>& n) {
  auto f = m.f;
  std::size_t vars = n.dim * m.dim;
  std::vector<Mat<F>> rows;
  auto In = Mat<F>::identity(f, n.dim);
  auto Im = Mat<F>::identity(f, m.dim);
  for (std::size_t i = 0; i < m.A->dim; ++i) {
    auto e = Mat<F>::unit_col(f, m.A->dim, i);
    rows.push_back(sandwich(n.lmat(e), Im) - sandwich(In, m.lmat(e)));
  }
  for (std::size_t j = 0; j < m.B->dim; ++j) {
    auto e = Mat<F>::unit_col(f, m.B->dim, j);
    rows.push_back(sandwich(n.rmat(e), Im) - sandwich(In, m.rmat(e)));
  }
  Mat<F> sys(f, 0, vars);
  for (auto& r : rows) sys = vstack(sys, r);
  return kernel(sys);
}

// one-sided variant: constraints from the named side only
enum class Side { Left, Right };

template <class F>
Subspace<F> module_map_space(const Bimodule<F>& m, const Bimodule<F>& n, Side side) {
  auto f = m.f;
  std::size_t vars = n.dim * m.dim;
  std::vector<Mat<F>> rows;
  auto In = Mat<F>::identity(f, n.dim);
  auto Im = Mat<F>::identity(f, m.dim);
  if (side == Side::Left) {
    for (std::size_t i = 0; i < m.A->dim; ++i) {
      auto e = Mat<F>::unit_col(f, m.A->dim, i);
      rows.push_back(sandwich(n.lmat(e), Im) - sandwich(In, m.lmat(e)));
    }
  } else {
    for (std::size_t j = 0; j < m.B->dim; ++j) {
      auto e = Mat<F>::unit_col(f, m.B->dim, j);
      rows.push_back(sandwich(n.rmat(e), Im) - sandwich(In, m.rmat(e)));
    }
  }
  Mat<F> sys(f, 0, vars);
  for (auto& r : rows) sys = vstack(sys, r);
  return kernel(sys);
}

template <class F>
Mat<F> unflatten_map(const Bimodule<F>& m, const Bimodule<F>& n, const Mat<F>& v) {
  return unvec_rm(m.f, n.dim, m.dim, v);
}

// both actions intertwined by a given matrix
template <class F>
Report check_bimodule_map(const Bimodule<F>& m, const Bimodule<F>& n, const Mat<F>& h) {
  Report r{"bimodule map", {}};
  if (h.rows != n.dim || h.cols != m.dim) {
    r.issues.push_back("shape");
    return r;
  }
  bool left = true, right = true;
  for (std::size_t i = 0; i < m.A->dim; ++i) {
    auto e = Mat<F>::unit_col(m.f, m.A->dim, i);
    if (h * m.lmat(e) != n.lmat(e) * h) { left = false; break; }
  }
  for (std::size_t j = 0; j < m.B->dim; ++j) {
    auto e = Mat<F>::unit_col(m.f, m.B->dim, j);
    if (h * m.rmat(e) != n.rmat(e) * h) { right = false; break; }
  }
  r.require(left, "left linear");
  r.require(right, "right linear");
  return r;
}

}  // namespace corings
