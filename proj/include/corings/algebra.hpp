#pragma once

#include <algorithm>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "corings/linalg.hpp"
#include "corings/matrix.hpp"
#include "corings/verdict.hpp"

namespace corings {

// finite group as a multiplication table
struct Group {
  std::size_t n = 0;
  std::vector<std::size_t> table;  // g*h at [g*n + h]
  std::size_t id = 0;
  std::string label;

  std::size_t mul(std::size_t g, std::size_t h) const { return table[g * n + h]; }

  std::size_t inv(std::size_t g) const {
    for (std::size_t h = 0; h < n; ++h)
      if (mul(g, h) == id) return h;
    throw std::logic_error("no inverse in group table");
  }

  Report check() const {
    Report r{label.empty() ? "group" : label, {}};
    r.require(table.size() == n * n, "table size");
    for (auto v : table)
      if (v >= n) {
        r.issues.push_back("table entry out of range");
        return r;
      }
    bool id_ok = true;
    for (std::size_t g = 0; g < n; ++g)
      id_ok = id_ok && mul(id, g) == g && mul(g, id) == g;
    r.require(id_ok, "identity element");
    bool assoc = true;
    for (std::size_t a = 0; a < n && assoc; ++a)
      for (std::size_t b = 0; b < n && assoc; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c))) { assoc = false; break; }
    r.require(assoc, "associativity");
    bool invs = true;
    for (std::size_t g = 0; g < n; ++g) {
      bool found = false;
      for (std::size_t h = 0; h < n; ++h)
        if (mul(g, h) == id && mul(h, g) == id) { found = true; break; }
      invs = invs && found;
    }
    r.require(invs, "inverses");
    return r;
  }
};

inline Group cyclic_group(std::size_t n) {
  Group g;
  g.n = n;
  g.table.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g.table[i * n + j] = (i + j) % n;
  g.label = "C" + std::to_string(n);
  return g;
}

inline Group symmetric_group(std::size_t k) {
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(k);
  std::iota(p.begin(), p.end(), 0);
  do { perms.push_back(p); } while (std::next_permutation(p.begin(), p.end()));
  Group g;
  g.n = perms.size();
  g.table.resize(g.n * g.n);
  auto index_of = [&](const std::vector<std::size_t>& q) {
    return static_cast<std::size_t>(std::find(perms.begin(), perms.end(), q) - perms.begin());
  };
  for (std::size_t a = 0; a < g.n; ++a)
    for (std::size_t b = 0; b < g.n; ++b) {
      std::vector<std::size_t> comp(k);
      for (std::size_t i = 0; i < k; ++i) comp[i] = perms[a][perms[b][i]];
      g.table[a * g.n + b] = index_of(comp);
    }
  g.id = index_of([&] { std::vector<std::size_t> e(k); std::iota(e.begin(), e.end(), 0); return e; }());
  g.label = "S" + std::to_string(k);
  return g;
}

// right G-set as an action table
struct GSet {
  std::size_t group_n = 0;
  std::size_t n = 0;
  std::vector<std::size_t> act;  // x.g at [x*group_n + g]
  std::string label;

  std::size_t apply(std::size_t x, std::size_t g) const { return act[x * group_n + g]; }

  Report check(const Group& grp) const {
    Report r{label.empty() ? "gset" : label, {}};
    r.require(group_n == grp.n && act.size() == n * group_n, "table size");
    for (auto v : act)
      if (v >= n) {
        r.issues.push_back("action entry out of range");
        return r;
      }
    bool unital = true;
    for (std::size_t x = 0; x < n; ++x) unital = unital && apply(x, grp.id) == x;
    r.require(unital, "identity acts trivially");
    bool assoc = true;
    for (std::size_t x = 0; x < n && assoc; ++x)
      for (std::size_t g = 0; g < grp.n && assoc; ++g)
        for (std::size_t h = 0; h < grp.n; ++h)
          if (apply(apply(x, g), h) != apply(x, grp.mul(g, h))) { assoc = false; break; }
    r.require(assoc, "action compatibility");
    return r;
  }
};

inline GSet regular_gset(const Group& g) {
  GSet x;
  x.group_n = g.n;
  x.n = g.n;
  x.act = g.table;
  x.label = "regular(" + g.label + ")";
  return x;
}

// finite dimensional unital associative algebra; mult column (i*dim + j) = e_i e_j
template <class F>
struct Algebra {
  using K = typename F::K;

  F f;
  std::size_t dim = 0;
  Mat<F> mult;  // dim x dim^2
  Mat<F> unit;  // dim x 1
  std::string label;

  Mat<F> mul(const Mat<F>& u, const Mat<F>& v) const { return mult * kron(u, v); }

  // matrix of left multiplication by x
  Mat<F> lmat(const Mat<F>& x) const { return mult * kron(x, Mat<F>::identity(f, dim)); }
  // matrix of right multiplication by x
  Mat<F> rmat(const Mat<F>& x) const { return mult * kron(Mat<F>::identity(f, dim), x); }

  Report check() const {
    Report r{label.empty() ? "algebra" : label, {}};
    auto I = Mat<F>::identity(f, dim);
    r.require(mult * kron(mult, I) == mult * kron(I, mult), "associativity");
    r.require(mult * kron(unit, I) == I, "left unit");
    r.require(mult * kron(I, unit) == I, "right unit");
    return r;
  }
};

template <class F>
Algebra<F> field_algebra(F f) {
  Algebra<F> a;
  a.f = f;
  a.dim = 1;
  a.mult = Mat<F>::identity(f, 1);
  a.unit = Mat<F>::identity(f, 1);
  a.label = "k";
  return a;
}

template <class F>
Algebra<F> matrix_algebra(F f, std::size_t n) {
  Algebra<F> a;
  a.f = f;
  a.dim = n * n;
  a.mult = Mat<F>(f, a.dim, a.dim * a.dim);
  auto e = [n](std::size_t i, std::size_t j) { return i * n + j; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
          if (j == k) a.mult.at(e(i, l), e(i, j) * a.dim + e(k, l)) = f.one();
  a.unit = Mat<F>(f, a.dim, 1);
  for (std::size_t i = 0; i < n; ++i) a.unit.at(e(i, i), 0) = f.one();
  a.label = "M" + std::to_string(n);
  return a;
}

template <class F>
Algebra<F> group_algebra(F f, const Group& g) {
  Algebra<F> a;
  a.f = f;
  a.dim = g.n;
  a.mult = Mat<F>(f, g.n, g.n * g.n);
  for (std::size_t i = 0; i < g.n; ++i)
    for (std::size_t j = 0; j < g.n; ++j)
      a.mult.at(g.mul(i, j), i * g.n + j) = f.one();
  a.unit = Mat<F>::unit_col(f, g.n, g.id);
  a.label = "k[" + g.label + "]";
  return a;
}

// flat (i,j) -> (j,i) permutation on a tensor square
template <class F>
Mat<F> swap_mat(F f, std::size_t m, std::size_t n) {
  Mat<F> s(f, m * n, m * n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) s.at(j * m + i, i * n + j) = f.one();
  return s;
}

template <class F>
Algebra<F> opposite_algebra(const Algebra<F>& a) {
  Algebra<F> o = a;
  o.mult = a.mult * swap_mat(a.f, a.dim, a.dim);
  o.label = a.label + "^op";
  return o;
}

template <class F>
Algebra<F> tensor_algebra(const Algebra<F>& a, const Algebra<F>& b) {
  Algebra<F> t;
  t.f = a.f;
  t.dim = a.dim * b.dim;
  t.mult = Mat<F>(t.f, t.dim, t.dim * t.dim);
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t p = 0; p < b.dim; ++p)
      for (std::size_t j = 0; j < a.dim; ++j)
        for (std::size_t q = 0; q < b.dim; ++q) {
          auto col = kron(a.mult.col(i * a.dim + j), b.mult.col(p * b.dim + q));
          t.mult.set_col((i * b.dim + p) * t.dim + (j * b.dim + q), col);
        }
  t.unit = kron(a.unit, b.unit);
  t.label = a.label + "(x)" + b.label;
  return t;
}

template <class F>
Report check_algebra_morphism(const Algebra<F>& a, const Algebra<F>& b, const Mat<F>& h,
                              bool anti = false) {
  Report r{"algebra morphism", {}};
  if (h.rows != b.dim || h.cols != a.dim) {
    r.issues.push_back("shape");
    return r;
  }
  r.require(h * a.unit == b.unit, "unit preserved");
  auto lhs = h * a.mult;
  auto rhs = b.mult * kron(h, h);
  if (anti) rhs = rhs * swap_mat(a.f, a.dim, a.dim);
  r.require(lhs == rhs, anti ? "products reversed" : "products preserved");
  return r;
}

// algebra graded by a finite group; every basis vector is homogeneous
template <class F>
struct GradedAlgebra {
  std::shared_ptr<const Algebra<F>> alg;
  Group grp;
  std::vector<std::size_t> deg;  // basis index -> group element

  Report check() const {
    Report r{"graded " + alg->label, {}};
    r.absorb(alg->check());
    r.require(deg.size() == alg->dim, "degree table size");
    for (std::size_t i = 0; i < alg->dim; ++i)
      if (!alg->unit.at(i, 0).is_zero())
        r.require(deg[i] == grp.id, "unit concentrated in the identity degree");
    bool hom = true;
    for (std::size_t i = 0; i < alg->dim && hom; ++i)
      for (std::size_t j = 0; j < alg->dim && hom; ++j) {
        auto col = alg->mult.col(i * alg->dim + j);
        for (std::size_t t = 0; t < alg->dim; ++t)
          if (!col.at(t, 0).is_zero() && deg[t] != grp.mul(deg[i], deg[j])) {
            hom = false;
            break;
          }
      }
    r.require(hom, "products respect degrees");
    return r;
  }
};

template <class F>
GradedAlgebra<F> group_graded(F f, const Group& g) {
  GradedAlgebra<F> ga;
  ga.alg = std::make_shared<Algebra<F>>(group_algebra(f, g));
  ga.grp = g;
  ga.deg.resize(g.n);
  std::iota(ga.deg.begin(), ga.deg.end(), 0);
  return ga;
}

}  // namespace corings
