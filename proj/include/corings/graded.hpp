#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "corings/cotensor.hpp"
#include "corings/entwining.hpp"

namespace corings {

// module over a graded algebra, graded by the points of a right G-set; every
// basis vector is homogeneous. For left modules the set carries the induced
// left action g.x = x.g^{-1}
template <class F>
struct GradedModule {
  Side side = Side::Right;
  GradedAlgebra<F> algebra;
  GSet gset;
  std::shared_ptr<const Bimodule<F>> carrier;
  std::vector<std::size_t> deg;  // basis index -> point of the set
  std::string label;

  std::size_t dim() const { return carrier->dim; }
};

template <class F>
Report check_graded_module(const GradedModule<F>& m) {
  Report r{m.label.empty() ? "graded module" : m.label, {}};
  r.absorb(m.algebra.check());
  r.absorb(m.gset.check(m.algebra.grp));
  const auto& a = *m.algebra.alg;
  const auto& inner = m.side == Side::Right ? m.carrier->B : m.carrier->A;
  const auto& outer = m.side == Side::Right ? m.carrier->A : m.carrier->B;
  bool shp = inner->dim == a.dim && inner->mult == a.mult && outer->dim == 1 &&
             m.deg.size() == m.carrier->dim;
  r.require(shp, "carrier is a one-sided module over the graded algebra");
  if (!shp) return r;
  r.absorb(m.carrier->check());
  for (auto x : m.deg)
    if (x >= m.gset.n) {
      r.issues.push_back("degree out of range");
      return r;
    }

  bool hom = true;
  std::size_t dim = m.carrier->dim;
  for (std::size_t t = 0; t < dim && hom; ++t)
    for (std::size_t i = 0; i < a.dim && hom; ++i) {
      auto col = m.side == Side::Right ? m.carrier->ract.col(t * a.dim + i)
                                       : m.carrier->lact.col(i * dim + t);
      auto target = m.side == Side::Right
                        ? m.gset.apply(m.deg[t], m.algebra.deg[i])
                        : m.gset.apply(m.deg[t], m.algebra.grp.inv(m.algebra.deg[i]));
      for (std::size_t s = 0; s < dim; ++s)
        if (!col.at(s, 0).is_zero() && m.deg[s] != target) {
          hom = false;
          break;
        }
    }
  r.require(hom, "action respects degrees");
  return r;
}

// the coring A(x)kX with Delta(a(x)x) = (a(x)x) (x)_A (1(x)x), eps(a(x)x) = a;
// identical to the takeuchi coring of the graded entwining
template <class F>
Coring<F> build_graded_coring(const GradedAlgebra<F>& ga, const GSet& x) {
  auto rg = ga.check();
  if (!rg.ok()) throw std::logic_error("grading violation: " + rg.str());
  auto rx = x.check(ga.grp);
  if (!rx.ok()) throw std::logic_error("action violation: " + rx.str());
  return assemble_takeuchi(graded_entwining(ga, x));
}

// the unit of A placed in the set component x, as a vector in A(x)kX
template <class F>
Mat<F> graded_point(const GradedAlgebra<F>& ga, const GSet& x, std::size_t point) {
  auto f = ga.alg->f;
  Mat<F> v(f, ga.alg->dim * x.n, 1);
  for (std::size_t j = 0; j < ga.alg->dim; ++j)
    v.at(j * x.n + point, 0) = ga.alg->unit.at(j, 0);
  return v;
}

// the explicit cointegral delta(a (x) x (x) y) = a [x == y], returned in the
// coordinates of the relation tensor of build_graded_coring(ga, x)
template <class F>
Mat<F> graded_cointegral(const GradedAlgebra<F>& ga, const GSet& x) {
  auto c = build_graded_coring(ga, x);
  auto f = c.f;
  std::size_t dA = ga.alg->dim, dX = x.n, dim = c.dim();
  Mat<F> flat(f, dA, dim * dim);
  for (std::size_t i = 0; i < dA; ++i)
    for (std::size_t m = 0; m < dX; ++m)
      for (std::size_t j = 0; j < dA; ++j)
        for (std::size_t mp = 0; mp < dX; ++mp) {
          if (x.apply(m, ga.deg[j]) != mp) continue;
          flat.set_col((i * dX + m) * dim + (j * dX + mp), ga.alg->mult.col(i * dA + j));
        }
  Mat<F> w = flat * c.CC->sect;
  if (!(w * c.delta == c.eps))
    throw std::logic_error("cointegral fails the counit equation");
  if (!check_bimodule_map(c.CC->quotient, regular_bimodule(c.A), w).ok())
    throw std::logic_error("cointegral is not a bimodule map");
  return w;
}

// rho(m) = m (x) (1 (x) x) for a basis vector of degree x
template <class F>
Comodule<F> graded_to_comodule(const GradedModule<F>& m,
                               std::shared_ptr<const Coring<F>> c) {
  auto f = c->f;
  auto r = check_graded_module(m);
  if (!r.ok()) throw std::logic_error("graded module invalid: " + r.str());
  if (c->dim() != m.algebra.alg->dim * m.gset.n)
    throw std::logic_error("coring does not match the grading data");
  std::size_t dim = m.dim();
  if (m.side == Side::Right) {
    auto mc = tensor_over(m.carrier, c->C);
    Mat<F> rho(f, mc.qdim(), dim);
    for (std::size_t t = 0; t < dim; ++t)
      rho.set_col(t, mc.pure(Mat<F>::unit_col(f, dim, t),
                             graded_point(m.algebra, m.gset, m.deg[t])));
    return make_right_comodule(c, m.carrier, std::move(rho), m.label);
  }
  auto cm = tensor_over(c->C, m.carrier);
  Mat<F> lam(f, cm.qdim(), dim);
  for (std::size_t t = 0; t < dim; ++t)
    lam.set_col(t, cm.pure(graded_point(m.algebra, m.gset, m.deg[t]),
                           Mat<F>::unit_col(f, dim, t)));
  return make_left_comodule(c, m.carrier, std::move(lam), m.label);
}

template <class F>
Comodule<F> graded_to_comodule(const GradedModule<F>& m) {
  return graded_to_comodule(m, share_coring(build_graded_coring(m.algebra, m.gset)));
}

// reads the degree of each basis vector off the coaction; rejects coactions
// that are not of the graded form, naming the offending basis vector
template <class F>
GradedModule<F> comodule_to_graded(const Comodule<F>& com, const GradedAlgebra<F>& ga,
                                   const GSet& x) {
  auto f = com.coring->f;
  std::size_t dim = com.dim();
  GradedModule<F> out;
  out.side = com.side;
  out.algebra = ga;
  out.gset = x;
  out.carrier = com.M;
  out.deg.resize(dim);
  out.label = com.label;
  for (std::size_t t = 0; t < dim; ++t) {
    auto e = Mat<F>::unit_col(f, dim, t);
    bool found = false;
    for (std::size_t p = 0; p < x.n && !found; ++p) {
      auto pointed = graded_point(ga, x, p);
      auto expect = com.side == Side::Right ? com.MC->pure(e, pointed)
                                            : com.MC->pure(pointed, e);
      if (com.coaction.col(t) == expect) {
        out.deg[t] = p;
        found = true;
      }
    }
    if (!found)
      throw std::logic_error("coaction not of graded form at basis vector " +
                             std::to_string(t));
  }
  return out;
}

// a free rank one module with the grading shifted to start at the given point
template <class F>
GradedModule<F> suspension_module(const GradedAlgebra<F>& ga, const GSet& x,
                                  std::size_t point) {
  GradedModule<F> m;
  m.side = Side::Right;
  m.algebra = ga;
  m.gset = x;
  m.carrier = share(as_right_module(regular_bimodule(ga.alg)));
  m.deg.resize(ga.alg->dim);
  for (std::size_t i = 0; i < ga.alg->dim; ++i) m.deg[i] = x.apply(point, ga.deg[i]);
  m.label = ga.alg->label + "(" + std::to_string(point) + ")";
  return m;
}

template <class F>
struct GradedCotensor {
  Cotensor<F> ct;
  Subspace<F> graded_span;  // span of degree-matched pure tensors in (M (x)_A N)_q
  bool agree = false;
};

// builds the span of degree-matched tensors and compares it with the cotensor
// of the induced comodules, as subspaces in canonical echelon form
template <class F>
GradedCotensor<F> graded_cotensor_oracle(const GradedModule<F>& m, const GradedModule<F>& n) {
  if (m.side != Side::Right || n.side != Side::Left)
    throw std::logic_error("expected a right and a left graded module");
  bool match = m.algebra.alg->dim == n.algebra.alg->dim &&
               m.algebra.alg->mult == n.algebra.alg->mult &&
               m.algebra.deg == n.algebra.deg && m.gset.n == n.gset.n &&
               m.gset.act == n.gset.act;
  if (!match) throw std::logic_error("grading mismatch");
  auto rm = check_graded_module(m);
  if (!rm.ok()) throw std::logic_error("graded module invalid: " + rm.str());
  auto rn = check_graded_module(n);
  if (!rn.ok()) throw std::logic_error("graded module invalid: " + rn.str());

  auto f = m.carrier->f;
  auto c = share_coring(build_graded_coring(m.algebra, m.gset));
  auto scalar_cor = share_coring(trivial_coring(scalar_algebra(f)));

  auto com_m = graded_to_comodule(m, c);
  auto com_n = graded_to_comodule(n, c);

  // outer coactions are trivial over the trivial scalar coring
  auto cm_l = tensor_over(scalar_cor->C, m.carrier);
  Mat<F> lam_triv(f, cm_l.qdim(), m.dim());
  for (std::size_t t = 0; t < m.dim(); ++t)
    lam_triv.set_col(t, cm_l.pure(scalar_cor->A->unit, Mat<F>::unit_col(f, m.dim(), t)));
  auto bm = make_bicomodule(scalar_cor, c, m.carrier, std::move(lam_triv), com_m.coaction,
                            m.label);

  auto mc_r = tensor_over(n.carrier, scalar_cor->C);
  Mat<F> rho_triv(f, mc_r.qdim(), n.dim());
  for (std::size_t t = 0; t < n.dim(); ++t)
    rho_triv.set_col(t, mc_r.pure(Mat<F>::unit_col(f, n.dim(), t), scalar_cor->A->unit));
  auto bn = make_bicomodule(c, scalar_cor, n.carrier, com_n.coaction, std::move(rho_triv),
                            n.label);

  GradedCotensor<F> out;
  out.ct = cotensor(bm, bn);
  Mat<F> cols(f, out.ct.MN->qdim(), 0);
  for (std::size_t s = 0; s < m.dim(); ++s)
    for (std::size_t t = 0; t < n.dim(); ++t) {
      if (m.deg[s] != n.deg[t]) continue;
      cols = hstack(cols, out.ct.MN->pure(Mat<F>::unit_col(f, m.dim(), s),
                                          Mat<F>::unit_col(f, n.dim(), t)));
    }
  out.graded_span = span_of_columns(cols);
  out.agree = out.graded_span.basis == out.ct.space.basis;
  return out;
}

}  // namespace corings
