#pragma once

#include "corings/tensor.hpp"

namespace corings {

// projectivity certificate: a module splitting sigma of the evaluation map
// pi from the free module on the carrier basis
template <class F>
struct ProjectiveCert {
  Tri kind = Tri::Unknown;
  Mat<F> pi;     // dim x (dim*dimAlg)
  Mat<F> sigma;  // (dim*dimAlg) x dim, pi*sigma = id and sigma module linear
};

/// right side: pi(e_i (x) a) = m_i.a; left side: pi(e_i (x) a) = a.m_i
template <class F>
ProjectiveCert<F> check_projective(const Bimodule<F>& m, Side side) {
  auto f = m.f;
  const auto& alg = (side == Side::Right) ? m.B : m.A;
  std::size_t da = alg->dim, dm = m.dim, dfree = dm * da;

  Mat<F> pi(f, dm, dfree);
  for (std::size_t i = 0; i < dm; ++i) {
    auto ei = Mat<F>::unit_col(f, dm, i);
    for (std::size_t t = 0; t < da; ++t) {
      auto ea = Mat<F>::unit_col(f, da, t);
      auto img = (side == Side::Right) ? m.rmat(ea) * ei : m.lmat(ea) * ei;
      pi.set_col(i * da + t, img);
    }
  }

  // free module action on coordinates (i, t): action hits the t slot
  Bimodule<F> freem;
  {
    auto In = Mat<F>::identity(f, dm);
    if (side == Side::Right) {
      freem = right_module(alg, kron(In, alg->mult));
    } else {
      Mat<F> lact(f, dfree, da * dfree);
      for (std::size_t s = 0; s < da; ++s) {
        auto es = Mat<F>::unit_col(f, da, s);
        auto act = kron(In, alg->lmat(es));
        for (std::size_t c = 0; c < dfree; ++c)
          for (std::size_t r2 = 0; r2 < dfree; ++r2) lact.at(r2, s * dfree + c) = act.at(r2, c);
      }
      freem = left_module(alg, lact);
    }
  }

  // unknown sigma: module map m -> free with pi*sigma = id
  auto one_sided = (side == Side::Right) ? as_right_module(m) : as_left_module(m);
  std::size_t vars = dfree * dm;
  Mat<F> sys(f, 0, vars);
  Mat<F> rhs(f, 0, 1);
  {
    auto Im = Mat<F>::identity(f, dm);
    auto If = Mat<F>::identity(f, dfree);
    std::size_t dact = (side == Side::Right) ? one_sided.B->dim : one_sided.A->dim;
    for (std::size_t j = 0; j < dact; ++j) {
      auto e = Mat<F>::unit_col(f, dact, j);
      auto sm = (side == Side::Right) ? one_sided.rmat(e) : one_sided.lmat(e);
      auto sf = (side == Side::Right) ? freem.rmat(e) : freem.lmat(e);
      auto cond = sandwich(If, sm) - sandwich(sf, Im);
      sys = vstack(sys, cond);
      rhs = vstack(rhs, Mat<F>(f, cond.rows, 1));
    }
    sys = vstack(sys, sandwich(pi, Im));
    rhs = vstack(rhs, vec_rm(Im));
  }

  ProjectiveCert<F> cert;
  cert.pi = pi;
  auto sol = solve_linear(sys, rhs);
  if (!sol) {
    cert.kind = Tri::No;
    return cert;
  }
  cert.kind = Tri::Yes;
  cert.sigma = unvec_rm(f, dfree, dm, *sol);
  return cert;
}

// dual of the right action: right-A-linear maps M -> A for M over (B,A),
// an (A,B)-bimodule by (a.f.b)(m) = a f(b.m)
template <class F>
struct DualModule {
  Bimodule<F> mod;
  Subspace<F> space;  // functionals flattened row-major, ambient dimTarget*dimM
  Mat<F> evaluation;  // dimTarget x (dualdim * dimM), ev(f_u (x) e_m) = f_u(m)

  Mat<F> functional(std::size_t u, F f, std::size_t rows, std::size_t cols) const {
    return unvec_rm(f, rows, cols, space.basis.col(u));
  }
};

template <class F>
DualModule<F> right_dual(const Bimodule<F>& m) {
  auto f = m.f;
  const auto& A = m.B;  // target algebra of the functionals
  std::size_t da = A->dim, dm = m.dim;

  // f(m.b) = f(m).b
  Mat<F> sys(f, 0, da * dm);
  auto Ia = Mat<F>::identity(f, da);
  auto Im = Mat<F>::identity(f, dm);
  for (std::size_t j = 0; j < da; ++j) {
    auto e = Mat<F>::unit_col(f, da, j);
    sys = vstack(sys, sandwich(Ia, m.rmat(e)) - sandwich(A->rmat(e), Im));
  }
  auto space = kernel(sys);
  std::size_t dd = space.dim();

  DualModule<F> d;
  d.space = space;

  // actions on functionals: (a.f) = L_a o f, (f.b) = f o L_b^M
  auto act_coords = [&](const Mat<F>& flatmap) {
    auto c = coords_in(space, flatmap);
    if (!c) throw std::logic_error("dual action left the functional space");
    return *c;
  };
  Mat<F> lact(f, dd, A->dim * dd);
  for (std::size_t i = 0; i < A->dim; ++i) {
    auto e = Mat<F>::unit_col(f, A->dim, i);
    for (std::size_t u = 0; u < dd; ++u) {
      auto fu = d.functional(u, f, da, dm);
      auto c = act_coords(vec_rm(A->lmat(e) * fu));
      for (std::size_t r2 = 0; r2 < dd; ++r2) lact.at(r2, i * dd + u) = c.at(r2, 0);
    }
  }
  Mat<F> ract(f, dd, dd * m.A->dim);
  for (std::size_t j = 0; j < m.A->dim; ++j) {
    auto e = Mat<F>::unit_col(f, m.A->dim, j);
    for (std::size_t u = 0; u < dd; ++u) {
      auto fu = d.functional(u, f, da, dm);
      auto c = act_coords(vec_rm(fu * m.lmat(e)));
      for (std::size_t r2 = 0; r2 < dd; ++r2) ract.at(r2, u * m.A->dim + j) = c.at(r2, 0);
    }
  }
  d.mod.f = f;
  d.mod.A = A;
  d.mod.B = m.A;
  d.mod.dim = dd;
  d.mod.lact = lact;
  d.mod.ract = ract;
  d.mod.label = m.label + "^*";

  d.evaluation = Mat<F>(f, da, dd * dm);
  for (std::size_t u = 0; u < dd; ++u) {
    auto fu = d.functional(u, f, da, dm);
    for (std::size_t mm = 0; mm < dm; ++mm)
      d.evaluation.set_col(u * dm + mm, fu.col(mm));
  }
  return d;
}

// dual of the left action: left-B-linear maps M -> B for M over (B,A),
// an (A,B)-bimodule by (a.f.b)(m) = f(m.a).b
template <class F>
DualModule<F> left_dual(const Bimodule<F>& m) {
  auto f = m.f;
  const auto& B = m.A;
  std::size_t db = B->dim, dm = m.dim;

  // f(b.m) = b.f(m)
  Mat<F> sys(f, 0, db * dm);
  auto Ib = Mat<F>::identity(f, db);
  auto Im = Mat<F>::identity(f, dm);
  for (std::size_t j = 0; j < db; ++j) {
    auto e = Mat<F>::unit_col(f, db, j);
    sys = vstack(sys, sandwich(Ib, m.lmat(e)) - sandwich(B->lmat(e), Im));
  }
  auto space = kernel(sys);
  std::size_t dd = space.dim();

  DualModule<F> d;
  d.space = space;
  auto act_coords = [&](const Mat<F>& flatmap) {
    auto c = coords_in(space, flatmap);
    if (!c) throw std::logic_error("dual action left the functional space");
    return *c;
  };
  // (a.f)(m) = f(m.a), (f.b)(m) = f(m).b
  Mat<F> lact(f, dd, m.B->dim * dd);
  for (std::size_t i = 0; i < m.B->dim; ++i) {
    auto e = Mat<F>::unit_col(f, m.B->dim, i);
    for (std::size_t u = 0; u < dd; ++u) {
      auto fu = d.functional(u, f, db, dm);
      auto c = act_coords(vec_rm(fu * m.rmat(e)));
      for (std::size_t r2 = 0; r2 < dd; ++r2) lact.at(r2, i * dd + u) = c.at(r2, 0);
    }
  }
  Mat<F> ract(f, dd, dd * db);
  for (std::size_t j = 0; j < db; ++j) {
    auto e = Mat<F>::unit_col(f, db, j);
    for (std::size_t u = 0; u < dd; ++u) {
      auto fu = d.functional(u, f, db, dm);
      auto c = act_coords(vec_rm(B->rmat(e) * fu));
      for (std::size_t r2 = 0; r2 < dd; ++r2) ract.at(r2, u * db + j) = c.at(r2, 0);
    }
  }
  d.mod.f = f;
  d.mod.A = m.B;
  d.mod.B = B;
  d.mod.dim = dd;
  d.mod.lact = lact;
  d.mod.ract = ract;
  d.mod.label = "^*" + m.label;

  d.evaluation = Mat<F>(f, db, dd * dm);
  for (std::size_t u = 0; u < dd; ++u) {
    auto fu = d.functional(u, f, db, dm);
    for (std::size_t mm = 0; mm < dm; ++mm)
      d.evaluation.set_col(u * dm + mm, fu.col(mm));
  }
  return d;
}

// separability of an (A,B)-bimodule M: the evaluation M (x)_B *M -> A splits
// as a map of (A,A)-bimodules
template <class F>
struct SeparableCert {
  Tri kind = Tri::Unknown;
  Mat<F> section;  // dimA -> quotient of M (x) *M when yes
  Mat<F> ev;       // quotient -> dimA
};

template <class F>
SeparableCert<F> check_separable_bimodule(const Bimodule<F>& m) {
  auto f = m.f;
  auto star = left_dual(m);  // (B,A)-bimodule of left-A-linear M -> A
  auto t = tensor_over(share(m), share(star.mod));

  // ev on the k-tensor: m (x) f -> f(m)
  std::size_t da = m.A->dim;
  Mat<F> ev_k(f, da, m.dim * star.mod.dim);
  for (std::size_t i = 0; i < m.dim; ++i)
    for (std::size_t u = 0; u < star.mod.dim; ++u) {
      auto fu = star.functional(u, f, da, m.dim);
      ev_k.set_col(i * star.mod.dim + u, fu.col(i));
    }
  Mat<F> ev = ev_k * t.sect;

  SeparableCert<F> cert;
  cert.ev = ev;

  // section gamma: A -> quotient, bimodule map, ev o gamma = id
  auto reg = regular_bimodule(m.A);
  std::size_t q = t.qdim();
  std::size_t vars = q * da;
  Mat<F> sys(f, 0, vars);
  Mat<F> rhs(f, 0, 1);
  auto Ia = Mat<F>::identity(f, da);
  auto Iq = Mat<F>::identity(f, q);
  for (std::size_t i = 0; i < da; ++i) {
    auto e = Mat<F>::unit_col(f, da, i);
    sys = vstack(sys, sandwich(Iq, reg.lmat(e)) - sandwich(t.quotient.lmat(e), Ia));
    rhs = vstack(rhs, Mat<F>(f, q * da, 1));
    sys = vstack(sys, sandwich(Iq, reg.rmat(e)) - sandwich(t.quotient.rmat(e), Ia));
    rhs = vstack(rhs, Mat<F>(f, q * da, 1));
  }
  sys = vstack(sys, sandwich(ev, Ia));
  rhs = vstack(rhs, vec_rm(Ia));

  auto sol = solve_linear(sys, rhs);
  if (!sol) {
    cert.kind = Tri::No;
    return cert;
  }
  cert.kind = Tri::Yes;
  cert.section = unvec_rm(f, q, da, *sol);
  return cert;
}

}  // namespace corings
