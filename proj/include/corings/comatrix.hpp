#pragma once

#include "corings/cotensor.hpp"
#include "corings/module_ops.hpp"

namespace corings {

// adjunction context between a coring C (base of X on the left) and a coring D:
// psi pairs the corings through X (x) Lambda, omega pairs back through
// Lambda (x) X; over a field all carriers are flat, so no coflatness or
// (co)separability hypotheses enter, and every comparison that does depend on
// the base algebra is constructed explicitly and rank-verified
template <class F>
struct AdjunctionContext {
  Bicomodule<F> X;       // over (C, D)
  Bicomodule<F> Lambda;  // over (D, C)
  Mat<F> psi;    // C -> (X (x) Lambda)_q, image inside the cotensor over D
  Mat<F> omega;  // (Lambda (x) X)_q -> D, a bimodule map on the whole relative
                 // tensor whose restriction to the cotensor over C is bicolinear
  std::string label;
};

template <class F>
Report verify_context(const AdjunctionContext<F>& ctx) {
  Report r{ctx.label.empty() ? "context" : ctx.label, {}};
  const auto& X = ctx.X;
  const auto& L = ctx.Lambda;
  auto c = X.Cl;
  auto d = X.Cr;
  auto f = c->f;

  bool paired = same_coring(*L.Cr, *c) && same_coring(*L.Cl, *d);
  r.require(paired, "corings of the two legs pair up");
  if (!paired) return r;

  r.absorb(check_bicomodule(X));
  r.absorb(check_bicomodule(L));

  auto XL = tensor_over(X.M, L.M);
  auto LX = tensor_over(L.M, X.M);
  std::size_t dX = X.dim(), dL = L.dim(), dC = c->dim(), dD = d->dim();
  auto Ix = Mat<F>::identity(f, dX);
  auto Il = Mat<F>::identity(f, dL);
  auto Ic = Mat<F>::identity(f, dC);
  auto Id = Mat<F>::identity(f, dD);

  bool shapes = ctx.psi.rows == XL.qdim() && ctx.psi.cols == dC &&
                ctx.omega.rows == dD && ctx.omega.cols == LX.qdim();
  r.require(shapes, "pairing shapes");
  if (!shapes) return r;

  r.require(check_bimodule_map(*c->C, XL.quotient, ctx.psi).ok(), "psi is a bimodule map");
  r.require(check_bimodule_map(LX.quotient, *d->C, ctx.omega).ok(), "omega is a bimodule map");

  // psi lands in X [] Lambda inside the relative tensor
  auto ct_xl = cotensor(X, L);
  r.require(solve_linear(ct_xl.incl, ctx.psi).has_value(),
            "psi lands in the cotensor subspace");

  // left colinearity of psi: (lambda_X (x) Lambda) psi = (C (x) psi) delta
  {
    auto t_cxl = tensor_over(c->C, share(XL.quotient));
    auto t_lam = tensor_over(share(X.CM->quotient), L.M);
    auto lhs = induced_map(*c->CC, t_cxl, Ic, ctx.psi) * c->delta;
    auto rhs = induced_map(XL, t_lam, X.lambda, Il) * ctx.psi;
    auto cmp = regroup(*X.CM, t_lam, XL, t_cxl);
    bool bij = t_lam.qdim() == t_cxl.qdim() && rank(cmp) == t_lam.qdim();
    r.require(bij, "left psi regrouping bijective");
    if (bij) r.require(cmp * lhs == rhs, "psi is left colinear");
  }

  // right colinearity of psi: (X (x) rho_Lambda) psi = (psi (x) C) delta
  {
    auto t_xlc = tensor_over(share(XL.quotient), c->C);
    auto t_rho = tensor_over(X.M, share(L.MC->quotient));
    auto lhs = induced_map(*c->CC, t_xlc, ctx.psi, Ic) * c->delta;
    auto rhs = induced_map(XL, t_rho, Ix, L.rho) * ctx.psi;
    auto cmp = regroup(XL, t_xlc, *L.MC, t_rho);
    bool bij = t_xlc.qdim() == t_rho.qdim() && rank(cmp) == t_xlc.qdim();
    r.require(bij, "right psi regrouping bijective");
    if (bij) r.require(lhs == cmp * rhs, "psi is right colinear");
  }

  // bicolinearity of omega on the cotensor Lambda [] X
  auto ct_lx = cotensor(L, X);
  {
    auto lhs = d->delta * ctx.omega * ct_lx.incl;
    auto t_lam = tensor_over(share(L.CM->quotient), X.M);
    auto t_dlx = tensor_over(d->C, share(LX.quotient));
    auto cmp = regroup(*L.CM, t_lam, LX, t_dlx);
    bool bij = t_lam.qdim() == t_dlx.qdim() && rank(cmp) == t_lam.qdim();
    r.require(bij, "left omega regrouping bijective");
    if (bij) {
      auto inv = inverse(cmp);
      r.require(inv.has_value(), "left omega regrouping invertible");
      if (inv) {
        auto lift = induced_map(LX, t_lam, L.lambda, Ix) * ct_lx.incl;
        auto rhs = induced_map(t_dlx, *d->CC, Id, ctx.omega) * *inv * lift;
        r.require(lhs == rhs, "omega is left colinear");
      }
    }
  }
  {
    auto lhs = d->delta * ctx.omega * ct_lx.incl;
    auto t_rho = tensor_over(L.M, share(X.MC->quotient));
    auto t_lxd = tensor_over(share(LX.quotient), d->C);
    auto cmp = regroup(LX, t_lxd, *X.MC, t_rho);
    bool bij = t_lxd.qdim() == t_rho.qdim() && rank(cmp) == t_lxd.qdim();
    r.require(bij, "right omega regrouping bijective");
    if (bij) {
      auto lift = cmp * induced_map(LX, t_rho, Il, X.rho) * ct_lx.incl;
      auto rhs = induced_map(t_lxd, *d->CC, ctx.omega, Id) * lift;
      r.require(lhs == rhs, "omega is right colinear");
    }
  }

  // first triangle: X -> C (x) X -> (X (x) Lambda) (x) X -> X (x) (Lambda (x) X)
  // -> X (x) D -> X is the identity
  {
    auto t_psix = tensor_over(share(XL.quotient), X.M);
    auto t_xlx = tensor_over(X.M, share(LX.quotient));
    auto step = induced_map(*X.CM, t_psix, ctx.psi, Ix) * X.lambda;
    auto cmp = regroup(XL, t_psix, LX, t_xlx);
    bool bij = t_psix.qdim() == t_xlx.qdim() && rank(cmp) == t_psix.qdim();
    r.require(bij, "first triangle regrouping bijective");
    if (bij) {
      auto inv = inverse(cmp);
      r.require(inv.has_value(), "first triangle regrouping invertible");
      if (inv) {
        auto pair_off = induced_map(t_xlx, *X.MC, Ix, ctx.omega) * *inv * step;
        auto reg = regular_bimodule(d->A);
        auto xa = tensor_over(X.M, share(reg));
        auto mu = X.M->ract * xa.sect;
        r.require(mu * induced_map(*X.MC, xa, Ix, d->eps) * pair_off == Ix,
                  "first triangle identity");
      }
    }
  }

  // second triangle: Lambda -> Lambda (x) C -> Lambda (x) (X (x) Lambda)
  // -> (Lambda (x) X) (x) Lambda -> D (x) Lambda -> Lambda is the identity
  {
    auto t_lpsi = tensor_over(L.M, share(XL.quotient));
    auto t_lxl = tensor_over(share(LX.quotient), L.M);
    auto step = induced_map(*L.MC, t_lpsi, Il, ctx.psi) * L.rho;
    auto cmp = regroup(LX, t_lxl, XL, t_lpsi);
    bool bij = t_lxl.qdim() == t_lpsi.qdim() && rank(cmp) == t_lxl.qdim();
    r.require(bij, "second triangle regrouping bijective");
    if (bij) {
      auto pair_off = induced_map(t_lxl, *L.CM, ctx.omega, Il) * cmp * step;
      auto reg = regular_bimodule(d->A);
      auto al = tensor_over(share(reg), L.M);
      auto mu = L.M->lact * al.sect;
      r.require(mu * induced_map(*L.CM, al, d->eps, Il) * pair_off == Il,
                "second triangle identity");
    }
  }

  return r;
}

// the coring Lambda [] X over the base of D, with its carrier subspace and
// the (D,D)-bicomodule structure the coproduct corestricts through
template <class F>
struct GeneralizedComatrix {
  Cotensor<F> carrier;
  Bicomodule<F> as_bicomodule;
  Coring<F> coring;
};

// the coproduct composite is associated strictly left to right; every
// regrouping along the chain is rank-verified before it is inverted or used
template <class F>
GeneralizedComatrix<F> build_generalized_comatrix(const AdjunctionContext<F>& ctx) {
  auto rep = verify_context(ctx);
  if (!rep.ok()) throw std::logic_error("context verification failed: " + rep.str());

  const auto& X = ctx.X;
  const auto& L = ctx.Lambda;
  auto c = X.Cl;
  auto d = X.Cr;
  auto f = c->f;
  std::size_t dX = X.dim(), dL = L.dim();
  auto Ix = Mat<F>::identity(f, dX);
  auto Il = Mat<F>::identity(f, dL);

  auto w = cotensor(L, X);
  auto wb = cotensor_bicomodule(L, X, w);
  const auto& LX = *w.MN;
  auto XL = tensor_over(X.M, L.M);

  // chase Lambda (x) lambda_X, then psi in the middle, then regroup the five
  // factors into (Lambda (x) X) (x) (Lambda (x) X)
  auto t_1 = tensor_over(L.M, share(X.CM->quotient));
  auto s1 = induced_map(LX, t_1, Il, X.lambda);

  auto t_psix = tensor_over(share(XL.quotient), X.M);
  auto inner = induced_map(*X.CM, t_psix, ctx.psi, Ix);
  auto t_2 = tensor_over(L.M, share(t_psix.quotient));
  auto s2 = induced_map(t_1, t_2, Il, inner);

  auto t_lxil = tensor_over(L.M, share(XL.quotient));
  auto t_3 = tensor_over(share(t_lxil.quotient), X.M);
  auto g1 = regroup(t_lxil, t_3, t_psix, t_2);
  if (t_2.qdim() != t_3.qdim() || rank(g1) != t_2.qdim())
    throw std::logic_error("outer regrouping not bijective");

  auto t_4 = tensor_over(share(LX.quotient), L.M);
  auto gi = regroup(LX, t_4, XL, t_lxil);
  if (t_lxil.qdim() != t_4.qdim() || rank(gi) != t_lxil.qdim())
    throw std::logic_error("inner regrouping not bijective");
  auto t_5 = tensor_over(share(t_4.quotient), X.M);
  auto lift = induced_map(t_3, t_5, gi, Ix);

  auto square = tensor_over(share(LX.quotient), share(LX.quotient));
  auto g2 = regroup(t_4, t_5, LX, square);
  auto g2_inv = inverse(g2);
  if (square.qdim() != t_5.qdim() || !g2_inv)
    throw std::logic_error("final regrouping not bijective");

  auto chased = *g2_inv * lift * g1 * s2 * s1 * w.incl;

  // corestrict through the carrier square, rank-verified
  auto ww = tensor_over(wb.M, wb.M);
  auto mu = induced_map(ww, square, w.incl, w.incl);
  if (rank(mu) != ww.qdim())
    throw std::logic_error("carrier square does not embed in the ambient square");
  auto delta = solve_linear(mu, chased);
  if (!delta) throw std::logic_error("coproduct escapes the carrier square");

  // the coproduct also lands in the cotensor over D inside the carrier square
  auto wcot = cotensor(wb, wb);
  if (!solve_linear(wcot.incl, *delta))
    throw std::logic_error("coproduct escapes the cotensor subspace");

  Mat<F> eps = d->eps * ctx.omega * w.incl;
  GeneralizedComatrix<F> out{
      w, wb, make_coring(wb.M, *delta, eps, "gcomatrix(" + ctx.label + ")")};
  return out;
}

// unit context: X = Lambda = C over itself, psi the comultiplication, omega
// the counit collapse of the left factor
template <class F>
AdjunctionContext<F> identity_context(std::shared_ptr<const Coring<F>> c) {
  auto f = c->f;
  std::size_t dc = c->dim();
  auto reg = regular_bicomodule(c);
  Mat<F> collapse(f, dc, dc * dc);
  for (std::size_t i = 0; i < dc; ++i)
    for (std::size_t j = 0; j < dc; ++j)
      collapse.set_col(i * dc + j,
                       c->C->lact * kron(c->eps.col(i), Mat<F>::unit_col(f, dc, j)));
  return AdjunctionContext<F>{reg, reg, c->delta, collapse * c->CC->sect,
                              "identity(" + c->label + ")"};
}

// comatrix context of a bimodule with projective right action: psi sends the
// left base to the dual basis element, omega evaluates functionals
template <class F>
AdjunctionContext<F> comatrix_context(const Bimodule<F>& m) {
  auto f = m.f;
  auto cert = check_projective(m, Side::Right);
  if (cert.kind != Tri::Yes)
    throw std::logic_error("comatrix context needs a projective right module");
  auto dual = right_dual(m);
  std::size_t da = m.B->dim, dm = m.dim;

  auto tl = share_coring(trivial_coring(m.A));
  auto tr = share_coring(trivial_coring(m.B));
  auto mod = share(m);
  auto dmod = share(dual.mod);
  auto X = trivial_bicomodule(tl, tr, mod);
  auto L = trivial_bicomodule(tr, tl, dmod);

  auto XL = tensor_over(mod, dmod);
  Mat<F> u(f, XL.qdim(), 1);
  for (std::size_t i = 0; i < dm; ++i) {
    Mat<F> ei(f, da, dm);
    for (std::size_t t = 0; t < da; ++t)
      for (std::size_t mm = 0; mm < dm; ++mm) ei.at(t, mm) = cert.sigma.at(i * da + t, mm);
    auto coords = coords_in(dual.space, vec_rm(ei));
    if (!coords) throw std::logic_error("dual basis functional outside the dual space");
    u = u + XL.pure(Mat<F>::unit_col(f, dm, i), *coords);
  }

  Mat<F> psi(f, XL.qdim(), m.A->dim);
  for (std::size_t k = 0; k < m.A->dim; ++k)
    psi.set_col(k, XL.quotient.lmat(Mat<F>::unit_col(f, m.A->dim, k)) * u);

  auto LXt = tensor_over(dmod, mod);
  Mat<F> omega = dual.evaluation * LXt.sect;
  return AdjunctionContext<F>{X, L, psi, omega, "comatrix-context(" + m.label + ")"};
}

}  // namespace corings
