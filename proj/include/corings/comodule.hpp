#pragma once

#include "corings/coring.hpp"

namespace corings {

// one-sided comodule; Right stores rho: M -> (M (x)_A C)_q, Left stores
// lambda: M -> (C (x)_A M)_q
template <class F>
struct Comodule {
  Side side = Side::Right;
  std::shared_ptr<const Coring<F>> coring;
  std::shared_ptr<const Bimodule<F>> M;
  std::shared_ptr<const RelTensor<F>> MC;
  Mat<F> coaction;
  std::string label;

  std::size_t dim() const { return M->dim; }
};

template <class F>
Comodule<F> make_right_comodule(std::shared_ptr<const Coring<F>> c,
                                std::shared_ptr<const Bimodule<F>> m, Mat<F> rho,
                                std::string label) {
  Comodule<F> out;
  out.side = Side::Right;
  out.coring = c;
  out.M = m;
  out.MC = std::make_shared<RelTensor<F>>(tensor_over(m, c->C));
  out.coaction = std::move(rho);
  out.label = std::move(label);
  if (out.coaction.rows != out.MC->qdim() || out.coaction.cols != m->dim)
    throw std::logic_error("coaction shape");
  return out;
}

template <class F>
Comodule<F> make_left_comodule(std::shared_ptr<const Coring<F>> c,
                               std::shared_ptr<const Bimodule<F>> m, Mat<F> lambda,
                               std::string label) {
  Comodule<F> out;
  out.side = Side::Left;
  out.coring = c;
  out.M = m;
  out.MC = std::make_shared<RelTensor<F>>(tensor_over(c->C, m));
  out.coaction = std::move(lambda);
  out.label = std::move(label);
  if (out.coaction.rows != out.MC->qdim() || out.coaction.cols != m->dim)
    throw std::logic_error("coaction shape");
  return out;
}

template <class F>
Report check_comodule(const Comodule<F>& m) {
  Report r{m.label.empty() ? "comodule" : m.label, {}};
  auto f = m.coring->f;
  const auto& c = *m.coring;
  auto I = Mat<F>::identity(f, m.dim());
  auto Ic = Mat<F>::identity(f, c.dim());

  r.require(check_bimodule_map(*m.M, m.MC->quotient, m.coaction).ok(),
            "coaction is a module map");

  if (m.side == Side::Right) {
    auto left_t = tensor_over(share(m.MC->quotient), c.C);
    auto right_t = tensor_over(m.M, share(c.CC->quotient));
    auto lhs = induced_map(*m.MC, left_t, m.coaction, Ic) * m.coaction;
    auto rhs = induced_map(*m.MC, right_t, I, c.delta) * m.coaction;
    auto cmp = regroup(*m.MC, left_t, *c.CC, right_t);
    bool bij = left_t.qdim() == right_t.qdim() && rank(cmp) == left_t.qdim();
    r.require(bij, "regrouping comparison bijective");
    if (bij) r.require(cmp * rhs == lhs, "coassociativity of the coaction");

    auto reg = regular_bimodule(c.A);
    auto ma = tensor_over(m.M, share(reg));
    auto mu = m.M->ract * ma.sect;
    r.require(mu * induced_map(*m.MC, ma, I, c.eps) * m.coaction == I, "counit law");
  } else {
    auto left_t = tensor_over(share(c.CC->quotient), m.M);
    auto right_t = tensor_over(c.C, share(m.MC->quotient));
    auto lhs = induced_map(*m.MC, left_t, c.delta, I) * m.coaction;
    auto rhs = induced_map(*m.MC, right_t, Ic, m.coaction) * m.coaction;
    auto cmp = regroup(*c.CC, left_t, *m.MC, right_t);
    bool bij = left_t.qdim() == right_t.qdim() && rank(cmp) == left_t.qdim();
    r.require(bij, "regrouping comparison bijective");
    if (bij) r.require(cmp * rhs == lhs, "coassociativity of the coaction");

    auto reg = regular_bimodule(c.A);
    auto am = tensor_over(share(reg), m.M);
    auto mu = m.M->lact * am.sect;
    r.require(mu * induced_map(*m.MC, am, c.eps, I) * m.coaction == I, "counit law");
  }
  return r;
}

// the coring as a comodule over itself
template <class F>
Comodule<F> regular_right_comodule(std::shared_ptr<const Coring<F>> c) {
  auto m = share(as_right_module(*c->C));
  auto mc = tensor_over(m, c->C);
  Mat<F> rho = mc.proj * c->CC->sect * c->delta;
  auto out = make_right_comodule(c, m, rho, c->label + " as right comodule");
  return out;
}

template <class F>
Comodule<F> regular_left_comodule(std::shared_ptr<const Coring<F>> c) {
  auto m = share(as_left_module(*c->C));
  auto cm = tensor_over(c->C, m);
  Mat<F> lam = cm.proj * c->CC->sect * c->delta;
  return make_left_comodule(c, m, lam, c->label + " as left comodule");
}

// induced comodule X (x)_A C for a right A-module X
template <class F>
Comodule<F> standard_comodule(std::shared_ptr<const Coring<F>> c,
                              std::shared_ptr<const Bimodule<F>> x) {
  auto f = c->f;
  auto t = tensor_over(x, c->C);
  auto m = share(as_right_module(t.quotient));
  auto mc = tensor_over(m, c->C);
  auto Ix = Mat<F>::identity(f, x->dim);
  auto Ic = Mat<F>::identity(f, c->dim());
  Mat<F> deltak = c->CC->sect * c->delta;
  Mat<F> rho = mc.proj * kron(t.proj, Ic) * kron(Ix, deltak) * t.sect;
  return make_right_comodule(c, m, rho, x->label + "(x)" + c->label);
}

// all maps commuting with the module action and the coactions
template <class F>
Subspace<F> comodule_hom_space(const Comodule<F>& m, const Comodule<F>& n) {
  if (m.side != n.side) throw std::logic_error("comodule sides differ");
  auto f = m.coring->f;
  std::size_t dm = m.dim(), dn = n.dim(), vars = dn * dm;
  std::size_t dc = m.coring->dim();

  Side act_side = m.side;
  Mat<F> sys(f, 0, vars);
  {
    auto Im = Mat<F>::identity(f, dm);
    auto In = Mat<F>::identity(f, dn);
    const auto& alg = (act_side == Side::Right) ? m.M->B : m.M->A;
    for (std::size_t j = 0; j < alg->dim; ++j) {
      auto e = Mat<F>::unit_col(f, alg->dim, j);
      auto am = (act_side == Side::Right) ? m.M->rmat(e) : m.M->lmat(e);
      auto an = (act_side == Side::Right) ? n.M->rmat(e) : n.M->lmat(e);
      sys = vstack(sys, sandwich(In, am) - sandwich(an, Im));
    }
  }

  // colinearity: rho_N T = (T (x) id) rho_M resp. lambda_N T = (id (x) T) lambda_M
  Mat<F> w = m.MC->sect * m.coaction;  // k-tensor representative of the coaction
  std::size_t qn = n.MC->qdim();
  Mat<F> colin(f, qn * dm, vars);
  for (std::size_t col_m = 0; col_m < dm; ++col_m) {
    // term 1: rho_N * T * e_m, coefficient of T[r2, m'] in row q
    for (std::size_t q = 0; q < qn; ++q)
      for (std::size_t mp = 0; mp < dm; ++mp) {
        if (mp != col_m) continue;
        for (std::size_t r2 = 0; r2 < dn; ++r2)
          colin.at(q * dm + col_m, r2 * dm + mp) =
              colin.at(q * dm + col_m, r2 * dm + mp) + n.coaction.at(q, r2);
      }
    // term 2: projection of (T (x) I) resp. (I (x) T) applied to w.col(col_m)
    for (std::size_t r2 = 0; r2 < dn; ++r2)
      for (std::size_t mp = 0; mp < dm; ++mp) {
        // image of the elementary matrix E_{r2,mp}
        Mat<F> img(f, n.MC->kdim, 1);
        if (m.side == Side::Right) {
          for (std::size_t cc = 0; cc < dc; ++cc)
            img.at(r2 * dc + cc, 0) = w.at(mp * dc + cc, col_m);
        } else {
          for (std::size_t cc = 0; cc < dc; ++cc)
            img.at(cc * dn + r2, 0) = w.at(cc * dm + mp, col_m);
        }
        auto pq = n.MC->proj * img;
        for (std::size_t q = 0; q < qn; ++q)
          colin.at(q * dm + col_m, r2 * dm + mp) =
              colin.at(q * dm + col_m, r2 * dm + mp) - pq.at(q, 0);
      }
  }
  sys = vstack(sys, colin);
  return kernel(sys);
}

template <class F>
Report check_comodule_map(const Comodule<F>& m, const Comodule<F>& n, const Mat<F>& h) {
  Report r{"comodule map", {}};
  if (m.side != n.side || h.rows != n.dim() || h.cols != m.dim()) {
    r.issues.push_back("shape");
    return r;
  }
  auto f = m.coring->f;
  auto Ic = Mat<F>::identity(f, m.coring->dim());
  const auto& alg = (m.side == Side::Right) ? m.M->B : m.M->A;
  bool lin = true;
  for (std::size_t j = 0; j < alg->dim && lin; ++j) {
    auto e = Mat<F>::unit_col(f, alg->dim, j);
    auto am = (m.side == Side::Right) ? m.M->rmat(e) : m.M->lmat(e);
    auto an = (m.side == Side::Right) ? n.M->rmat(e) : n.M->lmat(e);
    lin = h * am == an * h;
  }
  r.require(lin, "module linear");
  Mat<F> lifted = (m.side == Side::Right)
                      ? n.MC->proj * kron(h, Ic) * m.MC->sect
                      : n.MC->proj * kron(Ic, h) * m.MC->sect;
  r.require(n.coaction * h == lifted * m.coaction, "colinear");
  return r;
}

// bicomodule over (Cl, Cr): both coactions are bimodule maps and commute
template <class F>
struct Bicomodule {
  std::shared_ptr<const Coring<F>> Cl, Cr;
  std::shared_ptr<const Bimodule<F>> M;  // (Al, Ar)-bimodule
  std::shared_ptr<const RelTensor<F>> CM, MC;
  Mat<F> lambda, rho;
  std::string label;

  std::size_t dim() const { return M->dim; }

  // the one-sided views rebuild their tensor from the forgotten carrier; the
  // relation set only involves the middle algebra, so coordinates are unchanged
  Comodule<F> right_part() const {
    Comodule<F> out;
    out.side = Side::Right;
    out.coring = Cr;
    out.M = share(as_right_module(*M));
    out.MC = std::make_shared<RelTensor<F>>(tensor_over(out.M, Cr->C));
    out.coaction = rho;
    out.label = label + " (right)";
    return out;
  }
  Comodule<F> left_part() const {
    Comodule<F> out;
    out.side = Side::Left;
    out.coring = Cl;
    out.M = share(as_left_module(*M));
    out.MC = std::make_shared<RelTensor<F>>(tensor_over(Cl->C, out.M));
    out.coaction = lambda;
    out.label = label + " (left)";
    return out;
  }
};

template <class F>
Bicomodule<F> make_bicomodule(std::shared_ptr<const Coring<F>> cl,
                              std::shared_ptr<const Coring<F>> cr,
                              std::shared_ptr<const Bimodule<F>> m, Mat<F> lambda, Mat<F> rho,
                              std::string label) {
  Bicomodule<F> out;
  out.Cl = cl;
  out.Cr = cr;
  out.M = m;
  out.CM = std::make_shared<RelTensor<F>>(tensor_over(cl->C, m));
  out.MC = std::make_shared<RelTensor<F>>(tensor_over(m, cr->C));
  out.lambda = std::move(lambda);
  out.rho = std::move(rho);
  out.label = std::move(label);
  if (out.lambda.rows != out.CM->qdim() || out.lambda.cols != m->dim ||
      out.rho.rows != out.MC->qdim() || out.rho.cols != m->dim)
    throw std::logic_error("bicomodule coaction shape");
  return out;
}

template <class F>
Report check_bicomodule(const Bicomodule<F>& b) {
  Report r{b.label.empty() ? "bicomodule" : b.label, {}};
  r.require(check_bimodule_map(*b.M, b.MC->quotient, b.rho).ok(),
            "right coaction is a bimodule map");
  r.require(check_bimodule_map(*b.M, b.CM->quotient, b.lambda).ok(),
            "left coaction is a bimodule map");
  r.absorb(check_comodule(b.right_part()));
  r.absorb(check_comodule(b.left_part()));

  auto f = b.M->f;
  auto left_t = tensor_over(share(b.CM->quotient), b.Cr->C);
  auto right_t = tensor_over(b.Cl->C, share(b.MC->quotient));
  auto lhs = induced_map(*b.MC, left_t, b.lambda, Mat<F>::identity(f, b.Cr->dim())) * b.rho;
  auto rhs = induced_map(*b.CM, right_t, Mat<F>::identity(f, b.Cl->dim()), b.rho) * b.lambda;
  auto cmp = regroup(*b.CM, left_t, *b.MC, right_t);
  bool bij = left_t.qdim() == right_t.qdim() && rank(cmp) == left_t.qdim();
  r.require(bij, "regrouping comparison bijective");
  if (bij) r.require(cmp * rhs == lhs, "coactions commute");
  return r;
}

// the coring as a bicomodule over itself
template <class F>
Bicomodule<F> regular_bicomodule(std::shared_ptr<const Coring<F>> c) {
  auto cm = tensor_over(c->C, c->C);
  Mat<F> both = cm.proj * c->CC->sect * c->delta;
  return make_bicomodule(c, c, c->C, both, both, c->label);
}

// any (A,B)-bimodule over trivial corings, coactions m -> 1 (x) m and m -> m (x) 1
template <class F>
Bicomodule<F> trivial_bicomodule(std::shared_ptr<const Coring<F>> tl,
                                 std::shared_ptr<const Coring<F>> tr,
                                 std::shared_ptr<const Bimodule<F>> m) {
  auto f = m->f;
  auto cm = tensor_over(tl->C, m);
  auto mc = tensor_over(m, tr->C);
  Mat<F> lam(f, cm.qdim(), m->dim), rho(f, mc.qdim(), m->dim);
  for (std::size_t i = 0; i < m->dim; ++i) {
    auto e = Mat<F>::unit_col(f, m->dim, i);
    lam.set_col(i, cm.pure(tl->A->unit, e));
    rho.set_col(i, mc.pure(e, tr->A->unit));
  }
  return make_bicomodule(tl, tr, m, lam, rho, m->label);
}

}  // namespace corings
