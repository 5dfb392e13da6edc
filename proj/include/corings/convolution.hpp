#pragma once

#include "corings/comodule.hpp"

namespace corings {

enum class DualVariant { Right, Left, Bi };

inline const char* variant_name(DualVariant v) {
  switch (v) {
    case DualVariant::Right: return "right dual";
    case DualVariant::Left: return "left dual";
    default: return "bidual";
  }
}

// f * g evaluated as a matrix C -> A for functionals of the given variant:
// right: c -> g(f(c_1) c_2), left: c -> f(c_1 g(c_2)), bi: c -> f(c_1) g(c_2)
template <class F>
Mat<F> convolution_matrix(const Coring<F>& c, const Mat<F>& fm, const Mat<F>& gm,
                          DualVariant v) {
  auto f = c.f;
  auto Ic = Mat<F>::identity(f, c.dim());
  Mat<F> deltak = c.CC->sect * c.delta;
  switch (v) {
    case DualVariant::Right: return gm * c.C->lact * kron(fm, Ic) * deltak;
    case DualVariant::Left: return fm * c.C->ract * kron(Ic, gm) * deltak;
    default: return c.A->mult * kron(fm, gm) * deltak;
  }
}

// convolution algebra on the linear-dual subspace cut out by the variant
template <class F>
struct DualAlgebra {
  DualVariant variant = DualVariant::Right;
  std::shared_ptr<const Coring<F>> coring;
  Subspace<F> space;  // functionals A <- C flattened row-major
  Algebra<F> alg;     // structure constants on the basis of `space`

  Mat<F> functional(std::size_t u) const {
    return unvec_rm(coring->f, coring->A->dim, coring->dim(), space.basis.col(u));
  }
  Mat<F> as_matrix(const Mat<F>& coords) const {
    return unvec_rm(coring->f, coring->A->dim, coring->dim(), space.basis * coords);
  }
  Mat<F> coords(const Mat<F>& fmat) const {
    auto c = coords_in(space, vec_rm(fmat));
    if (!c) throw std::logic_error("functional outside the dual subspace");
    return *c;
  }
};

template <class F>
DualAlgebra<F> dual_algebra(std::shared_ptr<const Coring<F>> c, DualVariant v) {
  auto f = c->f;
  DualAlgebra<F> d;
  d.variant = v;
  d.coring = c;
  auto reg = regular_bimodule(c->A);
  switch (v) {
    case DualVariant::Right:
      d.space = module_map_space(as_right_module(*c->C), as_right_module(reg), Side::Right);
      break;
    case DualVariant::Left:
      d.space = module_map_space(as_left_module(*c->C), as_left_module(reg), Side::Left);
      break;
    default:
      d.space = bimodule_map_space(*c->C, reg);
      break;
  }
  std::size_t n = d.space.basis.cols;
  d.alg.f = f;
  d.alg.dim = n;
  d.alg.mult = Mat<F>(f, n, n * n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t w = 0; w < n; ++w) {
      auto prod = convolution_matrix(*c, d.functional(u), d.functional(w), v);
      d.alg.mult.set_col(u * n + w, d.coords(prod));
    }
  d.alg.unit = d.coords(c->eps);
  d.alg.label = std::string(variant_name(v)) + " of " + c->label;
  return d;
}

// a -> eps(a.-) into the right dual, a -> eps(-.a) into the left dual
template <class F>
Mat<F> unit_antimorphism(const DualAlgebra<F>& d) {
  const auto& c = *d.coring;
  auto f = c.f;
  Mat<F> out(f, d.alg.dim, c.A->dim);
  for (std::size_t i = 0; i < c.A->dim; ++i) {
    auto e = Mat<F>::unit_col(f, c.A->dim, i);
    auto fn = (d.variant == DualVariant::Right) ? c.eps * c.C->lmat(e) : c.eps * c.C->rmat(e);
    out.set_col(i, d.coords(fn));
  }
  return out;
}

template <class F>
Report check_unit_antimorphisms(std::shared_ptr<const Coring<F>> c) {
  Report r{"dual unit maps of " + c->label, {}};
  auto dr = dual_algebra(c, DualVariant::Right);
  auto dl = dual_algebra(c, DualVariant::Left);
  r.require(check_algebra_morphism(*c->A, dr.alg, unit_antimorphism(dr), true).ok(),
            "a -> eps(a.-) reverses products into the right dual");
  r.require(check_algebra_morphism(*c->A, dl.alg, unit_antimorphism(dl), true).ok(),
            "a -> eps(-.a) reverses products into the left dual");
  return r;
}

// two-sided inverse in an algebra given by structure constants
template <class F>
std::optional<Mat<F>> algebra_invert(const Algebra<F>& a, const Mat<F>& x) {
  auto sol = solve_linear(a.lmat(x), a.unit);
  if (!sol) return std::nullopt;
  if (!(a.mul(*sol, x) == a.unit)) return std::nullopt;
  return sol;
}

template <class F>
std::optional<Mat<F>> convolution_invert(const DualAlgebra<F>& d, const Mat<F>& p) {
  return algebra_invert(d.alg, p);
}

// comodule endomorphisms of C against the right dual: f -> eps o f, with
// inverse h -> (c -> h(c_1).c_2); an anti-isomorphism of algebras
template <class F>
struct EndRingIso {
  Algebra<F> end_alg;   // composition algebra on the endomorphism basis
  Subspace<F> end_space;
  DualAlgebra<F> dual;
  Mat<F> to_dual, from_dual;
  Report report{"", {}};
};

template <class F>
EndRingIso<F> end_ring_iso(std::shared_ptr<const Coring<F>> c) {
  auto f = c->f;
  std::size_t dc = c->dim();
  EndRingIso<F> out;
  out.dual = dual_algebra(c, DualVariant::Right);
  auto reg = regular_right_comodule(c);
  out.end_space = comodule_hom_space(reg, reg);
  std::size_t n = out.end_space.basis.cols;

  auto endo = [&](std::size_t u) { return unvec_rm(f, dc, dc, out.end_space.basis.col(u)); };
  out.end_alg.f = f;
  out.end_alg.dim = n;
  out.end_alg.mult = Mat<F>(f, n, n * n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t w = 0; w < n; ++w) {
      auto comp = coords_in(out.end_space, vec_rm(endo(u) * endo(w)));
      if (!comp) throw std::logic_error("endomorphisms not closed under composition");
      out.end_alg.mult.set_col(u * n + w, *comp);
    }
  auto idc = coords_in(out.end_space, vec_rm(Mat<F>::identity(f, dc)));
  if (!idc) throw std::logic_error("identity is not a comodule endomorphism");
  out.end_alg.unit = *idc;
  out.end_alg.label = "End(" + c->label + ")";

  out.to_dual = Mat<F>(f, out.dual.alg.dim, n);
  for (std::size_t u = 0; u < n; ++u) out.to_dual.set_col(u, out.dual.coords(c->eps * endo(u)));

  Mat<F> deltak = c->CC->sect * c->delta;
  auto Ic = Mat<F>::identity(f, dc);
  out.from_dual = Mat<F>(f, n, out.dual.alg.dim);
  for (std::size_t w = 0; w < out.dual.alg.dim; ++w) {
    auto h = out.dual.functional(w);
    auto back = coords_in(out.end_space, vec_rm(c->C->lact * kron(h, Ic) * deltak));
    if (!back) throw std::logic_error("dual element does not lift to an endomorphism");
    out.from_dual.set_col(w, *back);
  }

  Report r{"End(C) against the right dual of " + c->label, {}};
  r.require(out.to_dual * out.from_dual == Mat<F>::identity(f, out.dual.alg.dim) &&
                out.from_dual * out.to_dual == Mat<F>::identity(f, n),
            "mutually inverse");
  r.require(check_algebra_morphism(out.end_alg, out.dual.alg, out.to_dual, true).ok(),
            "composition reversed into convolution");
  out.report = r;
  return out;
}

}  // namespace corings
