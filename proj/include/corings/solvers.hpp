#pragma once

#include "corings/convolution.hpp"
#include "corings/cotensor.hpp"
#include "corings/rng.hpp"

namespace corings {

inline typename QField::K random_coeff(QField f, Rng& r) {
  return f.from_long(static_cast<long>(r.range(-5, 5)));
}
inline typename FpField::K random_coeff(FpField f, Rng& r) {
  return f.from_long(static_cast<long>(r.below(f.p)));
}

// number of grid points side^d when it stays within cap
inline std::optional<std::uint64_t> grid_size(std::uint64_t side, std::size_t d,
                                              std::uint64_t cap) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < d; ++i) {
    if (side != 0 && total > cap / side) return std::nullopt;
    total *= side;
  }
  if (total > cap) return std::nullopt;
  return total;
}

template <class F>
std::uint64_t enumeration_side(F, std::size_t q_side);
inline std::uint64_t enumeration_side(QField, std::size_t q_side) { return q_side; }
inline std::uint64_t enumeration_side(FpField f, std::size_t) { return f.p; }

// search a span for an element satisfying `good`; the random phase is seeded,
// the enumeration phase certifies No when it fits the cap. Over the rationals
// the grid {0..side-1}^d is complete because the acceptance predicate is the
// nonvanishing of a determinant of per-variable degree < side.
template <class F, class Pred>
Verdict<F> span_search(F f, const Subspace<F>& span, Pred&& good, std::size_t q_side,
                       const SessionConfig& cfg, const Mat<F>* shortcut) {
  Verdict<F> v;
  std::size_t d = span.basis.cols;
  if (d == 0) {
    v.kind = Tri::No;
    v.note = "the span is zero";
    return v;
  }
  if (shortcut) {
    if (auto c = coords_in(span, *shortcut); c && good(*shortcut)) {
      v.kind = Tri::Yes;
      v.witness = *shortcut;
      v.note = "distinguished element lies in the span";
      return v;
    }
  }

  Rng rng{cfg.seed};
  for (std::uint64_t t = 0; t < cfg.budget; ++t) {
    Mat<F> coeffs(f, d, 1);
    for (std::size_t i = 0; i < d; ++i) coeffs.at(i, 0) = random_coeff(f, rng);
    auto x = span.basis * coeffs;
    ++v.effort.trials;
    if (good(x)) {
      v.kind = Tri::Yes;
      v.witness = x;
      v.note = "found by seeded random search";
      return v;
    }
  }

  std::uint64_t side = enumeration_side(f, q_side);
  if (auto total = grid_size(side, d, cfg.enum_cap)) {
    std::vector<std::uint64_t> idx(d, 0);
    for (std::uint64_t n = 0; n < *total; ++n) {
      Mat<F> coeffs(f, d, 1);
      for (std::size_t i = 0; i < d; ++i) coeffs.at(i, 0) = f.from_long(static_cast<long>(idx[i]));
      auto x = span.basis * coeffs;
      ++v.effort.enumerated;
      if (good(x)) {
        v.kind = Tri::Yes;
        v.witness = x;
        v.note = "found by exhaustive enumeration";
        return v;
      }
      for (std::size_t i = 0; i < d; ++i) {
        if (++idx[i] < side) break;
        idx[i] = 0;
      }
    }
    v.kind = Tri::No;
    v.note = "exhausted " + std::to_string(*total) + " coefficient vectors";
    return v;
  }

  v.kind = Tri::Unknown;
  v.note = "budget exhausted and the span is too large to enumerate";
  return v;
}

// invertible element of a subspace of an algebra
template <class F>
Verdict<F> find_invertible_in_span(const Algebra<F>& a, const Subspace<F>& span,
                                   const SessionConfig& cfg) {
  if (span.ambient != a.dim) throw std::logic_error("span ambient mismatch");
  auto test = [&](const Mat<F>& x) { return algebra_invert(a, x).has_value(); };
  return span_search(a.f, span, test, a.dim + 1, cfg, &a.unit);
}

// bijective map in a span of flattened rows x cols matrices
template <class F>
Verdict<F> find_bijective_in_span(F f, std::size_t rows, std::size_t cols,
                                  const Subspace<F>& span, const SessionConfig& cfg) {
  Verdict<F> v;
  if (rows != cols) {
    v.kind = Tri::No;
    v.note = "source and target dimensions differ";
    return v;
  }
  auto test = [&](const Mat<F>& x) { return rank(unvec_rm(f, rows, cols, x)) == rows; };
  auto id = vec_rm(Mat<F>::identity(f, rows));
  return span_search(f, span, test, rows + 1, cfg, &id);
}

// operator vec_rm(X) -> vec_rm(L * (I_n (x) X) * R) for X of shape vr x vc
template <class F>
Mat<F> blocked_left(const Mat<F>& L, const Mat<F>& R, std::size_t n, std::size_t vr,
                    std::size_t vc) {
  auto f = L.f;
  Mat<F> out(f, L.rows * R.cols, vr * vc);
  for (std::size_t i = 0; i < n; ++i) {
    Mat<F> Li(f, L.rows, vr), Ri(f, vc, R.cols);
    for (std::size_t a2 = 0; a2 < L.rows; ++a2)
      for (std::size_t r = 0; r < vr; ++r) Li.at(a2, r) = L.at(a2, i * vr + r);
    for (std::size_t s = 0; s < vc; ++s)
      for (std::size_t b2 = 0; b2 < R.cols; ++b2) Ri.at(s, b2) = R.at(i * vc + s, b2);
    out = out + sandwich(Li, Ri);
  }
  return out;
}

// operator vec_rm(X) -> vec_rm(L * (X (x) I_n) * R) for X of shape vr x vc
template <class F>
Mat<F> blocked_right(const Mat<F>& L, const Mat<F>& R, std::size_t n, std::size_t vr,
                     std::size_t vc) {
  auto f = L.f;
  Mat<F> out(f, L.rows * R.cols, vr * vc);
  for (std::size_t i = 0; i < n; ++i) {
    Mat<F> Li(f, L.rows, vr), Ri(f, vc, R.cols);
    for (std::size_t a2 = 0; a2 < L.rows; ++a2)
      for (std::size_t r = 0; r < vr; ++r) Li.at(a2, r) = L.at(a2, r * n + i);
    for (std::size_t s = 0; s < vc; ++s)
      for (std::size_t b2 = 0; b2 < R.cols; ++b2) Ri.at(s, b2) = R.at(s * n + i, b2);
    out = out + sandwich(Li, Ri);
  }
  return out;
}

// linear feasibility outcome: decided exactly, never Unknown
template <class F>
struct LinearVerdict {
  Tri kind = Tri::No;
  std::optional<Mat<F>> witness;
  Subspace<F> homogeneous;  // solution directions, flattened row-major
  std::string note;
};

// A-bimodule map delta: C (x)_A C -> A with delta o Delta = eps and the
// one-sided contractions agreeing on C (x) C (x) C
template <class F>
LinearVerdict<F> find_cointegral(const Coring<F>& c) {
  auto f = c.f;
  std::size_t da = c.A->dim, q = c.CC->qdim();
  const auto& cq = c.CC->quotient;
  auto reg = regular_bimodule(c.A);
  auto Ic = Mat<F>::identity(f, c.dim());

  auto t1 = tensor_over(share(cq), c.C);
  auto t2 = tensor_over(c.C, share(cq));
  auto cmp = regroup(*c.CC, t1, *c.CC, t2);  // t2 -> t1
  auto cmp_inv = inverse(cmp);
  if (!cmp_inv) throw std::logic_error("cointegral regrouping not invertible");
  auto ca = tensor_over(c.C, share(reg));
  auto ac = tensor_over(share(reg), c.C);
  auto mu_r = c.C->ract * ca.sect;
  auto mu_l = c.C->lact * ac.sect;
  auto into_t1 = induced_map(*c.CC, t1, c.delta, Ic);
  auto into_t2 = induced_map(*c.CC, t2, Ic, c.delta);

  auto Iq = Mat<F>::identity(f, q);
  auto Ia = Mat<F>::identity(f, da);
  Mat<F> sys(f, 0, da * q), target(f, 0, 1);
  auto push = [&](const Mat<F>& block, const Mat<F>& want) {
    sys = vstack(sys, block);
    target = vstack(target, want);
  };
  auto zero_for = [&](const Mat<F>& block) { return Mat<F>(f, block.rows, 1); };
  for (std::size_t i = 0; i < da; ++i) {
    auto e = Mat<F>::unit_col(f, da, i);
    auto bl = sandwich(Ia, cq.lmat(e)) - sandwich(reg.lmat(e), Iq);
    push(bl, zero_for(bl));
    auto br = sandwich(Ia, cq.rmat(e)) - sandwich(reg.rmat(e), Iq);
    push(br, zero_for(br));
  }
  push(sandwich(Ia, c.delta), vec_rm(c.eps));
  // c_1.delta(c_2 (x) c') = delta(c (x) c'_1).c'_2 as operators on delta
  auto lhs_op = blocked_left(mu_r * ca.proj, t2.sect * *cmp_inv * into_t1, c.dim(), da, q);
  auto rhs_op = blocked_right(mu_l * ac.proj, t1.sect * cmp * into_t2, c.dim(), da, q);
  auto mixed = lhs_op - rhs_op;
  push(mixed, zero_for(mixed));
  LinearVerdict<F> out;
  out.homogeneous = kernel(sys);
  auto sol = solve_linear(sys, target);
  if (sol) {
    out.kind = Tri::Yes;
    out.witness = unvec_rm(f, da, q, *sol);
    out.note = "cointegral found; solution space dimension " +
               std::to_string(out.homogeneous.basis.cols);
  } else {
    out.note = "the cointegral equations are inconsistent";
  }
  return out;
}

// A-bimodule section of the counit
template <class F>
LinearVerdict<F> find_cosplit(const Coring<F>& c) {
  auto f = c.f;
  std::size_t da = c.A->dim, dc = c.dim();
  auto reg = regular_bimodule(c.A);

  auto Ia = Mat<F>::identity(f, da);
  auto Ic = Mat<F>::identity(f, dc);
  Mat<F> sys(f, 0, dc * da), target(f, 0, 1);
  for (std::size_t i = 0; i < da; ++i) {
    auto e = Mat<F>::unit_col(f, da, i);
    auto bl = sandwich(Ic, reg.lmat(e)) - sandwich(c.C->lmat(e), Ia);
    sys = vstack(sys, bl);
    target = vstack(target, Mat<F>(f, bl.rows, 1));
    auto br = sandwich(Ic, reg.rmat(e)) - sandwich(c.C->rmat(e), Ia);
    sys = vstack(sys, br);
    target = vstack(target, Mat<F>(f, br.rows, 1));
  }
  sys = vstack(sys, sandwich(c.eps, Ia));
  target = vstack(target, vec_rm(Ia));
  LinearVerdict<F> out;
  out.homogeneous = kernel(sys);
  auto sol = solve_linear(sys, target);
  if (sol) {
    out.kind = Tri::Yes;
    out.witness = unvec_rm(f, dc, da, *sol);
    out.note = "counit section found";
  } else {
    out.note = "the counit admits no bimodule section";
  }
  return out;
}

// the opposite of the left dual, with C and R as (A,R)-bimodules:
// c.r = c_1 . r(c_2) on C, (a.r)(c) = r(c.a) and right multiplication on R
template <class F>
struct FrobeniusSetting {
  DualAlgebra<F> left_dual_alg;
  Algebra<F> R;
  Bimodule<F> c_mod, r_mod;  // both (A, R)-bimodules
  Subspace<F> map_space;     // bimodule maps C -> R, flattened
};

template <class F>
FrobeniusSetting<F> frobenius_setting(std::shared_ptr<const Coring<F>> c) {
  auto f = c->f;
  std::size_t dc = c->dim();
  FrobeniusSetting<F> s;
  s.left_dual_alg = dual_algebra(c, DualVariant::Left);
  s.R = opposite_algebra(s.left_dual_alg.alg);
  s.R.label = "(*" + c->label + ")op";
  std::size_t n = s.R.dim;
  auto rp = share_alg(s.R);

  Mat<F> deltak = c->CC->sect * c->delta;
  auto Ic = Mat<F>::identity(f, dc);

  s.c_mod.f = f;
  s.c_mod.A = c->A;
  s.c_mod.B = rp;
  s.c_mod.dim = dc;
  s.c_mod.lact = c->C->lact;
  s.c_mod.ract = Mat<F>(f, dc, dc * n);
  for (std::size_t v = 0; v < n; ++v) {
    auto act = c->C->ract * kron(Ic, s.left_dual_alg.functional(v)) * deltak;
    for (std::size_t m = 0; m < dc; ++m) s.c_mod.ract.set_col(m * n + v, act.col(m));
  }
  s.c_mod.label = c->label + " as (A,R)";

  s.r_mod.f = f;
  s.r_mod.A = c->A;
  s.r_mod.B = rp;
  s.r_mod.dim = n;
  s.r_mod.ract = s.R.mult;
  s.r_mod.lact = Mat<F>(f, n, c->A->dim * n);
  for (std::size_t i = 0; i < c->A->dim; ++i) {
    auto e = Mat<F>::unit_col(f, c->A->dim, i);
    for (std::size_t v = 0; v < n; ++v) {
      auto moved = s.left_dual_alg.coords(s.left_dual_alg.functional(v) * c->C->rmat(e));
      s.r_mod.lact.set_col(i * n + v, moved);
    }
  }
  s.r_mod.label = s.R.label + " as (A,R)";

  s.map_space = bimodule_map_space(s.c_mod, s.r_mod);
  return s;
}

template <class F>
struct FrobeniusOutcome {
  Verdict<F> verdict;        // witness j: C -> R on Yes, as a flattened span element
  std::optional<Mat<F>> j;   // matrix form
  std::optional<Mat<F>> eta; // dimC x dimA
  std::optional<Mat<F>> pi;  // dimC x qdim(C (x) C)
};

// Frobenius test: _AC finitely generated projective and C isomorphic to
// the opposite left dual as (A,R)-bimodules
template <class F>
FrobeniusOutcome<F> check_frobenius_coring(std::shared_ptr<const Coring<F>> c,
                                           const SessionConfig& cfg) {
  auto f = c->f;
  FrobeniusOutcome<F> out;
  auto proj = check_projective(as_left_module(*c->C), Side::Left);
  if (proj.kind != Tri::Yes) {
    out.verdict.kind = Tri::No;
    out.verdict.note = "the carrier is not projective as a left module";
    return out;
  }
  auto s = frobenius_setting(c);
  std::size_t dc = c->dim(), n = s.R.dim;
  out.verdict = find_bijective_in_span(f, n, dc, s.map_space, cfg);
  if (out.verdict.kind != Tri::Yes) return out;

  auto j = unvec_rm(f, n, dc, *out.verdict.witness);
  out.j = j;
  auto jinv = inverse(j);
  if (!jinv) throw std::logic_error("witness lost invertibility");
  auto e = *jinv * s.left_dual_alg.alg.unit;  // j^{-1}(eps)

  Mat<F> eta(f, dc, c->A->dim);
  for (std::size_t i = 0; i < c->A->dim; ++i) {
    auto a = Mat<F>::unit_col(f, c->A->dim, i);
    eta.set_col(i, c->C->lmat(a) * e);
  }
  out.eta = eta;

  Mat<F> pik(f, dc, dc * dc);
  for (std::size_t m2 = 0; m2 < dc; ++m2) {
    auto act = s.c_mod.rmat(j.col(m2));  // right action by j(e_{m2})
    for (std::size_t m1 = 0; m1 < dc; ++m1) pik.set_col(m1 * dc + m2, act.col(m1));
  }
  out.pi = pik * c->CC->sect;
  return out;
}

// certificate checker for the (eta, pi) formulation
template <class F>
Report verify_frobenius_data(const Coring<F>& c, const Mat<F>& eta, const Mat<F>& pi) {
  Report r{"frobenius data for " + c.label, {}};
  auto f = c.f;
  std::size_t dc = c.dim();
  auto Ic = Mat<F>::identity(f, dc);
  const auto& cq = c.CC->quotient;

  r.require(check_bimodule_map(regular_bimodule(c.A), *c.C, eta).ok(), "eta is a bimodule map");
  r.require(check_bimodule_map(cq, *c.C, pi).ok(), "pi is a bimodule map");

  auto t1 = tensor_over(share(cq), c.C);
  auto t2 = tensor_over(c.C, share(cq));
  auto cmp = regroup(*c.CC, t1, *c.CC, t2);  // t2 -> t1
  auto cmp_inv = inverse(cmp);
  if (!cmp_inv) {
    r.issues.push_back("regrouping not invertible");
    return r;
  }
  auto lam_cc = *cmp_inv * induced_map(*c.CC, t1, c.delta, Ic);
  r.require(c.delta * pi == induced_map(t2, *c.CC, Ic, pi) * lam_cc, "pi is left colinear");
  auto rho_cc = cmp * induced_map(*c.CC, t2, Ic, c.delta);
  r.require(c.delta * pi == induced_map(t1, *c.CC, pi, Ic) * rho_cc, "pi is right colinear");

  auto e1 = eta * c.A->unit;
  Mat<F> left_ins(f, c.CC->qdim(), dc), right_ins(f, c.CC->qdim(), dc);
  for (std::size_t m = 0; m < dc; ++m) {
    left_ins.set_col(m, c.CC->pure(e1, Mat<F>::unit_col(f, dc, m)));
    right_ins.set_col(m, c.CC->pure(Mat<F>::unit_col(f, dc, m), e1));
  }
  r.require(pi * left_ins == Ic, "pi absorbs eta on the left");
  r.require(pi * right_ins == Ic, "pi absorbs eta on the right");
  return r;
}

// ring extension rho: A -> B is Frobenius when B_A is f.g. projective and
// B is isomorphic to its right A-dual as an (A,B)-bimodule
template <class F>
Verdict<F> check_frobenius_extension(std::shared_ptr<const Algebra<F>> a,
                                     std::shared_ptr<const Algebra<F>> b, const Mat<F>& rho,
                                     const SessionConfig& cfg) {
  auto f = a->f;
  if (!check_algebra_morphism(*a, *b, rho).ok()) throw std::logic_error("rho is not a ring map");

  Bimodule<F> b_over_a;  // (B, A)-bimodule for dualizing
  b_over_a.f = f;
  b_over_a.A = b;
  b_over_a.B = a;
  b_over_a.dim = b->dim;
  b_over_a.lact = b->mult;
  b_over_a.ract = b->mult * kron(Mat<F>::identity(f, b->dim), rho);
  b_over_a.label = b->label + " over " + a->label;

  Verdict<F> v;
  auto proj = check_projective(as_right_module(b_over_a), Side::Right);
  if (proj.kind != Tri::Yes) {
    v.kind = Tri::No;
    v.note = "the extension is not finitely generated projective on the right";
    return v;
  }

  auto dual = right_dual(b_over_a);  // (A, B)-bimodule B^*

  Bimodule<F> b_ab;  // B as an (A, B)-bimodule through rho
  b_ab.f = f;
  b_ab.A = a;
  b_ab.B = b;
  b_ab.dim = b->dim;
  b_ab.lact = b->mult * kron(rho, Mat<F>::identity(f, b->dim));
  b_ab.ract = b->mult;
  b_ab.label = b->label;

  auto space = bimodule_map_space(b_ab, dual.mod);
  return find_bijective_in_span(f, dual.mod.dim, b->dim, space, cfg);
}

// over a trivial right coring, quasi-finiteness of a bicomodule reduces to
// projectivity of the underlying left module, with the left dual as cohom
template <class F>
struct QuasifiniteOutcome {
  Tri kind = Tri::Unknown;
  std::string note;
  std::optional<DualModule<F>> cohom;
};

template <class F>
QuasifiniteOutcome<F> check_quasifinite_trivial(const Bicomodule<F>& n) {
  QuasifiniteOutcome<F> out;
  const auto& tr = *n.Cr;
  bool trivial = tr.dim() == tr.A->dim && tr.eps == Mat<F>::identity(n.M->f, tr.A->dim);
  if (!trivial) throw std::logic_error("right coring is not trivial");
  auto proj = check_projective(as_left_module(*n.M), Side::Left);
  out.kind = proj.kind;
  if (proj.kind == Tri::Yes) {
    out.cohom = left_dual(*n.M);
    out.note = "left module projective; cohom is the left dual";
  } else {
    out.note = "left module is not projective";
  }
  return out;
}

}  // namespace corings
