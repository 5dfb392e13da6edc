#pragma once

#include "corings/module_ops.hpp"
#include "corings/tensor.hpp"

namespace corings {

// coring over A: carrier bimodule with comultiplication into the computed
// quotient C (x)_A C and counit into A
template <class F>
struct Coring {
  F f;
  std::shared_ptr<const Algebra<F>> A;
  std::shared_ptr<const Bimodule<F>> C;
  std::shared_ptr<const RelTensor<F>> CC;
  Mat<F> delta;  // CC->qdim() x dim
  Mat<F> eps;    // dimA x dim
  std::string label;

  std::size_t dim() const { return C->dim; }
};

template <class F>
std::shared_ptr<const Coring<F>> share_coring(Coring<F> c) {
  return std::make_shared<Coring<F>>(std::move(c));
}

template <class F>
Coring<F> make_coring(std::shared_ptr<const Bimodule<F>> carrier, Mat<F> delta, Mat<F> eps,
                      std::string label) {
  if (!(carrier->A->dim == carrier->B->dim && carrier->A->mult == carrier->B->mult))
    throw std::logic_error("coring carrier must be a bimodule over one algebra");
  Coring<F> c;
  c.f = carrier->f;
  c.A = carrier->A;
  c.C = carrier;
  c.CC = std::make_shared<RelTensor<F>>(tensor_over(carrier, carrier));
  c.delta = std::move(delta);
  c.eps = std::move(eps);
  c.label = std::move(label);
  if (c.delta.rows != c.CC->qdim() || c.delta.cols != c.dim())
    throw std::logic_error("comultiplication shape");
  if (c.eps.rows != c.A->dim || c.eps.cols != c.dim())
    throw std::logic_error("counit shape");
  return c;
}

template <class F>
Report check_coring(const Coring<F>& c) {
  Report r{c.label.empty() ? "coring" : c.label, {}};
  auto f = c.f;
  auto I = Mat<F>::identity(f, c.dim());

  r.absorb(c.C->check());

  auto dmap = check_bimodule_map(*c.C, c.CC->quotient, c.delta);
  r.require(dmap.ok(), "comultiplication is a bimodule map");
  auto reg = regular_bimodule(c.A);
  auto emap = check_bimodule_map(*c.C, reg, c.eps);
  r.require(emap.ok(), "counit is a bimodule map");

  // coassociativity through the constructed regrouping comparison
  auto left_t = tensor_over(share(c.CC->quotient), c.C);
  auto right_t = tensor_over(c.C, share(c.CC->quotient));
  auto lhs = induced_map(*c.CC, left_t, c.delta, I) * c.delta;
  auto rhs = induced_map(*c.CC, right_t, I, c.delta) * c.delta;
  auto cmp = regroup(*c.CC, left_t, *c.CC, right_t);
  bool cmp_bij = left_t.qdim() == right_t.qdim() && rank(cmp) == left_t.qdim();
  r.require(cmp_bij, "regrouping comparison bijective");
  if (cmp_bij) r.require(cmp * rhs == lhs, "coassociativity");

  // counit laws through the action isomorphisms
  auto ac = tensor_over(share(reg), c.C);
  auto mu_l = c.C->lact * ac.sect;
  r.require(mu_l * induced_map(*c.CC, ac, c.eps, I) * c.delta == I, "left counit law");
  auto ca = tensor_over(c.C, share(reg));
  auto mu_r = c.C->ract * ca.sect;
  r.require(mu_r * induced_map(*c.CC, ca, I, c.eps) * c.delta == I, "right counit law");

  return r;
}

// morphism of corings over the same base algebra
template <class F>
Report check_coring_morphism(const Coring<F>& c, const Coring<F>& d, const Mat<F>& h) {
  Report r{"coring morphism", {}};
  if (h.rows != d.dim() || h.cols != c.dim()) {
    r.issues.push_back("shape");
    return r;
  }
  r.require(check_bimodule_map(*c.C, *d.C, h).ok(), "bimodule map");
  r.require(d.eps * h == c.eps, "counit preserved");
  r.require(d.delta * h == induced_map(*c.CC, *d.CC, h, h) * c.delta,
            "comultiplication preserved");
  return r;
}

template <class F>
Coring<F> trivial_coring(std::shared_ptr<const Algebra<F>> a) {
  auto carrier = share(regular_bimodule(a));
  auto f = a->f;
  auto cc = tensor_over(carrier, carrier);
  Mat<F> delta(f, cc.qdim(), a->dim);
  for (std::size_t m = 0; m < a->dim; ++m)
    delta.set_col(m, cc.pure(Mat<F>::unit_col(f, a->dim, m), a->unit));
  return make_coring(carrier, delta, Mat<F>::identity(f, a->dim), "trivial(" + a->label + ")");
}

// free bimodule on a finite set of central grouplikes; basis (i, x) -> i*nx + x
template <class F>
Coring<F> grouplike_coring(std::shared_ptr<const Algebra<F>> a, std::size_t nx) {
  auto f = a->f;
  std::size_t da = a->dim, dim = da * nx;
  Bimodule<F> m;
  m.f = f;
  m.A = a;
  m.B = a;
  m.dim = dim;
  m.lact = Mat<F>(f, dim, da * dim);
  m.ract = Mat<F>(f, dim, dim * da);
  for (std::size_t s = 0; s < da; ++s)
    for (std::size_t i = 0; i < da; ++i)
      for (std::size_t x = 0; x < nx; ++x) {
        auto col = a->mult.col(s * da + i);
        for (std::size_t t = 0; t < da; ++t) {
          if (col.at(t, 0).is_zero()) continue;
          m.lact.at(t * nx + x, s * dim + (i * nx + x)) = col.at(t, 0);
        }
        auto colr = a->mult.col(i * da + s);
        for (std::size_t t = 0; t < da; ++t) {
          if (colr.at(t, 0).is_zero()) continue;
          m.ract.at(t * nx + x, (i * nx + x) * da + s) = colr.at(t, 0);
        }
      }
  m.label = a->label + "-grouplike" + std::to_string(nx);
  auto carrier = share(std::move(m));
  auto cc = tensor_over(carrier, carrier);

  auto point = [&](std::size_t x) {
    Mat<F> v(f, dim, 1);
    for (std::size_t t = 0; t < da; ++t) v.at(t * nx + x, 0) = a->unit.at(t, 0);
    return v;
  };
  Mat<F> delta(f, cc.qdim(), dim);
  Mat<F> eps(f, da, dim);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t x = 0; x < nx; ++x) {
      delta.set_col(i * nx + x, cc.pure(Mat<F>::unit_col(f, dim, i * nx + x), point(x)));
      eps.set_col(i * nx + x, Mat<F>::unit_col(f, da, i));
    }
  return make_coring(carrier, delta, eps, "grouplike(" + a->label + "," + std::to_string(nx) + ")");
}

// matrix coring with central matrix units; basis (i, j, t) -> (i*n + j)*dimA + t
template <class F>
Coring<F> matrix_coring(std::shared_ptr<const Algebra<F>> a, std::size_t n) {
  auto f = a->f;
  std::size_t da = a->dim, dim = n * n * da;
  Bimodule<F> m;
  m.f = f;
  m.A = a;
  m.B = a;
  m.dim = dim;
  m.lact = Mat<F>(f, dim, da * dim);
  m.ract = Mat<F>(f, dim, dim * da);
  for (std::size_t s = 0; s < da; ++s)
    for (std::size_t e = 0; e < n * n; ++e)
      for (std::size_t t = 0; t < da; ++t) {
        auto col = a->mult.col(s * da + t);
        for (std::size_t u = 0; u < da; ++u)
          if (!col.at(u, 0).is_zero())
            m.lact.at(e * da + u, s * dim + (e * da + t)) = col.at(u, 0);
        auto colr = a->mult.col(t * da + s);
        for (std::size_t u = 0; u < da; ++u)
          if (!colr.at(u, 0).is_zero())
            m.ract.at(e * da + u, (e * da + t) * da + s) = colr.at(u, 0);
      }
  m.label = a->label + "-mat" + std::to_string(n);
  auto carrier = share(std::move(m));
  auto cc = tensor_over(carrier, carrier);

  auto unit_at = [&](std::size_t i, std::size_t j) {
    Mat<F> v(f, dim, 1);
    for (std::size_t t = 0; t < da; ++t) v.at((i * n + j) * da + t, 0) = a->unit.at(t, 0);
    return v;
  };
  Mat<F> delta(f, cc.qdim(), dim);
  Mat<F> eps(f, da, dim);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t t = 0; t < da; ++t) {
        std::size_t col = (i * n + j) * da + t;
        Mat<F> d(f, cc.qdim(), 1);
        for (std::size_t k = 0; k < n; ++k) {
          auto left = Mat<F>::unit_col(f, dim, (i * n + k) * da + t);
          d = d + cc.pure(left, unit_at(k, j));
        }
        delta.set_col(col, d);
        if (i == j) eps.set_col(col, Mat<F>::unit_col(f, da, t));
      }
  return make_coring(carrier, delta, eps,
                     "matrix(" + a->label + "," + std::to_string(n) + ")");
}

template <class F>
Coring<F> opposite_coring(const Coring<F>& c) {
  auto f = c.f;
  auto aop = share_alg(opposite_algebra(*c.A));
  std::size_t dim = c.dim(), da = c.A->dim;
  Bimodule<F> m;
  m.f = f;
  m.A = aop;
  m.B = aop;
  m.dim = dim;
  m.lact = Mat<F>(f, dim, da * dim);
  m.ract = Mat<F>(f, dim, dim * da);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t v = 0; v < dim; ++v) {
      m.lact.set_col(i * dim + v, c.C->ract.col(v * da + i));
      m.ract.set_col(v * da + i, c.C->lact.col(i * dim + v));
    }
  m.label = c.C->label + "^op";
  auto carrier = share(std::move(m));
  auto cc = tensor_over(carrier, carrier);
  auto tw = swap_mat(f, dim, dim);
  Mat<F> delta = cc.proj * tw * c.CC->sect * c.delta;
  return make_coring(carrier, delta, c.eps, c.label + "^op");
}

// coring on C (x)_k D over A (x)_k B
template <class F>
Coring<F> tensor_coring(const Coring<F>& c, const Coring<F>& d) {
  auto f = c.f;
  auto ab = share_alg(tensor_algebra(*c.A, *d.A));
  std::size_t dc = c.dim(), dd = d.dim(), dim = dc * dd;
  std::size_t da = c.A->dim, db = d.A->dim, dab = da * db;
  Bimodule<F> m;
  m.f = f;
  m.A = ab;
  m.B = ab;
  m.dim = dim;
  m.lact = Mat<F>(f, dim, dab * dim);
  m.ract = Mat<F>(f, dim, dim * dab);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t p = 0; p < db; ++p)
      for (std::size_t u = 0; u < dc; ++u)
        for (std::size_t v = 0; v < dd; ++v) {
          auto lcol = kron(c.C->lact.col(i * dc + u), d.C->lact.col(p * dd + v));
          m.lact.set_col((i * db + p) * dim + (u * dd + v), lcol);
          auto rcol = kron(c.C->ract.col(u * da + i), d.C->ract.col(v * db + p));
          m.ract.set_col((u * dd + v) * dab + (i * db + p), rcol);
        }
  m.label = c.C->label + "(x)" + d.C->label;
  auto carrier = share(std::move(m));
  auto cc = tensor_over(carrier, carrier);

  Mat<F> delta(f, cc.qdim(), dim);
  for (std::size_t u = 0; u < dc; ++u)
    for (std::size_t v = 0; v < dd; ++v) {
      auto du = c.CC->sect * c.delta.col(u);  // k-tensor rep of Delta_C
      auto dv = d.CC->sect * d.delta.col(v);
      Mat<F> out(f, cc.qdim(), 1);
      for (std::size_t a1 = 0; a1 < dc; ++a1)
        for (std::size_t a2 = 0; a2 < dc; ++a2) {
          auto cu = du.at(a1 * dc + a2, 0);
          if (cu.is_zero()) continue;
          for (std::size_t b1 = 0; b1 < dd; ++b1)
            for (std::size_t b2 = 0; b2 < dd; ++b2) {
              auto cv = dv.at(b1 * dd + b2, 0);
              if (cv.is_zero()) continue;
              auto left = Mat<F>::unit_col(f, dim, a1 * dd + b1);
              auto right = Mat<F>::unit_col(f, dim, a2 * dd + b2);
              out = out + cc.pure(left, right).scaled(cu * cv);
            }
        }
      delta.set_col(u * dd + v, out);
    }
  Mat<F> eps = kron(c.eps, d.eps);
  return make_coring(carrier, delta, eps, c.label + "(x)" + d.label);
}

// base ring extension along rho: A -> B
template <class F>
Coring<F> base_extension_coring(const Coring<F>& c, std::shared_ptr<const Algebra<F>> b,
                                const Mat<F>& rho) {
  auto f = c.f;
  std::size_t da = c.A->dim, db = b->dim, dc = c.dim();

  Bimodule<F> b_left;  // B as a (B,A)-bimodule through rho
  b_left.f = f;
  b_left.A = b;
  b_left.B = c.A;
  b_left.dim = db;
  b_left.lact = b->mult;
  b_left.ract = Mat<F>(f, db, db * da);
  for (std::size_t v = 0; v < db; ++v)
    for (std::size_t j = 0; j < da; ++j)
      b_left.ract.set_col(v * da + j, b->mul(Mat<F>::unit_col(f, db, v), rho.col(j)));
  b_left.label = b->label + "_rho";

  Bimodule<F> b_right;  // B as an (A,B)-bimodule through rho
  b_right.f = f;
  b_right.A = c.A;
  b_right.B = b;
  b_right.dim = db;
  b_right.ract = b->mult;
  b_right.lact = Mat<F>(f, db, da * db);
  for (std::size_t j = 0; j < da; ++j)
    for (std::size_t v = 0; v < db; ++v)
      b_right.lact.set_col(j * db + v, b->mul(rho.col(j), Mat<F>::unit_col(f, db, v)));
  b_right.label = "rho_" + b->label;

  auto t1 = tensor_over(share(b_left), c.C);
  auto t1q = share(t1.quotient);
  auto t2 = tensor_over(t1q, share(b_right));
  auto carrier = share(t2.quotient);
  auto cc = tensor_over(carrier, carrier);

  // full section from the carrier to flat B (x) C (x) B coordinates
  auto Ib = Mat<F>::identity(f, db);
  auto sect_full = kron(t1.sect, Ib) * t2.sect;
  std::size_t kdim3 = db * dc * db;

  auto embed = [&](std::size_t bi, const Mat<F>& cvec, bool unit_right, std::size_t bj) {
    // class of b_i (x) c (x) (1 or b_j) in the carrier
    auto left = t1.pure(Mat<F>::unit_col(f, db, bi), cvec);
    auto rightv = unit_right ? b->unit : Mat<F>::unit_col(f, db, bj);
    return t2.pure(left, rightv);
  };

  Mat<F> delta_k(f, cc.qdim(), kdim3);
  Mat<F> eps_k(f, db, kdim3);
  for (std::size_t bi = 0; bi < db; ++bi)
    for (std::size_t mm = 0; mm < dc; ++mm)
      for (std::size_t bj = 0; bj < db; ++bj) {
        std::size_t col = (bi * dc + mm) * db + bj;
        auto dk = c.CC->sect * c.delta.col(mm);
        Mat<F> out(f, cc.qdim(), 1);
        for (std::size_t u = 0; u < dc; ++u)
          for (std::size_t v = 0; v < dc; ++v) {
            auto cf = dk.at(u * dc + v, 0);
            if (cf.is_zero()) continue;
            // (b_i (x) c_u (x) 1) (x)_B (1 (x) c_v (x) b_j)
            auto lpart = embed(bi, Mat<F>::unit_col(f, dc, u), true, 0);
            auto rtens = t2.pure(t1.pure(b->unit, Mat<F>::unit_col(f, dc, v)),
                                 Mat<F>::unit_col(f, db, bj));
            out = out + cc.pure(lpart, rtens).scaled(cf);
          }
        delta_k.set_col(col, out);
        auto mid = rho * c.eps.col(mm);
        eps_k.set_col(col, b->mul(b->mul(Mat<F>::unit_col(f, db, bi), mid),
                                  Mat<F>::unit_col(f, db, bj)));
      }
  Mat<F> delta = delta_k * sect_full;
  Mat<F> eps = eps_k * sect_full;
  return make_coring(carrier, delta, eps, b->label + "(x)" + c.label + "(x)" + b->label);
}

// comatrix coring M^* (x)_B M for a (B,A)-bimodule whose right A-module
// structure is finitely generated projective
template <class F>
struct ComatrixData {
  Coring<F> coring;
  DualModule<F> dual;          // M^* with its (A,B)-structure
  ProjectiveCert<F> cert;      // dual basis source
  std::shared_ptr<const RelTensor<F>> carrier_tensor;
};

template <class F>
ComatrixData<F> comatrix_coring(const Bimodule<F>& m) {
  auto f = m.f;
  auto cert = check_projective(m, Side::Right);
  if (cert.kind != Tri::Yes)
    throw std::logic_error("comatrix coring needs a projective right module");
  auto dual = right_dual(m);
  std::size_t da = m.B->dim, dm = m.dim, dd = dual.mod.dim;

  auto t = std::make_shared<RelTensor<F>>(tensor_over(share(dual.mod), share(m)));
  auto carrier = share(t->quotient);
  auto cc = tensor_over(carrier, carrier);

  // dual basis functionals from the projectivity splitting
  std::vector<Mat<F>> dual_coords;
  for (std::size_t i = 0; i < dm; ++i) {
    Mat<F> ei(f, da, dm);
    for (std::size_t tt = 0; tt < da; ++tt)
      for (std::size_t mm = 0; mm < dm; ++mm) ei.at(tt, mm) = cert.sigma.at(i * da + tt, mm);
    auto coords = coords_in(dual.space, vec_rm(ei));
    if (!coords) throw std::logic_error("dual basis functional outside the dual space");
    dual_coords.push_back(*coords);
  }

  Mat<F> delta_k(f, cc.qdim(), dd * dm);
  Mat<F> eps_k(f, da, dd * dm);
  for (std::size_t u = 0; u < dd; ++u)
    for (std::size_t mm = 0; mm < dm; ++mm) {
      std::size_t col = u * dm + mm;
      Mat<F> out(f, cc.qdim(), 1);
      for (std::size_t i = 0; i < dm; ++i) {
        auto left = t->pure(Mat<F>::unit_col(f, dd, u), Mat<F>::unit_col(f, dm, i));
        auto right = t->pure(dual_coords[i], Mat<F>::unit_col(f, dm, mm));
        out = out + cc.pure(left, right);
      }
      delta_k.set_col(col, out);
      eps_k.set_col(col, dual.evaluation.col(u * dm + mm));
    }
  ComatrixData<F> out{
      make_coring(carrier, delta_k * t->sect, eps_k * t->sect, "comatrix(" + m.label + ")"),
      dual, cert, t};
  return out;
}

}  // namespace corings
