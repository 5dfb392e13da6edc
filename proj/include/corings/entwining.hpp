#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>

#include "corings/coring.hpp"
#include "corings/solvers.hpp"

namespace corings {

// entwining of an algebra with a coalgebra (a coring whose base is the
// ground field); psi maps C(x)A -> A(x)C, column (m*dimA + i) = psi(x_m (x) e_i)
template <class F>
struct EntwiningStructure {
  std::shared_ptr<const Algebra<F>> A;
  Coring<F> C;
  Mat<F> psi;
};

// coalgebra on the points of a finite set: Delta(x) = x (x) x, eps(x) = 1
template <class F>
Coring<F> set_coalgebra(F f, std::size_t n, std::string label = "") {
  auto c = grouplike_coring(scalar_algebra(f), n);
  if (!label.empty()) c.label = std::move(label);
  return c;
}

// psi(x_m (x) e_i) = e_i (x) x_m . deg(i), for a graded algebra acting on a right G-set
template <class F>
EntwiningStructure<F> graded_entwining(const GradedAlgebra<F>& ga, const GSet& x) {
  auto f = ga.alg->f;
  auto dA = ga.alg->dim;
  auto c = set_coalgebra(f, x.n, "k" + x.label);
  Mat<F> psi(f, dA * x.n, x.n * dA);
  for (std::size_t m = 0; m < x.n; ++m)
    for (std::size_t i = 0; i < dA; ++i)
      psi.at(i * x.n + x.apply(m, ga.deg[i]), m * dA + i) = f.one();
  return {ga.alg, std::move(c), std::move(psi)};
}

// the flip c (x) a -> a (x) c; an entwining when A is commutative and C cocommutative
template <class F>
EntwiningStructure<F> twist_entwining(std::shared_ptr<const Algebra<F>> a, Coring<F> c) {
  auto psi = swap_mat(a->f, c.dim(), a->dim);
  return {a, std::move(c), std::move(psi)};
}

template <class F>
Report check_entwining(const EntwiningStructure<F>& e) {
  Report r{"entwining(" + e.A->label + ", " + e.C.label + ")", {}};
  r.absorb(e.A->check());
  r.absorb(check_coring(e.C));
  auto f = e.A->f;
  std::size_t dA = e.A->dim, dC = e.C.dim();
  bool shp = e.C.A->dim == 1 && e.psi.rows == dA * dC && e.psi.cols == dC * dA;
  r.require(shp, "psi shape over the ground field");
  if (!shp) return r;

  auto IA = Mat<F>::identity(f, dA);
  auto IC = Mat<F>::identity(f, dC);
  auto dk = e.C.CC->sect * e.C.delta;
  const auto& epsC = e.C.eps;

  // compare columnwise so a failure names the offending basis tuple
  auto law = [&](const Mat<F>& lhs, const Mat<F>& rhs, const std::string& name) {
    if (lhs == rhs) return;
    for (std::size_t j = 0; j < lhs.cols; ++j)
      if (!(lhs.col(j) == rhs.col(j))) {
        r.issues.push_back(name + " fails at input column " + std::to_string(j));
        return;
      }
  };

  law(e.psi * kron(IC, e.A->mult),
      kron(e.A->mult, IC) * kron(IA, e.psi) * kron(e.psi, IA),
      "multiplication compatibility");
  law(kron(IA, dk) * e.psi,
      kron(e.psi, IC) * kron(IC, e.psi) * kron(dk, IA),
      "comultiplication compatibility");
  law(e.psi * kron(IC, e.A->unit), kron(e.A->unit, IC), "unit compatibility");
  law(kron(IA, epsC) * e.psi, kron(epsC, IA), "counit compatibility");
  return r;
}

// the coring data on A(x)C induced by psi, assembled without checking the axioms
template <class F>
Coring<F> assemble_takeuchi(const EntwiningStructure<F>& e) {
  auto f = e.A->f;
  std::size_t dA = e.A->dim, dC = e.C.dim(), dim = dA * dC;
  auto IA = Mat<F>::identity(f, dA);
  auto IC = Mat<F>::identity(f, dC);

  Bimodule<F> car;
  car.f = f;
  car.A = e.A;
  car.B = e.A;
  car.dim = dim;
  car.lact = kron(e.A->mult, IC);
  car.ract = kron(e.A->mult, IC) * kron(IA, e.psi);
  car.label = e.A->label + "(x)" + e.C.label;
  auto carrier = share(std::move(car));

  auto cc = tensor_over(carrier, carrier);
  auto dk = e.C.CC->sect * e.C.delta;
  Mat<F> delta(f, cc.qdim(), dim);
  for (std::size_t i = 0; i < dA; ++i)
    for (std::size_t m = 0; m < dC; ++m) {
      Mat<F> col(f, cc.qdim(), 1);
      for (std::size_t m1 = 0; m1 < dC; ++m1)
        for (std::size_t m2 = 0; m2 < dC; ++m2) {
          auto coeff = dk.at(m1 * dC + m2, m);
          if (coeff.is_zero()) continue;
          Mat<F> u(f, dim, 1);
          u.at(i * dC + m1, 0) = coeff;
          Mat<F> w(f, dim, 1);
          for (std::size_t t = 0; t < dA; ++t) w.at(t * dC + m2, 0) = e.A->unit.at(t, 0);
          col = col + cc.pure(u, w);
        }
      delta.set_col(i * dC + m, col);
    }

  Mat<F> eps(f, dA, dim);
  for (std::size_t i = 0; i < dA; ++i)
    for (std::size_t m = 0; m < dC; ++m) eps.at(i, i * dC + m) = e.C.eps.at(0, m);

  return make_coring(carrier, std::move(delta), std::move(eps),
                     "takeuchi(" + carrier->label + ")");
}

template <class F>
Coring<F> takeuchi_coring(const EntwiningStructure<F>& e) {
  auto r = check_entwining(e);
  if (!r.ok()) throw std::logic_error("entwining axioms fail: " + r.str());
  return assemble_takeuchi(e);
}

// reads psi(x_m (x) e_s) = (1 (x) x_m) . e_s off a candidate right action on
// A(x)C and returns the entwining exactly when the candidate is the psi action
// and the axioms hold
template <class F>
std::optional<EntwiningStructure<F>> coring_from_data_recovers_entwining(
    std::shared_ptr<const Algebra<F>> a, const Coring<F>& c, const Mat<F>& ract) {
  auto f = a->f;
  std::size_t dA = a->dim, dC = c.dim(), dim = dA * dC;
  if (c.A->dim != 1) throw std::logic_error("coalgebra must live over the ground field");
  if (ract.rows != dim || ract.cols != dim * dA) return std::nullopt;

  Mat<F> psi(f, dim, dC * dA);
  for (std::size_t m = 0; m < dC; ++m)
    for (std::size_t s = 0; s < dA; ++s) {
      Mat<F> kv(f, dim * dA, 1);
      for (std::size_t t = 0; t < dA; ++t) kv.at((t * dC + m) * dA + s, 0) = a->unit.at(t, 0);
      psi.set_col(m * dA + s, ract * kv);
    }

  EntwiningStructure<F> e{a, c, psi};
  auto IA = Mat<F>::identity(f, dA);
  auto IC = Mat<F>::identity(f, dC);
  auto rebuilt = kron(a->mult, IC) * kron(IA, psi);
  if (!(rebuilt == ract)) return std::nullopt;
  if (!check_entwining(e).ok()) return std::nullopt;
  return e;
}

// bialgebra: one carrier with an algebra and a coalgebra structure
template <class F>
struct Bialgebra {
  std::shared_ptr<const Algebra<F>> alg;
  Coring<F> coalg;
  std::string label;

  Mat<F> delta_k() const { return coalg.CC->sect * coalg.delta; }
};

// group bialgebra: Delta(g) = g (x) g, eps(g) = 1
template <class F>
Bialgebra<F> group_bialgebra(F f, const Group& g) {
  Bialgebra<F> b;
  b.alg = share_alg(group_algebra(f, g));
  b.coalg = set_coalgebra(f, g.n, "k" + g.label + " coalgebra");
  b.label = "k" + g.label;
  return b;
}

template <class F>
Report check_bialgebra(const Bialgebra<F>& h, const Mat<F>* antipode = nullptr) {
  Report r{h.label.empty() ? "bialgebra" : h.label, {}};
  r.absorb(h.alg->check());
  r.absorb(check_coring(h.coalg));
  bool shp = h.coalg.A->dim == 1 && h.coalg.dim() == h.alg->dim;
  r.require(shp, "one carrier over the ground field");
  if (!shp) return r;

  auto f = h.alg->f;
  std::size_t d = h.alg->dim;
  auto dk = h.delta_k();
  const auto& eps = h.coalg.eps;
  auto hh = tensor_algebra(*h.alg, *h.alg);
  r.require(dk * h.alg->mult == hh.mult * kron(dk, dk), "comultiplication is multiplicative");
  r.require(dk * h.alg->unit == kron(h.alg->unit, h.alg->unit),
            "comultiplication preserves the unit");
  r.require(eps * h.alg->mult == kron(eps, eps), "counit is multiplicative");
  r.require(eps * h.alg->unit == Mat<F>::identity(f, 1), "counit preserves the unit");

  if (antipode) {
    bool sshp = antipode->rows == d && antipode->cols == d;
    r.require(sshp, "antipode shape");
    if (sshp) {
      auto I = Mat<F>::identity(f, d);
      auto ue = h.alg->unit * eps;
      r.require(h.alg->mult * kron(*antipode, I) * dk == ue, "left antipode law");
      r.require(h.alg->mult * kron(I, *antipode) * dk == ue, "right antipode law");
    }
  }
  return r;
}

// solves S(h1) h2 = h1 S(h2) = unit . eps(h) for S; unique when it exists
template <class F>
std::optional<Mat<F>> find_antipode(const Bialgebra<F>& h) {
  auto f = h.alg->f;
  std::size_t d = h.alg->dim;
  auto dk = h.delta_k();
  auto sys = vstack(blocked_right(h.alg->mult, dk, d, d, d),
                    blocked_left(h.alg->mult, dk, d, d, d));
  auto rhs = vec_rm(h.alg->unit * h.coalg.eps);
  auto sol = solve_linear(sys, vstack(rhs, rhs));
  if (!sol) return std::nullopt;
  return unvec_rm(f, d, d, *sol);
}

// Doi-Koppinen datum: a comodule algebra and a module coalgebra over one bialgebra
template <class F>
struct DKStructure {
  Bialgebra<F> H;
  std::shared_ptr<const Algebra<F>> A;
  Mat<F> coaction;  // (dimA*dimH) x dimA, a -> a_0 (x) a_1
  Coring<F> C;
  Mat<F> action;  // dimC x (dimC*dimH), column (m*dimH + g) = x_m . h_g
  std::string label;
};

template <class F>
Report check_dk(const DKStructure<F>& dk) {
  Report r{dk.label.empty() ? "doi-koppinen data" : dk.label, {}};
  r.absorb(check_bialgebra(dk.H));
  r.absorb(dk.A->check());
  r.absorb(check_coring(dk.C));
  auto f = dk.A->f;
  std::size_t dA = dk.A->dim, dH = dk.H.alg->dim, dC = dk.C.dim();
  bool shp = dk.C.A->dim == 1 && dk.coaction.rows == dA * dH && dk.coaction.cols == dA &&
             dk.action.rows == dC && dk.action.cols == dC * dH;
  r.require(shp, "shapes");
  if (!shp) return r;

  auto IA = Mat<F>::identity(f, dA);
  auto IH = Mat<F>::identity(f, dH);
  auto IC = Mat<F>::identity(f, dC);
  auto dkH = dk.H.delta_k();
  const auto& epsH = dk.H.coalg.eps;
  auto dkC = dk.C.CC->sect * dk.C.delta;
  const auto& epsC = dk.C.eps;

  r.require(kron(dk.coaction, IH) * dk.coaction == kron(IA, dkH) * dk.coaction,
            "coaction coassociative");
  r.require(kron(IA, epsH) * dk.coaction == IA, "coaction counital");
  auto ah = tensor_algebra(*dk.A, *dk.H.alg);
  r.require(dk.coaction * dk.A->mult == ah.mult * kron(dk.coaction, dk.coaction),
            "coaction is an algebra morphism");
  r.require(dk.coaction * dk.A->unit == kron(dk.A->unit, dk.H.alg->unit),
            "coaction preserves the unit");

  r.require(dk.action * kron(dk.action, IH) == dk.action * kron(IC, dk.H.alg->mult),
            "action associative");
  r.require(dk.action * kron(IC, dk.H.alg->unit) == IC, "action unital");
  auto mid = kron(kron(IC, swap_mat(f, dC, dH)), IH);
  r.require(dkC * dk.action == kron(dk.action, dk.action) * mid * kron(dkC, dkH),
            "comultiplication is a module map");
  r.require(epsC * dk.action == kron(epsC, epsH), "counit is a module map");
  return r;
}

// psi(c (x) a) = a_0 (x) c . a_1
template <class F>
EntwiningStructure<F> dk_to_entwining(const DKStructure<F>& dk) {
  auto r = check_dk(dk);
  if (!r.ok()) throw std::logic_error("doi-koppinen axioms fail: " + r.str());
  auto f = dk.A->f;
  std::size_t dA = dk.A->dim, dH = dk.H.alg->dim, dC = dk.C.dim();
  auto flip = kron(swap_mat(f, dC, dA), Mat<F>::identity(f, dH));
  auto psi = kron(Mat<F>::identity(f, dA), dk.action) * flip *
             kron(Mat<F>::identity(f, dC), dk.coaction);
  return {dk.A, dk.C, std::move(psi)};
}

}  // namespace corings
