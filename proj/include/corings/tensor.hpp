#pragma once

#include <memory>

#include "corings/bimodule.hpp"

namespace corings {

// tensor product over the shared middle algebra, presented as an explicit
// quotient of the k-tensor space with canonical projection and section;
// k-tensor index (v, w) -> v*dimRight + w
template <class F>
struct RelTensor {
  F f;
  std::shared_ptr<const Bimodule<F>> left, right;
  std::size_t kdim = 0;
  Mat<F> proj;  // qdim x kdim
  Mat<F> sect;  // kdim x qdim, proj*sect = id
  Bimodule<F> quotient;

  std::size_t qdim() const { return proj.rows; }

  // class of a pure tensor
  Mat<F> pure(const Mat<F>& v, const Mat<F>& w) const { return proj * kron(v, w); }
};

template <class F>
RelTensor<F> tensor_over(std::shared_ptr<const Bimodule<F>> left,
                         std::shared_ptr<const Bimodule<F>> right) {
  if (!(left->B->dim == right->A->dim && left->B->mult == right->A->mult))
    throw std::logic_error("tensor middle algebra mismatch");
  RelTensor<F> t;
  t.f = left->f;
  t.left = left;
  t.right = right;
  t.kdim = left->dim * right->dim;
  auto f = t.f;

  // relation span: (v.a)(x)w - v(x)(a.w) over all basis triples
  std::size_t mid = left->B->dim;
  Mat<F> rels(f, left->dim * mid * right->dim, t.kdim);
  std::size_t row = 0;
  for (std::size_t v = 0; v < left->dim; ++v) {
    auto ev = Mat<F>::unit_col(f, left->dim, v);
    for (std::size_t a = 0; a < mid; ++a) {
      auto ea = Mat<F>::unit_col(f, mid, a);
      auto va = left->rmat(ea) * ev;
      for (std::size_t w = 0; w < right->dim; ++w) {
        auto ew = Mat<F>::unit_col(f, right->dim, w);
        auto aw = right->lmat(ea) * ew;
        auto rel = kron(va, ew) - kron(ev, aw);
        for (std::size_t c = 0; c < t.kdim; ++c) rels.at(row, c) = rel.at(c, 0);
        ++row;
      }
    }
  }

  auto rr = rref(rels);
  std::vector<bool> is_pivot(t.kdim, false);
  for (auto c : rr.pivots) is_pivot[c] = true;
  std::size_t q = t.kdim - rr.rank;

  // canonical reduction v -> v - sum_i v[p_i] row_i, then read free coordinates
  t.proj = Mat<F>(f, q, t.kdim);
  t.sect = Mat<F>(f, t.kdim, q);
  {
    std::size_t u = 0;
    for (std::size_t c = 0; c < t.kdim; ++c) {
      if (is_pivot[c]) continue;
      // row u of proj: coefficient of v[j] in (v - sum_i v[p_i] row_i)[c]
      for (std::size_t j = 0; j < t.kdim; ++j) {
        auto val = f.zero();
        if (j == c) val = f.one();
        if (is_pivot[j]) {
          // j = p_i for exactly one i
          for (std::size_t i = 0; i < rr.rank; ++i)
            if (rr.pivots[i] == j) { val = val - rr.m.at(i, c); break; }
        }
        t.proj.at(u, j) = val;
      }
      t.sect.at(c, u) = f.one();
      ++u;
    }
  }

  t.quotient.f = f;
  t.quotient.A = left->A;
  t.quotient.B = right->B;
  t.quotient.dim = q;
  auto IL = Mat<F>::identity(f, left->dim);
  auto IR = Mat<F>::identity(f, right->dim);
  t.quotient.lact = Mat<F>(f, q, left->A->dim * q);
  for (std::size_t i = 0; i < left->A->dim; ++i) {
    auto e = Mat<F>::unit_col(f, left->A->dim, i);
    auto act = t.proj * kron(left->lmat(e), IR) * t.sect;
    for (std::size_t u = 0; u < q; ++u)
      for (std::size_t r2 = 0; r2 < q; ++r2) t.quotient.lact.at(r2, i * q + u) = act.at(r2, u);
  }
  t.quotient.ract = Mat<F>(f, q, q * right->B->dim);
  for (std::size_t j = 0; j < right->B->dim; ++j) {
    auto e = Mat<F>::unit_col(f, right->B->dim, j);
    auto act = t.proj * kron(IL, right->rmat(e)) * t.sect;
    for (std::size_t u = 0; u < q; ++u)
      for (std::size_t r2 = 0; r2 < q; ++r2)
        t.quotient.ract.at(r2, u * right->B->dim + j) = act.at(r2, u);
  }
  t.quotient.label = left->label + "(x)" + right->label;
  return t;
}

// map induced on quotients by a pair of maps linear over the middle algebra
template <class F>
Mat<F> induced_map(const RelTensor<F>& src, const RelTensor<F>& dst, const Mat<F>& fmap,
                   const Mat<F>& gmap) {
  return dst.proj * kron(fmap, gmap) * src.sect;
}

template <class F>
std::shared_ptr<const Bimodule<F>> share(Bimodule<F> m) {
  return std::make_shared<Bimodule<F>>(std::move(m));
}

template <class F>
std::shared_ptr<const Algebra<F>> share_alg(Algebra<F> a) {
  return std::make_shared<Algebra<F>>(std::move(a));
}

// comparison M1 (x) (M2 (x) M3) -> (M1 (x) M2) (x) M3; on flat k-tensors the
// regrouping is the identity reindexing, so the comparison is a section/projection
// sandwich; callers verify bijectivity by rank
template <class F>
Mat<F> regroup(const RelTensor<F>& t12, const RelTensor<F>& left_t, const RelTensor<F>& t23,
               const RelTensor<F>& right_t) {
  auto f = t12.f;
  auto I1 = Mat<F>::identity(f, t12.left->dim);
  auto I3 = Mat<F>::identity(f, t23.right->dim);
  return left_t.proj * kron(t12.proj, I3) * kron(I1, t23.sect) * right_t.sect;
}

}  // namespace corings
