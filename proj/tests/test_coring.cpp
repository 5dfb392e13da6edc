#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "corings/coring.hpp"

using namespace corings;

TEST_CASE("trivial corings satisfy the axioms") {
  QField f;
  FpField f3{3};
  CHECK(check_coring(trivial_coring(share_alg(matrix_algebra(f, 2)))).ok());
  CHECK(check_coring(trivial_coring(share_alg(group_algebra(f, cyclic_group(2))))).ok());
  CHECK(check_coring(trivial_coring(share_alg(matrix_algebra(f3, 2)))).ok());
}

TEST_CASE("grouplike corings: points are grouplike") {
  QField f;
  auto a = share_alg(group_algebra(f, cyclic_group(2)));
  auto c = grouplike_coring(a, 2);
  CHECK(c.dim() == 4);
  CHECK(check_coring(c).ok());

  for (std::size_t x = 0; x < 2; ++x) {
    Mat<QField> g(f, 4, 1);
    for (std::size_t t = 0; t < 2; ++t)
      g.at(t * 2 + x, 0) = a->unit.at(t, 0);
    CHECK(c.delta * g == c.CC->pure(g, g));
    CHECK(c.eps * g == a->unit);
  }

  FpField f3{3};
  auto c3 = grouplike_coring(share_alg(field_algebra(f3)), 2);
  CHECK(check_coring(c3).ok());
}

TEST_CASE("matrix coring over the rationals") {
  QField f;
  auto c = matrix_coring(share_alg(field_algebra(f)), 2);
  CHECK(c.dim() == 4);
  CHECK(check_coring(c).ok());
  CHECK(c.CC->qdim() == 16);

  // counit picks out the trace pattern: eps(e_ij) = delta_ij
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      auto v = c.eps * Mat<QField>::unit_col(f, 4, i * 2 + j);
      CHECK(v.is_zero() == (i != j));
    }
}

TEST_CASE("perturbed counit is rejected") {
  QField f;
  auto c = trivial_coring(share_alg(group_algebra(f, cyclic_group(2))));
  auto bad = c;
  bad.eps.at(0, 1) = bad.eps.at(0, 1) + f.one();
  CHECK(!check_coring(bad).ok());
}

TEST_CASE("opposite and tensor corings") {
  QField f;
  auto c = matrix_coring(share_alg(field_algebra(f)), 2);
  CHECK(check_coring(opposite_coring(c)).ok());

  auto d = trivial_coring(share_alg(group_algebra(f, cyclic_group(2))));
  auto t = tensor_coring(c, d);
  CHECK(t.dim() == 8);
  CHECK(check_coring(t).ok());
}

TEST_CASE("base extension along a ring map") {
  QField f;
  auto k = share_alg(field_algebra(f));
  auto m2 = share_alg(matrix_algebra(f, 2));
  // unit embedding Q -> M2
  Mat<QField> rho(f, 4, 1);
  rho.at(0, 0) = f.one();
  rho.at(3, 0) = f.one();
  auto sw = base_extension_coring(trivial_coring(k), m2, rho);
  CHECK(sw.dim() == 16);
  CHECK(check_coring(sw).ok());
}

TEST_CASE("identity and reindexing coring morphisms") {
  QField f;
  auto a = share_alg(group_algebra(f, cyclic_group(2)));
  auto c = trivial_coring(a);
  CHECK(check_coring_morphism(c, c, Mat<QField>::identity(f, 2)).ok());

  // a single point grouplike coring is the trivial coring
  auto g1 = grouplike_coring(a, 1);
  CHECK(check_coring_morphism(c, g1, Mat<QField>::identity(f, 2)).ok());

  // swapping the two points of a grouplike coring is an automorphism
  auto g2 = grouplike_coring(a, 2);
  Mat<QField> swp(f, 4, 4);
  for (std::size_t t = 0; t < 2; ++t) {
    swp.at(t * 2 + 1, t * 2 + 0) = f.one();
    swp.at(t * 2 + 0, t * 2 + 1) = f.one();
  }
  CHECK(check_coring_morphism(g2, g2, swp).ok());
}

TEST_CASE("comatrix coring of a finitely generated projective module") {
  QField f;
  auto m2 = share_alg(matrix_algebra(f, 2));
  // rows: e_m . e_kl = delta_mk e_l, a projective right M2-module
  Mat<QField> ract(f, 2, 2 * 4);
  for (std::size_t m = 0; m < 2; ++m)
    for (std::size_t l = 0; l < 2; ++l) ract.at(l, m * 4 + m * 2 + l) = f.one();
  auto rows = right_module(m2, ract, "rows");

  auto cm = comatrix_coring(rows);
  CHECK(check_coring(cm.coring).ok());
  CHECK(cm.coring.A->dim == 4);

  auto qc2 = share_alg(group_algebra(f, cyclic_group(2)));
  auto fr = free_right_module(qc2, 2);
  auto cm2 = comatrix_coring(fr);
  CHECK(cm2.coring.dim() == 16);
  CHECK(check_coring(cm2.coring).ok());

  // non-projective input is refused
  QField fq;
  Algebra<QField> dn;
  dn.f = fq;
  dn.dim = 2;
  dn.mult = Mat<QField>(fq, 2, 4);
  dn.mult.at(0, 0) = fq.one();
  dn.mult.at(1, 1) = fq.one();
  dn.mult.at(1, 2) = fq.one();
  dn.unit = Mat<QField>::unit_col(fq, 2, 0);
  auto a2 = share_alg(std::move(dn));
  Mat<QField> qr(fq, 1, 2);
  qr.at(0, 0) = fq.one();
  CHECK_THROWS(comatrix_coring(right_module(a2, qr)));
}
