#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "corings/convolution.hpp"

using namespace corings;

TEST_CASE("duals of the trivial coring over M2") {
  QField f;
  auto m2 = share_alg(matrix_algebra(f, 2));
  auto c = share_coring(trivial_coring(m2));

  auto dr = dual_algebra(c, DualVariant::Right);
  auto dl = dual_algebra(c, DualVariant::Left);
  CHECK(dr.alg.dim == 4);
  CHECK(dl.alg.dim == 4);
  CHECK(dr.alg.check().ok());
  CHECK(dl.alg.check().ok());

  // a -> eps(a.-) and a -> eps(-.a) are bijective anti-morphisms
  CHECK(check_unit_antimorphisms(c).ok());
  CHECK(rank(unit_antimorphism(dr)) == 4);
  CHECK(rank(unit_antimorphism(dl)) == 4);

  // composing the left map with the transpose anti-automorphism gives a
  // genuine isomorphism of the base algebra onto the left dual
  Mat<QField> tr(f, 4, 4);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) tr.at(j * 2 + i, i * 2 + j) = f.one();
  auto sigma = unit_antimorphism(dl) * tr;
  CHECK(check_algebra_morphism(*m2, dl.alg, sigma, false).ok());
  CHECK(rank(sigma) == 4);
}

TEST_CASE("grouplike duals are pointwise function algebras") {
  QField f;
  auto c = share_coring(grouplike_coring(share_alg(field_algebra(f)), 2));
  auto dr = dual_algebra(c, DualVariant::Right);
  auto dl = dual_algebra(c, DualVariant::Left);
  auto db = dual_algebra(c, DualVariant::Bi);
  CHECK(dr.alg.dim == 2);
  CHECK(dr.alg.check().ok());

  // over the ground field all three duals are the same subspace
  CHECK(same_space(dr.space, dl.space));
  CHECK(same_space(dr.space, db.space));

  // pointwise product: basis functionals are orthogonal idempotents
  for (std::size_t u = 0; u < 2; ++u)
    for (std::size_t w = 0; w < 2; ++w) {
      auto prod = dr.alg.mul(Mat<QField>::unit_col(f, 2, u), Mat<QField>::unit_col(f, 2, w));
      if (u == w)
        CHECK(prod == Mat<QField>::unit_col(f, 2, u));
      else
        CHECK(prod.is_zero());
    }

  // inverses are pointwise reciprocals and vanish on a zero value
  Mat<QField> p(f, 2, 1);
  p.at(0, 0) = f.from_long(2);
  p.at(1, 0) = f.from_long(3);
  auto q = convolution_invert(dr, p);
  REQUIRE(q.has_value());
  CHECK(dr.alg.mul(p, *q) == dr.alg.unit);
  CHECK(dr.alg.mul(*q, p) == dr.alg.unit);

  Mat<QField> z(f, 2, 1);
  z.at(1, 0) = f.one();
  CHECK(!convolution_invert(dr, z).has_value());
  CHECK(convolution_invert(dr, dr.alg.unit).has_value());
}

TEST_CASE("bidual embeds in both one-sided duals with matching products") {
  QField f;
  auto c = share_coring(trivial_coring(share_alg(matrix_algebra(f, 2))));
  auto db = dual_algebra(c, DualVariant::Bi);
  auto dr = dual_algebra(c, DualVariant::Right);
  auto dl = dual_algebra(c, DualVariant::Left);
  CHECK(db.alg.dim == 1);
  for (std::size_t u = 0; u < db.alg.dim; ++u) {
    CHECK(contains(dr.space, db.space.basis.col(u)));
    CHECK(contains(dl.space, db.space.basis.col(u)));
    for (std::size_t w = 0; w < db.alg.dim; ++w) {
      auto fu = db.functional(u), fw = db.functional(w);
      auto bi = convolution_matrix(*c, fu, fw, DualVariant::Bi);
      CHECK(bi == convolution_matrix(*c, fu, fw, DualVariant::Right));
      CHECK(bi == convolution_matrix(*c, fu, fw, DualVariant::Left));
    }
  }
}

TEST_CASE("endomorphism ring against the right dual") {
  QField f;
  auto triv = share_coring(trivial_coring(share_alg(matrix_algebra(f, 2))));
  auto e1 = end_ring_iso(triv);
  CHECK(e1.report.ok());
  CHECK(e1.end_alg.dim == 4);
  CHECK(e1.end_alg.check().ok());

  auto grp = share_coring(grouplike_coring(share_alg(field_algebra(f)), 2));
  auto e2 = end_ring_iso(grp);
  CHECK(e2.report.ok());
  CHECK(e2.end_alg.dim == 2);

  auto mc = share_coring(matrix_coring(share_alg(field_algebra(f)), 2));
  auto e3 = end_ring_iso(mc);
  CHECK(e3.report.ok());
  CHECK(e3.end_alg.dim == 4);
  CHECK(e3.dual.alg.check().ok());
}

TEST_CASE("duals over a prime field") {
  FpField f3{3};
  auto c = share_coring(grouplike_coring(share_alg(field_algebra(f3)), 2));
  auto dr = dual_algebra(c, DualVariant::Right);
  CHECK(dr.alg.check().ok());
  CHECK(check_unit_antimorphisms(c).ok());
  CHECK(end_ring_iso(c).report.ok());
}
