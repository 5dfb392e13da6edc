#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "corings/entwining.hpp"

using namespace corings;

namespace {

EntwiningStructure<QField> graded_c2() {
  QField f;
  auto c2 = cyclic_group(2);
  return graded_entwining(group_graded(f, c2), regular_gset(c2));
}

// coalgebra on two points with Delta(x) = x (x) x but Delta(y) = y (x) x
template <class F>
Coring<F> lopsided_coalgebra(F f) {
  auto s = scalar_algebra(f);
  Bimodule<F> m;
  m.f = f;
  m.A = s;
  m.B = s;
  m.dim = 2;
  m.lact = Mat<F>::identity(f, 2);
  m.ract = Mat<F>::identity(f, 2);
  m.label = "lopsided";
  auto carrier = share(std::move(m));
  auto cc = tensor_over(carrier, carrier);
  Mat<F> delta(f, cc.qdim(), 2), eps(f, 1, 2);
  delta.set_col(0, cc.pure(Mat<F>::unit_col(f, 2, 0), Mat<F>::unit_col(f, 2, 0)));
  delta.set_col(1, cc.pure(Mat<F>::unit_col(f, 2, 1), Mat<F>::unit_col(f, 2, 0)));
  eps.at(0, 0) = f.one();
  eps.at(0, 1) = f.one();
  return make_coring(carrier, std::move(delta), std::move(eps), "lopsided coalgebra");
}

// permutation matrix sending g to its group inverse
template <class F>
Mat<F> inversion_matrix(F f, const Group& g) {
  Mat<F> s(f, g.n, g.n);
  for (std::size_t i = 0; i < g.n; ++i) s.at(g.inv(i), i) = f.one();
  return s;
}

}  // namespace

TEST_CASE("entwining axioms: graded and twist structures pass, perturbations are localized") {
  QField f;
  auto e = graded_c2();
  auto r = check_entwining(e);
  CHECK(r.ok());

  // psi(x_m (x) a_i) = a_i (x) x_{m+i} on the group basis of QC2
  for (std::size_t m = 0; m < 2; ++m)
    for (std::size_t i = 0; i < 2; ++i) {
      CHECK(e.psi.at(i * 2 + (m + i) % 2, m * 2 + i) == f.one());
      CHECK(e.psi.at(i * 2 + (m + i + 1) % 2, m * 2 + i) == f.zero());
    }

  auto qc2 = share_alg(group_algebra(f, cyclic_group(2)));
  auto tw = twist_entwining(qc2, set_coalgebra(f, 2));
  CHECK(check_entwining(tw).ok());

  auto bad = e;
  bad.psi.at(0, 1) = bad.psi.at(0, 1) + f.one();
  auto rb = check_entwining(bad);
  CHECK_FALSE(rb.ok());
  bool localized = false;
  for (const auto& issue : rb.issues)
    if (issue.find("fails at input column") != std::string::npos) localized = true;
  CHECK(localized);
}

TEST_CASE("takeuchi assembly: graded entwinings give corings, the scalar twist returns the coalgebra") {
  QField f;
  auto e = graded_c2();
  auto t = takeuchi_coring(e);
  CHECK(t.dim() == 4);
  CHECK(check_coring(t).ok());

  // left action is multiplication on the first factor
  CHECK(t.C->lact == kron(e.A->mult, Mat<QField>::identity(f, 2)));

  auto one = scalar_algebra(f);
  auto c3 = set_coalgebra(f, 3);
  auto tw = twist_entwining(one, c3);
  CHECK(tw.psi == Mat<QField>::identity(f, 3));
  auto t0 = takeuchi_coring(tw);
  CHECK(t0.dim() == 3);
  CHECK(t0.CC->sect * t0.delta == c3.CC->sect * c3.delta);
  CHECK(t0.eps == c3.eps);

  auto bad = e;
  bad.psi.at(2, 0) = bad.psi.at(2, 0) + f.one();
  CHECK_THROWS_AS(takeuchi_coring(bad), std::logic_error);
}

TEST_CASE("takeuchi bidirectionality: axiom verdicts agree with assembled coring verdicts") {
  QField f;
  auto e = graded_c2();
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Rng rng{seed};
    auto bad = e;
    auto row = rng.below(4), col = rng.below(4);
    bad.psi.at(row, col) = bad.psi.at(row, col) + f.from_long(rng.range(1, 3));
    bool axioms_ok = check_entwining(bad).ok();
    auto assembled = assemble_takeuchi(bad);
    bool coring_ok = check_coring(assembled).ok();
    CHECK(axioms_ok == coring_ok);
    CHECK_FALSE(axioms_ok);
  }
}

TEST_CASE("recovery: the takeuchi action determines psi bit for bit") {
  QField f;
  auto e = graded_c2();
  auto t = takeuchi_coring(e);
  auto rec = coring_from_data_recovers_entwining(e.A, e.C, t.C->ract);
  REQUIRE(rec.has_value());
  CHECK(rec->psi == e.psi);

  // a different valid action on the same carrier recovers its own psi
  auto tw = twist_entwining(e.A, e.C);
  auto t2 = takeuchi_coring(tw);
  auto rec2 = coring_from_data_recovers_entwining(e.A, e.C, t2.C->ract);
  REQUIRE(rec2.has_value());
  CHECK(rec2->psi == tw.psi);
  CHECK_FALSE(rec2->psi == e.psi);

  auto broken = t.C->ract;
  broken.at(1, 3) = broken.at(1, 3) + f.one();
  CHECK_FALSE(coring_from_data_recovers_entwining(e.A, e.C, broken).has_value());

  Mat<QField> wrong_shape(f, 4, 4);
  CHECK_FALSE(coring_from_data_recovers_entwining(e.A, e.C, wrong_shape).has_value());
}

TEST_CASE("bialgebras: group bialgebras are Hopf, a lopsided comultiplication is rejected") {
  QField f;
  auto h2 = group_bialgebra(f, cyclic_group(2));
  CHECK(check_bialgebra(h2).ok());
  auto s2 = find_antipode(h2);
  REQUIRE(s2.has_value());
  CHECK(*s2 == Mat<QField>::identity(f, 2));
  CHECK(check_bialgebra(h2, &*s2).ok());

  auto c3 = cyclic_group(3);
  auto h3 = group_bialgebra(f, c3);
  auto s3 = find_antipode(h3);
  REQUIRE(s3.has_value());
  CHECK(*s3 == inversion_matrix(f, c3));
  CHECK(check_bialgebra(h3, &*s3).ok());
  auto wrong = Mat<QField>::identity(f, 3);
  CHECK_FALSE(check_bialgebra(h3, &wrong).ok());

  FpField f7{7};
  auto sym = symmetric_group(3);
  auto hs = group_bialgebra(f7, sym);
  CHECK(check_bialgebra(hs).ok());
  auto ss = find_antipode(hs);
  REQUIRE(ss.has_value());
  CHECK(*ss == inversion_matrix(f7, sym));
  CHECK(check_bialgebra(hs, &*ss).ok());

  Bialgebra<QField> broken;
  broken.alg = share_alg(group_algebra(f, cyclic_group(2)));
  broken.coalg = lopsided_coalgebra(f);
  broken.label = "broken kC2";
  CHECK_FALSE(check_bialgebra(broken).ok());
}

TEST_CASE("doi-koppinen data entwine: graded, trivial bialgebra and modular cases") {
  QField f;
  auto c2 = cyclic_group(2);

  DKStructure<QField> dk;
  dk.H = group_bialgebra(f, c2);
  dk.A = dk.H.alg;
  Mat<QField> rho(f, 4, 2);
  for (std::size_t i = 0; i < 2; ++i) rho.at(i * 2 + i, i) = f.one();
  dk.coaction = rho;
  dk.C = set_coalgebra(f, 2);
  Mat<QField> act(f, 2, 4);
  for (std::size_t x = 0; x < 2; ++x)
    for (std::size_t g = 0; g < 2; ++g) act.at((x + g) % 2, x * 2 + g) = f.one();
  dk.action = act;
  dk.label = "graded dk";
  CHECK(check_dk(dk).ok());
  auto ent = dk_to_entwining(dk);
  CHECK(check_entwining(ent).ok());
  CHECK(ent.psi == graded_c2().psi);

  // trivial bialgebra: the induced entwining is the flip
  DKStructure<QField> triv;
  triv.H = group_bialgebra(f, cyclic_group(1));
  triv.A = share_alg(matrix_algebra(f, 2));
  triv.coaction = Mat<QField>::identity(f, 4);
  triv.C = set_coalgebra(f, 2);
  triv.action = Mat<QField>::identity(f, 2);
  CHECK(check_dk(triv).ok());
  CHECK(dk_to_entwining(triv).psi == swap_mat(f, 2, 4));

  FpField f5{5};
  DKStructure<FpField> mod;
  mod.H = group_bialgebra(f5, c2);
  mod.A = mod.H.alg;
  Mat<FpField> rho5(f5, 4, 2);
  for (std::size_t i = 0; i < 2; ++i) rho5.at(i * 2 + i, i) = f5.one();
  mod.coaction = rho5;
  mod.C = set_coalgebra(f5, 2);
  Mat<FpField> act5(f5, 2, 4);
  for (std::size_t x = 0; x < 2; ++x)
    for (std::size_t g = 0; g < 2; ++g) act5.at((x + g) % 2, x * 2 + g) = f5.one();
  mod.action = act5;
  CHECK(check_dk(mod).ok());
  auto ent5 = dk_to_entwining(mod);
  CHECK(check_entwining(ent5).ok());
  auto graded5 = graded_entwining(group_graded(f5, c2), regular_gset(c2));
  CHECK(ent5.psi == graded5.psi);

  auto bad = dk;
  bad.action.at(0, 0) = bad.action.at(0, 0) + f.one();
  CHECK_FALSE(check_dk(bad).ok());
  CHECK_THROWS_AS(dk_to_entwining(bad), std::logic_error);
}
