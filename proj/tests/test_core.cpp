#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "corings/linalg.hpp"
#include "corings/matrix.hpp"
#include "corings/rng.hpp"
#include "corings/scalar.hpp"

using namespace corings;

namespace {

template <class F>
Mat<F> random_mat(F f, std::size_t r, std::size_t c, Rng& rng) {
  Mat<F> m(f, r, c);
  for (auto& v : m.a) v = f.from_long(rng.range(-4, 4));
  return m;
}

template <class F>
Mat<F> parse_mat(F f, std::size_t r, std::size_t c,
                 std::initializer_list<const char*> entries) {
  Mat<F> m(f, r, c);
  std::size_t i = 0;
  for (auto* s : entries) m.a[i++] = f.parse(s);
  return m;
}

}  // namespace

TEST_CASE("rational canonical form") {
  QField q;
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(-6, 4) == Rat(3, -2));
  CHECK(q.parse("-6/4").str() == "-3/2");
  CHECK(q.parse("7").str() == "7");
  CHECK(Rat(3, 7) + Rat(4, 7) == Rat(1));
  CHECK(Rat(1, 2) * Rat(2, 3) == Rat(1, 3));
  CHECK(inv(Rat(-5, 3)) == Rat(-3, 5));
  CHECK_THROWS(q.parse("1/0"));
  CHECK_THROWS(q.parse("x"));
}

TEST_CASE("prime field arithmetic") {
  FpField f{7};
  CHECK(f.from_long(3) + f.from_long(5) == f.from_long(1));
  CHECK(f.from_long(3) * f.from_long(5) == f.from_long(1));
  CHECK(inv(f.from_long(3)) == f.from_long(5));
  CHECK(-f.from_long(2) == f.from_long(5));
  CHECK(f.parse("-1") == f.from_long(6));
  CHECK(f.parse("23") == f.from_long(2));
  CHECK(f.parse("1/3") == f.from_long(5));
  CHECK_THROWS(f.parse("1/7"));
  CHECK_THROWS(inv(f.zero()));
  FpField g{5};
  CHECK_THROWS(f.from_long(1) + g.from_long(1));
}

TEST_CASE("rref canonical example") {
  QField q;
  auto m = parse_mat(q, 2, 3, {"0", "2", "4", "1", "1", "1"});
  auto rr = rref(m);
  CHECK(rr.rank == 2);
  CHECK(rr.pivots == std::vector<std::size_t>{0, 1});
  auto expect = parse_mat(q, 2, 3, {"1", "0", "-1", "0", "1", "2"});
  CHECK(rr.m == expect);
  // idempotent
  CHECK(rref(rr.m).m == rr.m);
}

TEST_CASE("rank nullity and kernel membership") {
  QField q;
  FpField f5{5};
  Rng rng(42);
  for (int t = 0; t < 30; ++t) {
    std::size_t r = 1 + rng.below(5), c = 1 + rng.below(5);
    auto m = random_mat(q, r, c, rng);
    auto k = kernel(m);
    CHECK(rank(m) + k.dim() == c);
    if (k.dim() > 0) CHECK((m * k.basis).is_zero());
    auto mf = random_mat(f5, r, c, rng);
    auto kf = kernel(mf);
    CHECK(rank(mf) + kf.dim() == c);
    if (kf.dim() > 0) CHECK((mf * kf.basis).is_zero());
  }
}

TEST_CASE("solve and inverse") {
  QField q;
  auto A = parse_mat(q, 2, 2, {"1", "2", "3", "4"});
  auto b = parse_mat(q, 2, 1, {"5", "11"});
  auto x = solve_linear(A, b);
  REQUIRE(x.has_value());
  CHECK(A * *x == b);
  CHECK(*x == parse_mat(q, 2, 1, {"1", "2"}));

  auto S = parse_mat(q, 2, 2, {"1", "1", "1", "1"});
  CHECK(!solve_linear(S, parse_mat(q, 2, 1, {"0", "1"})).has_value());
  CHECK(!inverse(S).has_value());

  auto U = parse_mat(q, 2, 2, {"1", "1", "0", "1"});
  auto Ui = inverse(U);
  REQUIRE(Ui.has_value());
  CHECK(*Ui == parse_mat(q, 2, 2, {"1", "-1", "0", "1"}));
  CHECK(U * *Ui == Mat<QField>::identity(q, 2));
}

TEST_CASE("kernel canonical basis") {
  QField q;
  auto m = parse_mat(q, 1, 2, {"1", "1"});
  auto k = kernel(m);
  CHECK(k.dim() == 1);
  CHECK(k.basis == parse_mat(q, 2, 1, {"1", "-1"}));
}

TEST_CASE("subspace canonicalization is generator independent") {
  QField q;
  auto g1 = parse_mat(q, 3, 2, {"1", "0", "1", "1", "0", "1"});
  auto g2 = parse_mat(q, 3, 3, {"2", "0", "1", "3", "1", "2", "1", "1", "1"});
  // both span the same plane
  auto s1 = span_of_columns(g1);
  auto s2 = span_of_columns(g2);
  CHECK(s1.dim() == 2);
  CHECK(same_space(s1, s2));
  CHECK(s1.basis == s2.basis);
  // idempotent under recanonicalization
  CHECK(span_of_columns(s1.basis).basis == s1.basis);
}

TEST_CASE("subspace lattice operations") {
  QField q;
  auto e = Mat<QField>::identity(q, 3);
  auto s12 = span_of_columns(hstack(e.col(0), e.col(1)));
  auto s23 = span_of_columns(hstack(e.col(1), e.col(2)));
  auto both = intersect(s12, s23);
  CHECK(both.dim() == 1);
  CHECK(both.basis == e.col(1));
  CHECK(sum(s12, s23).dim() == 3);
  CHECK(contains(s12, e.col(0)));
  CHECK(!contains(s12, e.col(2)));
}

TEST_CASE("kron flattening identity") {
  QField q;
  FpField f7{7};
  Rng rng(7);
  for (int t = 0; t < 10; ++t) {
    auto A = random_mat(q, 2 + rng.below(2), 2 + rng.below(2), rng);
    auto X = random_mat(q, A.cols, 2 + rng.below(2), rng);
    auto B = random_mat(q, X.cols, 2 + rng.below(2), rng);
    CHECK(vec_rm(A * X * B) == sandwich(A, B) * vec_rm(X));
    auto Af = random_mat(f7, 2, 3, rng);
    auto Xf = random_mat(f7, 3, 2, rng);
    auto Bf = random_mat(f7, 2, 2, rng);
    CHECK(vec_rm(Af * Xf * Bf) == sandwich(Af, Bf) * vec_rm(Xf));
  }
}

TEST_CASE("kron associativity as flat reindexing") {
  QField q;
  Rng rng(11);
  auto A = random_mat(q, 2, 2, rng);
  auto B = random_mat(q, 3, 2, rng);
  auto C = random_mat(q, 2, 3, rng);
  CHECK(kron(kron(A, B), C) == kron(A, kron(B, C)));
}
