#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sj/catalog.hpp"
#include "sj/superalgebra.hpp"

using namespace sj;

namespace {
Vec<Rational> ei(int i, int n) {
  Vec<Rational> v = zero_vec<Rational>(n);
  v[i] = 1;
  return v;
}
}  // namespace

TEST_CASE("builder rejects grading violations") {
  SuperalgebraBuilder b("bad", {0, 1}, Rational(1));
  CHECK_THROWS_AS(b.add(0, 1, 0, Rational(1)), algebra_error);  // even*odd -> even
  b.add(0, 0, 0, Rational(1));
  b.add(1, 1, 0, Rational(1));
  CHECK_NOTHROW(b.build());
}

TEST_CASE("jordan axioms hold for the small catalog and fail for fixtures") {
  CHECK(check_jordan_super(kaplansky()).pass);
  CHECK(check_jordan_super(d_t(Rational(-3, 2))).pass);
  CHECK(check_jordan_super(superform_algebra(2, 1)).pass);
  for (const auto& f : corrupted_fixtures()) {
    auto rep = check_jordan_super(f);
    CHECK(!rep.pass);
    CHECK(!rep.detail.empty());
  }
}

TEST_CASE("plus algebra of M_{1,1}") {
  auto a = matrix_superalgebra(1, 1);
  auto j = plus_algebra(a);
  // e12 o e21 = (e12 e21 - e21 e12)/2 = (e11 - e22)/2, both factors odd
  Vec<Rational> p = j.prod_vec(1, 2);
  CHECK(p[0] == Rational(1, 2));
  CHECK(p[3] == Rational(-1, 2));
  CHECK(p[1] == 0);
  CHECK(check_jordan_super(j).pass);
  CHECK(j.realization.has_value());
}

TEST_CASE("plus algebra of a commutative all-even algebra is itself") {
  SuperalgebraBuilder b("f2", {0, 0}, Rational(1));
  b.add(0, 0, 0, Rational(1));
  b.add(1, 1, 1, Rational(1));
  auto a = b.build();
  auto j = plus_algebra(a);
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k) CHECK(j.prod_vec(i, k) == a.prod_vec(i, k));
}

TEST_CASE("plus algebra requires associativity") {
  CHECK_THROWS_AS(plus_algebra(kaplansky()), not_associative);
}

TEST_CASE("associativity checks") {
  CHECK(check_associative(matrix_superalgebra(2, 1)).pass);
  CHECK(check_associative(q_n(2)).pass);
  CHECK(check_associative(grassmann(4)).pass);
  CHECK(!check_associative(kaplansky()).pass);
}

TEST_CASE("unit detection") {
  CHECK(!kaplansky().unit().has_value());
  auto d = d_t(3);
  auto u = d.unit();
  REQUIRE(u.has_value());
  CHECK((*u)[0] == 1);
  CHECK((*u)[1] == 1);  // e + f
}

TEST_CASE("superinvolutions validate") {
  for (int n : {1, 2, 3})
    CHECK(check_superinvolution(matrix_superalgebra(n, n),
                                transpose_superinvolution(n))
              .pass);
  for (auto [n, m] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {3, 1}, {2, 2}})
    CHECK(check_superinvolution(matrix_superalgebra(n, 2 * m),
                                orthosymplectic_superinvolution(n, m))
              .pass);
  // parity-breaking map is rejected
  auto a = matrix_superalgebra(1, 1);
  Matrix<Rational> swap(4, 4);
  swap(1, 0) = 1;
  swap(0, 1) = 1;
  swap(2, 2) = 1;
  swap(3, 3) = 1;
  CHECK(!check_superinvolution(a, {"bad", swap}).pass);
}

TEST_CASE("hermitian part dimensions") {
  auto p2 = hermitian_part(matrix_superalgebra(2, 2), transpose_superinvolution(2));
  CHECK(p2.algebra.dim() == 8);  // 2n^2
  CHECK(check_jordan_super(p2.algebra).pass);
  auto o12 = hermitian_part(matrix_superalgebra(1, 2),
                            orthosymplectic_superinvolution(1, 1));
  CHECK(o12.algebra.dim() == 4);
  int even = 0, odd = 0;
  for (int i = 0; i < o12.algebra.dim(); ++i)
    (o12.algebra.parity(i) ? odd : even)++;
  CHECK(even == 2);
  CHECK(odd == 2);
  // fixed + skew fill the ambient algebra
  CHECK(o12.fixed.dim() + o12.skew.dim() == 9);
}

TEST_CASE("transpose superinvolution of p(1) leaves a 1|1 hermitian part") {
  auto h = hermitian_part(matrix_superalgebra(1, 1), transpose_superinvolution(1));
  CHECK(h.algebra.dim() == 2);
  CHECK(h.algebra.parity(0) + h.algebra.parity(1) == 1);
}

TEST_CASE("peirce decomposition of M_{1,1}+ at e11") {
  auto j = plus_algebra(matrix_superalgebra(1, 1));
  auto pd = peirce_decompose(j, ei(0, 4));
  CHECK(pd.one_part.dim() == 1);
  CHECK(pd.half_part.dim() == 2);
  CHECK(pd.half_part.odd_dim() == 2);
  CHECK(pd.zero_part.dim() == 1);
  // the unit has no 1/2 or 0 part
  auto unit = *j.unit();
  auto pdu = peirce_decompose(j, unit);
  CHECK(pdu.one_part.dim() == 4);
  CHECK(pdu.half_part.dim() == 0);
  // a non-idempotent is an error
  CHECK_THROWS_AS(peirce_decompose(j, ei(1, 4)), not_idempotent);
}

TEST_CASE("graded ideals and nilpotency") {
  auto j = plus_algebra(matrix_superalgebra(1, 1));
  // B = span{e11, e22, e12+e21}; rad = span{e12+e21} is an ideal of B
  Vec<Rational> w = zero_vec<Rational>(4);
  w[1] = 1;
  w[2] = 1;
  std::vector<Vec<Rational>> gens = {ei(0, 4), ei(3, 4), w};
  auto b = subalgebra_view(j, span_of_homogeneous(gens, j.parities), "B");
  GradedSubspace<Rational> rad(b.algebra.dim(), b.algebra.parities);
  // w is the third generator in B coordinates
  rad.add_homogeneous(ei(2, 3));
  CHECK(is_graded_ideal(b.algebra, rad));
  auto idx = nilpotency_index(b.algebra, rad);
  REQUIRE(idx.has_value());
  CHECK(*idx == 2);
  // the even part of J is not an ideal of J
  GradedSubspace<Rational> ev(4, j.parities);
  ev.add_homogeneous(ei(0, 4));
  ev.add_homogeneous(ei(3, 4));
  CHECK(!is_graded_ideal(j, ev));
  CHECK_THROWS_AS(nilpotency_index(j, ev), not_an_ideal);
}

TEST_CASE("grassmann envelope dimensions and checks") {
  auto g2 = grassmann(2);
  auto env = grassmann_envelope(g2, kaplansky());
  // J0 (x) G0 + J1 (x) G1 = 1*2 + 2*2
  CHECK(env.dim() == 6);
  CHECK(envelope_jordan_check(env, 50, 1).pass);
  CHECK(grassmann_envelope_check(kaplansky()).pass);
  CHECK(grassmann_envelope_check(d_t(2)).pass);
  for (const auto& f : corrupted_fixtures())
    CHECK(!grassmann_envelope_check(f).pass);
}

TEST_CASE("matrix trace through the realization") {
  auto a = matrix_superalgebra(2, 1);
  CHECK(matrix_trace(a, ei(0, 9)) == 1);
  auto u = *a.unit();
  CHECK(matrix_trace(a, u) == 3);
}

TEST_CASE("graded homomorphism check catches sign errors") {
  auto d = d_t(1);
  auto s = superform_algebra(1, 1);
  auto good = fixture_d1_superform();
  CHECK(check_graded_hom(good.src, good.tgt, good.map, true).pass);
  // breaking one image entry must fail
  auto bad = good.map;
  bad.mat(0, 0) += 1;
  CHECK(!check_graded_hom(d, s, bad, true).pass);
}

TEST_CASE("mod-p reduction of an algebra keeps the axioms") {
  auto k3p = reduce_mod_p(kaplansky(), 7);
  CHECK(check_jordan_super(k3p).pass);
  auto mp = reduce_mod_p(matrix_superalgebra(1, 1), 5);
  CHECK(check_associative(mp).pass);
}
