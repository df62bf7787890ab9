#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sj/osp.hpp"

#include <algorithm>

using namespace sj;

TEST_CASE("osp(1,2) bracket table and realization") {
  auto o = osp12();
  CHECK(check_lie_super(o.bracket).pass);
  // [h,e] = 2e, [e,f] = h, [x,y] = h, [x,x] = -2e, [y,y] = 2f
  CHECK(o.bracket.prod_vec(0, 1)[1] == 2);
  CHECK(o.bracket.prod_vec(1, 2)[0] == 1);
  CHECK(o.bracket.prod_vec(3, 4)[0] == 1);
  CHECK(o.bracket.prod_vec(3, 3)[1] == -2);
  CHECK(o.bracket.prod_vec(4, 4)[2] == 2);
  // the 3x3 matrices realize the bracket
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b) {
      int pa = a >= 3, pb = b >= 3;
      Matrix<Rational> lie = o.mats[a] * o.mats[b];
      Matrix<Rational> ba = o.mats[b] * o.mats[a];
      lie = (pa && pb) ? lie + ba : lie - ba;
      Matrix<Rational> expect(3, 3);
      Vec<Rational> br = o.bracket.prod_vec(a, b);
      for (int k = 0; k < 5; ++k)
        if (!is_zero(br[k])) expect = expect + br[k] * o.mats[k];
      CHECK(lie == expect);
    }
}

TEST_CASE("V(m) is a representation for m <= 8") {
  for (int m = 0; m <= 8; ++m) {
    INFO("m = " << m);
    CHECK(check_rep(vm_module(m)).pass);
    CHECK(check_rep(vm_module(m, true)).pass);
  }
}

TEST_CASE("rho_h has simple spectrum m..-m") {
  for (int m : {1, 3, 5}) {
    auto mod = vm_module(m);
    std::vector<Rational> diag;
    for (int i = 0; i < mod.dim(); ++i) {
      for (int j = 0; j < mod.dim(); ++j)
        if (i != j) CHECK(mod.rho_h(i, j) == 0);
      diag.push_back(mod.rho_h(i, i));
    }
    std::sort(diag.begin(), diag.end());
    for (int r = 0; r <= 2 * m; ++r) CHECK(diag[r] == r - m);
  }
}

TEST_CASE("minimal polynomial of xy - yx") {
  // X^2 + X - m(m+1), ascending coefficients
  for (int m = 1; m <= 8; ++m) {
    auto mp = minimal_poly_xyyx(vm_module(m));
    REQUIRE(mp.size() == 3);
    CHECK(mp[0] == Rational(-m * (m + 1)));
    CHECK(mp[1] == 1);
    CHECK(mp[2] == 1);
  }
  // sanity: minimal_poly of a projection is X^2 - X
  Matrix<Rational> pr(2, 2);
  pr(0, 0) = 1;
  auto q = minimal_poly(pr);
  REQUIRE(q.size() == 3);
  CHECK(q[0] == 0);
  CHECK(q[1] == -1);
  CHECK(q[2] == 1);
}

TEST_CASE("invariant form: frozen entries for V(2)") {
  auto mod = vm_module(2);
  auto g = vm_form(mod).gram;
  // (e_{2r} | e_{2(m-r)}) = (-1)^r ; (e_{2r+1} | e_{2(m-r)-1}) = (-1)^r
  CHECK(g(0, 4) == 1);
  CHECK(g(2, 2) == -1);
  CHECK(g(4, 0) == 1);
  CHECK(g(1, 3) == 1);
  CHECK(g(3, 1) == -1);
  int nz = 0;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      if (!is_zero(g(i, j))) ++nz;
  CHECK(nz == 5);
}

TEST_CASE("the form makes rho_x and rho_y supersymmetric, uniquely") {
  for (int m = 1; m <= 6; ++m) {
    INFO("m = " << m);
    auto mod = vm_module(m, m % 2 == 1);
    auto form = vm_form(mod);
    CHECK(form_supersymmetric_for(mod, form, mod.rho_x));
    CHECK(form_supersymmetric_for(mod, form, mod.rho_y));
    CHECK(form_solution_space_dim(mod) == 1);
  }
}

TEST_CASE("D_t embeds into End(V(m)) for both parameter choices") {
  for (int m = 1; m <= 5; ++m) {
    for (int which : {0, 1}) {
      INFO("m = " << m << " which = " << which);
      auto emb = embed_dt(m, which);
      Rational expect = which == 0 ? Rational(-m, m + 1) : Rational(-(m + 1), m);
      CHECK(emb.t == expect);
      CHECK(check_graded_hom(d_t(emb.t), emb.target, emb.map, true).pass);
    }
  }
  // frozen oracle for m=1, t=-2: iota(e), iota(f) are the displayed diagonals
  auto e1 = embed_dt(1, 1);
  CHECK(e1.t == -2);
  Matrix<Rational> de(3, 3), df(3, 3);
  de(0, 0) = 1;
  de(2, 2) = 1;
  df(1, 1) = 1;
  CHECK(e1.images[0] == de);
  CHECK(e1.images[1] == df);
}

TEST_CASE("embedding claims: star-fixed images, full closure") {
  for (int m = 1; m <= 5; ++m) {
    for (int which : {0, 1}) {
      INFO("m = " << m << " which = " << which);
      auto claims = verify_embedding_claims(m, which);
      CHECK(claims.report.pass);
      CHECK(claims.hermitian);
      CHECK(claims.closure_dim == (2 * m + 1) * (2 * m + 1));
    }
  }
}

TEST_CASE("peirce obstruction in Q_n+") {
  CHECK(peirce_obstruction_qn(2, 1).pass);
  CHECK(peirce_obstruction_qn(3, 1).pass);
  CHECK(peirce_obstruction_qn(3, 2).pass);
}

TEST_CASE("parameter guards") {
  CHECK_THROWS_AS(vm_module(-1), bad_parameter);
  CHECK_THROWS_AS(embed_dt(0, 0), bad_parameter);
}
