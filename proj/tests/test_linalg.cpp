#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sj/matrix.hpp"
#include "sj/modp.hpp"
#include "sj/rational.hpp"
#include "sj/subspace.hpp"

#include <random>

using namespace sj;

namespace {
const Rational kOne = 1;

Matrix<Rational> mat(std::vector<std::vector<int>> rows) {
  Matrix<Rational> m(static_cast<int>(rows.size()),
                     static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  return m;
}

Vec<Rational> vec(std::vector<int> v) {
  Vec<Rational> r = zero_vec<Rational>(static_cast<int>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i];
  return r;
}
}  // namespace

TEST_CASE("rational parse and print round-trip") {
  CHECK(to_string(parse_rational("-22/4")) == "-11/2");
  CHECK(to_string(parse_rational("7")) == "7");
  CHECK(parse_rational("1/2") + parse_rational("1/3") == Rational(5, 6));
  CHECK_THROWS_AS(parse_rational("1/0"), parse_error);
  CHECK_THROWS_AS(parse_rational("a"), parse_error);
  CHECK_THROWS_AS(parse_rational(""), parse_error);
  CHECK(is_zero(Rational(0)));
  CHECK(!is_zero(Rational(1, 1000000)));
}

TEST_CASE("rref puts rows in pivot order") {
  // frozen oracle: hand Gaussian elimination
  auto m = mat({{0, 1, 1}, {1, 0, 1}});
  auto [r, pivots] = rref(m);
  CHECK(r(0, 0) == 1);
  CHECK(r(0, 1) == 0);
  CHECK(r(0, 2) == 1);
  CHECK(r(1, 0) == 0);
  CHECK(r(1, 1) == 1);
  CHECK(r(1, 2) == 1);
  CHECK(pivots == std::vector<int>{0, 1});
  CHECK(rank(m) == 2);
}

TEST_CASE("rref is a projection") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix<Rational> m(4, 6);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 6; ++j) m(i, j) = d(rng);
    auto r = rref(m).first;
    CHECK(rref(r).first == r);
  }
}

TEST_CASE("nullspace and solve") {
  auto m = mat({{1, 2, 3}, {2, 4, 6}});
  auto ns = nullspace(m, kOne);
  CHECK(ns.size() == 2);
  for (const auto& v : ns) CHECK(vec_is_zero(m.apply(v)));

  auto a = mat({{2, 0}, {0, 3}});
  auto x = solve(a, vec({4, 9}));
  REQUIRE(x.has_value());
  CHECK((*x)[0] == 2);
  CHECK((*x)[1] == 3);
  CHECK(!solve(mat({{1, 1}, {1, 1}}), vec({0, 1})).has_value());
}

TEST_CASE("RowSpan add/contains") {
  RowSpan<Rational> s(3);
  CHECK(s.add(vec({1, 1, 0})));
  CHECK(!s.add(vec({2, 2, 0})));
  CHECK(s.add(vec({0, 0, 1})));
  CHECK(s.dim() == 2);
  CHECK(s.contains(vec({3, 3, 5})));
  CHECK(!s.contains(vec({1, 0, 0})));
}

TEST_CASE("graded subspaces split by parity") {
  ParityVec par = {0, 0, 1, 1};
  GradedSubspace<Rational> g(4, par);
  CHECK(g.add_homogeneous(vec({1, 2, 0, 0})));
  CHECK(g.add_homogeneous(vec({0, 0, 1, 1})));
  CHECK(g.even_dim() == 1);
  CHECK(g.odd_dim() == 1);
  CHECK(g.contains(vec({2, 4, 3, 3})));  // mixed but in the sum
  CHECK(!g.contains(vec({1, 0, 0, 0})));

  CHECK(vector_parity(vec({1, 1, 0, 0}), par) == 0);
  CHECK(vector_parity(vec({0, 0, 1, 0}), par) == 1);
  CHECK(vector_parity(vec({1, 0, 1, 0}), par) == -1);

  RowSpan<Rational> mixed(4);
  mixed.add(vec({1, 0, 1, 0}));
  mixed.add(vec({1, 0, -1, 0}));
  auto split = graded_split(mixed, par);
  REQUIRE(split.has_value());
  CHECK(split->even_dim() == 1);
  CHECK(split->odd_dim() == 1);

  RowSpan<Rational> truly_mixed(4);
  truly_mixed.add(vec({1, 0, 1, 0}));
  CHECK(!graded_split(truly_mixed, par).has_value());
}

TEST_CASE("graded complement sums to the ambient space") {
  ParityVec par = {0, 1, 1, 0, 1};
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int trial = 0; trial < 10; ++trial) {
    GradedSubspace<Rational> g(5, par);
    for (int k = 0; k < 2; ++k) {
      Vec<Rational> v = zero_vec<Rational>(5);
      for (int i = 0; i < 5; ++i)
        if (par[i] == static_cast<std::uint8_t>(k % 2)) v[i] = d(rng);
      if (!vec_is_zero(v)) g.add_homogeneous(v);
    }
    auto c = graded_complement(g, kOne);
    auto s = subspace_sum(g, c);
    CHECK(s.dim() == 5);
  }
}

TEST_CASE("CoordSolver expresses vectors in a generating set") {
  std::vector<Vec<Rational>> gens = {vec({1, 1, 0}), vec({0, 1, 1})};
  CoordSolver<Rational> cs(gens, 3, kOne);
  CHECK(cs.rank() == 2);
  auto c = cs.express(vec({2, 3, 1}));
  REQUIRE(c.has_value());
  CHECK((*c)[0] == 2);
  CHECK((*c)[1] == 1);
  CHECK(!cs.express(vec({1, 0, 0})).has_value());
}

TEST_CASE("F_p arithmetic") {
  Fp a(3, 5), b(4, 5);
  CHECK((a + b).value() == 2);
  CHECK((a * b).value() == 2);
  CHECK((a / b).value() == 2);  // 3 * 4^{-1} = 3 * 4 = 12 = 2 mod 5
  CHECK((a - b).value() == 4);
  // Modulus validation lives at the entry points, not in the Fp constructor.
  CHECK_THROWS_AS(require_odd_prime_gt3(4), bad_prime);
  CHECK_THROWS_AS(require_odd_prime_gt3(2), bad_prime);  // char 2, 3 excluded
  CHECK_THROWS_AS(require_odd_prime_gt3(3), bad_prime);
  CHECK_THROWS_AS(reduce_mod_p(Rational(1), 4), bad_prime);
  CHECK_THROWS_AS(a / Fp(0, 5), bad_prime);
  CHECK(reduce_mod_p(Rational(1, 2), 5).value() == 3);
  CHECK_THROWS_AS(reduce_mod_p(Rational(1, 5), 5), bad_prime);
}

TEST_CASE("mod-p reduction preserves rank for generic matrices") {
  auto m = mat({{1, 2}, {3, 4}});
  auto mp = reduce_mod_p(m, 7);
  CHECK(rank(mp) == rank(m));
}
