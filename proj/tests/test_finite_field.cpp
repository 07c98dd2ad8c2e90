#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <stdexcept>
#include <vector>

#include "paley/finite_field.hpp"

using paley::FieldContext;
using paley::QuadExtContext;

TEST_CASE("prime power factorization") {
  auto pp = paley::factor_prime_power(9);
  REQUIRE(pp.has_value());
  CHECK(pp->p == 3);
  CHECK(pp->m == 2);

  pp = paley::factor_prime_power(27);
  REQUIRE(pp.has_value());
  CHECK(pp->p == 3);
  CHECK(pp->m == 3);

  pp = paley::factor_prime_power(7);
  REQUIRE(pp.has_value());
  CHECK(pp->p == 7);
  CHECK(pp->m == 1);

  CHECK(!paley::factor_prime_power(12).has_value());
  CHECK(!paley::factor_prime_power(15).has_value());
  CHECK(!paley::factor_prime_power(100).has_value());

  CHECK(paley::odd_prime_powers_upto(31) ==
        std::vector<std::int64_t>{3, 5, 7, 9, 11, 13, 17, 19, 23, 25, 27, 29, 31});
}

TEST_CASE("prime field GF(3)") {
  FieldContext f = FieldContext::build(3, 1);
  CHECK(f.order() == 3);
  CHECK(f.one() == 1);
  CHECK(f.generator() == 2);
  CHECK(f.add(1, 2) == 0);
  CHECK(f.mul(2, 2) == 1);
  CHECK(f.is_square(1));
  CHECK(!f.is_square(2));
  CHECK(paley::least_nonsquare(f) == 2);
  CHECK(f.from_int(5) == 2);
  CHECK_THROWS_AS((void)f.inv(0), std::invalid_argument);
  CHECK_THROWS_AS((void)f.is_square(0), std::invalid_argument);
}

TEST_CASE("GF(9) canonical presentation") {
  FieldContext f = FieldContext::build(3, 2);
  CHECK(f.order() == 9);
  // t^2 + 1, constant term first.
  CHECK(f.modulus() == std::vector<int>{1, 0, 1});
  // index = c0*3 + c1 for c0 + c1*t
  CHECK(f.one() == 3);
  CHECK(f.from_int(2) == 6);
  CHECK(f.generator() == 4);  // 1 + t
  CHECK(f.mul_order(f.generator()) == 8);

  // t^2 = -1 = 2
  int t = f.from_coeffs({0, 1});
  CHECK(t == 1);
  CHECK(f.mul(t, t) == f.from_int(2));
  CHECK(f.coeffs(4) == std::vector<int>{1, 1});
  CHECK(f.from_coeffs({1, 1}) == 4);

  // squares are the even generator powers: {1, 2, t, 2t}
  std::set<int> squares;
  for (int a = 1; a < 9; ++a)
    if (f.is_square(a)) squares.insert(a);
  CHECK(squares == std::set<int>{1, 2, 3, 6});
  CHECK(paley::least_nonsquare(f) == 4);
}

TEST_CASE("GF(25) modulus and arithmetic laws") {
  FieldContext f = FieldContext::build(5, 2);
  CHECK(f.modulus() == std::vector<int>{1, 1, 1});  // t^2 + t + 1
  CHECK(f.order() == 25);

  for (int a = 0; a < 25; ++a) {
    CHECK(f.add(a, f.neg(a)) == 0);
    if (a != 0) {
      CHECK(f.mul(a, f.inv(a)) == f.one());
      CHECK(f.pow(a, 24) == f.one());
      CHECK(f.exp(f.log(a)) == a);
      CHECK(24 % f.mul_order(a) == 0);
    }
    for (int b = 0; b < 25; ++b) {
      CHECK(f.add(a, b) == f.add(b, a));
      CHECK(f.mul(a, b) == f.mul(b, a));
      CHECK(f.sub(a, b) == f.add(a, f.neg(b)));
    }
  }

  // distributivity on a sample grid
  for (int a = 0; a < 25; a += 3)
    for (int b = 0; b < 25; b += 4)
      for (int c = 0; c < 25; c += 5)
        CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
}

TEST_CASE("quadratic extension over GF(3)") {
  QuadExtContext ctx = paley::build_tower(3);
  CHECK(ctx.base_order() == 3);
  CHECK(ctx.order() == 9);
  CHECK(ctx.d() == 2);
  CHECK(ctx.alpha() == 1);
  CHECK(ctx.one() == 3);
  CHECK(ctx.beta() == 4);  // 1 + alpha
  CHECK(ctx.mul_order(ctx.beta()) == 8);

  // alpha^2 = d
  CHECK(ctx.mul(ctx.alpha(), ctx.alpha()) == ctx.make(ctx.d(), 0));
  // norm and conjugate
  for (int g = 0; g < 9; ++g) {
    CHECK(ctx.conjugate(ctx.conjugate(g)) == g);
    CHECK(ctx.mul(g, ctx.conjugate(g)) == ctx.make(ctx.norm(g), 0));
    if (g != 0) {
      CHECK(ctx.pow(g, 4) == ctx.make(ctx.norm(g), 0));
      CHECK(ctx.is_square(g) == ctx.base_field().is_square(ctx.norm(g)));
    }
  }
  // norm-one kernel has q + 1 elements
  int kernel = 0;
  for (int g = 1; g < 9; ++g)
    if (ctx.norm(g) == ctx.base_field().one()) ++kernel;
  CHECK(kernel == 4);
}

TEST_CASE("tower over GF(9) uses the least non-square") {
  QuadExtContext ctx = paley::build_tower(9);
  CHECK(ctx.base_order() == 9);
  CHECK(ctx.order() == 81);
  CHECK(ctx.d() == 4);  // 1 + t, least non-square of GF(9)
  CHECK(ctx.d() == paley::least_nonsquare(ctx.base_field()));
  CHECK(ctx.mul_order(ctx.beta()) == 80);
  for (int g = 1; g < 81; ++g) {
    int x = ctx.x_of(g), y = ctx.y_of(g);
    CHECK(ctx.make(x, y) == g);
    const FieldContext& base = ctx.base_field();
    int expect = base.sub(base.mul(x, x), base.mul(ctx.d(), base.mul(y, y)));
    CHECK(ctx.norm(g) == expect);
  }
}

TEST_CASE("build_tower rejects bad q") {
  CHECK_THROWS_AS((void)paley::build_tower(15), std::invalid_argument);
  CHECK_THROWS_AS((void)paley::build_tower(4), std::invalid_argument);
  CHECK_THROWS_AS((void)paley::build_tower(6), std::invalid_argument);
}

TEST_CASE("field invariants hold across small towers") {
  for (std::int64_t q : {3, 5, 7, 9, 11, 13, 25, 27}) {
    QuadExtContext ctx = paley::build_tower(q);
    paley::CheckList checks = paley::verify_field_invariants(ctx);
    CHECK(checks.size() >= 10);
    for (const paley::Check& c : checks) {
      INFO("q = ", q, ", check = ", c.name);
      CHECK(c.pass);
    }
  }
}

TEST_CASE("field parameters json is complete") {
  QuadExtContext ctx = paley::build_tower(9);
  nlohmann::json j = paley::field_parameters_json(ctx);
  CHECK(j.contains("p"));
  CHECK(j.contains("base_modulus"));
  CHECK(j.contains("d"));
  CHECK(j.contains("beta"));
  CHECK(j["p"] == 3);
}
