#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>
#include <stdexcept>

#include "paley/constructions.hpp"
#include "paley/errors.hpp"
#include "paley/finite_field.hpp"
#include "paley/paley_graph.hpp"
#include "paley/spectral.hpp"

using paley::Eigenfunction;
using paley::OvalDecomposition;
using paley::PaleyGraph;
using paley::QuadExtContext;

namespace {

struct Fixture {
  QuadExtContext ctx;
  PaleyGraph pg;
  OvalDecomposition dec;

  explicit Fixture(std::int64_t q)
      : ctx(paley::build_tower(q)),
        pg(paley::build_paley(ctx)),
        dec(paley::build_oval_decomposition(ctx)) {}
};

}  // namespace

TEST_CASE("eigenvalues of P(q^2)") {
  CHECK(paley::paley_eigenvalues(3) == std::pair<std::int64_t, std::int64_t>{1, -2});
  CHECK(paley::paley_eigenvalues(5) == std::pair<std::int64_t, std::int64_t>{2, -3});
  CHECK(paley::paley_eigenvalues(9) == std::pair<std::int64_t, std::int64_t>{4, -5});
  for (std::int64_t q : paley::odd_prime_powers_upto(31))
    CHECK(paley::all_pass(paley::verify_eigenvalue_identities(q)));
}

TEST_CASE("oval eigenfunction for q = 3") {
  Fixture f(3);
  Eigenfunction fn = paley::build_oval_eigenfunction(f.ctx, f.dec);
  CHECK(fn.theta == 1);  // theta1, q = 3 (mod 4)
  REQUIRE(fn.values.size() == 9);
  CHECK(fn.values[3] == 1);
  CHECK(fn.values[6] == 1);
  CHECK(fn.values[1] == -1);
  CHECK(fn.values[2] == -1);
  CHECK(fn.values[0] == 0);
  CHECK(paley::support_size(fn) == 4);
  CHECK(paley::weight_distribution_bound(3) == 4);
  CHECK(paley::all_pass(paley::verify_local_condition(f.pg, f.ctx, fn)));
}

TEST_CASE("oval eigenfunction theta for q = 1 (mod 4)") {
  Fixture f(5);
  Eigenfunction fn = paley::build_oval_eigenfunction(f.ctx, f.dec);
  CHECK(fn.theta == -3);  // theta2
  CHECK(paley::support_size(fn) == 6);
}

TEST_CASE("theorem 2 suite across odd prime powers") {
  for (std::int64_t q : paley::odd_prime_powers_upto(13)) {
    Fixture f(q);
    for (const paley::Check& c : paley::verify_theorem2(f.pg, f.ctx, f.dec, 2)) {
      INFO("q = ", q, ", check = ", c.name);
      CHECK(c.pass);
    }
  }
}

TEST_CASE("local condition detects a broken function") {
  Fixture f(3);
  Eigenfunction fn = paley::build_oval_eigenfunction(f.ctx, f.dec);
  fn.values[0] = 1;
  CHECK(!paley::all_pass(paley::verify_local_condition(f.pg, f.ctx, fn)));
}

TEST_CASE("minimum support oracle") {
  Fixture f3(3);
  paley::OracleOptions opt;
  opt.cap = 6;
  CHECK(paley::min_support_oracle(f3.pg, 1, opt) == 4);
  CHECK(paley::min_support_oracle(f3.pg, -2, opt) == 4);

  opt.cap = 3;
  CHECK(!paley::min_support_oracle(f3.pg, 1, opt).has_value());

  CHECK_THROWS_AS((void)paley::min_support_oracle(f3.pg, 2, opt),
                  std::invalid_argument);

  Fixture f7(7);
  paley::OracleOptions strict;
  strict.cap = 4;
  CHECK_THROWS_AS((void)paley::min_support_oracle(f7.pg, 3, strict),
                  paley::CapExceeded);
}

TEST_CASE("minimum support oracle at q = 5") {
  Fixture f(5);
  paley::OracleOptions opt;
  opt.cap = 6;
  CHECK(paley::min_support_oracle(f.pg, -3, opt) == 6);
}

TEST_CASE("eigenfunction serialization") {
  Fixture f(3);
  Eigenfunction fn = paley::build_oval_eigenfunction(f.ctx, f.dec);
  nlohmann::json j = paley::eigenfunction_json(f.ctx, fn);
  CHECK(j["q"] == 3);
  CHECK(j["theta"] == 1);
  CHECK(j["support_size"] == 4);
  CHECK(j["values"].size() == 4);

  std::ostringstream os;
  paley::write_eigenfunction_csv(fn, os);
  std::istringstream is(os.str());
  std::string line;
  REQUIRE(std::getline(is, line));
  CHECK(line == "vertex,value");
  int rows = 0;
  while (std::getline(is, line)) ++rows;
  CHECK(rows == 9);
}
