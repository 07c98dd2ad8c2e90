#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "paley/constructions.hpp"
#include "paley/finite_field.hpp"
#include "paley/paley_graph.hpp"

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

TEST_CASE("oval decomposition for q = 3") {
  Fixture f(3);
  CHECK(f.dec.omega == 2);  // 2*alpha = beta^2
  CHECK(f.dec.powers == std::vector<int>{3, 2, 6, 1});
  CHECK(f.dec.q0 == std::vector<int>{3, 6});
  CHECK(f.dec.q1 == std::vector<int>{2, 1});
  CHECK(paley::all_pass(paley::verify_oval_decomposition(f.ctx, f.dec)));
}

TEST_CASE("theorem 1 sets") {
  SUBCASE("q = 3 (mod 4) gives cliques with zero adjoined") {
    Fixture f(3);
    paley::TheoremOneSets sets = paley::theorem1_sets(f.ctx, f.dec);
    CHECK(sets.cliques);
    CHECK(sets.expected_size == 3);
    CHECK(sets.sets[0] == std::vector<int>{0, 3, 6});
    CHECK(sets.sets[1] == std::vector<int>{0, 1, 2});
    CHECK(paley::all_pass(paley::verify_theorem1(f.pg, sets)));
  }
  SUBCASE("q = 1 (mod 4) gives cocliques") {
    Fixture f(5);
    paley::TheoremOneSets sets = paley::theorem1_sets(f.ctx, f.dec);
    CHECK(!sets.cliques);
    CHECK(sets.expected_size == 3);
    for (const auto& s : sets.sets) {
      CHECK(s.size() == 3);
      CHECK(paley::is_maximal_coclique(f.pg.graph, s));
    }
    CHECK(paley::all_pass(paley::verify_theorem1(f.pg, sets)));
  }
  SUBCASE("all odd prime powers up to 27") {
    for (std::int64_t q : paley::odd_prime_powers_upto(27)) {
      Fixture f(q);
      paley::TheoremOneSets sets = paley::theorem1_sets(f.ctx, f.dec);
      CHECK(sets.cliques == (q % 4 == 3));
      CHECK(sets.expected_size == (q % 4 == 3 ? (q + 3) / 2 : (q + 1) / 2));
      for (const paley::Check& c : paley::verify_theorem1(f.pg, sets)) {
        INFO("q = ", q, ", check = ", c.name);
        CHECK(c.pass);
      }
    }
  }
}

TEST_CASE("subfield clique") {
  for (std::int64_t q : {3, 5, 7, 9}) {
    Fixture f(q);
    std::vector<int> s = paley::subfield_clique(f.ctx);
    CHECK(static_cast<std::int64_t>(s.size()) == q);
    CHECK(paley::is_maximal_clique(f.pg.graph, s));
  }
}

TEST_CASE("scaled cliques") {
  Fixture f(7);
  auto pair = paley::scaled_cliques(f.ctx, f.dec, 3);
  for (const auto& s : pair) {
    CHECK(s.size() == 5);
    CHECK(s.front() == 0);
    CHECK(paley::is_maximal_clique(f.pg.graph, s));
  }
  CHECK_THROWS_AS((void)paley::scaled_cliques(f.ctx, f.dec, 0), std::invalid_argument);

  Fixture g(5);
  CHECK_THROWS_AS((void)paley::scaled_cliques(g.ctx, g.dec, 1), std::invalid_argument);

  CHECK(paley::all_pass(paley::verify_scaled_cliques(f.pg, f.ctx, f.dec)));
}

TEST_CASE("affine maps and orbits") {
  Fixture f(3);
  paley::AffineMap shift{f.ctx.one(), f.ctx.one()};
  CHECK(paley::apply_affine(f.ctx, shift, 0) == f.ctx.one());
  std::vector<int> set{0, 3, 6};
  std::vector<int> image = paley::apply_affine_set(f.ctx, shift, set);
  CHECK(std::is_sorted(image.begin(), image.end()));
  CHECK(image.size() == 3);

  auto gens = paley::square_affine_generators(f.ctx);
  CHECK(gens[0].mult == f.ctx.mul(f.ctx.beta(), f.ctx.beta()));
  CHECK(gens[0].shift == 0);
  CHECK(gens[1].mult == f.ctx.one());
  CHECK(gens[1].shift == f.ctx.one());

  // the orbit of the subfield clique is the six quadratic lines
  std::vector<std::vector<int>> orb = paley::orbit(f.ctx, set, gens);
  CHECK(orb.size() == 6);
  CHECK(std::is_sorted(orb.begin(), orb.end()));
  for (const auto& s : orb) CHECK(paley::is_maximal_clique(f.pg.graph, s));
  CHECK(std::find(orb.begin(), orb.end(), std::vector<int>{0, 1, 2}) != orb.end());

  CHECK(paley::all_pass(paley::verify_affine_automorphisms(f.pg, f.ctx)));
}

TEST_CASE("group action on the oval") {
  for (std::int64_t q : {3, 5, 7, 9}) {
    Fixture f(q);
    for (const paley::Check& c : paley::verify_lemma_tq(f.ctx, f.dec)) {
      INFO("q = ", q, ", check = ", c.name);
      CHECK(c.pass);
    }
  }
}

TEST_CASE("adjacency structure of the oval") {
  Fixture f3(3);
  CHECK(paley::adjacency_structure(f3.pg, f3.dec) == paley::QStructure::kTwoCliques);
  Fixture f5(5);
  CHECK(paley::adjacency_structure(f5.pg, f5.dec) ==
        paley::QStructure::kCompleteBipartite);
  for (std::int64_t q : {3, 5, 7, 9, 11, 13}) {
    Fixture f(q);
    CHECK(paley::all_pass(paley::verify_adjacency_structure(f.pg, f.dec)));
    CHECK(paley::all_pass(paley::verify_neighbours_of_one(f.pg, f.dec)));
  }
}

TEST_CASE("theorem1 json shape") {
  Fixture f(3);
  nlohmann::json j = paley::theorem1_json(f.ctx, paley::theorem1_sets(f.ctx, f.dec));
  CHECK(j["q"] == 3);
  CHECK(j["claim"] == "maximal cliques");
  CHECK(j["expected_size"] == 3);
  CHECK(j["sets"][0] == nlohmann::json::array({0, 3, 6}));
}
