#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "paley/clique_search.hpp"
#include "paley/constructions.hpp"
#include "paley/errors.hpp"
#include "paley/finite_field.hpp"
#include "paley/paley_graph.hpp"

using paley::CliqueEnumOptions;
using paley::CliqueEnumResult;
using paley::Graph;

namespace {

const std::vector<std::vector<int>> kP9Cliques = {
    {0, 1, 2}, {0, 3, 6}, {1, 4, 7}, {2, 5, 8}, {3, 4, 5}, {6, 7, 8}};

Graph paley_graph(std::int64_t q) {
  return paley::build_paley(paley::build_tower(q)).graph;
}

}  // namespace

TEST_CASE("small graphs enumerate correctly") {
  Graph triangle(3);
  triangle.add_edge(0, 1);
  triangle.add_edge(1, 2);
  triangle.add_edge(0, 2);
  CHECK(paley::enumerate_maximal_cliques(triangle).cliques ==
        std::vector<std::vector<int>>{{0, 1, 2}});

  Graph path(3);
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  CHECK(paley::enumerate_maximal_cliques(path).cliques ==
        std::vector<std::vector<int>>{{0, 1}, {1, 2}});

  Graph empty(3);
  CHECK(paley::enumerate_maximal_cliques(empty).cliques ==
        std::vector<std::vector<int>>{{0}, {1}, {2}});

  Graph c5(5);
  for (int i = 0; i < 5; ++i) c5.add_edge(i, (i + 1) % 5);
  CHECK(paley::enumerate_maximal_cliques(c5).cliques.size() == 5);
}

TEST_CASE("P(9) has exactly the six quadratic-line cliques") {
  Graph g = paley_graph(3);
  CliqueEnumResult r = paley::enumerate_maximal_cliques(g);
  CHECK(!r.truncated);
  CHECK(r.cliques == kP9Cliques);
  CHECK(paley::all_pass(paley::verify_enumeration_soundness(g, r)));
}

TEST_CASE("output is independent of the thread count") {
  for (std::int64_t q : {3, 5}) {
    Graph g = paley_graph(q);
    CliqueEnumOptions one;
    one.threads = 1;
    CliqueEnumOptions eight;
    eight.threads = 8;
    CliqueEnumResult a = paley::enumerate_maximal_cliques(g, one);
    CliqueEnumResult b = paley::enumerate_maximal_cliques(g, eight);
    CHECK(a.cliques == b.cliques);
    CHECK(a.truncated == b.truncated);
  }
}

TEST_CASE("size window and limit") {
  Graph g = paley_graph(3);

  CliqueEnumOptions window;
  window.min_size = 4;
  CHECK(paley::enumerate_maximal_cliques(g, window).cliques.empty());

  CliqueEnumOptions limited;
  limited.limit = 3;
  CliqueEnumResult r = paley::enumerate_maximal_cliques(g, limited);
  CHECK(r.truncated);
  CHECK(r.cliques ==
        std::vector<std::vector<int>>(kP9Cliques.begin(), kP9Cliques.begin() + 3));

  CHECK(paley::contains_set(r, {0, 3, 6}));
  CHECK(!paley::contains_set(r, {3, 4, 5}));
}

TEST_CASE("clique numbers match the base field order") {
  CHECK(paley::clique_number(paley_graph(3)) == 3);
  CHECK(paley::clique_number(paley_graph(5), 2) == 5);
  CHECK(paley::clique_number(paley_graph(7), 4) == 7);
}

TEST_CASE("census tallies sizes and the affine orbit") {
  paley::QuadExtContext ctx = paley::build_tower(3);
  Graph g = paley::build_paley(ctx).graph;
  paley::OvalDecomposition dec = paley::build_oval_decomposition(ctx);
  paley::TheoremOneSets sets = paley::theorem1_sets(ctx, dec);
  auto gens = paley::square_affine_generators(ctx);
  std::vector<std::vector<int>> orbit_sets = paley::orbit(ctx, sets.sets[0], gens);

  paley::CliqueCensus c = paley::census(g, 3, orbit_sets, {});
  CHECK(c.q == 3);
  CHECK(c.histogram == std::map<int, std::int64_t>{{3, 6}});
  CHECK(c.orbit_counts == std::map<int, std::int64_t>{{3, 6}});
  CHECK(!c.truncated);
  REQUIRE(c.samples.count(3) == 1);
  CHECK(!c.samples.at(3).empty());

  nlohmann::json j = paley::census_json(c);
  CHECK(j["q"] == 3);
  CHECK(j["histogram"]["3"] == 6);
  CHECK(j["orbit_counts"]["3"] == 6);
  CHECK(j["truncated"] == false);
  CHECK(!j.contains("elapsed_ms"));
}

TEST_CASE("census of P(25) finds cliques beyond the subfield orbit") {
  Graph g = paley_graph(5);
  CliqueEnumOptions opt;
  opt.threads = 4;
  paley::CliqueCensus c = paley::census(g, 5, {}, opt);
  // maximum cliques have size q and every size is at least 3
  CHECK(c.histogram.rbegin()->first == 5);
  CHECK(c.histogram.begin()->first >= 3);
  std::int64_t total = 0;
  for (const auto& [size, count] : c.histogram) total += count;
  CHECK(total > 0);
}

TEST_CASE("vertex cap is enforced") {
  Graph big(paley::kEnumVertexCap + 1);
  CHECK_THROWS_AS((void)paley::enumerate_maximal_cliques(big), paley::CapExceeded);
}
