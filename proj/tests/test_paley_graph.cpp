#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "paley/errors.hpp"
#include "paley/finite_field.hpp"
#include "paley/paley_graph.hpp"

using paley::Graph;
using paley::PaleyGraph;
using paley::QuadExtContext;

namespace {

PaleyGraph make(std::int64_t q) {
  return paley::build_paley(paley::build_tower(q));
}

}  // namespace

TEST_CASE("P(9) structure") {
  PaleyGraph pg = make(3);
  const Graph& g = pg.graph;
  CHECK(g.order() == 9);
  CHECK(g.edge_count() == 18);
  for (int u = 0; u < 9; ++u) CHECK(g.degree(u) == 4);

  // neighbours of 0 are the nonzero squares of GF(9)
  CHECK(g.neighbours(0) == std::vector<int>{1, 2, 3, 6});
  for (int u = 0; u < 9; ++u) {
    CHECK(!g.adjacent(u, u));
    for (int v = 0; v < 9; ++v) CHECK(g.adjacent(u, v) == g.adjacent(v, u));
  }
}

TEST_CASE("srg parameters match the closed form") {
  for (std::int64_t q : {3, 5, 7, 9, 11}) {
    PaleyGraph pg = make(q);
    paley::SrgParams want = paley::expected_paley_srg(q);
    CHECK(want.v == q * q);
    CHECK(want.k == (q * q - 1) / 2);
    CHECK(want.lambda == (q * q - 5) / 4);
    CHECK(want.mu == (q * q - 1) / 4);
    CHECK(paley::srg_parameters(pg.graph) == want);
    CHECK(paley::srg_parameters(pg.graph, 4) == want);
  }
  CHECK(paley::expected_paley_srg(3) == paley::SrgParams{9, 4, 1, 2});
  CHECK(paley::expected_paley_srg(5) == paley::SrgParams{25, 12, 5, 6});
  CHECK(paley::expected_paley_srg(7) == paley::SrgParams{49, 24, 11, 12});
}

TEST_CASE("srg_parameters rejects non-srg graphs") {
  Graph path(4);
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  path.add_edge(2, 3);
  CHECK_THROWS_AS((void)paley::srg_parameters(path), paley::NotStronglyRegular);

  Graph c5(5);
  for (int i = 0; i < 5; ++i) c5.add_edge(i, (i + 1) % 5);
  CHECK(paley::srg_parameters(c5) == paley::SrgParams{5, 2, 0, 1});
}

TEST_CASE("complement and self-complementarity") {
  for (std::int64_t q : {3, 5, 7}) {
    QuadExtContext ctx = paley::build_tower(q);
    PaleyGraph pg = paley::build_paley(ctx);
    Graph co = paley::complement(pg.graph);
    CHECK(co.edge_count() == pg.graph.edge_count());
    for (int u = 0; u < pg.graph.order(); ++u)
      for (int v = u + 1; v < pg.graph.order(); ++v)
        CHECK(co.adjacent(u, v) == !pg.graph.adjacent(u, v));
    CHECK(paley::verify_self_complementary(pg, ctx));
  }
}

TEST_CASE("clique predicates") {
  PaleyGraph pg = make(3);
  std::vector<int> subfield{0, 3, 6};
  std::vector<int> alpha_line{0, 1, 2};
  std::vector<int> edge{0, 1};
  std::vector<int> non_edge{0, 4};
  CHECK(paley::is_clique(pg.graph, subfield));
  CHECK(paley::is_maximal_clique(pg.graph, subfield));
  CHECK(paley::is_maximal_clique(pg.graph, alpha_line));
  CHECK(paley::is_clique(pg.graph, edge));
  CHECK(!paley::is_maximal_clique(pg.graph, edge));
  CHECK(!paley::is_clique(pg.graph, non_edge));
  CHECK(paley::is_coclique(pg.graph, non_edge));
  CHECK(!paley::is_coclique(pg.graph, edge));
}

TEST_CASE("dimacs header and edge count") {
  PaleyGraph pg = make(5);
  std::ostringstream os;
  paley::write_dimacs(pg.graph, os);
  std::istringstream is(os.str());
  std::string line;
  REQUIRE(std::getline(is, line));
  CHECK(line == "p edge 25 150");
  int edges = 0;
  while (std::getline(is, line)) {
    REQUIRE(line.rfind("e ", 0) == 0);
    ++edges;
  }
  CHECK(edges == 150);
}

TEST_CASE("adjacency json rows decode back to the graph") {
  PaleyGraph pg = make(3);
  nlohmann::json j = paley::adjacency_json(pg.graph);
  CHECK(j["n"] == 9);
  REQUIRE(j["rows"].size() == 9);
  for (int u = 0; u < 9; ++u) {
    std::string row = j["rows"][static_cast<std::size_t>(u)];
    for (int v = 0; v < 9; ++v) {
      char c = row[static_cast<std::size_t>(v / 4)];
      int nibble = c <= '9' ? c - '0' : c - 'a' + 10;
      bool bit = (nibble >> (v % 4)) & 1;
      CHECK(bit == pg.graph.adjacent(u, v));
    }
  }
}

TEST_CASE("verify_srg check list") {
  QuadExtContext ctx = paley::build_tower(5);
  PaleyGraph pg = paley::build_paley(ctx);
  paley::CheckList checks = paley::verify_srg(pg, ctx, 2);
  CHECK(paley::all_pass(checks));
  bool saw_srg = false;
  for (const paley::Check& c : checks)
    if (c.name == "graph.srg_parameters") saw_srg = true;
  CHECK(saw_srg);
}

TEST_CASE("build_paley cap") {
  QuadExtContext ctx = paley::build_tower(7);
  CHECK_THROWS_AS((void)paley::build_paley(ctx, 10), paley::CapExceeded);
}
