#ifndef PALEY_PALEY_GRAPH_HPP
#define PALEY_PALEY_GRAPH_HPP

#include <cstdint>
#include <ostream>
#include <span>
#include <vector>

#include <json.hpp>

#include "paley/bitset.hpp"
#include "paley/certificate.hpp"
#include "paley/finite_field.hpp"

namespace paley {

// Simple undirected graph on vertices 0..n-1, adjacency kept as one
// bitset row per vertex.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n), rows_(static_cast<std::size_t>(n), Bitset(n)) {}

  int order() const { return n_; }
  bool adjacent(int u, int v) const { return rows_[static_cast<std::size_t>(u)].test(v); }
  const Bitset& row(int u) const { return rows_[static_cast<std::size_t>(u)]; }

  void add_edge(int u, int v) {
    rows_[static_cast<std::size_t>(u)].set(v);
    rows_[static_cast<std::size_t>(v)].set(u);
  }

  int degree(int u) const { return static_cast<int>(rows_[static_cast<std::size_t>(u)].count()); }

  std::int64_t edge_count() const {
    std::int64_t twice = 0;
    for (const auto& r : rows_) twice += static_cast<std::int64_t>(r.count());
    return twice / 2;
  }

  std::vector<int> neighbours(int u) const;

  bool operator==(const Graph&) const = default;

 private:
  int n_ = 0;
  std::vector<Bitset> rows_;
};

inline constexpr int kDefaultGraphCap = 1 << 15;

struct PaleyGraph {
  std::int64_t q = 0;  // base field order; the graph has q^2 vertices
  Graph graph;
};

// Vertex i and vertex j are adjacent iff their field difference is a
// nonzero square in GF(q^2). Throws CapExceeded past the vertex cap.
PaleyGraph build_paley(const QuadExtContext& ctx, int cap = kDefaultGraphCap);

struct SrgParams {
  std::int64_t v = 0;
  std::int64_t k = 0;
  std::int64_t lambda = 0;
  std::int64_t mu = 0;

  bool operator==(const SrgParams&) const = default;
};

// Computes (v, k, lambda, mu) by scanning all vertex pairs; throws
// NotStronglyRegular with an offending pair if the counts disagree.
SrgParams srg_parameters(const Graph& g, int threads = 1);

SrgParams expected_paley_srg(std::int64_t q);

Graph complement(const Graph& g);

// gamma -> beta * gamma maps the graph onto its complement.
bool verify_self_complementary(const PaleyGraph& pg, const QuadExtContext& ctx);

bool is_clique(const Graph& g, std::span<const int> verts);
bool is_coclique(const Graph& g, std::span<const int> verts);
bool is_maximal_clique(const Graph& g, std::span<const int> verts);
bool is_maximal_coclique(const Graph& g, std::span<const int> verts);

void write_dimacs(const Graph& g, std::ostream& os);

// Rows as lowercase hex strings, least significant nibble first, bit v of
// row u set iff u ~ v.
nlohmann::json adjacency_json(const Graph& g);

CheckList verify_srg(const PaleyGraph& pg, const QuadExtContext& ctx, int threads = 1);

}  // namespace paley

#endif  // PALEY_PALEY_GRAPH_HPP
