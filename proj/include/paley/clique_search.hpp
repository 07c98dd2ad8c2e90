#ifndef PALEY_CLIQUE_SEARCH_HPP
#define PALEY_CLIQUE_SEARCH_HPP

#include <cstdint>
#include <limits>
#include <map>
#include <span>
#include <vector>

#include <json.hpp>

#include "paley/bitset.hpp"
#include "paley/certificate.hpp"
#include "paley/paley_graph.hpp"

namespace paley {

// Enumeration refuses graphs with more vertices than this.
inline constexpr int kEnumVertexCap = 2500;

struct CliqueEnumOptions {
  int min_size = 0;
  int max_size = std::numeric_limits<int>::max();
  std::int64_t limit = 0;  // returned-clique budget; 0 means unlimited
  int threads = 1;
};

struct CliqueEnumResult {
  std::vector<std::vector<int>> cliques;  // sorted sets, lexicographic order
  bool truncated = false;
};

// Branch-and-bound enumeration with pivoting over bitset candidate and
// excluded sets. Every maximal clique whose size falls in the window is
// returned exactly once; output is independent of the thread count.
CliqueEnumResult enumerate_maximal_cliques(const Graph& g,
                                           const CliqueEnumOptions& opt = {});

int clique_number(const Graph& g, int threads = 1);

struct CliqueCensus {
  std::int64_t q = 0;
  std::map<int, std::int64_t> histogram;       // size -> maximal clique count
  std::map<int, std::int64_t> orbit_counts;    // size -> count lying in the reference orbit
  std::map<int, std::vector<std::vector<int>>> samples;  // a few sets per size
  std::int64_t elapsed_ms = 0;
  CliqueEnumOptions options;
  bool truncated = false;
};

// Census over the enumeration window. `orbit_sets` is a sorted list of
// canonical sets (typically the affine orbit of the Theorem 1 cliques);
// enumerated cliques found in it are tallied per size.
CliqueCensus census(const Graph& g, std::int64_t q,
                    std::span<const std::vector<int>> orbit_sets,
                    const CliqueEnumOptions& opt = {});

// Same tallies over an enumeration that already ran.
CliqueCensus census_from_result(const CliqueEnumResult& r, std::int64_t q,
                                std::span<const std::vector<int>> orbit_sets,
                                const CliqueEnumOptions& opt = {});

bool contains_set(const CliqueEnumResult& r, const std::vector<int>& s);

// {q, histogram, orbit_counts, truncated}; timing deliberately excluded.
nlohmann::json census_json(const CliqueCensus& c);

// Re-checks emitted sets with the independent maximality predicate.
CheckList verify_enumeration_soundness(const Graph& g, const CliqueEnumResult& r);

}  // namespace paley

#endif  // PALEY_CLIQUE_SEARCH_HPP
