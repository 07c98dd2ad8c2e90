#ifndef PALEY_CONSTRUCTIONS_HPP
#define PALEY_CONSTRUCTIONS_HPP

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include <json.hpp>

#include "paley/affine_plane.hpp"
#include "paley/certificate.hpp"
#include "paley/finite_field.hpp"
#include "paley/paley_graph.hpp"

namespace paley {

// omega = beta^(q-1) generates the norm-one subgroup Q of order q+1;
// Q0 and Q1 are its even and odd powers.
struct OvalDecomposition {
  int omega = 0;
  std::vector<int> powers;  // omega^0 .. omega^q
  std::vector<int> q0, q1;  // even/odd powers, in power order
};

OvalDecomposition build_oval_decomposition(const QuadExtContext& ctx);
CheckList verify_oval_decomposition(const QuadExtContext& ctx,
                                    const OvalDecomposition& dec);

struct TheoremOneSets {
  bool cliques = false;  // true when q = 3 (mod 4): Q_i with 0 adjoined
  std::int64_t expected_size = 0;
  std::array<std::vector<int>, 2> sets;  // sorted vertex indices
};

// q = 1 (mod 4): {Q0, Q1}, claimed maximal cocliques of size (q+1)/2.
// q = 3 (mod 4): {Q0 u {0}, Q1 u {0}}, claimed maximal cliques of size (q+3)/2.
TheoremOneSets theorem1_sets(const QuadExtContext& ctx, const OvalDecomposition& dec);
CheckList verify_theorem1(const PaleyGraph& pg, const TheoremOneSets& sets);

// The base-field elements {(x, 0)}, a maximal clique of size q.
std::vector<int> subfield_clique(const QuadExtContext& ctx);

// For q = 3 (mod 4) and s in F_q*: the cliques s*Q0 u {0} and s*Q1 u {0}.
// Throws std::invalid_argument for q = 1 (mod 4) or s = 0.
std::array<std::vector<int>, 2> scaled_cliques(const QuadExtContext& ctx,
                                               const OvalDecomposition& dec, int s);

// Every scaled pair over all s, the norm-fibre identity N(sQ) = {s^2},
// and the partition of the nonzero squares into the sets sQ.
CheckList verify_scaled_cliques(const PaleyGraph& pg, const QuadExtContext& ctx,
                                const OvalDecomposition& dec);

// gamma -> mult*gamma + shift.
struct AffineMap {
  int mult = 0;
  int shift = 0;
};

int apply_affine(const QuadExtContext& ctx, const AffineMap& m, int g);
std::vector<int> apply_affine_set(const QuadExtContext& ctx, const AffineMap& m,
                                  std::span<const int> s);  // sorted image

// psi_{beta^2, 0} and psi_{1, 1}, which generate all affine maps with a
// square multiplier.
std::array<AffineMap, 2> square_affine_generators(const QuadExtContext& ctx);

// Closure of `start` under the generators, deduplicated by sorted vertex
// list; returned in lexicographic order.
std::vector<std::vector<int>> orbit(const QuadExtContext& ctx,
                                    const std::vector<int>& start,
                                    std::span<const AffineMap> generators);

// Square-multiplier maps preserve adjacency; checked pairwise for the
// generators and one oval rotation.
CheckList verify_affine_automorphisms(const PaleyGraph& pg, const QuadExtContext& ctx);

// All seven statements about T_Q = <psi_{omega,0}> and its subgroups:
// line preservation, oval stabilization, transitivity on points and
// tangents, the T_{Q0}/T_{Q1} actions on Q0/Q1, and line-class preservation.
CheckList verify_lemma_tq(const QuadExtContext& ctx, const OvalDecomposition& dec);

enum class QStructure { kCompleteBipartite, kTwoCliques };

// Classifies the subgraph induced by Q; throws std::runtime_error on any
// other structure.
QStructure adjacency_structure(const PaleyGraph& pg, const OvalDecomposition& dec);
CheckList verify_adjacency_structure(const PaleyGraph& pg, const OvalDecomposition& dec);

// Adjacency of the vertex 1 inside Q, split by congruence class of q.
CheckList verify_neighbours_of_one(const PaleyGraph& pg, const OvalDecomposition& dec);

nlohmann::json theorem1_json(const QuadExtContext& ctx, const TheoremOneSets& sets);

}  // namespace paley

#endif  // PALEY_CONSTRUCTIONS_HPP
