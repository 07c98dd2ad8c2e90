#ifndef PALEY_SPECTRAL_HPP
#define PALEY_SPECTRAL_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include <json.hpp>

#include "paley/certificate.hpp"
#include "paley/constructions.hpp"
#include "paley/finite_field.hpp"
#include "paley/paley_graph.hpp"

namespace paley {

// Integer-valued vertex function claimed to satisfy
// theta * f(v) = sum of f over the neighbours of v, at every vertex.
struct Eigenfunction {
  std::vector<int> values;
  std::int64_t theta = 0;
};

// {theta1, theta2} = {(-1+q)/2, (-1-q)/2}, the non-principal eigenvalues
// of P(q^2).
std::pair<std::int64_t, std::int64_t> paley_eigenvalues(std::int64_t q);

// +1 on Q0, -1 on Q1, 0 elsewhere; theta is theta2 for q = 1 (mod 4) and
// theta1 for q = 3 (mod 4).
Eigenfunction build_oval_eigenfunction(const QuadExtContext& ctx,
                                       const OvalDecomposition& dec);

int support_size(const Eigenfunction& f);

// The cited lower bound q+1 on eigenfunction support in P(q^2).
std::int64_t weight_distribution_bound(std::int64_t q);

// Exact integer verification of the eigen-equation at every vertex, plus
// a vertex classification (on-oval / exterior with tangents / exterior
// without) against the norm-one oval.
CheckList verify_local_condition(const PaleyGraph& pg, const QuadExtContext& ctx,
                                 const Eigenfunction& f, int threads = 1);

// Eigenvalue pairing, the local condition, and support size against the
// bound, in one list.
CheckList verify_theorem2(const PaleyGraph& pg, const QuadExtContext& ctx,
                          const OvalDecomposition& dec, int threads = 1);

// theta1*theta2 = mu - k and theta1 + theta2 = lambda - mu for the
// expected SRG parameters.
CheckList verify_eigenvalue_identities(std::int64_t q);

struct OracleOptions {
  int cap = 0;                  // largest support size to try
  bool override_policy = false; // permit q outside {3, 5}
};

// Minimum size of a support carrying a nonzero solution of the
// eigen-equation, found by exhaustive subset enumeration with exact
// fraction-free rank computation; nullopt when no support of size <= cap
// works. Throws CapExceeded on policy violation and std::invalid_argument
// when theta is not an eigenvalue.
std::optional<int> min_support_oracle(const PaleyGraph& pg, std::int64_t theta,
                                      const OracleOptions& opt);

nlohmann::json eigenfunction_json(const QuadExtContext& ctx, const Eigenfunction& f);
void write_eigenfunction_csv(const Eigenfunction& f, std::ostream& os);

}  // namespace paley

#endif  // PALEY_SPECTRAL_HPP
