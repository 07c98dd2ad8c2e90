#ifndef PALEY_FINITE_FIELD_HPP
#define PALEY_FINITE_FIELD_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "paley/certificate.hpp"

namespace paley {

// Orders above this are refused at construction time.
inline constexpr std::int64_t kDefaultFieldCap = std::int64_t{1} << 20;

// GF(p^m) with exact table-based arithmetic. Elements are integer indices
// 0..q-1; the index encodes the coefficient vector (c0, c1, ..., c_{m-1})
// of c0 + c1*t + ... in lexicographic order with the constant term most
// significant, so index = sum c_i * p^(m-1-i). The modulus is the
// lexicographically least monic irreducible of degree m (constant term
// first) and the generator is the least element of multiplicative order
// q-1; every downstream object is deterministic given (p, m).
class FieldContext {
 public:
  static FieldContext build(std::int64_t p, int m,
                            std::int64_t cap = kDefaultFieldCap);

  std::int64_t p() const { return p_; }
  int degree() const { return m_; }
  std::int64_t order() const { return q_; }

  // Monic modulus polynomial, length m+1, constant term first.
  const std::vector<int>& modulus() const { return modulus_; }

  int zero() const { return 0; }
  int one() const { return one_; }
  int generator() const { return gen_; }

  int add(int a, int b) const;
  int sub(int a, int b) const;
  int neg(int a) const;
  int mul(int a, int b) const;
  int inv(int a) const;             // throws std::invalid_argument on 0
  int pow(int a, std::int64_t e) const;

  int exp(std::int64_t k) const;    // generator^k
  std::int64_t log(int a) const;    // throws std::invalid_argument on 0
  std::int64_t mul_order(int a) const;

  // Euler criterion a^((q-1)/2) == 1. Squareness of 0 is undefined and
  // rejected with std::invalid_argument.
  bool is_square(int a) const;

  // Canonical image of an integer (n mod p, as a constant).
  int from_int(std::int64_t n) const;
  std::vector<int> coeffs(int a) const;             // c0..c_{m-1}
  int from_coeffs(const std::vector<int>& c) const;
  std::string str(int a) const;

  nlohmann::json debug_json() const;

 private:
  FieldContext() = default;

  std::int64_t p_ = 0;
  int m_ = 0;
  std::int64_t q_ = 0;
  std::vector<int> modulus_;
  std::vector<std::int64_t> place_;  // place_[i] = p^(m-1-i)
  int one_ = 0;
  int gen_ = 0;
  std::vector<int> exp_;             // size q-1
  std::vector<std::int64_t> log_;    // size q, log_[0] = -1
};

// Least x in F_q* (canonical order) with x^((q-1)/2) = -1.
int least_nonsquare(const FieldContext& f);

struct PrimePower {
  std::int64_t p;
  int m;
};

// Trial-division factorization of q as p^m; nullopt when q is not a
// prime power. q >= 2.
std::optional<PrimePower> factor_prime_power(std::int64_t q);

std::vector<std::int64_t> odd_prime_powers_upto(std::int64_t limit);

// GF(q^2) presented as pairs x + y*alpha over GF(q), alpha^2 = d with d
// the least non-square of the base field. Vertex/element index is
// x_rank * q + y_rank. beta is the least element of order q^2 - 1.
class QuadExtContext {
 public:
  static QuadExtContext build(FieldContext base,
                              std::int64_t cap = kDefaultFieldCap);

  const FieldContext& base_field() const { return base_; }
  std::int64_t base_order() const { return q_; }
  std::int64_t order() const { return order_; }

  int d() const { return d_; }
  int beta() const { return beta_; }

  int make(int x, int y) const { return static_cast<int>(x * q_ + y); }
  int x_of(int g) const { return static_cast<int>(g / q_); }
  int y_of(int g) const { return static_cast<int>(g % q_); }

  int zero() const { return 0; }
  int one() const { return one_; }
  int alpha() const { return alpha_; }

  int add(int a, int b) const;
  int sub(int a, int b) const;
  int neg(int a) const;
  int mul(int a, int b) const;
  int inv(int a) const;
  int pow(int a, std::int64_t e) const;

  int exp(std::int64_t k) const;    // beta^k
  std::int64_t log(int a) const;
  std::int64_t mul_order(int a) const;

  // N(x + y*alpha) = x^2 - y^2 d, a base-field element; equals g^(q+1)
  // for g != 0, and N(0) = 0.
  int norm(int g) const;
  int conjugate(int g) const;       // x - y*alpha = g^q
  bool is_square(int g) const;      // throws std::invalid_argument on 0

  std::string str(int g) const;
  nlohmann::json debug_json() const;

 private:
  explicit QuadExtContext(FieldContext base) : base_(std::move(base)) {}

  FieldContext base_;
  std::int64_t q_ = 0;
  std::int64_t order_ = 0;
  int d_ = 0;
  int beta_ = 0;
  int one_ = 0;
  int alpha_ = 0;
  std::vector<int> exp_;
  std::vector<std::int64_t> log_;
};

// Convenience: build the tower F_p -> F_q -> F_{q^2} for an odd prime
// power q. Throws std::invalid_argument when q is not one.
QuadExtContext build_tower(std::int64_t q, std::int64_t cap = kDefaultFieldCap);

// Exhaustive field-level invariants: d/beta choices, subfield squares,
// norm homomorphism/image/kernel, the -1/-d and norm squareness facts,
// alpha's squareness, and the square-subgroup index.
CheckList verify_field_invariants(const QuadExtContext& ctx);

// Coefficient-list parameters (p, m, modulus, d, beta) for certificates.
nlohmann::json field_parameters_json(const QuadExtContext& ctx);

}  // namespace paley

#endif  // PALEY_FINITE_FIELD_HPP
