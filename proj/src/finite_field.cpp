#include "paley/finite_field.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "paley/errors.hpp"

namespace paley {

namespace {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t f = 2; f * f <= n; ++f)
    if (n % f == 0) return false;
  return true;
}

std::vector<std::int64_t> distinct_prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      out.push_back(f);
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Dense polynomials over F_p, constant term first, no trailing-zero
// trimming required by callers.
using Poly = std::vector<int>;

int poly_deg(const Poly& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (a[i] != 0) return i;
  return -1;
}

Poly poly_mul(const Poly& a, const Poly& b, std::int64_t p) {
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = static_cast<int>((c[i + j] + static_cast<std::int64_t>(a[i]) * b[j]) % p);
  }
  return c;
}

// Remainder of a modulo monic b.
Poly poly_mod(Poly a, const Poly& b, std::int64_t p) {
  int db = poly_deg(b);
  for (int i = poly_deg(a); i >= db; --i) {
    int c = a[i];
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) {
      std::int64_t v = a[i - db + j] - static_cast<std::int64_t>(c) * b[j];
      a[i - db + j] = static_cast<int>(((v % p) + p) % p);
    }
  }
  a.resize(db > 0 ? db : 1, 0);
  return a;
}

bool poly_divides(const Poly& g, const Poly& f, std::int64_t p) {
  return poly_deg(poly_mod(f, g, p)) < 0;
}

}  // namespace

FieldContext FieldContext::build(std::int64_t p, int m, std::int64_t cap) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (p == 2) throw std::invalid_argument("p must be odd");
  if (m < 1) throw std::invalid_argument("degree m must be positive");

  std::int64_t q = 1;
  for (int i = 0; i < m; ++i) {
    if (q > cap / p) throw CapExceeded("field order p^m exceeds cap");
    q *= p;
  }

  FieldContext f;
  f.p_ = p;
  f.m_ = m;
  f.q_ = q;
  f.place_.resize(m);
  f.place_[m - 1] = 1;
  for (int i = m - 2; i >= 0; --i) f.place_[i] = f.place_[i + 1] * p;
  f.one_ = static_cast<int>(f.place_[0]);

  // Lexicographically least monic irreducible of degree m, scanning
  // coefficient vectors (c0, ..., c_{m-1}) with c0 most significant.
  // Irreducibility by trial division against all monic polynomials of
  // degree 1..m/2.
  for (std::int64_t r = 0; r < q; ++r) {
    Poly cand(m + 1, 0);
    cand[m] = 1;
    for (int i = 0; i < m; ++i)
      cand[i] = static_cast<int>((r / f.place_[i]) % p);
    bool irreducible = true;
    for (int dg = 1; irreducible && 2 * dg <= m; ++dg) {
      std::int64_t count = 1;
      for (int i = 0; i < dg; ++i) count *= p;
      for (std::int64_t rg = 0; rg < count; ++rg) {
        Poly g(dg + 1, 0);
        g[dg] = 1;
        std::int64_t v = rg;
        for (int i = dg - 1; i >= 0; --i) {
          g[i] = static_cast<int>(v % p);
          v /= p;
        }
        if (poly_divides(g, cand, p)) {
          irreducible = false;
          break;
        }
      }
    }
    if (irreducible) {
      f.modulus_ = cand;
      break;
    }
  }
  if (f.modulus_.empty())
    throw std::logic_error("no irreducible modulus found");  // unreachable

  // Construction-time multiplication through coefficient vectors; the
  // exp/log tables take over afterwards.
  auto decode = [&](int a) {
    Poly c(m, 0);
    for (int i = 0; i < m; ++i)
      c[i] = static_cast<int>((a / f.place_[i]) % p);
    return c;
  };
  auto encode = [&](const Poly& c) {
    std::int64_t r = 0;
    for (int i = 0; i < m; ++i) r += c[i] % p * f.place_[i];
    return static_cast<int>(r);
  };
  auto slow_mul = [&](int a, int b) {
    if (a == 0 || b == 0) return 0;
    return encode(poly_mod(poly_mul(decode(a), decode(b), p), f.modulus_, p));
  };
  auto slow_pow = [&](int a, std::int64_t e) {
    int r = f.one_;
    while (e > 0) {
      if (e & 1) r = slow_mul(r, a);
      a = slow_mul(a, a);
      e >>= 1;
    }
    return r;
  };

  const auto factors = distinct_prime_factors(q - 1);
  for (int a = 1; a < q; ++a) {
    bool primitive = true;
    for (std::int64_t fac : factors) {
      if (slow_pow(a, (q - 1) / fac) == f.one_) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      f.gen_ = a;
      break;
    }
  }
  if (f.gen_ == 0 && q > 2)
    throw std::logic_error("no primitive element found");  // unreachable

  f.exp_.assign(static_cast<std::size_t>(q - 1), 0);
  f.log_.assign(static_cast<std::size_t>(q), -1);
  int cur = f.one_;
  for (std::int64_t k = 0; k < q - 1; ++k) {
    f.exp_[static_cast<std::size_t>(k)] = cur;
    if (f.log_[static_cast<std::size_t>(cur)] != -1)
      throw std::logic_error("generator order below q-1");
    f.log_[static_cast<std::size_t>(cur)] = k;
    cur = slow_mul(cur, f.gen_);
  }
  if (cur != f.one_) throw std::logic_error("exp table period mismatch");
  return f;
}

int FieldContext::add(int a, int b) const {
  std::int64_t r = 0;
  for (int i = 0; i < m_; ++i) {
    std::int64_t da = (a / place_[i]) % p_;
    std::int64_t db = (b / place_[i]) % p_;
    r += (da + db) % p_ * place_[i];
  }
  return static_cast<int>(r);
}

int FieldContext::neg(int a) const {
  std::int64_t r = 0;
  for (int i = 0; i < m_; ++i) {
    std::int64_t da = (a / place_[i]) % p_;
    r += (p_ - da) % p_ * place_[i];
  }
  return static_cast<int>(r);
}

int FieldContext::sub(int a, int b) const { return add(a, neg(b)); }

int FieldContext::mul(int a, int b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[static_cast<std::size_t>((log_[a] + log_[b]) % (q_ - 1))];
}

int FieldContext::inv(int a) const {
  if (a == 0) throw std::invalid_argument("inverse of zero");
  return exp_[static_cast<std::size_t>((q_ - 1 - log_[a]) % (q_ - 1))];
}

int FieldContext::pow(int a, std::int64_t e) const {
  if (a == 0) {
    if (e <= 0) throw std::invalid_argument("0^e with e <= 0");
    return 0;
  }
  std::int64_t ord = q_ - 1;
  std::int64_t k = ((e % ord) + ord) % ord;
  return exp_[static_cast<std::size_t>(log_[a] * k % ord)];
}

int FieldContext::exp(std::int64_t k) const {
  std::int64_t ord = q_ - 1;
  return exp_[static_cast<std::size_t>(((k % ord) + ord) % ord)];
}

std::int64_t FieldContext::log(int a) const {
  if (a == 0) throw std::invalid_argument("log of zero");
  return log_[static_cast<std::size_t>(a)];
}

std::int64_t FieldContext::mul_order(int a) const {
  if (a == 0) throw std::invalid_argument("order of zero");
  return (q_ - 1) / std::gcd(q_ - 1, log_[static_cast<std::size_t>(a)]);
}

bool FieldContext::is_square(int a) const {
  if (a == 0) throw std::invalid_argument("squareness of zero is undefined");
  return pow(a, (q_ - 1) / 2) == one_;
}

int FieldContext::from_int(std::int64_t n) const {
  std::int64_t c = ((n % p_) + p_) % p_;
  return static_cast<int>(c * place_[0]);
}

std::vector<int> FieldContext::coeffs(int a) const {
  std::vector<int> c(static_cast<std::size_t>(m_));
  for (int i = 0; i < m_; ++i)
    c[static_cast<std::size_t>(i)] = static_cast<int>((a / place_[i]) % p_);
  return c;
}

int FieldContext::from_coeffs(const std::vector<int>& c) const {
  if (static_cast<int>(c.size()) != m_)
    throw std::invalid_argument("coefficient vector length mismatch");
  std::int64_t r = 0;
  for (int i = 0; i < m_; ++i) {
    int ci = c[static_cast<std::size_t>(i)];
    if (ci < 0 || ci >= p_) throw std::invalid_argument("coefficient out of range");
    r += ci * place_[i];
  }
  return static_cast<int>(r);
}

std::string FieldContext::str(int a) const {
  if (a == 0) return "0";
  std::ostringstream os;
  bool first = true;
  auto c = coeffs(a);
  for (int i = 0; i < m_; ++i) {
    if (c[static_cast<std::size_t>(i)] == 0) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0) {
      os << c[0];
    } else {
      if (c[static_cast<std::size_t>(i)] != 1) os << c[static_cast<std::size_t>(i)] << "*";
      os << "t";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

nlohmann::json FieldContext::debug_json() const {
  nlohmann::json j;
  j["p"] = p_;
  j["m"] = m_;
  j["q"] = q_;
  j["modulus"] = modulus_;
  j["generator"] = coeffs(gen_);
  nlohmann::json elems = nlohmann::json::array();
  for (int a = 0; a < q_; ++a) elems.push_back(coeffs(a));
  j["elements"] = std::move(elems);
  return j;
}

int least_nonsquare(const FieldContext& f) {
  for (int a = 1; a < f.order(); ++a)
    if (!f.is_square(a)) return a;
  throw std::logic_error("no non-square found");  // impossible for odd q
}

std::optional<PrimePower> factor_prime_power(std::int64_t q) {
  if (q < 2) return std::nullopt;
  std::int64_t p = 0;
  for (std::int64_t f = 2; f * f <= q; ++f) {
    if (q % f == 0) {
      p = f;
      break;
    }
  }
  if (p == 0) return PrimePower{q, 1};
  int m = 0;
  std::int64_t r = q;
  while (r % p == 0) {
    r /= p;
    ++m;
  }
  if (r != 1) return std::nullopt;
  return PrimePower{p, m};
}

std::vector<std::int64_t> odd_prime_powers_upto(std::int64_t limit) {
  std::vector<std::int64_t> out;
  for (std::int64_t q = 3; q <= limit; q += 2) {
    auto pp = factor_prime_power(q);
    if (pp && pp->p != 2) out.push_back(q);
  }
  return out;
}

QuadExtContext QuadExtContext::build(FieldContext base, std::int64_t cap) {
  const std::int64_t q = base.order();
  if (q > cap / q) throw CapExceeded("extension order q^2 exceeds cap");

  QuadExtContext c(std::move(base));
  c.q_ = q;
  c.order_ = q * q;
  c.d_ = least_nonsquare(c.base_);
  c.one_ = c.make(c.base_.one(), 0);
  c.alpha_ = c.make(0, c.base_.one());

  // Pair-formula multiplication, used until the exp/log tables exist.
  auto slow_mul = [&](int a, int b) {
    const auto& F = c.base_;
    int xa = c.x_of(a), ya = c.y_of(a);
    int xb = c.x_of(b), yb = c.y_of(b);
    int x = F.add(F.mul(xa, xb), F.mul(c.d_, F.mul(ya, yb)));
    int y = F.add(F.mul(xa, yb), F.mul(xb, ya));
    return c.make(x, y);
  };
  auto slow_pow = [&](int a, std::int64_t e) {
    int r = c.one_;
    while (e > 0) {
      if (e & 1) r = slow_mul(r, a);
      a = slow_mul(a, a);
      e >>= 1;
    }
    return r;
  };

  const std::int64_t n = c.order_ - 1;
  const auto factors = distinct_prime_factors(n);
  for (int a = 1; a < c.order_; ++a) {
    bool primitive = true;
    for (std::int64_t fac : factors) {
      if (slow_pow(a, n / fac) == c.one_) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      c.beta_ = a;
      break;
    }
  }
  if (c.beta_ == 0) throw std::logic_error("no primitive element in extension");

  c.exp_.assign(static_cast<std::size_t>(n), 0);
  c.log_.assign(static_cast<std::size_t>(c.order_), -1);
  int cur = c.one_;
  for (std::int64_t k = 0; k < n; ++k) {
    c.exp_[static_cast<std::size_t>(k)] = cur;
    if (c.log_[static_cast<std::size_t>(cur)] != -1)
      throw std::logic_error("extension generator order below q^2-1");
    c.log_[static_cast<std::size_t>(cur)] = k;
    cur = slow_mul(cur, c.beta_);
  }
  if (cur != c.one_) throw std::logic_error("extension exp table period mismatch");
  return c;
}

int QuadExtContext::add(int a, int b) const {
  return make(base_.add(x_of(a), x_of(b)), base_.add(y_of(a), y_of(b)));
}

int QuadExtContext::neg(int a) const {
  return make(base_.neg(x_of(a)), base_.neg(y_of(a)));
}

int QuadExtContext::sub(int a, int b) const { return add(a, neg(b)); }

int QuadExtContext::mul(int a, int b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[static_cast<std::size_t>((log_[a] + log_[b]) % (order_ - 1))];
}

int QuadExtContext::inv(int a) const {
  if (a == 0) throw std::invalid_argument("inverse of zero");
  return exp_[static_cast<std::size_t>((order_ - 1 - log_[a]) % (order_ - 1))];
}

int QuadExtContext::pow(int a, std::int64_t e) const {
  if (a == 0) {
    if (e <= 0) throw std::invalid_argument("0^e with e <= 0");
    return 0;
  }
  std::int64_t ord = order_ - 1;
  std::int64_t k = ((e % ord) + ord) % ord;
  return exp_[static_cast<std::size_t>(log_[a] * k % ord)];
}

int QuadExtContext::exp(std::int64_t k) const {
  std::int64_t ord = order_ - 1;
  return exp_[static_cast<std::size_t>(((k % ord) + ord) % ord)];
}

std::int64_t QuadExtContext::log(int a) const {
  if (a == 0) throw std::invalid_argument("log of zero");
  return log_[static_cast<std::size_t>(a)];
}

std::int64_t QuadExtContext::mul_order(int a) const {
  if (a == 0) throw std::invalid_argument("order of zero");
  return (order_ - 1) / std::gcd(order_ - 1, log_[static_cast<std::size_t>(a)]);
}

int QuadExtContext::norm(int g) const {
  int x = x_of(g), y = y_of(g);
  int n = base_.sub(base_.mul(x, x), base_.mul(d_, base_.mul(y, y)));
  // Exponentiation route g^(q+1) must agree; checked when assertions are on.
  assert(g == 0 || pow(g, q_ + 1) == make(n, 0));
  return n;
}

int QuadExtContext::conjugate(int g) const {
  return make(x_of(g), base_.neg(y_of(g)));
}

bool QuadExtContext::is_square(int g) const {
  if (g == 0) throw std::invalid_argument("squareness of zero is undefined");
  return pow(g, (order_ - 1) / 2) == one_;
}

std::string QuadExtContext::str(int g) const {
  int x = x_of(g), y = y_of(g);
  if (g == 0) return "0";
  std::string sx = base_.degree() > 1 ? "(" + base_.str(x) + ")" : base_.str(x);
  std::string sy = base_.degree() > 1 ? "(" + base_.str(y) + ")" : base_.str(y);
  if (y == 0) return sx;
  std::string ya = (y == base_.one()) ? "a" : sy + "*a";
  if (x == 0) return ya;
  return sx + "+" + ya;
}

nlohmann::json QuadExtContext::debug_json() const {
  nlohmann::json j;
  j["q"] = q_;
  j["order"] = order_;
  j["base_modulus"] = base_.modulus();
  j["d"] = base_.coeffs(d_);
  j["beta"] = {{"x", base_.coeffs(x_of(beta_))}, {"y", base_.coeffs(y_of(beta_))}};
  nlohmann::json elems = nlohmann::json::array();
  for (int g = 0; g < order_; ++g)
    elems.push_back({{"x", base_.coeffs(x_of(g))}, {"y", base_.coeffs(y_of(g))}});
  j["elements"] = std::move(elems);
  return j;
}

QuadExtContext build_tower(std::int64_t q, std::int64_t cap) {
  auto pp = factor_prime_power(q);
  if (!pp) throw std::invalid_argument("q is not a prime power");
  if (pp->p == 2) throw std::invalid_argument("q must be odd");
  return QuadExtContext::build(FieldContext::build(pp->p, pp->m, cap), cap);
}

CheckList verify_field_invariants(const QuadExtContext& ctx) {
  CheckList out;
  const FieldContext& F = ctx.base_field();
  const std::int64_t q = ctx.base_order();
  const std::int64_t n = ctx.order();

  {
    Check& c = out.emplace_back(Check{"field.d_is_least_nonsquare"});
    c.pass = ctx.d() == least_nonsquare(F) && !F.is_square(ctx.d()) &&
             F.pow(ctx.d(), (q - 1) / 2) == F.neg(F.one());
    c.detail["d"] = F.coeffs(ctx.d());
  }
  {
    Check& c = out.emplace_back(Check{"field.beta_order"});
    c.pass = ctx.mul_order(ctx.beta()) == n - 1;
    c.detail["order"] = ctx.mul_order(ctx.beta());
  }
  {
    // Round-trip and period of the exp/log tables, exhaustively.
    Check& c = out.emplace_back(Check{"field.exp_log_roundtrip"});
    bool ok = ctx.exp(n - 1) == ctx.one();
    for (int g = 1; ok && g < n; ++g) ok = ctx.exp(ctx.log(g)) == g;
    for (int a = 1; ok && a < q; ++a) ok = F.exp(F.log(a)) == a;
    c.pass = ok;
  }
  {
    // Base-field units are squares in the extension.
    Check& c = out.emplace_back(Check{"field.subfield_units_are_squares"});
    bool ok = true;
    int witness = -1;
    for (int x = 1; x < q && ok; ++x) {
      if (!ctx.is_square(ctx.make(x, 0))) {
        ok = false;
        witness = x;
      }
    }
    c.pass = ok;
    if (!ok) c.detail["witness"] = witness;
  }
  {
    // Multiplicativity of the norm over every pair of units.
    Check& c = out.emplace_back(Check{"field.norm_homomorphism"});
    bool ok = true;
    for (int a = 1; a < n && ok; ++a)
      for (int b = a; b < n && ok; ++b)
        ok = ctx.norm(ctx.mul(a, b)) == F.mul(ctx.norm(a), ctx.norm(b));
    c.pass = ok;
  }
  {
    Check& c = out.emplace_back(Check{"field.norm_image_is_base_units"});
    std::vector<char> hit(static_cast<std::size_t>(q), 0);
    bool zero_hit = false;
    for (int g = 1; g < n; ++g) {
      int v = ctx.norm(g);
      if (v == 0)
        zero_hit = true;
      else
        hit[static_cast<std::size_t>(v)] = 1;
    }
    bool all = !zero_hit;
    for (int v = 1; v < q; ++v) all = all && hit[static_cast<std::size_t>(v)];
    c.pass = all;
  }
  {
    Check& c = out.emplace_back(Check{"field.norm_kernel_size"});
    std::int64_t k = 0;
    for (int g = 1; g < n; ++g)
      if (ctx.norm(g) == F.one()) ++k;
    c.pass = k == q + 1;
    c.detail["kernel_size"] = k;
    c.detail["expected"] = q + 1;
  }
  {
    // Norm-one elements are squares in the extension.
    Check& c = out.emplace_back(Check{"field.kernel_elements_are_squares"});
    bool ok = true;
    for (int g = 1; g < n && ok; ++g)
      if (ctx.norm(g) == F.one()) ok = ctx.is_square(g);
    c.pass = ok;
  }
  {
    // -1 is a base-field square exactly when q = 1 (mod 4).
    Check& c = out.emplace_back(Check{"field.minus_one_square_iff_q_1_mod_4"});
    c.pass = F.is_square(F.neg(F.one())) == (q % 4 == 1);
  }
  {
    // -d' is a square for every non-square d' exactly when q = 3 (mod 4).
    Check& c = out.emplace_back(Check{"field.minus_nonsquare_square_iff_q_3_mod_4"});
    bool ok = true;
    for (int x = 1; x < q && ok; ++x)
      if (!F.is_square(x)) ok = F.is_square(F.neg(x)) == (q % 4 == 3);
    c.pass = ok;
  }
  {
    // Extension squareness matches base squareness of the norm, everywhere.
    Check& c = out.emplace_back(Check{"field.square_iff_norm_square"});
    bool ok = true;
    int witness = -1;
    for (int g = 1; g < n && ok; ++g) {
      if (ctx.is_square(g) != F.is_square(ctx.norm(g))) {
        ok = false;
        witness = g;
      }
    }
    c.pass = ok;
    if (!ok) c.detail["witness"] = witness;
  }
  {
    Check& c = out.emplace_back(Check{"field.alpha_square_iff_q_3_mod_4"});
    c.pass = ctx.is_square(ctx.alpha()) == (q % 4 == 3);
  }
  {
    Check& c = out.emplace_back(Check{"field.squares_have_index_two"});
    std::int64_t squares = 0;
    for (int g = 1; g < n; ++g)
      if (ctx.is_square(g)) ++squares;
    c.pass = squares == (n - 1) / 2;
    c.detail["count"] = squares;
  }
  return out;
}

nlohmann::json field_parameters_json(const QuadExtContext& ctx) {
  const FieldContext& F = ctx.base_field();
  nlohmann::json j;
  j["p"] = F.p();
  j["m"] = F.degree();
  j["q"] = ctx.base_order();
  j["base_modulus"] = F.modulus();
  j["d"] = F.coeffs(ctx.d());
  j["beta"] = {{"x", F.coeffs(ctx.x_of(ctx.beta()))},
               {"y", F.coeffs(ctx.y_of(ctx.beta()))}};
  return j;
}

}  // namespace paley
