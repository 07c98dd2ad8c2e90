#include "paley/paley_graph.hpp"

#include <stdexcept>
#include <thread>

#include "paley/errors.hpp"

namespace paley {

std::vector<int> Graph::neighbours(int u) const {
  std::vector<int> out;
  const Bitset& r = rows_[static_cast<std::size_t>(u)];
  out.reserve(static_cast<std::size_t>(r.count()));
  for (int v = r.find_first(); v >= 0; v = r.find_next(v)) out.push_back(v);
  return out;
}

PaleyGraph build_paley(const QuadExtContext& ctx, int cap) {
  const std::int64_t n = ctx.order();
  if (n % 4 != 1)
    throw std::invalid_argument("Paley graph needs order 1 mod 4");
  if (n > cap) throw CapExceeded("graph order exceeds vertex cap");

  const int nn = static_cast<int>(n);
  Graph g(nn);
  // The connection set, as a bitset over element indices.
  Bitset sq(nn);
  for (int a = 1; a < nn; ++a)
    if (ctx.is_square(a)) sq.set(a);
  for (int u = 0; u < nn; ++u)
    for (int v = u + 1; v < nn; ++v)
      if (sq.test(ctx.sub(v, u))) g.add_edge(u, v);
  return {ctx.base_order(), std::move(g)};
}

namespace {

void srg_scan_rows(const Graph& g, int lo, int hi, std::int64_t& k_out,
                   std::int64_t& lambda_out, std::int64_t& mu_out, int& bad_u,
                   int& bad_v) {
  const int n = g.order();
  std::int64_t k = -1, lambda = -1, mu = -1;
  for (int u = lo; u < hi; ++u) {
    std::int64_t deg = g.degree(u);
    if (k == -1)
      k = deg;
    else if (deg != k) {
      bad_u = u;
      bad_v = -1;
      return;
    }
    for (int v = u + 1; v < n; ++v) {
      std::int64_t common =
          static_cast<std::int64_t>(Bitset::and_count(g.row(u), g.row(v)));
      std::int64_t& slot = g.adjacent(u, v) ? lambda : mu;
      if (slot == -1)
        slot = common;
      else if (slot != common) {
        bad_u = u;
        bad_v = v;
        return;
      }
    }
  }
  k_out = k;
  lambda_out = lambda;
  mu_out = mu;
}

}  // namespace

SrgParams srg_parameters(const Graph& g, int threads) {
  const int n = g.order();
  if (n < 2) throw std::invalid_argument("graph too small");
  if (threads < 1) threads = 1;
  if (threads > n) threads = n;

  std::vector<std::int64_t> ks(static_cast<std::size_t>(threads), -1);
  std::vector<std::int64_t> lambdas(static_cast<std::size_t>(threads), -1);
  std::vector<std::int64_t> mus(static_cast<std::size_t>(threads), -1);
  std::vector<int> bad_us(static_cast<std::size_t>(threads), -2);
  std::vector<int> bad_vs(static_cast<std::size_t>(threads), -2);

  if (threads == 1) {
    srg_scan_rows(g, 0, n, ks[0], lambdas[0], mus[0], bad_us[0], bad_vs[0]);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) {
      int lo = static_cast<int>(static_cast<std::int64_t>(n) * t / threads);
      int hi = static_cast<int>(static_cast<std::int64_t>(n) * (t + 1) / threads);
      pool.emplace_back(srg_scan_rows, std::cref(g), lo, hi, std::ref(ks[t]),
                        std::ref(lambdas[t]), std::ref(mus[t]),
                        std::ref(bad_us[t]), std::ref(bad_vs[t]));
    }
    for (auto& th : pool) th.join();
  }

  SrgParams out{n, -1, -1, -1};
  for (int t = 0; t < threads; ++t) {
    if (bad_us[static_cast<std::size_t>(t)] != -2)
      throw NotStronglyRegular("common-neighbour counts are not constant",
                               bad_us[static_cast<std::size_t>(t)],
                               bad_vs[static_cast<std::size_t>(t)]);
    auto merge = [&](std::int64_t& acc, std::int64_t val) {
      if (val == -1) return;
      if (acc == -1)
        acc = val;
      else if (acc != val)
        throw NotStronglyRegular("parameter mismatch across row blocks", -1, -1);
    };
    merge(out.k, ks[static_cast<std::size_t>(t)]);
    merge(out.lambda, lambdas[static_cast<std::size_t>(t)]);
    merge(out.mu, mus[static_cast<std::size_t>(t)]);
  }
  if (out.k == -1 || out.lambda == -1 || out.mu == -1)
    throw std::invalid_argument("graph too small for SRG parameters");
  return out;
}

SrgParams expected_paley_srg(std::int64_t q) {
  const std::int64_t v = q * q;
  return {v, (v - 1) / 2, (v - 5) / 4, (v - 1) / 4};
}

Graph complement(const Graph& g) {
  const int n = g.order();
  Graph c(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) c.add_edge(u, v);
  return c;
}

bool verify_self_complementary(const PaleyGraph& pg, const QuadExtContext& ctx) {
  const Graph& g = pg.graph;
  const int n = g.order();
  if (n != ctx.order()) return false;
  // beta is a non-square, so multiplication by it swaps squares and
  // non-squares and hence edges with non-edges.
  const int b = ctx.beta();
  for (int u = 0; u < n; ++u) {
    int pu = ctx.mul(b, u);
    for (int v = u + 1; v < n; ++v) {
      int pv = ctx.mul(b, v);
      if (g.adjacent(u, v) == g.adjacent(pu, pv)) return false;
    }
  }
  return true;
}

bool is_clique(const Graph& g, std::span<const int> verts) {
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (!g.adjacent(verts[i], verts[j])) return false;
  return true;
}

bool is_coclique(const Graph& g, std::span<const int> verts) {
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (g.adjacent(verts[i], verts[j])) return false;
  return true;
}

namespace {

// True when some vertex outside verts relates to every member: adjacent
// for clique extension, non-adjacent for coclique extension.
bool has_extension(const Graph& g, std::span<const int> verts, bool clique) {
  const int n = g.order();
  Bitset in(n);
  for (int v : verts) in.set(v);
  for (int w = 0; w < n; ++w) {
    if (in.test(w)) continue;
    bool extends = true;
    for (int v : verts) {
      if (g.adjacent(w, v) != clique) {
        extends = false;
        break;
      }
    }
    if (extends) return true;
  }
  return false;
}

}  // namespace

bool is_maximal_clique(const Graph& g, std::span<const int> verts) {
  return is_clique(g, verts) && !has_extension(g, verts, true);
}

bool is_maximal_coclique(const Graph& g, std::span<const int> verts) {
  return is_coclique(g, verts) && !has_extension(g, verts, false);
}

void write_dimacs(const Graph& g, std::ostream& os) {
  const int n = g.order();
  os << "p edge " << n << " " << g.edge_count() << "\n";
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (g.adjacent(u, v)) os << "e " << u + 1 << " " << v + 1 << "\n";
}

nlohmann::json adjacency_json(const Graph& g) {
  static const char* hex = "0123456789abcdef";
  const int n = g.order();
  const int nibbles = (n + 3) / 4;
  nlohmann::json rows = nlohmann::json::array();
  for (int u = 0; u < n; ++u) {
    std::string s(static_cast<std::size_t>(nibbles), '0');
    for (int i = 0; i < nibbles; ++i) {
      int val = 0;
      for (int b = 0; b < 4; ++b) {
        int v = 4 * i + b;
        if (v < n && g.adjacent(u, v)) val |= 1 << b;
      }
      s[static_cast<std::size_t>(i)] = hex[val];
    }
    rows.push_back(std::move(s));
  }
  nlohmann::json j;
  j["n"] = n;
  j["rows"] = std::move(rows);
  return j;
}

CheckList verify_srg(const PaleyGraph& pg, const QuadExtContext& ctx, int threads) {
  CheckList out;
  const Graph& g = pg.graph;
  {
    Check& c = out.emplace_back(Check{"graph.srg_parameters"});
    try {
      SrgParams got = srg_parameters(g, threads);
      SrgParams want = expected_paley_srg(pg.q);
      c.pass = got == want;
      c.detail["v"] = got.v;
      c.detail["k"] = got.k;
      c.detail["lambda"] = got.lambda;
      c.detail["mu"] = got.mu;
    } catch (const NotStronglyRegular& e) {
      c.pass = false;
      c.detail["bad_pair"] = {e.u, e.v};
    }
  }
  {
    Check& c = out.emplace_back(Check{"graph.self_complementary"});
    c.pass = verify_self_complementary(pg, ctx);
  }
  {
    // The connection set is symmetric: -1 is a square in GF(q^2).
    Check& c = out.emplace_back(Check{"graph.connection_set_symmetric"});
    c.pass = ctx.is_square(ctx.neg(ctx.one()));
  }
  return out;
}

}  // namespace paley
