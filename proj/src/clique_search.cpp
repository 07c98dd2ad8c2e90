#include "paley/clique_search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "paley/errors.hpp"

namespace paley {

namespace {

struct BkFrame {
  std::vector<int> r;
  Bitset p;
  Bitset x;
};

// Pivot from p | x maximizing |p & N(u)|, ties to the least index.
int choose_pivot(const Graph& g, const Bitset& p, const Bitset& x) {
  Bitset u = p;
  u |= x;
  int best = -1, best_count = -1;
  for (int v = u.find_first(); v >= 0; v = u.find_next(v)) {
    int c = Bitset::and_count(p, g.row(v));
    if (c > best_count) {
      best_count = c;
      best = v;
    }
  }
  return best;
}

void expand(const Graph& g, BkFrame& f, const CliqueEnumOptions& opt,
            std::vector<std::vector<int>>& out) {
  if (f.p.none() && f.x.none()) {
    int sz = static_cast<int>(f.r.size());
    if (sz >= opt.min_size && sz <= opt.max_size) {
      std::vector<int> clique = f.r;
      std::sort(clique.begin(), clique.end());
      out.push_back(std::move(clique));
    }
    return;
  }
  if (static_cast<int>(f.r.size()) + f.p.count() < opt.min_size) return;

  const int pivot = choose_pivot(g, f.p, f.x);
  Bitset d = f.p;
  d.and_not(g.row(pivot));
  for (int v = d.find_first(); v >= 0; v = d.find_next(v)) {
    BkFrame child;
    child.r = f.r;
    child.r.push_back(v);
    child.p = f.p;
    child.p &= g.row(v);
    child.x = f.x;
    child.x &= g.row(v);
    expand(g, child, opt, out);
    f.p.reset(v);
    f.x.set(v);
  }
}

}  // namespace

CliqueEnumResult enumerate_maximal_cliques(const Graph& g, const CliqueEnumOptions& opt) {
  const int n = g.order();
  if (n > kEnumVertexCap) throw CapExceeded("graph exceeds enumeration vertex cap");
  CliqueEnumResult result;
  if (n == 0) return result;

  // Root branches are laid out serially so the merged output is the serial
  // emission order regardless of how workers pick tasks up.
  Bitset p(n), x(n);
  p.set_all();
  std::vector<BkFrame> tasks;
  {
    const int pivot = choose_pivot(g, p, x);
    Bitset d = p;
    d.and_not(g.row(pivot));
    for (int v = d.find_first(); v >= 0; v = d.find_next(v)) {
      BkFrame t;
      t.r = {v};
      t.p = p;
      t.p &= g.row(v);
      t.x = x;
      t.x &= g.row(v);
      tasks.push_back(std::move(t));
      p.reset(v);
      x.set(v);
    }
  }

  int threads = opt.threads < 1 ? 1 : opt.threads;
  if (threads > static_cast<int>(tasks.size())) threads = static_cast<int>(tasks.size());
  std::vector<std::vector<std::vector<int>>> slots(tasks.size());
  if (threads <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) expand(g, tasks[i], opt, slots[i]);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      while (true) {
        std::size_t i = next.fetch_add(1);
        if (i >= tasks.size()) return;
        expand(g, tasks[i], opt, slots[i]);
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  for (auto& slot : slots) {
    for (auto& clique : slot) {
      if (opt.limit > 0 &&
          static_cast<std::int64_t>(result.cliques.size()) == opt.limit) {
        result.truncated = true;
        break;
      }
      result.cliques.push_back(std::move(clique));
    }
    if (result.truncated) break;
  }
  std::sort(result.cliques.begin(), result.cliques.end());
  return result;
}

int clique_number(const Graph& g, int threads) {
  CliqueEnumOptions opt;
  opt.threads = threads;
  CliqueEnumResult r = enumerate_maximal_cliques(g, opt);
  int best = 0;
  for (const auto& c : r.cliques) best = std::max(best, static_cast<int>(c.size()));
  return best;
}

CliqueCensus census_from_result(const CliqueEnumResult& r, std::int64_t q,
                                std::span<const std::vector<int>> orbit_sets,
                                const CliqueEnumOptions& opt) {
  CliqueCensus out;
  out.q = q;
  out.options = opt;
  out.truncated = r.truncated;
  constexpr int kSamplesPerSize = 3;
  for (const auto& clique : r.cliques) {
    const int sz = static_cast<int>(clique.size());
    ++out.histogram[sz];
    if (std::binary_search(orbit_sets.begin(), orbit_sets.end(), clique))
      ++out.orbit_counts[sz];
    auto& sample = out.samples[sz];
    if (static_cast<int>(sample.size()) < kSamplesPerSize) sample.push_back(clique);
  }
  return out;
}

CliqueCensus census(const Graph& g, std::int64_t q,
                    std::span<const std::vector<int>> orbit_sets,
                    const CliqueEnumOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  CliqueEnumResult r = enumerate_maximal_cliques(g, opt);
  CliqueCensus out = census_from_result(r, q, orbit_sets, opt);
  out.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return out;
}

bool contains_set(const CliqueEnumResult& r, const std::vector<int>& s) {
  return std::binary_search(r.cliques.begin(), r.cliques.end(), s);
}

nlohmann::json census_json(const CliqueCensus& c) {
  nlohmann::json histogram = nlohmann::json::object();
  for (const auto& [size, count] : c.histogram)
    histogram[std::to_string(size)] = count;
  nlohmann::json orbit = nlohmann::json::object();
  for (const auto& [size, count] : c.orbit_counts)
    orbit[std::to_string(size)] = count;
  nlohmann::json j;
  j["q"] = c.q;
  j["histogram"] = std::move(histogram);
  j["orbit_counts"] = std::move(orbit);
  j["truncated"] = c.truncated;
  return j;
}

CheckList verify_enumeration_soundness(const Graph& g, const CliqueEnumResult& r) {
  CheckList out;
  constexpr std::size_t kFullCheckBudget = 200000;
  Check& c = out.emplace_back(Check{"search.emitted_sets_are_maximal_cliques"});
  bool ok = true;
  std::size_t stride = r.cliques.size() <= kFullCheckBudget
                           ? 1
                           : r.cliques.size() / kFullCheckBudget + 1;
  std::size_t checked = 0;
  for (std::size_t i = 0; i < r.cliques.size() && ok; i += stride) {
    ok = is_maximal_clique(g, r.cliques[i]);
    ++checked;
  }
  // Duplicates would break census counts; the list is sorted already.
  ok = ok && std::adjacent_find(r.cliques.begin(), r.cliques.end()) == r.cliques.end();
  c.pass = ok;
  c.detail["checked"] = checked;
  c.detail["total"] = r.cliques.size();
  return out;
}

}  // namespace paley
