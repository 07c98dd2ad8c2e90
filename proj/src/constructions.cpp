#include "paley/constructions.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace paley {

namespace {

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

OvalDecomposition build_oval_decomposition(const QuadExtContext& ctx) {
  const std::int64_t q = ctx.base_order();
  OvalDecomposition dec;
  dec.omega = ctx.pow(ctx.beta(), q - 1);
  dec.powers.reserve(static_cast<std::size_t>(q) + 1);
  int cur = ctx.one();
  for (std::int64_t j = 0; j <= q; ++j) {
    dec.powers.push_back(cur);
    (j % 2 == 0 ? dec.q0 : dec.q1).push_back(cur);
    cur = ctx.mul(cur, dec.omega);
  }
  if (cur != ctx.one())
    throw std::logic_error("omega does not have order q+1");
  return dec;
}

CheckList verify_oval_decomposition(const QuadExtContext& ctx,
                                    const OvalDecomposition& dec) {
  CheckList out;
  const std::int64_t q = ctx.base_order();
  {
    Check& c = out.emplace_back(Check{"constructions.omega_square_of_order_q_plus_1"});
    c.pass = dec.omega == ctx.pow(ctx.beta(), q - 1) && ctx.is_square(dec.omega) &&
             ctx.mul_order(dec.omega) == q + 1;
    c.detail["order"] = ctx.mul_order(dec.omega);
  }
  {
    Check& c = out.emplace_back(Check{"constructions.q_equals_norm_kernel"});
    std::vector<int> kernel;
    for (int g = 1; g < ctx.order(); ++g)
      if (ctx.norm(g) == ctx.base_field().one()) kernel.push_back(g);
    c.pass = sorted(dec.powers) == kernel;
    c.detail["size"] = kernel.size();
  }
  {
    Check& c = out.emplace_back(Check{"constructions.q0_q1_partition"});
    std::vector<int> all = dec.q0;
    all.insert(all.end(), dec.q1.begin(), dec.q1.end());
    std::sort(all.begin(), all.end());
    bool distinct = std::adjacent_find(all.begin(), all.end()) == all.end();
    c.pass = distinct &&
             static_cast<std::int64_t>(dec.q0.size()) == (q + 1) / 2 &&
             static_cast<std::int64_t>(dec.q1.size()) == (q + 1) / 2 &&
             all == sorted(dec.powers);
    c.detail["q0_size"] = dec.q0.size();
    c.detail["q1_size"] = dec.q1.size();
  }
  return out;
}

TheoremOneSets theorem1_sets(const QuadExtContext& ctx, const OvalDecomposition& dec) {
  const std::int64_t q = ctx.base_order();
  TheoremOneSets t;
  t.cliques = q % 4 == 3;
  t.expected_size = t.cliques ? (q + 3) / 2 : (q + 1) / 2;
  t.sets[0] = dec.q0;
  t.sets[1] = dec.q1;
  if (t.cliques) {
    t.sets[0].push_back(ctx.zero());
    t.sets[1].push_back(ctx.zero());
  }
  t.sets[0] = sorted(std::move(t.sets[0]));
  t.sets[1] = sorted(std::move(t.sets[1]));
  return t;
}

CheckList verify_theorem1(const PaleyGraph& pg, const TheoremOneSets& sets) {
  CheckList out;
  for (int i = 0; i < 2; ++i) {
    const std::vector<int>& s = sets.sets[static_cast<std::size_t>(i)];
    std::string label = "constructions.theorem1_set" + std::to_string(i);
    {
      Check& c = out.emplace_back(Check{label + "_size"});
      c.pass = static_cast<std::int64_t>(s.size()) == sets.expected_size;
      c.detail["size"] = s.size();
      c.detail["expected"] = sets.expected_size;
    }
    {
      Check& c = out.emplace_back(
          Check{label + (sets.cliques ? "_maximal_clique" : "_maximal_coclique")});
      c.pass = sets.cliques ? is_maximal_clique(pg.graph, s)
                            : is_maximal_coclique(pg.graph, s);
      c.detail["set"] = s;
    }
  }
  return out;
}

std::vector<int> subfield_clique(const QuadExtContext& ctx) {
  std::vector<int> s;
  for (int x = 0; x < ctx.base_order(); ++x) s.push_back(ctx.make(x, 0));
  return sorted(std::move(s));
}

std::array<std::vector<int>, 2> scaled_cliques(const QuadExtContext& ctx,
                                               const OvalDecomposition& dec, int s) {
  if (ctx.base_order() % 4 != 3)
    throw std::invalid_argument("scaled cliques need q = 3 (mod 4)");
  if (s == 0) throw std::invalid_argument("scale must be nonzero");
  const int se = ctx.make(s, 0);
  std::array<std::vector<int>, 2> out;
  for (int i = 0; i < 2; ++i) {
    for (int g : (i == 0 ? dec.q0 : dec.q1))
      out[static_cast<std::size_t>(i)].push_back(ctx.mul(se, g));
    out[static_cast<std::size_t>(i)].push_back(ctx.zero());
    out[static_cast<std::size_t>(i)] = sorted(std::move(out[static_cast<std::size_t>(i)]));
  }
  return out;
}

CheckList verify_scaled_cliques(const PaleyGraph& pg, const QuadExtContext& ctx,
                                const OvalDecomposition& dec) {
  CheckList out;
  const std::int64_t q = ctx.base_order();
  if (q % 4 != 3) return out;
  const FieldContext& F = ctx.base_field();
  {
    Check& c = out.emplace_back(Check{"constructions.scaled_cliques_all_s"});
    bool ok = true;
    for (int s = 1; s < q && ok; ++s) {
      auto pair = scaled_cliques(ctx, dec, s);
      for (const auto& set : pair)
        ok = ok && static_cast<std::int64_t>(set.size()) == (q + 3) / 2 &&
             is_clique(pg.graph, set);
    }
    c.pass = ok;
  }
  {
    // sQ is exactly the norm fibre over s^2.
    Check& c = out.emplace_back(Check{"constructions.scaled_norm_fibre"});
    bool ok = true;
    for (int s = 1; s < q && ok; ++s) {
      const int se = ctx.make(s, 0);
      const int s2 = F.mul(s, s);
      std::vector<int> sq;
      for (int g : dec.powers) sq.push_back(ctx.mul(se, g));
      std::sort(sq.begin(), sq.end());
      std::vector<int> fibre;
      for (int g = 1; g < ctx.order(); ++g)
        if (ctx.norm(g) == s2) fibre.push_back(g);
      ok = sq == fibre;
    }
    c.pass = ok;
  }
  {
    // Each nonzero square lies in exactly one set sQ.
    Check& c = out.emplace_back(Check{"constructions.squares_partition_into_norm_fibres"});
    std::set<std::vector<int>> fibres;
    for (int s = 1; s < q; ++s) {
      const int se = ctx.make(s, 0);
      std::vector<int> sq;
      for (int g : dec.powers) sq.push_back(ctx.mul(se, g));
      fibres.insert(sorted(std::move(sq)));
    }
    std::vector<int> covered;
    for (const auto& f : fibres) covered.insert(covered.end(), f.begin(), f.end());
    std::sort(covered.begin(), covered.end());
    bool distinct = std::adjacent_find(covered.begin(), covered.end()) == covered.end();
    std::vector<int> squares;
    for (int g = 1; g < ctx.order(); ++g)
      if (ctx.is_square(g)) squares.push_back(g);
    c.pass = distinct && covered == squares &&
             fibres.size() == static_cast<std::size_t>((q - 1) / 2);
    c.detail["fibres"] = fibres.size();
  }
  return out;
}

int apply_affine(const QuadExtContext& ctx, const AffineMap& m, int g) {
  if (m.mult == 0) throw std::invalid_argument("affine map with zero multiplier");
  return ctx.add(ctx.mul(m.mult, g), m.shift);
}

std::vector<int> apply_affine_set(const QuadExtContext& ctx, const AffineMap& m,
                                  std::span<const int> s) {
  std::vector<int> out;
  out.reserve(s.size());
  for (int g : s) out.push_back(apply_affine(ctx, m, g));
  return sorted(std::move(out));
}

std::array<AffineMap, 2> square_affine_generators(const QuadExtContext& ctx) {
  return {AffineMap{ctx.mul(ctx.beta(), ctx.beta()), 0},
          AffineMap{ctx.one(), ctx.one()}};
}

std::vector<std::vector<int>> orbit(const QuadExtContext& ctx,
                                    const std::vector<int>& start,
                                    std::span<const AffineMap> generators) {
  std::set<std::vector<int>> seen;
  std::deque<std::vector<int>> frontier;
  frontier.push_back(sorted(start));
  seen.insert(frontier.back());
  while (!frontier.empty()) {
    std::vector<int> cur = std::move(frontier.front());
    frontier.pop_front();
    for (const AffineMap& m : generators) {
      std::vector<int> img = apply_affine_set(ctx, m, cur);
      if (seen.insert(img).second) frontier.push_back(std::move(img));
    }
  }
  return {seen.begin(), seen.end()};
}

CheckList verify_affine_automorphisms(const PaleyGraph& pg, const QuadExtContext& ctx) {
  CheckList out;
  const int n = pg.graph.order();
  auto gens = square_affine_generators(ctx);
  std::vector<AffineMap> maps(gens.begin(), gens.end());
  maps.push_back(AffineMap{ctx.pow(ctx.beta(), ctx.base_order() - 1), 0});
  Check& c = out.emplace_back(Check{"constructions.square_affine_maps_are_automorphisms"});
  bool ok = true;
  for (const AffineMap& m : maps) {
    ok = ok && ctx.is_square(m.mult);
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int g = 0; g < n; ++g) img[static_cast<std::size_t>(g)] = apply_affine(ctx, m, g);
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v)
        ok = pg.graph.adjacent(u, v) ==
             pg.graph.adjacent(img[static_cast<std::size_t>(u)],
                               img[static_cast<std::size_t>(v)]);
    if (!ok) break;
  }
  c.pass = ok;
  return out;
}

CheckList verify_lemma_tq(const QuadExtContext& ctx, const OvalDecomposition& dec) {
  CheckList out;
  const std::int64_t q = ctx.base_order();
  const std::vector<Line> lines = all_lines(ctx);
  const OvalView oval = OvalView::norm_one_oval(ctx);
  const std::vector<int> q_sorted = sorted(dec.powers);
  const std::vector<int> q0_sorted = sorted(dec.q0);
  const std::vector<int> q1_sorted = sorted(dec.q1);

  // T_Q = {psi_{omega^j, 0}}; even j gives T_{Q0}, odd j gives T_{Q1}.
  std::vector<AffineMap> tq;
  for (std::int64_t j = 0; j <= q; ++j)
    tq.push_back(AffineMap{ctx.pow(dec.omega, j), 0});

  std::vector<Line> tangents;
  for (const Line& l : lines)
    if (oval.meet(l).count == 1) tangents.push_back(l);
  std::sort(tangents.begin(), tangents.end());

  auto image_line = [&](const AffineMap& m, const Line& l) -> std::pair<bool, Line> {
    std::vector<int> img = apply_affine_set(ctx, m, line_points(ctx, l));
    Line cand = line_through(ctx, img[0], img[1]);
    return {line_points(ctx, cand) == img, cand};
  };

  {
    Check& c = out.emplace_back(Check{"tq.1_maps_lines_to_lines"});
    bool ok = true;
    for (const AffineMap& m : tq)
      for (const Line& l : lines) {
        auto [is_line, img] = image_line(m, l);
        if (!is_line) {
          ok = false;
          c.detail["witness"] = {{"mult", m.mult}, {"slope", l.slope}, {"base", l.base}};
          break;
        }
      }
    c.pass = ok;
  }
  {
    Check& c = out.emplace_back(Check{"tq.2_stabilizes_oval"});
    bool ok = true;
    for (const AffineMap& m : tq)
      ok = ok && apply_affine_set(ctx, m, q_sorted) == q_sorted;
    c.pass = ok;
  }
  {
    Check& c = out.emplace_back(Check{"tq.3_transitive_on_oval_points"});
    std::vector<int> orbit_of_one;
    for (const AffineMap& m : tq) orbit_of_one.push_back(apply_affine(ctx, m, ctx.one()));
    c.pass = sorted(std::move(orbit_of_one)) == q_sorted;
  }
  {
    Check& c = out.emplace_back(Check{"tq.4_transitive_on_tangents"});
    bool ok = !tangents.empty();
    std::vector<Line> orbit_of_tangent;
    for (const AffineMap& m : tq) {
      auto [is_line, img] = image_line(m, tangents.front());
      ok = ok && is_line && oval.meet(img).count == 1;
      orbit_of_tangent.push_back(img);
    }
    std::sort(orbit_of_tangent.begin(), orbit_of_tangent.end());
    c.pass = ok && orbit_of_tangent == tangents;
    c.detail["tangents"] = tangents.size();
  }
  {
    Check& c = out.emplace_back(Check{"tq.5_tq0_stabilizes_and_transitive"});
    bool ok = true;
    std::vector<int> orbit0, orbit1;
    for (std::int64_t j = 0; j <= q; j += 2) {
      const AffineMap& m = tq[static_cast<std::size_t>(j)];
      ok = ok && apply_affine_set(ctx, m, q0_sorted) == q0_sorted &&
           apply_affine_set(ctx, m, q1_sorted) == q1_sorted;
      orbit0.push_back(apply_affine(ctx, m, ctx.one()));
      orbit1.push_back(apply_affine(ctx, m, dec.omega));
    }
    c.pass = ok && sorted(std::move(orbit0)) == q0_sorted &&
             sorted(std::move(orbit1)) == q1_sorted;
  }
  {
    Check& c = out.emplace_back(Check{"tq.6_tq1_swaps_q0_q1"});
    bool ok = true;
    for (std::int64_t j = 1; j <= q; j += 2) {
      const AffineMap& m = tq[static_cast<std::size_t>(j)];
      ok = ok && apply_affine_set(ctx, m, q0_sorted) == q1_sorted &&
           apply_affine_set(ctx, m, q1_sorted) == q0_sorted;
    }
    c.pass = ok;
  }
  {
    Check& c = out.emplace_back(Check{"tq.7_preserves_line_classes"});
    bool ok = true;
    for (const AffineMap& m : tq)
      for (const Line& l : lines) {
        auto [is_line, img] = image_line(m, l);
        if (!is_line || is_quadratic_line(ctx, img) != is_quadratic_line(ctx, l)) {
          ok = false;
          break;
        }
      }
    c.pass = ok;
  }
  return out;
}

QStructure adjacency_structure(const PaleyGraph& pg, const OvalDecomposition& dec) {
  const Graph& g = pg.graph;
  bool within = true, cross = true;   // within-part edges all present / absent?
  bool no_within = true, no_cross = true;
  for (int i = 0; i < 2; ++i) {
    const std::vector<int>& part = i == 0 ? dec.q0 : dec.q1;
    for (std::size_t a = 0; a < part.size(); ++a)
      for (std::size_t b = a + 1; b < part.size(); ++b) {
        if (g.adjacent(part[a], part[b]))
          no_within = false;
        else
          within = false;
      }
  }
  for (int u : dec.q0)
    for (int v : dec.q1) {
      if (g.adjacent(u, v))
        no_cross = false;
      else
        cross = false;
    }
  if (cross && no_within) return QStructure::kCompleteBipartite;
  if (within && no_cross) return QStructure::kTwoCliques;
  throw std::runtime_error("induced subgraph on Q has unexpected structure");
}

CheckList verify_adjacency_structure(const PaleyGraph& pg, const OvalDecomposition& dec) {
  CheckList out;
  Check& c = out.emplace_back(Check{"constructions.adjacency_structure_of_q"});
  try {
    QStructure s = adjacency_structure(pg, dec);
    bool expect_bipartite = pg.q % 4 == 1;
    c.pass = s == (expect_bipartite ? QStructure::kCompleteBipartite
                                    : QStructure::kTwoCliques);
    c.detail["structure"] =
        s == QStructure::kCompleteBipartite ? "complete-bipartite" : "two-cliques";
  } catch (const std::runtime_error& e) {
    c.pass = false;
    c.detail["error"] = e.what();
  }
  return out;
}

CheckList verify_neighbours_of_one(const PaleyGraph& pg, const OvalDecomposition& dec) {
  CheckList out;
  const Graph& g = pg.graph;
  const int one = dec.powers.front();
  const bool q1mod4 = pg.q % 4 == 1;
  // q = 1 (mod 4): 1 ~ every element of Q1, 1 !~ Q0 \ {1}; swapped classes
  // for q = 3 (mod 4).
  const std::vector<int>& friends = q1mod4 ? dec.q1 : dec.q0;
  const std::vector<int>& strangers = q1mod4 ? dec.q0 : dec.q1;
  Check& c = out.emplace_back(Check{"constructions.neighbours_of_one"});
  bool ok = true;
  for (int v : friends)
    if (v != one) ok = ok && g.adjacent(one, v);
  for (int v : strangers)
    if (v != one) ok = ok && !g.adjacent(one, v);
  c.pass = ok;
  c.detail["neighbours_in_q"] = static_cast<int>(friends.size()) - (q1mod4 ? 0 : 1);
  return out;
}

nlohmann::json theorem1_json(const QuadExtContext& ctx, const TheoremOneSets& sets) {
  nlohmann::json j;
  j["q"] = ctx.base_order();
  j["claim"] = sets.cliques ? "maximal cliques" : "maximal cocliques";
  j["expected_size"] = sets.expected_size;
  j["sets"] = {sets.sets[0], sets.sets[1]};
  return j;
}

}  // namespace paley
