#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "paley/affine_plane.hpp"
#include "paley/certificate.hpp"
#include "paley/clique_search.hpp"
#include "paley/constructions.hpp"
#include "paley/errors.hpp"
#include "paley/finite_field.hpp"
#include "paley/paley_graph.hpp"
#include "paley/spectral.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

constexpr std::int64_t kVerifyMaxQ = 101;
constexpr std::int64_t kFullCensusMaxQ = 13;
constexpr std::int64_t kWindowedCensusMaxQ = 17;
constexpr std::int64_t kLemmaTqMaxQ = 13;

struct CommonArgs {
  std::int64_t q = 0;
  int threads = 1;
  std::int64_t cap = 0;  // 0: policy defaults
  std::string out;
};

std::int64_t effective_q_cap(const CommonArgs& args, std::int64_t policy_cap) {
  if (args.cap > 0) {
    std::cerr << "warning: size limits raised to q <= " << args.cap << "\n";
    return args.cap;
  }
  return policy_cap;
}

paley::QuadExtContext build_checked_tower(std::int64_t q) {
  auto pp = paley::factor_prime_power(q);
  if (!pp || pp->p == 2 || q < 3)
    throw CLI::ValidationError("--q", "q must be an odd prime power");
  std::int64_t field_cap = std::max(paley::kDefaultFieldCap, q * q);
  return paley::build_tower(q, field_cap);
}

paley::PaleyGraph build_graph(const paley::QuadExtContext& ctx) {
  int graph_cap = paley::kDefaultGraphCap;
  if (ctx.order() > graph_cap) graph_cap = static_cast<int>(ctx.order());
  return paley::build_paley(ctx, graph_cap);
}

void emit(const paley::Certificate& cert, const std::string& out) {
  if (out.empty()) {
    std::cout << cert.dump();
    return;
  }
  std::ofstream os(out);
  if (!os) throw std::runtime_error("cannot open output file: " + out);
  os << cert.dump();
}

int run_info(const CommonArgs& args) {
  std::int64_t qcap = effective_q_cap(args, kVerifyMaxQ);
  if (args.q > qcap) {
    std::cerr << "error: q exceeds the size limit " << qcap << "\n";
    return kExitCap;
  }
  paley::QuadExtContext ctx = build_checked_tower(args.q);
  const std::int64_t q = ctx.base_order();
  paley::SrgParams p = paley::expected_paley_srg(q);
  auto [theta1, theta2] = paley::paley_eigenvalues(q);
  nlohmann::json field = paley::field_parameters_json(ctx);

  std::cout << "P(" << q * q << "), q = " << q << " = " << ctx.base_field().p()
            << "^" << ctx.base_field().degree() << "\n";
  std::cout << "srg parameters: v = " << p.v << ", k = " << p.k
            << ", lambda = " << p.lambda << ", mu = " << p.mu << "\n";
  std::cout << "eigenvalues: k = " << p.k << ", theta1 = " << theta1
            << ", theta2 = " << theta2 << "\n";
  std::cout << "delsarte bound: " << q << " (met by the subfield clique)\n";
  if (q % 4 == 1)
    std::cout << "oval split: two maximal cocliques of size " << (q + 1) / 2
              << " (q = 1 mod 4), eigenfunction theta = " << theta2 << "\n";
  else
    std::cout << "oval split: two maximal cliques of size " << (q + 3) / 2
              << " (q = 3 mod 4), eigenfunction theta = " << theta1 << "\n";
  std::cout << "eigenfunction support: " << q + 1
            << " = weight-distribution bound\n";
  std::cout << "field setup: modulus " << field["base_modulus"].dump()
            << ", d " << field["d"].dump() << ", beta " << field["beta"].dump()
            << "\n";
  return kExitPass;
}

int run_verify(const CommonArgs& args, bool all, bool theorem1, bool theorem2,
               bool lemmas) {
  if (static_cast<int>(all) + static_cast<int>(theorem1) +
          static_cast<int>(theorem2) + static_cast<int>(lemmas) !=
      1)
    throw CLI::ValidationError(
        "verify", "choose exactly one of --all/--theorem1/--theorem2/--lemmas");
  std::int64_t qcap = effective_q_cap(args, kVerifyMaxQ);
  if (args.q > qcap) {
    std::cerr << "error: q exceeds the size limit " << qcap << "\n";
    return kExitCap;
  }

  const auto start = std::chrono::steady_clock::now();
  paley::QuadExtContext ctx = build_checked_tower(args.q);
  paley::PaleyGraph pg = build_graph(ctx);
  paley::OvalDecomposition dec = paley::build_oval_decomposition(ctx);

  paley::Certificate cert("verify");
  cert.set_q(args.q);
  nlohmann::json params = paley::field_parameters_json(ctx);
  params["suite"] = all ? "all" : theorem1 ? "theorem1" : theorem2 ? "theorem2" : "lemmas";
  cert.set_parameters(params);

  if (all || lemmas) {
    cert.add_checks(paley::verify_field_invariants(ctx));
    cert.add_checks(paley::verify_affine_plane(ctx));
    paley::OvalView oval = paley::OvalView::norm_one_oval(ctx);
    cert.add_checks(paley::verify_oval_axioms(ctx, oval));
    cert.add_checks(paley::verify_adjacency_structure(pg, dec));
    cert.add_checks(paley::verify_neighbours_of_one(pg, dec));
    cert.add_checks(paley::verify_affine_automorphisms(pg, ctx));
    if (args.q <= kLemmaTqMaxQ) cert.add_checks(paley::verify_lemma_tq(ctx, dec));
  }
  if (all) {
    cert.add_checks(paley::verify_srg(pg, ctx, args.threads));
  }
  if (all || theorem1) {
    cert.add_checks(paley::verify_oval_decomposition(ctx, dec));
    paley::TheoremOneSets sets = paley::theorem1_sets(ctx, dec);
    cert.add_checks(paley::verify_theorem1(pg, sets));
    cert.add_checks(paley::verify_scaled_cliques(pg, ctx, dec));
    {
      paley::Check& subfield = cert.add_check("constructions.subfield_maximal_clique");
      std::vector<int> s = paley::subfield_clique(ctx);
      subfield.pass = static_cast<std::int64_t>(s.size()) == args.q &&
                      paley::is_maximal_clique(pg.graph, s);
      subfield.detail["size"] = s.size();
    }
    cert.set_payload("theorem1", paley::theorem1_json(ctx, sets));
  }
  if (all || theorem2) {
    cert.add_checks(paley::verify_eigenvalue_identities(args.q));
    cert.add_checks(paley::verify_theorem2(pg, ctx, dec, args.threads));
    paley::Eigenfunction f =
        paley::build_oval_eigenfunction(ctx, dec);
    cert.set_payload("eigenfunction", paley::eigenfunction_json(ctx, f));
  }

  cert.set_timing_ms(std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count());
  emit(cert, args.out);
  return cert.all_pass() ? kExitPass : kExitCheckFailure;
}

int run_cliques(const CommonArgs& args, int size, std::int64_t limit, bool complement) {
  const bool windowed = size > 0;
  std::int64_t qcap =
      effective_q_cap(args, windowed ? kWindowedCensusMaxQ : kFullCensusMaxQ);
  if (args.q > qcap) {
    std::cerr << "error: census at q = " << args.q << " exceeds the policy limit "
              << qcap << (windowed ? " (windowed)" : " (full)") << "\n";
    return kExitCap;
  }

  const auto start = std::chrono::steady_clock::now();
  paley::QuadExtContext ctx = build_checked_tower(args.q);
  paley::PaleyGraph pg = build_graph(ctx);
  paley::OvalDecomposition dec = paley::build_oval_decomposition(ctx);
  paley::Graph graph = complement ? paley::complement(pg.graph) : pg.graph;

  // The Theorem 1 sets are cliques of this graph exactly when the
  // congruence and the complement flag line up.
  paley::TheoremOneSets sets = paley::theorem1_sets(ctx, dec);
  const bool sets_are_cliques_here = sets.cliques != complement;
  std::vector<std::vector<int>> orbit_sets;
  if (sets_are_cliques_here) {
    auto gens = paley::square_affine_generators(ctx);
    for (const auto& s : sets.sets)
      for (auto& member : paley::orbit(ctx, s, gens))
        orbit_sets.push_back(std::move(member));
    std::sort(orbit_sets.begin(), orbit_sets.end());
    orbit_sets.erase(std::unique(orbit_sets.begin(), orbit_sets.end()),
                     orbit_sets.end());
  }

  paley::CliqueEnumOptions opt;
  if (windowed) {
    opt.min_size = size;
    opt.max_size = size;
  }
  opt.limit = limit;
  opt.threads = args.threads;
  paley::CliqueEnumResult enumerated = paley::enumerate_maximal_cliques(graph, opt);
  paley::CliqueCensus c = paley::census_from_result(enumerated, args.q, orbit_sets, opt);

  paley::Certificate cert("cliques");
  cert.set_q(args.q);
  nlohmann::json params = paley::field_parameters_json(ctx);
  params["complement"] = complement;
  if (windowed) params["size"] = size;
  if (limit > 0) params["limit"] = limit;
  cert.set_parameters(params);

  cert.add_checks(paley::verify_enumeration_soundness(graph, enumerated));
  if (sets_are_cliques_here && !c.truncated &&
      (!windowed || size == sets.expected_size)) {
    paley::Check& chk = cert.add_check("search.theorem1_sets_enumerated");
    chk.pass = paley::contains_set(enumerated, sets.sets[0]) &&
               paley::contains_set(enumerated, sets.sets[1]);
    paley::Check& orb = cert.add_check("search.orbit_subcount");
    auto it = c.orbit_counts.find(static_cast<int>(sets.expected_size));
    orb.pass = it != c.orbit_counts.end() && it->second >= 2 &&
               it->second <= static_cast<std::int64_t>(orbit_sets.size());
    orb.detail["orbit_size"] = orbit_sets.size();
  }
  cert.set_payload("census", paley::census_json(c));

  cert.set_timing_ms(std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count());
  emit(cert, args.out);
  if (c.truncated) {
    std::cerr << "warning: clique budget reached, census truncated\n";
    return kExitCap;
  }
  return cert.all_pass() ? kExitPass : kExitCheckFailure;
}

int run_export(const CommonArgs& args, const std::string& what,
               const std::string& format) {
  std::int64_t qcap = effective_q_cap(args, kVerifyMaxQ);
  if (args.q > qcap) {
    std::cerr << "error: q exceeds the size limit " << qcap << "\n";
    return kExitCap;
  }
  paley::QuadExtContext ctx = build_checked_tower(args.q);

  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!args.out.empty()) {
    file.open(args.out);
    if (!file) {
      std::cerr << "error: cannot open output file: " << args.out << "\n";
      return kExitUsage;
    }
    os = &file;
  }

  if (what == "graph") {
    paley::PaleyGraph pg = build_graph(ctx);
    if (format == "dimacs") {
      paley::write_dimacs(pg.graph, *os);
      return kExitPass;
    }
    if (format == "json") {
      *os << paley::adjacency_json(pg.graph).dump(2) << "\n";
      return kExitPass;
    }
  } else if (what == "eigenfunction") {
    paley::OvalDecomposition dec = paley::build_oval_decomposition(ctx);
    paley::Eigenfunction f = paley::build_oval_eigenfunction(ctx, dec);
    if (format == "json") {
      *os << paley::eigenfunction_json(ctx, f).dump(2) << "\n";
      return kExitPass;
    }
    if (format == "csv") {
      paley::write_eigenfunction_csv(f, *os);
      return kExitPass;
    }
  } else if (what == "sets") {
    paley::OvalDecomposition dec = paley::build_oval_decomposition(ctx);
    if (format == "json") {
      nlohmann::json j;
      j["theorem1"] = paley::theorem1_json(ctx, paley::theorem1_sets(ctx, dec));
      j["subfield_clique"] = paley::subfield_clique(ctx);
      *os << j.dump(2) << "\n";
      return kExitPass;
    }
  }
  std::cerr << "error: unsupported what/format combination: " << what << "/"
            << format << "\n";
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"paleycert: exact constructions, verification and clique censuses "
               "for Paley graphs of square order"};
  app.require_subcommand(1);

  CommonArgs info_args, verify_args, cliques_args, export_args;

  CLI::App* info = app.add_subcommand("info", "Print parameters for P(q^2)");
  info->add_option("--q", info_args.q, "odd prime power")->required();
  info->add_option("--cap", info_args.cap, "raise the size limits");

  CLI::App* verify =
      app.add_subcommand("verify", "Verify claims and emit a certificate");
  bool all = false, theorem1 = false, theorem2 = false, lemmas = false;
  verify->add_option("--q", verify_args.q, "odd prime power")->required();
  verify->add_flag("--all", all, "every suite");
  verify->add_flag("--theorem1", theorem1, "maximal clique/coclique suite");
  verify->add_flag("--theorem2", theorem2, "eigenfunction suite");
  verify->add_flag("--lemmas", lemmas, "field, plane, oval and group action suite");
  verify->add_option("--threads", verify_args.threads, "worker threads");
  verify->add_option("--cap", verify_args.cap, "raise the size limits");
  verify->add_option("--out", verify_args.out, "write the certificate here");

  CLI::App* cliques =
      app.add_subcommand("cliques", "Enumerate maximal cliques and emit a census");
  int size = 0;
  std::int64_t limit = 0;
  bool use_complement = false;
  cliques->add_option("--q", cliques_args.q, "odd prime power")->required();
  cliques->add_option("--size", size, "census exactly this clique size");
  cliques->add_option("--limit", limit, "clique output budget");
  cliques->add_flag("--complement", use_complement, "census the complement graph");
  cliques->add_option("--threads", cliques_args.threads, "worker threads");
  cliques->add_option("--cap", cliques_args.cap, "raise the size limits");
  cliques->add_option("--out", cliques_args.out, "write the certificate here");

  CLI::App* exp = app.add_subcommand("export", "Write graphs, functions or sets");
  std::string what = "graph", format = "dimacs";
  exp->add_option("--q", export_args.q, "odd prime power")->required();
  exp->add_option("--what", what, "graph | eigenfunction | sets");
  exp->add_option("--format", format, "dimacs | json | csv");
  exp->add_option("--cap", export_args.cap, "raise the size limits");
  exp->add_option("--out", export_args.out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (info->parsed()) return run_info(info_args);
    if (verify->parsed())
      return run_verify(verify_args, all, theorem1, theorem2, lemmas);
    if (cliques->parsed())
      return run_cliques(cliques_args, size, limit, use_complement);
    if (exp->parsed()) return run_export(export_args, what, format);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const paley::CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailure;
  }
  return kExitUsage;
}
