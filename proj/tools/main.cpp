#include <iostream>

#include <CLI11.hpp>

#include "gkn/error.hpp"
#include "run_config.hpp"

using namespace gkn::cli;

int main(int argc, char** argv) {
  CLI::App app{"gkn: build and verify parity-hypergraph lower-bound constructions"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::uint64_t seed = 0;
  std::string shard;

  const auto add_seed = [&](CLI::App* sub) { sub->add_option("--seed", seed, "RNG seed (required for randomness)"); };

  auto* construct = app.add_subcommand("construct", "sample a coloring and write coloring, G and H files");
  construct->add_option("--k", cfg.k, "uniformity of H")->required();
  construct->add_option("--N", cfg.n_ground, "ground-set size")->required();
  add_seed(construct);
  construct->add_flag("--allow-k4", cfg.allow_k4, "accept k = 4");
  construct->add_option("--out", cfg.out_dir, "output directory");
  construct->add_option("--prefix", cfg.prefix, "output file prefix");
  construct->add_option("--planted", cfg.planted, "plant up to this many G-edges before random filling");

  auto* verify = app.add_subcommand("verify", "sweep every (k+1)-set and k-set and check the claims");
  verify->add_option("--coloring", cfg.coloring, "coloring file")->required();
  verify->add_option("--graph", cfg.graph, "use this G edge list instead of rebuilding G");
  verify->add_option("--shard", shard, "i/n: check only shard i of n");
  verify->add_option("--report", cfg.report, "write the report here");
  verify->add_flag("--allow-k4", cfg.allow_k4, "accept k = 4");

  auto* alpha = app.add_subcommand("alpha", "independence number of an edge list");
  alpha->add_option("--input", cfg.input, "edge-list file")->required();
  alpha->add_option("--budget", cfg.node_budget, "node budget (0 = unlimited)");

  auto* search = app.add_subcommand("search", "search seeds for a small independence number");
  search->add_option("--k", cfg.k)->required();
  search->add_option("--N", cfg.n_ground)->required();
  search->add_option("--n", cfg.n_target, "target independent-set size")->required();
  search->add_option("--trials", cfg.trials)->required();
  add_seed(search);
  search->add_option("--cert", cfg.cert, "write the best certificate here");
  search->add_flag("--allow-k4", cfg.allow_k4, "accept k = 4");

  auto* prob = app.add_subcommand("prob-bound", "exact edge probability, packing size and union bound");
  prob->add_option("--k", cfg.k)->required();
  prob->add_option("--n", cfg.n_target)->required();
  prob->add_option("--mc-samples", cfg.mc_samples, "also print a Monte Carlo estimate");
  add_seed(prob);

  auto* motzkin = app.add_subcommand("motzkin", "count non-convex (d+2)-tuples in (d+3)-point sets");
  motzkin->add_option("--d", cfg.d);
  motzkin->add_option("--points", cfg.points, "points per random configuration (default d + 3)");
  motzkin->add_option("--trials", cfg.trials);
  motzkin->add_option("--range", cfg.range, "coordinates drawn from [-range, range]");
  motzkin->add_option("--input", cfg.input, "point-set file (checks all (d+3)-subsets)");
  add_seed(motzkin);

  auto* cert = app.add_subcommand("cert-verify", "re-verify a lower-bound certificate");
  cert->add_option("--cert", cfg.cert)->required();

  auto* merge = app.add_subcommand("merge-reports", "merge sharded sweep reports");
  merge->add_option("reports", cfg.inputs, "shard report files")->required();
  merge->add_option("--out", cfg.report, "write the merged report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kUsage;
  }

  try {
    cfg.capacity = capacity_from_env();
    cfg.command = app.get_subcommands().front()->get_name();
    if (const auto* opt = app.get_subcommands().front()->get_option_no_throw("--seed"); opt && opt->count() > 0)
      cfg.seed = seed;
    if (!shard.empty()) cfg.shard = parse_shard(shard);
    if (cfg.command == "motzkin" && cfg.points == 0) cfg.points = cfg.d + 3;
    cfg.validate();

    if (cfg.command == "construct") return cmd_construct(cfg, std::cout);
    if (cfg.command == "verify") return cmd_verify(cfg, std::cout);
    if (cfg.command == "alpha") return cmd_alpha(cfg, std::cout);
    if (cfg.command == "search") return cmd_search(cfg, std::cout);
    if (cfg.command == "prob-bound") return cmd_prob_bound(cfg, std::cout);
    if (cfg.command == "motzkin") return cmd_motzkin(cfg, std::cout);
    if (cfg.command == "cert-verify") return cmd_cert_verify(cfg, std::cout);
    if (cfg.command == "merge-reports") return cmd_merge_reports(cfg, std::cout);
  } catch (const gkn::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const gkn::FormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kMalformed;
  } catch (const gkn::InternalInconsistency& e) {
    std::cerr << "internal inconsistency: " << e.what() << '\n';
    return kInconsistent;
  } catch (const gkn::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const gkn::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIoError;
  }
  return kUsage;
}
