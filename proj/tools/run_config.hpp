#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gkn/verifier.hpp"

namespace gkn::cli {

/// Exit statuses shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,            ///< bad flags or configuration
  kClaimFailure = 2,     ///< a claim or the 0/2/4 property failed
  kInconsistent = 3,     ///< internal inconsistency (a counting bug)
  kIoError = 4,
  kMalformed = 5,        ///< unparsable input file
  kHashMismatch = 6,     ///< certificate hash mismatch
  kAlphaMismatch = 7,    ///< certificate claims a different alpha
  kNotCertifying = 8,    ///< alpha >= n, nothing is certified
  kBudgetExceeded = 9,   ///< alpha search hit its node budget
};

struct RunConfig {
  std::string command;
  int k = 5;
  int n_ground = 0;  ///< --N
  int n_target = 0;  ///< --n
  int d = 2;
  int points = 0;
  std::optional<std::uint64_t> seed;
  int trials = 1;
  Shard shard;
  std::string input;
  std::string coloring;
  std::string graph;
  std::string report;
  std::string cert;
  std::string out_dir = ".";
  std::string prefix = "phi";
  std::vector<std::string> inputs;
  bool allow_k4 = false;
  std::uint64_t node_budget = 0;
  int planted = 0;
  std::int64_t range = 100;
  std::uint64_t mc_samples = 0;
  int capacity = 64;

  /// Command-specific checks (required fields, k guard, capacity).
  void validate() const;
};

/// Capacity profile from GKN_CAPACITY (default 64, maximum 64).
int capacity_from_env();

/// "i/n" -> Shard.
Shard parse_shard(const std::string& spec);

int cmd_construct(const RunConfig& cfg, std::ostream& out);
int cmd_verify(const RunConfig& cfg, std::ostream& out);
int cmd_alpha(const RunConfig& cfg, std::ostream& out);
int cmd_search(const RunConfig& cfg, std::ostream& out);
int cmd_prob_bound(const RunConfig& cfg, std::ostream& out);
int cmd_motzkin(const RunConfig& cfg, std::ostream& out);
int cmd_cert_verify(const RunConfig& cfg, std::ostream& out);
int cmd_merge_reports(const RunConfig& cfg, std::ostream& out);

}  // namespace gkn::cli
