#pragma once

// Independence number of H, the edge probability p, greedy partial Steiner
// packings, the union bound C(N,n)(1-p)^m, seeded search for colorings with
// small independence number, and lower-bound certificates.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gkn/verifier.hpp"

namespace gkn {

enum class AlphaStatus { exact, budget_exceeded };

struct AlphaResult {
  int alpha = 0;           ///< exact value, or best lower bound when the budget ran out
  int upper_bound = 0;     ///< equals alpha when exact
  VertexSet witness;       ///< independent set of size alpha
  std::uint64_t nodes = 0; ///< search-tree nodes explored
  AlphaStatus status = AlphaStatus::exact;
};

/// Maximum independent set of a uniform hypergraph on [N] by branch and
/// bound (branch on the vertex of highest residual degree, bound by
/// |chosen| + |candidates| - |disjoint blocking residuals|). A node budget of
/// 0 means unlimited.
AlphaResult alpha_exact(const EdgeSet& h, std::uint64_t node_budget = 0);

/// True iff no edge of h lies inside s.
bool is_independent(const EdgeSet& h, VertexSet s);

enum class ProbabilityMethod { exhaustive, monte_carlo };

struct EdgeProbability {
  int k = 0;
  ProbabilityMethod method = ProbabilityMethod::exhaustive;
  /// Exhaustive: reduced fraction. Monte Carlo: hits / samples.
  std::uint64_t numerator = 0;
  std::uint64_t denominator = 1;
  std::uint64_t samples = 0;  ///< Monte Carlo only
  std::uint64_t seed = 0;     ///< Monte Carlo only

  double value() const { return static_cast<double>(numerator) / static_cast<double>(denominator); }
  /// Binomial standard error of a Monte Carlo estimate (0 for exhaustive).
  double standard_error() const;
  std::string decimal(int digits = 12) const;
};

/// Largest colorings count the exhaustive route will enumerate.
inline constexpr std::uint64_t kExhaustiveLimit = 1'000'000'000;

/// Number of colorings of the (k-3)-subsets of one k-set, C(k-1,2)^C(k,3),
/// or nullopt if that overflows 64 bits.
std::optional<std::uint64_t> coloring_space_size(int k);

/// Probability that a fixed k-set is an edge of H, by enumerating every
/// coloring of its C(k,3) (k-3)-subsets. When the space exceeds
/// kExhaustiveLimit, falls back to Monte Carlo with `fallback_samples`
/// samples from `fallback_seed`.
EdgeProbability edge_probability_exact(int k, std::uint64_t fallback_samples = 1'000'000,
                                       std::uint64_t fallback_seed = 1);

/// Monte Carlo estimate of the same probability.
EdgeProbability edge_probability_monte_carlo(int k, std::uint64_t samples, std::uint64_t seed);

/// Blocks of size k on [n] where every (k-3)-subset lies in at most one block.
struct SteinerPacking {
  int n = 0;
  int k = 0;
  int t = 0;  ///< k - 3
  std::vector<VertexSet> blocks;
};

/// Greedy over the k-subsets of [n], in colex order (or a seeded random order
/// when `shuffle_seed` is given); a block is added iff none of its
/// (k-3)-subsets is used yet. DomainError unless k >= 4 and n >= k.
SteinerPacking greedy_steiner_packing(int n, int k, std::optional<std::uint64_t> shuffle_seed = std::nullopt);

/// Every t-subset covered at most once.
bool packing_is_valid(const SteinerPacking& packing);
/// No further k-subset of [n] can be added.
bool packing_is_maximal(const SteinerPacking& packing);

struct UnionBound {
  double log2_value = 0;  ///< log2( C(N,n) (1-p)^m ); -infinity when p = 1
  bool feasible = false;  ///< value < 1
};

/// C(N,n)(1-p)^m in log space, N given through log2 N so astronomically large
/// N can be queried. DomainError unless 0 < p <= 1, m >= 0 and N >= n >= 1.
UnionBound union_bound_log2n(int n, double log2_big_n, double p, double m);
UnionBound union_bound(int n, std::uint64_t big_n, double p, double m);

struct FeasibleN {
  double log2_max_n = 0;           ///< log2 of the largest feasible N (continuous)
  std::optional<std::uint64_t> max_n;  ///< exact integer maximum when below 2^53
};

/// Largest N with C(N,n)(1-p)^m < 1. nullopt when even N = n is infeasible.
std::optional<FeasibleN> max_feasible_n(int n, double p, double m);

/// Self-contained instance witnessing g_k(n) > N when alpha < n.
struct LowerBoundCertificate {
  int k = 0;
  int n_ground = 0;  ///< N
  int n_target = 0;  ///< n
  int alpha = 0;
  std::uint64_t seed = 0;
  std::string rng_id;
  std::string coloring_text;  ///< coloring block, construction file format
  std::string coloring_hash;  ///< sha256 of coloring_text
  std::string sweep_hash;     ///< sha256 of the unsharded sweep report
};

struct SearchResult {
  LowerBoundCertificate best;
  std::vector<std::pair<std::uint64_t, int>> trials;  ///< (seed, alpha) per trial
};

/// Seed of trial i in a search started from master_seed.
std::uint64_t trial_seed(std::uint64_t master_seed, int trial);

/// Samples `trials` colorings with seeds trial_seed(master, i), requires a
/// passing sweep for each (InternalInconsistency otherwise) and returns the
/// certificate of the minimum alpha, ties going to the smallest seed.
SearchResult search_colorings(int k, int n_ground, int trials, int n_target, std::uint64_t master_seed);

/// Certificate for one coloring (sweep + alpha). Throws if the sweep fails.
LowerBoundCertificate certify(const Coloring& phi, int n_target);

enum class CertStatus { ok, malformed, hash_mismatch, sweep_failed, alpha_mismatch, alpha_not_below_n };
std::string to_string(CertStatus s);

struct CertVerdict {
  CertStatus status = CertStatus::ok;
  std::string message;
  bool ok() const { return status == CertStatus::ok; }
};

/// Rebuilds G and H from the embedded coloring and re-runs sweep and alpha.
/// A coloring with rng-id splitmix64-v1 must also equal the table its seed
/// regenerates.
CertVerdict verify_certificate(const LowerBoundCertificate& cert);
/// Parses then verifies; parse errors yield CertStatus::malformed.
CertVerdict verify_certificate_text(const std::string& text);

/// "cert v1" text format: one "key value" line per field, the coloring block
/// after "coloring-inline", then coloring-hash and sweep-hash lines.
void write_certificate(std::ostream& os, const LowerBoundCertificate& cert);
std::string certificate_to_string(const LowerBoundCertificate& cert);
LowerBoundCertificate read_certificate(std::istream& is);

/// "sha256:<hex>".
std::string sha256_hex(const std::string& data);

}  // namespace gkn
