#pragma once

// The random coloring of (k-3)-subsets by pairs from [k-1], the positional
// coloring chi_f, the (k-1)-uniform link hypergraph G and the k-uniform
// parity hypergraph H built from it.

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "gkn/hypergraph.hpp"

namespace gkn {

/// Construction parameters. k = 4 is accepted here; the verifier and CLI
/// refuse it unless explicitly allowed.
struct Params {
  int k = 5;
  int n = 0;  ///< ground-set size N
  std::uint64_t seed = 0;

  /// Throws ConfigError unless 4 <= k and k + 1 <= N <= capacity and the
  /// coloring table fits in memory.
  void validate(int capacity = kMaxVertices) const;
};

/// An unordered pair {i, j}, 1 <= i < j <= k-1.
struct PairColor {
  int i = 1;
  int j = 2;

  /// Colex index among the pairs of [k-1]: {1,2}=0, {1,3}=1, {2,3}=2, {1,4}=3, ...
  int index() const { return static_cast<int>(binomial(j - 1, 2)) + (i - 1); }
  static PairColor from_index(int index);

  friend bool operator==(PairColor, PairColor) = default;
};

/// Number of colors C(k-1, 2).
int color_count(int k);

/// Identifier of the sampling scheme; written into coloring files.
inline constexpr const char* kRngId = "splitmix64-v1";
/// Identifier used for colorings produced by sample_planted_coloring.
inline constexpr const char* kPlantedRngId = "splitmix64-planted-v1";

/// SplitMix64 (Steele, Lea, Flood). Platform independent and tiny.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t state) : state_(state) {}
  std::uint64_t next();
  /// Uniform integer in [0, bound) without modulo bias (multiply-shift with
  /// rejection of the short tail).
  std::uint64_t uniform(std::uint64_t bound);

  /// The SplitMix64 output finalizer.
  static std::uint64_t mix(std::uint64_t z);

 private:
  std::uint64_t state_;
};

/// phi: every (k-3)-subset of [N] mapped to a PairColor. Entries are stored
/// by colex rank of the subset.
class Coloring {
 public:
  Coloring(int k, int n, std::uint64_t seed, std::string rng_id, std::vector<std::uint8_t> colors);

  int k() const { return k_; }
  int n() const { return n_; }
  std::uint64_t seed() const { return seed_; }
  const std::string& rng_id() const { return rng_id_; }
  /// Number of (k-3)-subsets, C(N, k-3).
  std::size_t size() const { return colors_.size(); }

  PairColor at(VertexSet t) const;
  int color_index(VertexSet t) const { return colors_[colex_rank(t)]; }
  int color_index_at_rank(std::size_t rank) const { return colors_[rank]; }
  const std::vector<std::uint8_t>& table() const { return colors_; }

  /// Copy with one entry changed (tamper tests, hand-built colorings).
  Coloring with_entry(VertexSet t, PairColor c) const;

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  int k_;
  int n_;
  std::uint64_t seed_;
  std::string rng_id_;
  std::vector<std::uint8_t> colors_;
};

/// chi_f(T): the 1-based ranks in f of the two vertices of f \ T.
/// DomainError unless T is a subset of f with |f \ T| = 2.
PairColor chi(const OrderedTuple& f, VertexSet t);
PairColor chi(VertexSet f, VertexSet t);

/// Each (k-3)-subset with colex index idx gets an independent stream
/// SplitMix64(mix(seed ^ mix(idx + 1))) and takes its first uniform draw
/// over the C(k-1,2) colors.
Coloring sample_coloring(const Params& p);

/// A coloring with many G-edges: visits (k-1)-subsets in a seeded random
/// order and forces phi(T) = chi_f(T) on all of f whenever that agrees with
/// what is already fixed, at most `plant_attempts` times; remaining entries
/// are sampled as in sample_coloring. Still a valid coloring, so every claim
/// must hold for it.
Coloring sample_planted_coloring(const Params& p, int plant_attempts);

/// Constant coloring (every entry equal to c).
Coloring constant_coloring(int k, int n, PairColor c);

/// f (a (k-1)-set) is in G iff phi(f \ {u,v}) = chi_f(f \ {u,v}) for every pair.
bool membership_in_g(const Coloring& phi, VertexSet f);
bool membership_in_g(const Coloring& phi, const OrderedTuple& f);

struct LinkHypergraph {
  EdgeSet edges;  ///< (k-1)-uniform
  std::shared_ptr<const Coloring> coloring;  ///< null for hand-built G
};

struct ParityHypergraph {
  EdgeSet edges;  ///< k-uniform
  std::shared_ptr<const LinkHypergraph> link;
};

LinkHypergraph build_g(std::shared_ptr<const Coloring> phi);
LinkHypergraph build_g(const Coloring& phi);
/// Wraps an explicit edge set (hand-built or read from a file) as G.
LinkHypergraph link_from_edges(EdgeSet edges);

/// e in H iff |G[e]| is odd. Only supersets of G-edges can qualify, so the
/// candidates are f + {v} for f in G.
ParityHypergraph build_h(const LinkHypergraph& g);

/// Coloring text format: header "coloring k N seed rng-id", then one line
/// per (k-3)-subset in colex order: "v1 ... v_{k-3} : i j".
void write_coloring(std::ostream& os, const Coloring& phi);
std::string coloring_to_string(const Coloring& phi);
Coloring read_coloring(std::istream& is);

}  // namespace gkn
