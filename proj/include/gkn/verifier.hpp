#pragma once

// Executable checks of the three structural claims about G and H, the
// classification of the link graph G' of a (k+1)-set, and the exhaustive
// sweep that certifies "every k+1 vertices span 0, 2 or 4 edges of H" for a
// concrete instance.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gkn/construction.hpp"

namespace gkn {

struct Claim1Result {
  std::uint64_t g_count = 0;        ///< |G[S]|
  std::uint64_t h_count = 0;        ///< |H[S]|
  std::uint64_t k_subset_sum = 0;   ///< sum over k-subsets e of S of |G[e]|
  bool even() const { return h_count % 2 == 0; }
};

/// |H[S]| is even. Also evaluates the double count
/// sum_{e in C(S,k)} |G[e]| = 2|G[S]| and throws InternalInconsistency if it
/// fails (it holds for every G, so a failure is a counting bug).
Claim1Result check_claim1(const EdgeSet& g, const EdgeSet& h, VertexSet s);

struct Claim2Result {
  std::uint64_t count = 0;  ///< |G[e]|
  bool holds() const { return count <= 2; }
};

/// |G[e]| <= 2 for a k-set e.
Claim2Result check_claim2(const EdgeSet& g, VertexSet e);

/// Three pairwise disjoint pairs of S whose complements all lie in G.
struct T3Witness {
  VertexSet s;
  std::array<VertexSet, 3> pairs;
};

/// Returns a T3 witness inside S if one exists (the claim fails), nullopt if
/// the claim holds. DomainError if |S| < 6 or |S| != uniformity(G) + 2.
std::optional<T3Witness> check_claim3(const EdgeSet& g, VertexSet s);

/// G' on S: {x, y} is an edge iff S \ {x, y} is in G.
struct LinkGraph {
  VertexSet vertices;
  std::vector<VertexSet> edges;  ///< 2-sets, colex order
  std::map<int, VertexSet> neighbours;

  int degree(int v) const;
  int max_degree() const;
  /// Size of a maximum matching (exhaustive; G' has at most C(k+1, 2) edges).
  int matching_number() const;
};

LinkGraph build_link_graph(const EdgeSet& g, VertexSet s);

/// Canonical component multiset of a graph with maximum degree <= 2.
struct StructureClass {
  std::vector<int> cycles;  ///< lengths (edges), descending
  std::vector<int> paths;   ///< lengths (edges) of paths with >= 1 edge, descending
  int isolated = 0;

  /// e.g. "C3+C3", "C3+P2", "P2+P2", "P1+I4", "I6". Cycles first, then
  /// paths, longest first; isolated vertices last and only if present.
  std::string name() const;
  friend bool operator==(const StructureClass&, const StructureClass&) = default;
};

/// Decomposes a graph of maximum degree <= 2. DomainError otherwise.
StructureClass classify_structure(const LinkGraph& link);

struct InducedProfile {
  VertexSet s;
  std::uint64_t g_count = 0;
  std::uint64_t h_count = 0;
  StructureClass structure;
  bool pass = false;  ///< h_count in {0, 2, 4}
};

/// Counts |H[S]| directly and as the number of degree-1 vertices of G',
/// throwing InternalInconsistency if they differ. DomainError when G' has a
/// vertex of degree > 2 (Claim 2 fails on S, so there is nothing to classify).
InducedProfile classify_profile(const EdgeSet& g, const EdgeSet& h, VertexSet s);

/// Histogram of |E[S]| over the (r+1)-subsets S of [N] in `range`, r being the
/// uniformity of E. Shared with the geometric hypergraph check.
std::map<std::uint64_t, std::uint64_t> induced_count_histogram(const EdgeSet& edges, IndexRange range);
std::map<std::uint64_t, std::uint64_t> induced_count_histogram(const EdgeSet& edges);

enum class Verdict { pass, claim_failure, inconsistent };
std::string to_string(Verdict v);

struct SweepFailure {
  std::string kind;  ///< claim1 | claim2 | claim3 | h-count | internal
  VertexSet subset;
  std::string detail;
  friend bool operator==(const SweepFailure&, const SweepFailure&) = default;
};

struct Shard {
  int index = 0;
  int count = 1;
  bool whole() const { return count == 1; }
  friend bool operator==(const Shard&, const Shard&) = default;
};

struct SweepReport {
  int k = 0;
  int n = 0;
  std::uint64_t seed = 0;
  Shard shard;
  std::uint64_t subsets_checked = 0;  ///< (k+1)-sets
  std::uint64_t ksets_checked = 0;    ///< k-sets (Claim 2)
  std::map<std::uint64_t, std::uint64_t> h_histogram;
  /// class name -> (h_count, occurrences)
  std::map<std::string, std::pair<std::uint64_t, std::uint64_t>> classes;
  std::vector<SweepFailure> failures;
  Verdict verdict = Verdict::pass;

  std::uint64_t h_count_of(std::uint64_t h) const;
  friend bool operator==(const SweepReport&, const SweepReport&) = default;
};

/// Every (k+1)-set (Claims 1 and 3, G' classification, 0/2/4) and every
/// k-set (Claim 2) in the shard's colex index ranges.
SweepReport full_sweep(const EdgeSet& g, const EdgeSet& h, int k, std::uint64_t seed, Shard shard = {});

/// Sums shard reports; all shards 0..n-1 of one sweep must be present.
SweepReport merge_reports(const std::vector<SweepReport>& shards);

/// Text report: header, one "fail" line per failure, histogram lines and the
/// closing summary "sweep k N seed verdict h0 h2 h4".
void write_report(std::ostream& os, const SweepReport& report);
std::string report_to_string(const SweepReport& report);
SweepReport read_report(std::istream& is);

}  // namespace gkn
