#include "gkn/independence.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>

namespace gkn {
namespace {

class AlphaSearch {
 public:
  AlphaSearch(const EdgeSet& h, std::uint64_t budget) : budget_(budget) {
    edges_.reserve(h.size());
    for (VertexSet e : h) edges_.push_back(e.bits());
  }

  AlphaResult run(int n) {
    const std::uint64_t all = VertexSet::range(n).bits();
    AlphaResult result;
    result.upper_bound = std::popcount(all) - disjoint_blockers(0, all);
    explore(0, all);
    result.alpha = std::popcount(best_);
    result.witness = VertexSet(best_);
    result.nodes = nodes_;
    if (exhausted_) {
      result.status = AlphaStatus::budget_exceeded;
    } else {
      result.upper_bound = result.alpha;
    }
    return result;
  }

 private:
  // Greedy count of pairwise-disjoint residuals e \ chosen (size >= 2) inside
  // the candidates; each one forces a distinct candidate out.
  int disjoint_blockers(std::uint64_t chosen, std::uint64_t cand) const {
    std::uint64_t used = 0;
    int count = 0;
    for (std::uint64_t e : edges_) {
      if ((e & ~(chosen | cand)) != 0) continue;
      const std::uint64_t res = e & ~chosen;
      if ((res & used) != 0) continue;
      used |= res;
      ++count;
    }
    return count;
  }

  void explore(std::uint64_t chosen, std::uint64_t cand) {
    if (exhausted_) return;
    if (budget_ != 0 && nodes_ >= budget_) {
      exhausted_ = true;
      return;
    }
    ++nodes_;

    // Candidates completing an edge with the chosen set are excluded.
    for (std::uint64_t e : edges_) {
      if ((e & ~(chosen | cand)) != 0) continue;
      const std::uint64_t res = e & ~chosen;
      if (std::popcount(res) == 1) cand &= ~res;
    }
    if (std::popcount(chosen) > std::popcount(best_)) best_ = chosen;
    if (cand == 0) return;

    const int bound = std::popcount(chosen) + std::popcount(cand) - disjoint_blockers(chosen, cand);
    if (bound <= std::popcount(best_)) return;

    std::array<int, kMaxVertices> degree{};
    bool any_live = false;
    for (std::uint64_t e : edges_) {
      if ((e & ~(chosen | cand)) != 0) continue;
      any_live = true;
      for (std::uint64_t r = e & cand; r != 0; r &= r - 1) ++degree[std::countr_zero(r)];
    }
    if (!any_live) {
      if (std::popcount(chosen | cand) > std::popcount(best_)) best_ = chosen | cand;
      return;
    }
    int pick = -1;
    for (std::uint64_t r = cand; r != 0; r &= r - 1) {
      const int v = std::countr_zero(r);
      if (pick < 0 || degree[v] > degree[pick]) pick = v;
    }
    const std::uint64_t bit = std::uint64_t{1} << pick;
    explore(chosen | bit, cand & ~bit);
    explore(chosen, cand & ~bit);
  }

  std::vector<std::uint64_t> edges_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::uint64_t best_ = 0;
  bool exhausted_ = false;
};

// For each f = e \ {v} of the fixed k-set e = [k]: (colex rank of T, demanded color) pairs.
std::vector<std::vector<std::pair<int, int>>> link_demands(int k) {
  const VertexSet e = VertexSet::range(k);
  std::vector<std::vector<std::pair<int, int>>> demands;
  for (int v : e.members()) {
    const VertexSet f = e.without(v);
    std::vector<std::pair<int, int>> req;
    for (VertexSet t : enumerate_subsets(k, k - 3)) {
      if (!t.is_subset_of(f)) continue;
      req.emplace_back(static_cast<int>(colex_rank(t)), chi(f, t).index());
    }
    demands.push_back(std::move(req));
  }
  return demands;
}

double log2_binomial_ratio(int n, double log2_big_n) {
  // log2 C(N, n) = sum_{i<n} log2((N - i) / (n - i)).
  long double sum = 0;
  if (log2_big_n <= 53) {
    const long double big = std::exp2l(log2_big_n);
    for (int i = 0; i < n; ++i) sum += std::log2l((big - i) / static_cast<long double>(n - i));
  } else {
    for (int i = 0; i < n; ++i)
      sum += log2_big_n + std::log1pl(-static_cast<long double>(i) * std::exp2l(-log2_big_n)) / std::log(2.0L) -
             std::log2l(static_cast<long double>(n - i));
  }
  return static_cast<double>(sum);
}

}  // namespace

AlphaResult alpha_exact(const EdgeSet& h, std::uint64_t node_budget) {
  AlphaSearch search(h, node_budget);
  return search.run(h.ground_size());
}

bool is_independent(const EdgeSet& h, VertexSet s) {
  return std::none_of(h.begin(), h.end(), [&](VertexSet e) { return e.is_subset_of(s); });
}

double EdgeProbability::standard_error() const {
  if (method == ProbabilityMethod::exhaustive || samples == 0) return 0.0;
  const double p = value();
  return std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
}

std::string EdgeProbability::decimal(int digits) const {
  std::ostringstream os;
  os << std::setprecision(digits) << value();
  return os.str();
}

std::optional<std::uint64_t> coloring_space_size(int k) {
  if (k < 4) throw DomainError("edge probability needs k >= 4");
  const std::uint64_t q = static_cast<std::uint64_t>(color_count(k));
  const std::uint64_t m = binomial(k, 3);
  std::uint64_t total = 1;
  for (std::uint64_t i = 0; i < m; ++i) {
    if (total > std::numeric_limits<std::uint64_t>::max() / q) return std::nullopt;
    total *= q;
  }
  return total;
}

EdgeProbability edge_probability_exact(int k, std::uint64_t fallback_samples, std::uint64_t fallback_seed) {
  const auto total = coloring_space_size(k);
  if (!total || *total > kExhaustiveLimit) return edge_probability_monte_carlo(k, fallback_samples, fallback_seed);

  const auto demands = link_demands(k);
  const int q = color_count(k);
  const int m = static_cast<int>(binomial(k, 3));
  std::vector<int> digits(static_cast<std::size_t>(m), 0);
  std::uint64_t odd = 0;
  for (std::uint64_t it = 0; it < *total; ++it) {
    int links = 0;
    for (const auto& req : demands) {
      bool member = true;
      for (auto [t, c] : req)
        if (digits[t] != c) {
          member = false;
          break;
        }
      links += member ? 1 : 0;
    }
    odd += static_cast<std::uint64_t>(links & 1);
    for (int d = 0; d < m && ++digits[d] == q; ++d) digits[d] = 0;
  }
  const std::uint64_t g = std::gcd(odd, *total);
  EdgeProbability p;
  p.k = k;
  p.method = ProbabilityMethod::exhaustive;
  p.numerator = odd / g;
  p.denominator = *total / g;
  return p;
}

EdgeProbability edge_probability_monte_carlo(int k, std::uint64_t samples, std::uint64_t seed) {
  if (samples == 0) throw DomainError("monte carlo needs at least one sample");
  const auto demands = link_demands(k);
  const int q = color_count(k);
  const int m = static_cast<int>(binomial(k, 3));
  std::vector<int> colors(static_cast<std::size_t>(m));
  SplitMix64 rng(seed);
  std::uint64_t odd = 0;
  for (std::uint64_t s = 0; s < samples; ++s) {
    for (int& c : colors) c = static_cast<int>(rng.uniform(static_cast<std::uint64_t>(q)));
    int links = 0;
    for (const auto& req : demands)
      links += std::all_of(req.begin(), req.end(), [&](auto tc) { return colors[tc.first] == tc.second; }) ? 1 : 0;
    odd += static_cast<std::uint64_t>(links & 1);
  }
  EdgeProbability p;
  p.k = k;
  p.method = ProbabilityMethod::monte_carlo;
  p.numerator = odd;
  p.denominator = samples;
  p.samples = samples;
  p.seed = seed;
  return p;
}

SteinerPacking greedy_steiner_packing(int n, int k, std::optional<std::uint64_t> shuffle_seed) {
  if (k < 4 || n < k) throw DomainError("packing needs k >= 4 and n >= k");
  if (n > kMaxVertices) throw ConfigError("packing: n exceeds capacity 64");
  const int t = k - 3;
  std::vector<VertexSet> picks;  // t-subsets of positions 1..k
  for (VertexSet p : enumerate_subsets(k, t)) picks.push_back(p);

  std::vector<VertexSet> order;
  for (VertexSet b : enumerate_subsets(n, k)) order.push_back(b);
  if (shuffle_seed) {
    SplitMix64 rng(*shuffle_seed);
    for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng.uniform(i)]);
  }

  std::vector<bool> used(binomial(n, t), false);
  std::vector<std::uint64_t> ranks(picks.size());
  SteinerPacking packing{n, k, t, {}};
  for (VertexSet block : order) {
    const std::vector<int> vs = block.members();
    bool free = true;
    for (std::size_t i = 0; i < picks.size(); ++i) {
      VertexSet sub;
      for (int pos : picks[i].members()) sub.insert(vs[pos - 1]);
      ranks[i] = colex_rank(sub);
      if (used[ranks[i]]) {
        free = false;
        break;
      }
    }
    if (!free) continue;
    for (std::uint64_t r : ranks) used[r] = true;
    packing.blocks.push_back(block);
  }
  return packing;
}

bool packing_is_valid(const SteinerPacking& packing) {
  std::vector<int> cover(binomial(packing.n, packing.t), 0);
  for (VertexSet b : packing.blocks) {
    if (b.size() != packing.k || !b.is_subset_of(VertexSet::range(packing.n))) return false;
    const std::vector<int> vs = b.members();
    for (VertexSet p : enumerate_subsets(packing.k, packing.t)) {
      VertexSet sub;
      for (int pos : p.members()) sub.insert(vs[pos - 1]);
      if (++cover[colex_rank(sub)] > 1) return false;
    }
  }
  return true;
}

bool packing_is_maximal(const SteinerPacking& packing) {
  std::vector<bool> used(binomial(packing.n, packing.t), false);
  const auto subsets_of = [&](VertexSet b) {
    std::vector<std::uint64_t> out;
    const std::vector<int> vs = b.members();
    for (VertexSet p : enumerate_subsets(packing.k, packing.t)) {
      VertexSet sub;
      for (int pos : p.members()) sub.insert(vs[pos - 1]);
      out.push_back(colex_rank(sub));
    }
    return out;
  };
  for (VertexSet b : packing.blocks)
    for (std::uint64_t r : subsets_of(b)) used[r] = true;
  for (VertexSet b : enumerate_subsets(packing.n, packing.k)) {
    const auto rs = subsets_of(b);
    if (std::none_of(rs.begin(), rs.end(), [&](std::uint64_t r) { return used[r]; })) return false;
  }
  return true;
}

UnionBound union_bound_log2n(int n, double log2_big_n, double p, double m) {
  if (!(p > 0.0 && p <= 1.0)) throw DomainError("union bound: p must lie in (0, 1]");
  if (n < 1 || m < 0 || std::isnan(log2_big_n) || log2_big_n < std::log2(static_cast<double>(n)) - 1e-12)
    throw DomainError("union bound: needs N >= n >= 1 and m >= 0");
  UnionBound b;
  const double tail = (m == 0) ? 0.0 : (p == 1.0 ? -std::numeric_limits<double>::infinity() : m * std::log2(1.0 - p));
  b.log2_value = log2_binomial_ratio(n, std::max(log2_big_n, std::log2(static_cast<double>(n)))) + tail;
  b.feasible = b.log2_value < 0;
  return b;
}

UnionBound union_bound(int n, std::uint64_t big_n, double p, double m) {
  if (big_n < static_cast<std::uint64_t>(std::max(n, 1))) throw DomainError("union bound: needs N >= n");
  return union_bound_log2n(n, std::log2(static_cast<long double>(big_n)), p, m);
}

std::optional<FeasibleN> max_feasible_n(int n, double p, double m) {
  const double lo_start = std::log2(static_cast<double>(n));
  if (!union_bound_log2n(n, lo_start, p, m).feasible) return std::nullopt;
  FeasibleN out;
  if (p == 1.0 && m > 0) {
    out.log2_max_n = std::numeric_limits<double>::infinity();
    return out;
  }
  double lo = lo_start;
  double hi = lo_start + 1;
  while (union_bound_log2n(n, hi, p, m).feasible) {
    lo = hi;
    hi *= 2;
    if (hi > 1e15) {
      out.log2_max_n = std::numeric_limits<double>::infinity();
      return out;
    }
  }
  for (int it = 0; it < 200 && hi - lo > 1e-12 * std::max(1.0, hi); ++it) {
    const double mid = 0.5 * (lo + hi);
    (union_bound_log2n(n, mid, p, m).feasible ? lo : hi) = mid;
  }
  out.log2_max_n = lo;
  if (lo < 53) {
    auto big = static_cast<std::uint64_t>(std::floor(std::exp2(lo)));
    big = std::max<std::uint64_t>(big, static_cast<std::uint64_t>(n));
    while (union_bound(n, big + 1, p, m).feasible) ++big;
    while (big > static_cast<std::uint64_t>(n) && !union_bound(n, big, p, m).feasible) --big;
    out.max_n = big;
    out.log2_max_n = std::log2(static_cast<double>(big));
  }
  return out;
}

std::uint64_t trial_seed(std::uint64_t master_seed, int trial) {
  return SplitMix64::mix(master_seed + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(trial) + 1));
}

LowerBoundCertificate certify(const Coloring& phi, int n_target) {
  const LinkHypergraph g = build_g(phi);
  const ParityHypergraph h = build_h(g);
  const SweepReport report = full_sweep(g.edges, h.edges, phi.k(), phi.seed());
  if (report.verdict != Verdict::pass)
    throw InternalInconsistency("sweep failed for seed " + std::to_string(phi.seed()) + "; construction bug");
  LowerBoundCertificate cert;
  cert.k = phi.k();
  cert.n_ground = phi.n();
  cert.n_target = n_target;
  cert.alpha = alpha_exact(h.edges).alpha;
  cert.seed = phi.seed();
  cert.rng_id = phi.rng_id();
  cert.coloring_text = coloring_to_string(phi);
  cert.coloring_hash = sha256_hex(cert.coloring_text);
  cert.sweep_hash = sha256_hex(report_to_string(report));
  return cert;
}

SearchResult search_colorings(int k, int n_ground, int trials, int n_target, std::uint64_t master_seed) {
  if (trials < 1) throw ConfigError("search needs at least one trial");
  SearchResult result;
  std::optional<std::pair<int, std::uint64_t>> best;  // (alpha, seed)
  for (int i = 0; i < trials; ++i) {
    const Params params{k, n_ground, trial_seed(master_seed, i)};
    const Coloring phi = sample_coloring(params);
    const LinkHypergraph g = build_g(phi);
    const ParityHypergraph h = build_h(g);
    const SweepReport report = full_sweep(g.edges, h.edges, k, params.seed);
    if (report.verdict != Verdict::pass)
      throw InternalInconsistency("sweep failed for seed " + std::to_string(params.seed) + "; construction bug");
    const int alpha = alpha_exact(h.edges).alpha;
    result.trials.emplace_back(params.seed, alpha);
    if (!best || std::make_pair(alpha, params.seed) < *best) best = std::make_pair(alpha, params.seed);
  }
  result.best = certify(sample_coloring(Params{k, n_ground, best->second}), n_target);
  return result;
}

std::string to_string(CertStatus s) {
  switch (s) {
    case CertStatus::ok: return "ok";
    case CertStatus::malformed: return "malformed";
    case CertStatus::hash_mismatch: return "hash mismatch";
    case CertStatus::sweep_failed: return "sweep failed";
    case CertStatus::alpha_mismatch: return "alpha mismatch";
    case CertStatus::alpha_not_below_n: return "alpha not below n";
  }
  return "?";
}

CertVerdict verify_certificate(const LowerBoundCertificate& cert) {
  std::optional<Coloring> phi;
  try {
    std::istringstream is(cert.coloring_text);
    phi = read_coloring(is);
    std::string rest;
    if (std::getline(is, rest) && !rest.empty()) return {CertStatus::malformed, "trailing data after coloring"};
  } catch (const Error& e) {
    return {CertStatus::malformed, e.what()};
  }
  if (phi->k() != cert.k || phi->n() != cert.n_ground || phi->seed() != cert.seed || phi->rng_id() != cert.rng_id)
    return {CertStatus::malformed, "certificate fields disagree with the coloring header"};
  if (sha256_hex(cert.coloring_text) != cert.coloring_hash) return {CertStatus::hash_mismatch, "coloring hash mismatch"};
  // Plain seeded colorings are reproducible, so the table must match its seed.
  if (cert.rng_id == kRngId && !(sample_coloring(Params{cert.k, cert.n_ground, cert.seed}) == *phi))
    return {CertStatus::hash_mismatch, "coloring does not match seed " + std::to_string(cert.seed)};

  const LinkHypergraph g = build_g(*phi);
  const ParityHypergraph h = build_h(g);
  const SweepReport report = full_sweep(g.edges, h.edges, phi->k(), phi->seed());
  if (report.verdict != Verdict::pass) return {CertStatus::sweep_failed, "sweep verdict " + to_string(report.verdict)};
  if (sha256_hex(report_to_string(report)) != cert.sweep_hash) return {CertStatus::hash_mismatch, "sweep hash mismatch"};
  const AlphaResult alpha = alpha_exact(h.edges);
  if (alpha.alpha != cert.alpha)
    return {CertStatus::alpha_mismatch,
            "alpha mismatch: claimed " + std::to_string(cert.alpha) + ", computed " + std::to_string(alpha.alpha)};
  if (alpha.alpha >= cert.n_target)
    return {CertStatus::alpha_not_below_n,
            "alpha " + std::to_string(alpha.alpha) + " is not below n = " + std::to_string(cert.n_target)};
  return {CertStatus::ok, "g_" + std::to_string(cert.k) + "(" + std::to_string(cert.n_target) + ") > " +
                              std::to_string(cert.n_ground)};
}

CertVerdict verify_certificate_text(const std::string& text) {
  LowerBoundCertificate cert;
  try {
    std::istringstream is(text);
    cert = read_certificate(is);
  } catch (const Error& e) {
    return {CertStatus::malformed, e.what()};
  }
  return verify_certificate(cert);
}

void write_certificate(std::ostream& os, const LowerBoundCertificate& c) {
  os << "cert v1\n"
     << "k " << c.k << '\n'
     << "N " << c.n_ground << '\n'
     << "n " << c.n_target << '\n'
     << "alpha " << c.alpha << '\n'
     << "seed " << c.seed << '\n'
     << "rng-id " << c.rng_id << '\n'
     << "coloring-inline\n"
     << c.coloring_text << "coloring-hash " << c.coloring_hash << '\n'
     << "sweep-hash " << c.sweep_hash << '\n';
}

std::string certificate_to_string(const LowerBoundCertificate& cert) {
  std::ostringstream os;
  write_certificate(os, cert);
  return os.str();
}

LowerBoundCertificate read_certificate(std::istream& is) {
  LowerBoundCertificate c;
  std::string line;
  if (!std::getline(is, line) || line != "cert v1") throw FormatError("certificate: missing 'cert v1' header");
  const auto field = [&](const std::string& key) {
    if (!std::getline(is, line)) throw FormatError("certificate: missing field " + key);
    const std::string prefix = key + " ";
    if (line.rfind(prefix, 0) != 0) throw FormatError("certificate: expected field " + key + ", got '" + line + "'");
    return line.substr(prefix.size());
  };
  const auto integer = [&](const std::string& key) {
    const std::string v = field(key);
    std::size_t used = 0;
    long long x = 0;
    try {
      x = std::stoll(v, &used);
    } catch (const std::exception&) {
      throw FormatError("certificate: field " + key + " is not an integer");
    }
    if (used != v.size()) throw FormatError("certificate: field " + key + " is not an integer");
    return x;
  };
  c.k = static_cast<int>(integer("k"));
  c.n_ground = static_cast<int>(integer("N"));
  c.n_target = static_cast<int>(integer("n"));
  c.alpha = static_cast<int>(integer("alpha"));
  {
    const std::string v = field("seed");
    try {
      std::size_t used = 0;
      c.seed = std::stoull(v, &used);
      if (used != v.size()) throw FormatError("certificate: bad seed");
    } catch (const std::logic_error&) {
      throw FormatError("certificate: bad seed");
    }
  }
  c.rng_id = field("rng-id");
  if (!std::getline(is, line) || line != "coloring-inline") throw FormatError("certificate: expected coloring-inline");
  while (true) {
    if (!std::getline(is, line)) throw FormatError("certificate: missing coloring-hash");
    if (line.rfind("coloring-hash ", 0) == 0) {
      c.coloring_hash = line.substr(14);
      break;
    }
    c.coloring_text += line + '\n';
  }
  c.sweep_hash = field("sweep-hash");
  return c;
}

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw Error("sha256 failed");
  std::ostringstream os;
  os << "sha256:" << std::hex << std::setfill('0');
  for (unsigned int i = 0; i < len; ++i) os << std::setw(2) << static_cast<int>(digest[i]);
  return os.str();
}

}  // namespace gkn
