#include "gkn/construction.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace gkn {
namespace {

// Coloring tables above this many entries are refused.
constexpr std::uint64_t kMaxTableEntries = std::uint64_t{1} << 26;

std::uint64_t stream_key(std::uint64_t seed, std::uint64_t index) {
  return SplitMix64::mix(seed ^ SplitMix64::mix(index + 1));
}

std::uint8_t draw_color(std::uint64_t seed, std::uint64_t index, int colors) {
  SplitMix64 rng(stream_key(seed, index));
  return static_cast<std::uint8_t>(rng.uniform(static_cast<std::uint64_t>(colors)));
}

}  // namespace

void Params::validate(int capacity) const {
  if (k < 4) throw ConfigError("k must be at least 4 (got " + std::to_string(k) + ")");
  if (capacity > kMaxVertices) capacity = kMaxVertices;
  if (n > capacity)
    throw ConfigError("N = " + std::to_string(n) + " exceeds capacity " + std::to_string(capacity));
  if (n < k + 1) throw ConfigError("N must be at least k + 1");
  if (color_count(k) > 255) throw ConfigError("k too large for the color table");
  if (binomial(n, k - 3) > kMaxTableEntries) throw ConfigError("coloring table C(N, k-3) too large");
}

PairColor PairColor::from_index(int index) {
  if (index < 0) throw DomainError("negative color index");
  int j = 2;
  while (static_cast<int>(binomial(j, 2)) <= index) ++j;
  return PairColor{index - static_cast<int>(binomial(j - 1, 2)) + 1, j};
}

int color_count(int k) { return static_cast<int>(binomial(k - 1, 2)); }

std::uint64_t SplitMix64::mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::next() {
  state_ += 0x9e3779b97f4a7c15ULL;
  return mix(state_);
}

std::uint64_t SplitMix64::uniform(std::uint64_t bound) {
  if (bound == 0) throw DomainError("uniform: empty range");
  unsigned __int128 m = static_cast<unsigned __int128>(next()) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = (~bound + 1) % bound;
    while (low < threshold) {
      m = static_cast<unsigned __int128>(next()) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

Coloring::Coloring(int k, int n, std::uint64_t seed, std::string rng_id, std::vector<std::uint8_t> colors)
    : k_(k), n_(n), seed_(seed), rng_id_(std::move(rng_id)), colors_(std::move(colors)) {
  if (k < 4 || n < k - 3 || n > kMaxVertices) throw ConfigError("coloring: bad k or N");
  if (colors_.size() != binomial(n, k - 3)) throw DomainError("coloring: table must cover all C(N, k-3) subsets");
  const int palette = color_count(k);
  for (std::uint8_t c : colors_)
    if (c >= palette) throw DomainError("coloring: color index out of range");
  if (rng_id_.empty() || rng_id_.find_first_of(" \t\n") != std::string::npos)
    throw DomainError("coloring: rng id must be a single token");
}

PairColor Coloring::at(VertexSet t) const {
  if (t.size() != k_ - 3 || !t.is_subset_of(VertexSet::range(n_)))
    throw DomainError("coloring: argument is not a (k-3)-subset of [N]");
  return PairColor::from_index(color_index(t));
}

Coloring Coloring::with_entry(VertexSet t, PairColor c) const {
  if (t.size() != k_ - 3 || !t.is_subset_of(VertexSet::range(n_)))
    throw DomainError("coloring: argument is not a (k-3)-subset of [N]");
  if (c.i < 1 || c.i >= c.j || c.j > k_ - 1) throw DomainError("coloring: invalid pair color");
  std::vector<std::uint8_t> table = colors_;
  table[colex_rank(t)] = static_cast<std::uint8_t>(c.index());
  return Coloring(k_, n_, seed_, rng_id_, std::move(table));
}

PairColor chi(VertexSet f, VertexSet t) {
  if (!t.is_subset_of(f) || f.size() - t.size() != 2) throw DomainError("chi: T must be f minus exactly two vertices");
  const VertexSet removed = f - t;
  return PairColor{f.rank_of(removed.min()), f.rank_of(removed.max())};
}

PairColor chi(const OrderedTuple& f, VertexSet t) { return chi(f.to_set(), t); }

Coloring sample_coloring(const Params& p) {
  p.validate();
  const int palette = color_count(p.k);
  std::vector<std::uint8_t> table(binomial(p.n, p.k - 3));
  for (std::size_t idx = 0; idx < table.size(); ++idx) table[idx] = draw_color(p.seed, idx, palette);
  return Coloring(p.k, p.n, p.seed, kRngId, std::move(table));
}

Coloring sample_planted_coloring(const Params& p, int plant_attempts) {
  p.validate();
  const int palette = color_count(p.k);
  const int r = p.k - 3;
  std::vector<int> fixed(binomial(p.n, r), -1);

  std::vector<VertexSet> order;
  for (VertexSet f : enumerate_subsets(p.n, p.k - 1)) order.push_back(f);
  SplitMix64 rng(SplitMix64::mix(p.seed ^ 0x706c616e74ULL));
  for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng.uniform(i)]);

  std::vector<std::pair<std::uint64_t, int>> demands;
  int attempts = 0;
  for (VertexSet f : order) {
    if (attempts++ >= plant_attempts) break;
    demands.clear();
    bool consistent = true;
    const std::vector<int> vs = f.members();
    for (std::size_t a = 0; a < vs.size() && consistent; ++a) {
      for (std::size_t b = a + 1; b < vs.size(); ++b) {
        const VertexSet t = f.without(vs[a]).without(vs[b]);
        const std::uint64_t rank = colex_rank(t);
        const int want = PairColor{static_cast<int>(a) + 1, static_cast<int>(b) + 1}.index();
        if (fixed[rank] != -1 && fixed[rank] != want) {
          consistent = false;
          break;
        }
        demands.emplace_back(rank, want);
      }
    }
    if (!consistent) continue;
    for (auto [rank, want] : demands) fixed[rank] = want;
  }

  std::vector<std::uint8_t> table(fixed.size());
  for (std::size_t idx = 0; idx < table.size(); ++idx)
    table[idx] = fixed[idx] >= 0 ? static_cast<std::uint8_t>(fixed[idx]) : draw_color(p.seed, idx, palette);
  return Coloring(p.k, p.n, p.seed, kPlantedRngId, std::move(table));
}

Coloring constant_coloring(int k, int n, PairColor c) {
  if (c.i < 1 || c.i >= c.j || c.j > k - 1) throw DomainError("constant_coloring: invalid pair color");
  std::vector<std::uint8_t> table(binomial(n, k - 3), static_cast<std::uint8_t>(c.index()));
  return Coloring(k, n, 0, "constant", std::move(table));
}

bool membership_in_g(const Coloring& phi, VertexSet f) {
  if (f.size() != phi.k() - 1) return false;
  std::uint64_t outer = f.bits();
  for (int a = 1; outer != 0; ++a, outer &= outer - 1) {
    const std::uint64_t va = outer & (~outer + 1);
    std::uint64_t inner = outer & (outer - 1);
    for (int b = a + 1; inner != 0; ++b, inner &= inner - 1) {
      const std::uint64_t vb = inner & (~inner + 1);
      const VertexSet t(f.bits() & ~va & ~vb);
      if (phi.color_index(t) != PairColor{a, b}.index()) return false;
    }
  }
  return true;
}

bool membership_in_g(const Coloring& phi, const OrderedTuple& f) { return membership_in_g(phi, f.to_set()); }

LinkHypergraph build_g(std::shared_ptr<const Coloring> phi) {
  std::vector<VertexSet> edges;
  for (VertexSet f : enumerate_subsets(phi->n(), phi->k() - 1))
    if (membership_in_g(*phi, f)) edges.push_back(f);
  EdgeSet set(phi->k() - 1, phi->n(), std::move(edges));
  return LinkHypergraph{std::move(set), std::move(phi)};
}

LinkHypergraph build_g(const Coloring& phi) { return build_g(std::make_shared<const Coloring>(phi)); }

LinkHypergraph link_from_edges(EdgeSet edges) { return LinkHypergraph{std::move(edges), nullptr}; }

ParityHypergraph build_h(const LinkHypergraph& g) {
  const int n = g.edges.ground_size();
  const VertexSet ground = VertexSet::range(n);
  std::vector<VertexSet> candidates;
  for (VertexSet f : g.edges)
    for (int v : (ground - f).members()) candidates.push_back(f.with(v));
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  std::vector<VertexSet> edges;
  for (VertexSet e : candidates) {
    int count = 0;
    for (int v : e.members())
      if (g.edges.contains(e.without(v))) ++count;
    if (count % 2 == 1) edges.push_back(e);
  }
  return ParityHypergraph{EdgeSet(g.edges.uniformity() + 1, n, std::move(edges)),
                          std::make_shared<const LinkHypergraph>(g)};
}

void write_coloring(std::ostream& os, const Coloring& phi) {
  os << "coloring " << phi.k() << ' ' << phi.n() << ' ' << phi.seed() << ' ' << phi.rng_id() << '\n';
  const int r = phi.k() - 3;
  std::size_t rank = 0;
  for (VertexSet t : enumerate_subsets(phi.n(), r)) {
    const PairColor c = PairColor::from_index(phi.color_index_at_rank(rank++));
    os << to_string(t) << " : " << c.i << ' ' << c.j << '\n';
  }
}

std::string coloring_to_string(const Coloring& phi) {
  std::ostringstream os;
  write_coloring(os, phi);
  return os.str();
}

Coloring read_coloring(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw FormatError("coloring: missing header");
  std::istringstream header(line);
  std::string tag;
  std::string rng_id;
  int k = 0;
  int n = 0;
  std::uint64_t seed = 0;
  if (!(header >> tag >> k >> n >> seed >> rng_id) || tag != "coloring")
    throw FormatError("coloring: header must be 'coloring k N seed rng-id'");
  if (k < 4 || k > 23) throw FormatError("coloring: unsupported k");
  if (n > kMaxVertices) throw ConfigError("coloring: N exceeds capacity 64");
  if (n < k - 3 || binomial(n, k - 3) > kMaxTableEntries) throw FormatError("coloring: unsupported N");

  const int r = k - 3;
  std::vector<std::uint8_t> table;
  table.reserve(binomial(n, r));
  for (VertexSet expected : enumerate_subsets(n, r)) {
    if (!std::getline(is, line)) throw FormatError("coloring: truncated table");
    std::istringstream row(line);
    std::vector<int> vs(static_cast<std::size_t>(r));
    std::string colon;
    PairColor c;
    for (int& v : vs)
      if (!(row >> v)) throw FormatError("coloring: bad subset in line '" + line + "'");
    if (!(row >> colon >> c.i >> c.j) || colon != ":") throw FormatError("coloring: bad entry '" + line + "'");
    std::string extra;
    if (row >> extra) throw FormatError("coloring: trailing tokens in line '" + line + "'");
    VertexSet t;
    try {
      t = OrderedTuple(vs).to_set();
    } catch (const DomainError&) {
      throw FormatError("coloring: subset not strictly increasing in line '" + line + "'");
    }
    if (t != expected) throw FormatError("coloring: entries must be in colex order, line '" + line + "'");
    if (c.i < 1 || c.i >= c.j || c.j > k - 1) throw FormatError("coloring: invalid pair in line '" + line + "'");
    table.push_back(static_cast<std::uint8_t>(c.index()));
  }
  return Coloring(k, n, seed, rng_id, std::move(table));
}

}  // namespace gkn
