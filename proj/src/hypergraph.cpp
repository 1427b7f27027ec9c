#include "gkn/hypergraph.hpp"

#include <algorithm>
#include <array>
#include <istream>
#include <ostream>
#include <sstream>

namespace gkn {
namespace {

using BinomialTable = std::array<std::array<std::uint64_t, kMaxVertices + 1>, kMaxVertices + 1>;

constexpr BinomialTable make_binomials() {
  BinomialTable t{};
  for (int n = 0; n <= kMaxVertices; ++n) {
    t[n][0] = 1;
    for (int r = 1; r <= n; ++r) t[n][r] = t[n - 1][r - 1] + (r <= n - 1 ? t[n - 1][r] : 0);
  }
  return t;
}

constexpr BinomialTable kBinomials = make_binomials();

void check_vertex(int v) {
  if (v < 1 || v > kMaxVertices)
    throw DomainError("vertex " + std::to_string(v) + " outside 1.." + std::to_string(kMaxVertices));
}

// Next larger word with the same popcount (Gosper).
std::uint64_t next_same_popcount(std::uint64_t x) {
  const std::uint64_t lowest = x & (~x + 1);
  const std::uint64_t ripple = x + lowest;
  return (((ripple ^ x) >> 2) / lowest) | ripple;
}

}  // namespace

std::uint64_t binomial(int n, int r) {
  if (n < 0 || n > kMaxVertices) throw DomainError("binomial: n outside 0..64");
  if (r < 0 || r > n) return 0;
  return kBinomials[n][r];
}

VertexSet::VertexSet(std::initializer_list<int> vertices) {
  for (int v : vertices) insert(v);
}

VertexSet::VertexSet(std::span<const int> vertices) {
  for (int v : vertices) insert(v);
}

VertexSet VertexSet::range(int n) {
  if (n < 0 || n > kMaxVertices) throw ConfigError("ground set size " + std::to_string(n) + " exceeds capacity");
  return VertexSet(n == kMaxVertices ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
}

void VertexSet::insert(int v) {
  check_vertex(v);
  bits_ |= std::uint64_t{1} << (v - 1);
}

void VertexSet::erase(int v) {
  check_vertex(v);
  bits_ &= ~(std::uint64_t{1} << (v - 1));
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
  return out;
}

int VertexSet::rank_of(int v) const {
  if (!contains(v)) throw DomainError("vertex " + std::to_string(v) + " is not a member");
  const std::uint64_t below = (v == 1) ? 0 : (bits_ & ((std::uint64_t{1} << (v - 1)) - 1));
  return std::popcount(below) + 1;
}

std::string to_string(VertexSet s) {
  std::string out;
  for (int v : s.members()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, VertexSet s) { return os << '{' << to_string(s) << '}'; }

OrderedTuple::OrderedTuple(std::vector<int> vertices) : vertices_(std::move(vertices)) {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    check_vertex(vertices_[i]);
    if (i > 0 && vertices_[i - 1] >= vertices_[i]) throw DomainError("tuple is not strictly increasing");
  }
}

int OrderedTuple::at(int position) const {
  if (position < 1 || position > static_cast<int>(vertices_.size()))
    throw DomainError("position " + std::to_string(position) + " outside tuple");
  return vertices_[position - 1];
}

int rank_of_vertex(const OrderedTuple& t, int v) {
  const auto& vs = t.vertices();
  const auto it = std::lower_bound(vs.begin(), vs.end(), v);
  if (it == vs.end() || *it != v) throw DomainError("vertex " + std::to_string(v) + " not in tuple");
  return static_cast<int>(it - vs.begin()) + 1;
}

std::uint64_t colex_rank(VertexSet s) {
  // Combinatorial number system: sum over i of C(c_i, i) for 0-based members c_i.
  std::uint64_t rank = 0;
  int i = 1;
  for (std::uint64_t b = s.bits(); b != 0; b &= b - 1, ++i) rank += binomial(std::countr_zero(b), i);
  return rank;
}

VertexSet colex_unrank(int r, std::uint64_t rank) {
  if (r < 0 || r > kMaxVertices) throw DomainError("colex_unrank: bad subset size");
  std::uint64_t bits = 0;
  for (int i = r; i >= 1; --i) {
    // Largest c with C(c, i) <= rank.
    int c = i - 1;
    while (c + 1 < kMaxVertices && binomial(c + 1, i) <= rank) ++c;
    rank -= binomial(c, i);
    bits |= std::uint64_t{1} << c;
  }
  if (rank != 0) throw DomainError("colex_unrank: rank out of range");
  return VertexSet(bits);
}

IndexRange shard_range(std::uint64_t total, int index, int count) {
  if (count < 1 || index < 0 || index >= count) throw ConfigError("shard index must satisfy 0 <= i < n");
  const auto split = [&](int i) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(total) * static_cast<unsigned>(i)) /
                                      static_cast<unsigned>(count));
  };
  return {split(index), split(index + 1)};
}

namespace {

int checked_ground(int n, int r) {
  if (n > kMaxVertices) throw ConfigError("ground set size " + std::to_string(n) + " exceeds capacity 64");
  if (n < 0 || r < 0 || r > n) throw DomainError("subset size must satisfy 0 <= r <= N");
  return n;
}

}  // namespace

SubsetRange::SubsetRange(int n, int r) : SubsetRange(n, r, IndexRange{0, binomial(checked_ground(n, r), r)}) {}

SubsetRange::SubsetRange(int n, int r, IndexRange indices) {
  checked_ground(n, r);
  if (indices.begin > indices.end || indices.end > binomial(n, r)) throw DomainError("subset index range out of bounds");
  count_ = indices.size();
  if (count_ > 0) first_ = colex_unrank(r, indices.begin);
}

SubsetRange::iterator& SubsetRange::iterator::operator++() {
  if (--remaining_ > 0) current_ = VertexSet(next_same_popcount(current_.bits()));
  return *this;
}

SubsetRange enumerate_subsets(int n, int r) { return SubsetRange(n, r); }

std::vector<VertexSet> subsets_of(VertexSet s, int r) {
  const std::vector<int> members = s.members();
  std::vector<VertexSet> out;
  if (r < 0 || r > s.size()) return out;
  out.reserve(binomial(s.size(), r));
  for (VertexSet pick : enumerate_subsets(s.size(), r)) {
    VertexSet sub;
    for (std::uint64_t b = pick.bits(); b != 0; b &= b - 1) sub.insert(members[std::countr_zero(b)]);
    out.push_back(sub);
  }
  return out;
}

EdgeSet::EdgeSet(int uniformity, int ground_size, std::vector<VertexSet> edges)
    : uniformity_(uniformity), ground_size_(ground_size), edges_(std::move(edges)) {
  if (ground_size < 0 || ground_size > kMaxVertices) throw ConfigError("ground set size exceeds capacity 64");
  if (uniformity < 0 || uniformity > ground_size) throw DomainError("uniformity must satisfy 0 <= r <= N");
  const VertexSet ground = VertexSet::range(ground_size);
  for (VertexSet e : edges_) {
    if (e.size() != uniformity) throw DomainError("edge " + to_string(e) + " has wrong cardinality");
    if (!e.is_subset_of(ground)) throw DomainError("edge " + to_string(e) + " leaves the ground set");
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) throw DomainError("duplicate edge");
}

bool EdgeSet::contains(VertexSet e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

std::uint64_t induced_count(const EdgeSet& edges, VertexSet s) {
  const int r = edges.uniformity();
  if (edges.empty() || s.size() < r) return 0;
  std::uint64_t count = 0;
  // Probing C(|S|, r) subsets costs a binary search each; scanning costs |E|.
  const std::uint64_t probes = binomial(s.size(), r);
  if (probes < edges.size() / 8 + 1) {
    for (VertexSet sub : subsets_of(s, r))
      if (edges.contains(sub)) ++count;
    return count;
  }
  for (VertexSet e : edges)
    if (e.is_subset_of(s)) ++count;
  return count;
}

void write_edge_list(std::ostream& os, const EdgeSet& edges) {
  os << edges.uniformity() << ' ' << edges.ground_size() << ' ' << edges.size() << '\n';
  for (VertexSet e : edges) os << to_string(e) << '\n';
}

EdgeSet read_edge_list(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw FormatError("edge list: missing header");
  std::istringstream header(line);
  int r = 0;
  int n = 0;
  std::size_t m = 0;
  if (!(header >> r >> n >> m)) throw FormatError("edge list: header must be 'r N m'");
  if (n > kMaxVertices) throw ConfigError("edge list: ground set size exceeds capacity 64");
  std::vector<VertexSet> edges;
  edges.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (!std::getline(is, line)) throw FormatError("edge list: expected " + std::to_string(m) + " edges");
    std::istringstream row(line);
    std::vector<int> vs;
    for (int v; row >> v;) vs.push_back(v);
    if (!row.eof()) throw FormatError("edge list: non-numeric token in line '" + line + "'");
    try {
      edges.push_back(OrderedTuple(vs).to_set());
    } catch (const DomainError& e) {
      throw FormatError(std::string("edge list: ") + e.what());
    }
  }
  try {
    return EdgeSet(r, n, std::move(edges));
  } catch (const DomainError& e) {
    throw FormatError(std::string("edge list: ") + e.what());
  }
}

}  // namespace gkn
