#pragma once

// Vertex sets, ordered tuples, r-subset enumeration and uniform edge sets.
//
// Vertices are labelled 1..N. A VertexSet stores vertex v in bit v-1 of a
// single 64-bit word, so the ground set is capped at kMaxVertices. Numeric
// order of the bit masks of equal-size sets is exactly colexicographic order,
// which is the enumeration order used everywhere (sharding relies on it).

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <iterator>
#include <span>
#include <string>
#include <vector>

#include "gkn/error.hpp"

namespace gkn {

inline constexpr int kMaxVertices = 64;

/// Binomial coefficient C(n, r) for 0 <= n <= 64; zero when r < 0 or r > n.
std::uint64_t binomial(int n, int r);

class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<int> vertices);
  explicit VertexSet(std::span<const int> vertices);

  /// {1, ..., n}.
  static VertexSet range(int n);

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }

  bool contains(int v) const {
    return v >= 1 && v <= kMaxVertices && ((bits_ >> (v - 1)) & 1U) != 0;
  }
  void insert(int v);
  void erase(int v);

  VertexSet with(int v) const {
    VertexSet s = *this;
    s.insert(v);
    return s;
  }
  VertexSet without(int v) const {
    VertexSet s = *this;
    s.erase(v);
    return s;
  }

  constexpr bool is_subset_of(VertexSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  /// Smallest member; 0 if empty.
  int min() const { return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1; }
  /// Largest member; 0 if empty.
  int max() const { return bits_ == 0 ? 0 : kMaxVertices - std::countl_zero(bits_); }

  /// Members in increasing order.
  std::vector<int> members() const;

  /// 1-based position of v among the members (v must be a member).
  int rank_of(int v) const;

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(VertexSet, VertexSet) = default;
  /// Colex order for sets of equal size.
  friend constexpr auto operator<=>(VertexSet a, VertexSet b) { return a.bits_ <=> b.bits_; }

 private:
  std::uint64_t bits_ = 0;
};

/// "v1 v2 ... vr" (space separated, increasing).
std::string to_string(VertexSet s);
std::ostream& operator<<(std::ostream& os, VertexSet s);

/// A strictly increasing list of vertex labels with 1-based positions.
class OrderedTuple {
 public:
  OrderedTuple() = default;
  /// Throws DomainError unless strictly increasing and within 1..64.
  explicit OrderedTuple(std::vector<int> vertices);
  OrderedTuple(std::initializer_list<int> vertices) : OrderedTuple(std::vector<int>(vertices)) {}
  explicit OrderedTuple(VertexSet s) : vertices_(s.members()) {}

  std::size_t size() const { return vertices_.size(); }
  /// 1-based access.
  int at(int position) const;
  const std::vector<int>& vertices() const { return vertices_; }
  VertexSet to_set() const { return VertexSet(std::span<const int>(vertices_)); }

 private:
  std::vector<int> vertices_;
};

/// 1-based position of v in t; DomainError if v is not in t.
int rank_of_vertex(const OrderedTuple& t, int v);

/// Colex rank of an r-subset among all r-subsets of {1, 2, ...}.
std::uint64_t colex_rank(VertexSet s);
/// Inverse of colex_rank for subsets of size r.
VertexSet colex_unrank(int r, std::uint64_t rank);

/// Half-open range of colex indices into C([N], r).
struct IndexRange {
  std::uint64_t begin = 0;
  std::uint64_t end = 0;
  std::uint64_t size() const { return end - begin; }
};

/// Shard `index` of `count` over `total` items, split as evenly as possible.
IndexRange shard_range(std::uint64_t total, int index, int count);

/// The r-subsets of [N] in colex order, optionally restricted to a colex
/// index range. Cheap to copy; iteration is allocation free.
class SubsetRange {
 public:
  SubsetRange(int n, int r);
  SubsetRange(int n, int r, IndexRange indices);

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = VertexSet;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    iterator(VertexSet current, std::uint64_t remaining) : current_(current), remaining_(remaining) {}
    VertexSet operator*() const { return current_; }
    iterator& operator++();
    iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.remaining_ == b.remaining_; }

   private:
    VertexSet current_;
    std::uint64_t remaining_ = 0;
  };

  iterator begin() const { return {first_, count_}; }
  iterator end() const { return {VertexSet(), 0}; }
  std::uint64_t size() const { return count_; }

 private:
  VertexSet first_;
  std::uint64_t count_ = 0;
};

/// enumerate_subsets(N, r): every r-subset of [N], colex order. Throws
/// ConfigError when N exceeds the capacity and DomainError unless 0 <= r <= N.
SubsetRange enumerate_subsets(int n, int r);

/// The r-subsets of s, in colex order.
std::vector<VertexSet> subsets_of(VertexSet s, int r);

/// An r-uniform hypergraph on [N]: sorted (colex), duplicate free.
class EdgeSet {
 public:
  EdgeSet() = default;
  /// Validates every edge (cardinality r, within [N]) and rejects duplicates.
  EdgeSet(int uniformity, int ground_size, std::vector<VertexSet> edges);

  int uniformity() const { return uniformity_; }
  int ground_size() const { return ground_size_; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  const std::vector<VertexSet>& edges() const { return edges_; }
  auto begin() const { return edges_.begin(); }
  auto end() const { return edges_.end(); }

  bool contains(VertexSet e) const;

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

 private:
  int uniformity_ = 0;
  int ground_size_ = 0;
  std::vector<VertexSet> edges_;
};

/// |{e in E : e subset of S}|. Counts by probing the (uniformity)-subsets of S
/// or by scanning E, whichever is cheaper.
std::uint64_t induced_count(const EdgeSet& edges, VertexSet s);

/// Edge-list text format: "r N m" then m lines of increasing labels.
void write_edge_list(std::ostream& os, const EdgeSet& edges);
EdgeSet read_edge_list(std::istream& is);

}  // namespace gkn
