#pragma once

// Exact-integer geometry for the point-set counterpart: general position,
// convex position, the 0/2/4 count of non-convex (d+2)-tuples inside a
// (d+3)-set, and the hypergraph of non-convex (d+2)-tuples.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <vector>

#include "gkn/hypergraph.hpp"

namespace gkn {

/// Largest absolute coordinate accepted; keeps every orientation determinant
/// (d <= 3) inside signed 128-bit arithmetic.
inline constexpr std::int64_t kMaxCoordinate = std::int64_t{1} << 24;

/// Points of R^d given as integer numerators over a shared denominator.
/// Labels are 1..P. Dimension 1..3, at most 64 points.
class PointConfiguration {
 public:
  PointConfiguration(int d, std::vector<std::vector<std::int64_t>> points, std::int64_t denominator = 1);

  int dimension() const { return d_; }
  int size() const { return static_cast<int>(points_.size()); }
  std::int64_t denominator() const { return denominator_; }
  /// 1-based label.
  const std::vector<std::int64_t>& point(int label) const { return points_.at(static_cast<std::size_t>(label - 1)); }
  VertexSet labels() const { return VertexSet::range(size()); }

 private:
  int d_;
  std::int64_t denominator_;
  std::vector<std::vector<std::int64_t>> points_;
};

/// Sign (-1, 0, +1) of det [[p_1, 1], ..., [p_{d+1}, 1]] for d+1 labels,
/// taken in the given order.
int orientation(const PointConfiguration& c, std::span<const int> labels);

struct PositionCheck {
  bool holds = true;
  std::optional<VertexSet> witness;  ///< flat (d+1)-tuple, or the interior point as a singleton
};

/// No d+1 of the points lie on a common hyperplane. DomainError if P < d+1.
PositionCheck is_general_position(const PointConfiguration& c);
/// Same, restricted to the labels in s.
PositionCheck is_general_position(const PointConfiguration& c, VertexSet s);

/// No point of s lies in the convex hull of the others. By Caratheodory a
/// point is in that hull iff it is inside a simplex spanned by d+1 of the
/// others; general position makes "inside" strict and decidable by the signs
/// of d+2 orientation determinants. DomainError when s is not in general
/// position.
PositionCheck is_convex_position(const PointConfiguration& c, VertexSet s);

struct MotzkinCount {
  int count = 0;        ///< (d+2)-subsets of S not in convex position
  bool verdict = false; ///< count in {0, 2, 4}
};

/// DomainError unless |s| = d+3 and s is in general position.
MotzkinCount motzkin_count(const PointConfiguration& c, VertexSet s);

/// Edges: the (d+2)-subsets not in convex position. DomainError unless c is
/// in general position.
EdgeSet build_geometric_hypergraph(const PointConfiguration& c);

struct RandomConfiguration {
  PointConfiguration points;
  std::uint64_t rejections = 0;  ///< configurations discarded for degeneracy
};

/// P integer points with coordinates uniform in [-range, range], resampled
/// until in general position.
RandomConfiguration random_general_position(int d, int count, std::int64_t range, std::uint64_t seed);

struct MotzkinSweep {
  int trials = 0;
  int passed = 0;
  std::map<int, int> counts;  ///< count value -> occurrences
  std::uint64_t rejections = 0;
};

/// motzkin_count on `trials` seeded random (d+3)-point configurations.
MotzkinSweep motzkin_sweep(int d, int trials, std::int64_t range, std::uint64_t seed);

/// Point-set text format: "points d P denom D" then P lines of d integers.
void write_points(std::ostream& os, const PointConfiguration& c);
PointConfiguration read_points(std::istream& is);

}  // namespace gkn
