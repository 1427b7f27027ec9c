#include "gkn/geometry.hpp"

#include <array>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>

#include "gkn/construction.hpp"

namespace gkn {
namespace {

using Wide = __int128;

Wide determinant(std::vector<std::vector<Wide>> m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  Wide det = 0;
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col] == 0) continue;
    std::vector<std::vector<Wide>> minor;
    minor.reserve(n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Wide> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != col) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    const Wide term = m[0][col] * determinant(std::move(minor));
    det += (col % 2 == 0) ? term : -term;
  }
  return det;
}

int sign(Wide x) { return (x > 0) - (x < 0); }

// p strictly inside the simplex spanned by `simplex` (d+1 labels).
bool strictly_inside(const PointConfiguration& c, int p, const std::vector<int>& simplex) {
  const int base = orientation(c, simplex);
  if (base == 0) return false;
  std::vector<int> swapped = simplex;
  for (std::size_t i = 0; i < simplex.size(); ++i) {
    swapped[i] = p;
    if (orientation(c, swapped) != base) return false;
    swapped[i] = simplex[i];
  }
  return true;
}

void require_general_position(const PointConfiguration& c, VertexSet s) {
  const PositionCheck gp = is_general_position(c, s);
  if (!gp.holds) throw DomainError("points " + to_string(*gp.witness) + " are not in general position");
}

}  // namespace

PointConfiguration::PointConfiguration(int d, std::vector<std::vector<std::int64_t>> points, std::int64_t denominator)
    : d_(d), denominator_(denominator), points_(std::move(points)) {
  if (d < 1 || d > 3) throw DomainError("dimension must be 1, 2 or 3");
  if (denominator < 1) throw DomainError("denominator must be positive");
  if (points_.size() > static_cast<std::size_t>(kMaxVertices)) throw ConfigError("more than 64 points");
  for (const auto& p : points_) {
    if (static_cast<int>(p.size()) != d) throw DomainError("point dimension mismatch");
    for (std::int64_t x : p)
      if (x > kMaxCoordinate || x < -kMaxCoordinate) throw DomainError("coordinate exceeds 2^24 in magnitude");
  }
}

int orientation(const PointConfiguration& c, std::span<const int> labels) {
  const int d = c.dimension();
  if (static_cast<int>(labels.size()) != d + 1) throw DomainError("orientation needs exactly d+1 points");
  std::vector<std::vector<Wide>> m;
  m.reserve(labels.size());
  for (int label : labels) {
    if (label < 1 || label > c.size()) throw DomainError("unknown point label " + std::to_string(label));
    std::vector<Wide> row(c.point(label).begin(), c.point(label).end());
    row.push_back(1);
    m.push_back(std::move(row));
  }
  return sign(determinant(std::move(m)));
}

PositionCheck is_general_position(const PointConfiguration& c) {
  if (c.size() < c.dimension() + 1) throw DomainError("general position needs at least d+1 points");
  return is_general_position(c, c.labels());
}

PositionCheck is_general_position(const PointConfiguration& c, VertexSet s) {
  for (VertexSet tuple : subsets_of(s, c.dimension() + 1)) {
    const std::vector<int> labels = tuple.members();
    if (orientation(c, labels) == 0) return {false, tuple};
  }
  return {};
}

PositionCheck is_convex_position(const PointConfiguration& c, VertexSet s) {
  require_general_position(c, s);
  const int d = c.dimension();
  for (int p : s.members()) {
    for (VertexSet simplex : subsets_of(s.without(p), d + 1))
      if (strictly_inside(c, p, simplex.members())) return {false, VertexSet{p}};
  }
  return {};
}

MotzkinCount motzkin_count(const PointConfiguration& c, VertexSet s) {
  const int d = c.dimension();
  if (s.size() != d + 3) throw DomainError("motzkin count needs exactly d+3 points");
  require_general_position(c, s);
  MotzkinCount out;
  for (VertexSet tuple : subsets_of(s, d + 2))
    if (!is_convex_position(c, tuple).holds) ++out.count;
  out.verdict = out.count == 0 || out.count == 2 || out.count == 4;
  return out;
}

EdgeSet build_geometric_hypergraph(const PointConfiguration& c) {
  const int d = c.dimension();
  require_general_position(c, c.labels());
  std::vector<VertexSet> edges;
  if (c.size() >= d + 2)
    for (VertexSet tuple : enumerate_subsets(c.size(), d + 2))
      if (!is_convex_position(c, tuple).holds) edges.push_back(tuple);
  return EdgeSet(d + 2, std::max(c.size(), d + 2), std::move(edges));
}

RandomConfiguration random_general_position(int d, int count, std::int64_t range, std::uint64_t seed) {
  if (range < 1 || range > kMaxCoordinate) throw DomainError("coordinate range must be in 1..2^24");
  if (count < d + 1) throw DomainError("need at least d+1 points");
  SplitMix64 rng(seed);
  const auto span = static_cast<std::uint64_t>(2 * range + 1);
  std::uint64_t rejections = 0;
  while (true) {
    std::vector<std::vector<std::int64_t>> pts(static_cast<std::size_t>(count), std::vector<std::int64_t>(d));
    for (auto& p : pts)
      for (auto& x : p) x = static_cast<std::int64_t>(rng.uniform(span)) - range;
    PointConfiguration c(d, std::move(pts));
    if (is_general_position(c).holds) return {std::move(c), rejections};
    ++rejections;
  }
}

MotzkinSweep motzkin_sweep(int d, int trials, std::int64_t range, std::uint64_t seed) {
  MotzkinSweep sweep;
  SplitMix64 seeds(seed);
  for (int i = 0; i < trials; ++i) {
    RandomConfiguration rc = random_general_position(d, d + 3, range, seeds.next());
    sweep.rejections += rc.rejections;
    const MotzkinCount m = motzkin_count(rc.points, rc.points.labels());
    ++sweep.trials;
    ++sweep.counts[m.count];
    if (m.verdict) ++sweep.passed;
  }
  return sweep;
}

void write_points(std::ostream& os, const PointConfiguration& c) {
  os << "points " << c.dimension() << ' ' << c.size() << " denom " << c.denominator() << '\n';
  for (int label = 1; label <= c.size(); ++label) {
    const auto& p = c.point(label);
    for (std::size_t i = 0; i < p.size(); ++i) os << (i ? " " : "") << p[i];
    os << '\n';
  }
}

PointConfiguration read_points(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw FormatError("points: missing header");
  std::istringstream header(line);
  std::string tag;
  std::string denom_tag;
  int d = 0;
  int count = 0;
  std::int64_t denom = 1;
  if (!(header >> tag >> d >> count) || tag != "points") throw FormatError("points: header must be 'points d P denom D'");
  if (header >> denom_tag) {
    if (denom_tag != "denom" || !(header >> denom)) throw FormatError("points: expected 'denom D' in header");
  }
  if (d < 1 || d > 3 || count < 0) throw FormatError("points: unsupported d or P");
  std::vector<std::vector<std::int64_t>> pts;
  for (int i = 0; i < count; ++i) {
    if (!std::getline(is, line)) throw FormatError("points: expected " + std::to_string(count) + " points");
    std::istringstream row(line);
    std::vector<std::int64_t> p(static_cast<std::size_t>(d));
    for (auto& x : p)
      if (!(row >> x)) throw FormatError("points: bad coordinates in line '" + line + "'");
    std::string extra;
    if (row >> extra) throw FormatError("points: trailing tokens in line '" + line + "'");
    pts.push_back(std::move(p));
  }
  try {
    return PointConfiguration(d, std::move(pts), denom);
  } catch (const DomainError& e) {
    throw FormatError(std::string("points: ") + e.what());
  }
}

}  // namespace gkn
