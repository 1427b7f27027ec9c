#pragma once

// Brute-force reference computations used only by the tests. Each one takes
// a different route from the library code it checks: plain vectors instead
// of bit sets, full enumeration instead of pruning, hull construction instead
// of orientation sign patterns.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "gkn/construction.hpp"
#include "gkn/geometry.hpp"

namespace oracle {

using Tuple = std::vector<int>;

/// All r-subsets of {1..n} as increasing vectors, lexicographic order.
inline std::vector<Tuple> combinations(int n, int r) {
  std::vector<Tuple> out;
  Tuple cur;
  std::function<void(int)> rec = [&](int next) {
    if (static_cast<int>(cur.size()) == r) {
      out.push_back(cur);
      return;
    }
    for (int v = next; v <= n; ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

inline std::uint64_t choose(int n, int r) {
  if (r < 0 || r > n) return 0;
  std::uint64_t c = 1;
  for (int i = 1; i <= r; ++i) c = c * static_cast<std::uint64_t>(n - r + i) / static_cast<std::uint64_t>(i);
  return c;
}

inline gkn::VertexSet to_set(const Tuple& t) { return gkn::VertexSet(std::span<const int>(t)); }

/// G by direct definition: for positions a < b of f, phi(f minus those two) = {a, b}.
inline std::set<Tuple> naive_g(const gkn::Coloring& phi) {
  std::set<Tuple> g;
  const int k = phi.k();
  for (const Tuple& f : combinations(phi.n(), k - 1)) {
    bool member = true;
    for (int a = 0; a < k - 1 && member; ++a)
      for (int b = a + 1; b < k - 1 && member; ++b) {
        Tuple t;
        for (int i = 0; i < k - 1; ++i)
          if (i != a && i != b) t.push_back(f[i]);
        const gkn::PairColor c = phi.at(to_set(t));
        member = (c.i == a + 1 && c.j == b + 1);
      }
    if (member) g.insert(f);
  }
  return g;
}

/// H by direct definition over all k-sets.
inline std::set<Tuple> naive_h(const std::set<Tuple>& g, int n, int k) {
  std::set<Tuple> h;
  for (const Tuple& e : combinations(n, k)) {
    int count = 0;
    for (int drop = 0; drop < k; ++drop) {
      Tuple f;
      for (int i = 0; i < k; ++i)
        if (i != drop) f.push_back(e[i]);
      count += g.count(f) ? 1 : 0;
    }
    if (count % 2 == 1) h.insert(e);
  }
  return h;
}

/// Independence number by trying every subset of [n].
inline int brute_alpha(const gkn::EdgeSet& h) {
  const int n = h.ground_size();
  int best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const int size = __builtin_popcountll(mask);
    if (size <= best) continue;
    bool independent = true;
    for (gkn::VertexSet e : h)
      if ((e.bits() & ~mask) == 0) {
        independent = false;
        break;
      }
    if (independent) best = size;
  }
  return best;
}

/// Edge probability of a fixed k-set by inclusion-exclusion over the k link
/// events f = [k] minus {v}: P(exactly an odd number) expanded through
/// P(all of J) for every nonempty J, which is q^-(#subsets demanded) when the
/// demands agree and 0 otherwise. Returns the numerator over q^C(k,3).
inline std::int64_t inclusion_exclusion_odd_count(int k) {
  const int q = (k - 1) * (k - 2) / 2;
  const int m = static_cast<int>(choose(k, 3));
  const std::vector<Tuple> ts = combinations(k, k - 3);
  // demand[v][t] = demanded color index of T in f = [k] minus {v}, or -1.
  std::vector<std::vector<int>> demand(static_cast<std::size_t>(k), std::vector<int>(ts.size(), -1));
  for (int v = 1; v <= k; ++v) {
    Tuple f;
    for (int x = 1; x <= k; ++x)
      if (x != v) f.push_back(x);
    for (std::size_t ti = 0; ti < ts.size(); ++ti) {
      const Tuple& t = ts[ti];
      if (std::find(t.begin(), t.end(), v) != t.end()) continue;
      std::vector<int> removed;
      for (int pos = 0; pos < k - 1; ++pos)
        if (std::find(t.begin(), t.end(), f[pos]) == t.end()) removed.push_back(pos + 1);
      const int i = removed[0];
      const int j = removed[1];
      demand[v - 1][ti] = (j - 1) * (j - 2) / 2 + (i - 1);
    }
  }
  std::int64_t qpow[32];
  qpow[0] = 1;
  for (int i = 1; i < 32; ++i) qpow[i] = qpow[i - 1] * q;
  // P(|X| odd) = sum_{J nonempty} (-2)^{|J|-1} P(all of J), scaled by q^m.
  std::int64_t total = 0;
  for (int mask = 1; mask < (1 << k); ++mask) {
    std::vector<int> fixed(ts.size(), -1);
    bool ok = true;
    for (int v = 0; v < k && ok; ++v) {
      if (!(mask >> v & 1)) continue;
      for (std::size_t ti = 0; ti < ts.size(); ++ti) {
        const int want = demand[static_cast<std::size_t>(v)][ti];
        if (want < 0) continue;
        if (fixed[ti] >= 0 && fixed[ti] != want) {
          ok = false;
          break;
        }
        fixed[ti] = want;
      }
    }
    if (!ok) continue;
    const int covered = static_cast<int>(std::count_if(fixed.begin(), fixed.end(), [](int c) { return c >= 0; }));
    const int size = __builtin_popcount(static_cast<unsigned>(mask));
    std::int64_t sign_weight = 1;
    for (int i = 1; i < size; ++i) sign_weight *= -2;
    total += sign_weight * qpow[m - covered];
  }
  return total;
}

struct P2 {
  std::int64_t x;
  std::int64_t y;
};

/// Number of strict convex-hull vertices (Andrew's monotone chain).
inline int hull_vertex_count(std::vector<P2> pts) {
  std::sort(pts.begin(), pts.end(), [](P2 a, P2 b) { return a.x != b.x ? a.x < b.x : a.y < b.y; });
  if (pts.size() < 3) return static_cast<int>(pts.size());
  const auto cross = [](P2 o, P2 a, P2 b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); };
  std::vector<P2> hull(2 * pts.size());
  std::size_t h = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (h >= 2 && cross(hull[h - 2], hull[h - 1], pts[i]) <= 0) --h;
    hull[h++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, lower = h + 1; i-- > 0;) {
    while (h >= lower && cross(hull[h - 2], hull[h - 1], pts[i]) <= 0) --h;
    hull[h++] = pts[i];
  }
  return static_cast<int>(h - 1);
}

inline std::vector<P2> planar(const gkn::PointConfiguration& c, gkn::VertexSet s) {
  std::vector<P2> out;
  for (int label : s.members()) out.push_back({c.point(label)[0], c.point(label)[1]});
  return out;
}

/// Rank of the difference vectors p_i - p_0 by fraction-free elimination.
inline int affine_rank(const std::vector<std::vector<std::int64_t>>& pts) {
  if (pts.empty()) return 0;
  const std::size_t d = pts[0].size();
  std::vector<std::vector<__int128>> m;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    std::vector<__int128> row;
    for (std::size_t j = 0; j < d; ++j) row.push_back(pts[i][j] - pts[0][j]);
    m.push_back(row);
  }
  int rank = 0;
  __int128 prev = 1;
  for (std::size_t col = 0; col < d && rank < static_cast<int>(m.size()); ++col) {
    std::size_t pivot = static_cast<std::size_t>(rank);
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[static_cast<std::size_t>(rank)]);
    const auto r = static_cast<std::size_t>(rank);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      for (std::size_t j = col + 1; j < d; ++j) m[i][j] = (m[r][col] * m[i][j] - m[i][col] * m[r][j]) / prev;
      m[i][col] = 0;
    }
    prev = m[r][col];
    ++rank;
  }
  return rank;
}

}  // namespace oracle
