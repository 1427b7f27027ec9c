#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>
#include <sstream>

#include "gkn/construction.hpp"
#include "oracles.hpp"

using namespace gkn;

namespace {

std::vector<VertexSet> collect(SubsetRange range) {
  std::vector<VertexSet> out;
  for (VertexSet s : range) out.push_back(s);
  return out;
}

EdgeSet random_edges(std::mt19937_64& rng, int n, int r, double density) {
  std::bernoulli_distribution keep(density);
  std::vector<VertexSet> edges;
  for (VertexSet s : enumerate_subsets(n, r))
    if (keep(rng)) edges.push_back(s);
  return EdgeSet(r, n, std::move(edges));
}

}  // namespace

TEST_CASE("enumerate_subsets lists the 2-subsets of [4] in colex order") {
  const auto sets = collect(enumerate_subsets(4, 2));
  const std::vector<VertexSet> expected{{1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 4}};
  CHECK(sets == expected);
}

TEST_CASE("enumerate_subsets(5, 0) yields the empty set once") {
  const auto sets = collect(enumerate_subsets(5, 0));
  REQUIRE(sets.size() == 1);
  CHECK(sets[0].empty());
}

TEST_CASE("enumerate_subsets(12, 6) yields C(12,6) distinct sets") {
  const auto sets = collect(enumerate_subsets(12, 6));
  CHECK(sets.size() == oracle::choose(12, 6));
  CHECK(sets.size() == 924);
  CHECK(std::set<VertexSet>(sets.begin(), sets.end()).size() == sets.size());
}

TEST_CASE("enumeration order matches colex order of the brute-force combinations") {
  for (int n = 0; n <= 9; ++n)
    for (int r = 0; r <= n; ++r) {
      auto combos = oracle::combinations(n, r);
      std::sort(combos.begin(), combos.end(), [](const auto& a, const auto& b) {
        return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
      });
      std::vector<VertexSet> expected;
      for (const auto& t : combos) expected.push_back(oracle::to_set(t));
      CHECK(collect(enumerate_subsets(n, r)) == expected);
    }
}

TEST_CASE("property: random (N, r) streams are complete, distinct and r-uniform") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = std::uniform_int_distribution<int>(0, 16)(rng);
    const int r = std::uniform_int_distribution<int>(0, n)(rng);
    const auto sets = collect(enumerate_subsets(n, r));
    CHECK(sets.size() == oracle::choose(n, r));
    CHECK(std::set<VertexSet>(sets.begin(), sets.end()).size() == sets.size());
    for (VertexSet s : sets) {
      CHECK(s.size() == r);
      CHECK(s.is_subset_of(VertexSet::range(n)));
    }
  }
}

TEST_CASE("enumeration at full capacity and beyond it") {
  CHECK(enumerate_subsets(64, 64).size() == 1);
  CHECK(*enumerate_subsets(64, 64).begin() == VertexSet::range(64));
  CHECK(collect(enumerate_subsets(64, 1)).back() == VertexSet{64});
  CHECK(enumerate_subsets(64, 2).size() == 2016);
  CHECK_THROWS_AS(enumerate_subsets(65, 2), ConfigError);
  CHECK_THROWS_AS(enumerate_subsets(5, 6), DomainError);
  CHECK_THROWS_AS(enumerate_subsets(5, -1), DomainError);
}

TEST_CASE("colex rank and unrank are inverse and follow the enumeration index") {
  for (int r = 0; r <= 5; ++r) {
    std::uint64_t index = 0;
    for (VertexSet s : enumerate_subsets(11, r)) {
      CHECK(colex_rank(s) == index);
      CHECK(colex_unrank(r, index) == s);
      ++index;
    }
  }
  const VertexSet top{60, 61, 62, 63, 64};
  CHECK(colex_unrank(5, colex_rank(top)) == top);
}

TEST_CASE("shards partition the index range and concatenate to the full stream") {
  const std::uint64_t total = binomial(13, 6);
  for (int count : {1, 2, 3, 4, 7}) {
    std::vector<VertexSet> joined;
    std::uint64_t next = 0;
    for (int i = 0; i < count; ++i) {
      const IndexRange r = shard_range(total, i, count);
      CHECK(r.begin == next);
      next = r.end;
      for (VertexSet s : SubsetRange(13, 6, r)) joined.push_back(s);
    }
    CHECK(next == total);
    CHECK(joined == collect(enumerate_subsets(13, 6)));
  }
  CHECK_THROWS_AS(shard_range(10, 4, 4), ConfigError);
}

TEST_CASE("induced_count examples") {
  CHECK(induced_count(EdgeSet(3, 6, {}), VertexSet{1, 2, 3, 4}) == 0);
  std::vector<VertexSet> all4;
  for (VertexSet s : enumerate_subsets(5, 4)) all4.push_back(s);
  const EdgeSet complete(4, 5, all4);
  CHECK(induced_count(complete, VertexSet::range(5)) == 5);
  CHECK(induced_count(complete, VertexSet{1, 2, 3}) == 0);
}

TEST_CASE("property: induced_count is monotone, total on the ground set, and both counting paths agree") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = std::uniform_int_distribution<int>(4, 12)(rng);
    const int r = std::uniform_int_distribution<int>(1, 4)(rng);
    const EdgeSet e = random_edges(rng, n, r, trial % 2 == 0 ? 0.9 : 0.1);
    CHECK(induced_count(e, VertexSet::range(n)) == e.size());
    std::uniform_int_distribution<std::uint64_t> pick(0, (std::uint64_t{1} << n) - 1);
    for (int i = 0; i < 20; ++i) {
      const VertexSet s(pick(rng));
      const VertexSet bigger = s | VertexSet(pick(rng));
      CHECK(induced_count(e, s) <= induced_count(e, bigger));
      std::uint64_t scanned = 0;
      for (VertexSet edge : e) scanned += edge.is_subset_of(s) ? 1 : 0;
      CHECK(induced_count(e, s) == scanned);
    }
  }
}

TEST_CASE("rank_of_vertex") {
  CHECK(rank_of_vertex(OrderedTuple({2, 5, 9}), 5) == 2);
  CHECK(rank_of_vertex(OrderedTuple({2, 5, 9}), 2) == 1);
  CHECK(rank_of_vertex(OrderedTuple({1, 3, 4, 7}), 7) == 4);
  CHECK_THROWS_AS(rank_of_vertex(OrderedTuple({2, 5, 9}), 3), DomainError);
  CHECK(VertexSet{1, 3, 4, 7}.rank_of(4) == 3);
  CHECK_THROWS_AS(OrderedTuple({3, 2}), DomainError);
}

TEST_CASE("EdgeSet rejects wrong cardinality, out-of-range and duplicate edges") {
  CHECK_THROWS_AS(EdgeSet(3, 6, {VertexSet{1, 2}}), DomainError);
  CHECK_THROWS_AS(EdgeSet(2, 6, {VertexSet{1, 7}}), DomainError);
  CHECK_THROWS_AS(EdgeSet(2, 6, {VertexSet{1, 2}, VertexSet{1, 2}}), DomainError);
  CHECK_THROWS_AS(EdgeSet(2, 65, {}), ConfigError);
}

TEST_CASE("property: edge lists survive a write/read round trip byte for byte") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    const EdgeSet e = random_edges(rng, 10, 1 + trial % 5, 0.3);
    std::ostringstream first;
    write_edge_list(first, e);
    std::istringstream in(first.str());
    const EdgeSet back = read_edge_list(in);
    CHECK(back == e);
    std::ostringstream second;
    write_edge_list(second, back);
    CHECK(second.str() == first.str());
  }
}

TEST_CASE("malformed edge lists are rejected") {
  const auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return read_edge_list(in);
  };
  CHECK_THROWS_AS(parse(""), FormatError);
  CHECK_THROWS_AS(parse("2 5 2\n1 2\n"), FormatError);
  CHECK_THROWS_AS(parse("2 5 1\n2 1\n"), FormatError);
  CHECK_THROWS_AS(parse("2 5 1\n1 x\n"), FormatError);
  CHECK_THROWS_AS(parse("2 5 1\n1 2 3\n"), FormatError);
  CHECK(parse("2 5 1\n1 2\n").size() == 1);
}
