#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "gkn/construction.hpp"
#include "oracles.hpp"

using namespace gkn;

namespace {

// Fixture seed for k = 5, N = 12 whose random G is non-empty.
constexpr std::uint64_t kSeedS0 = 87;

std::set<oracle::Tuple> as_tuples(const EdgeSet& e) {
  std::set<oracle::Tuple> out;
  for (VertexSet s : e) out.insert(s.members());
  return out;
}

// k = 4 coloring of singletons of [n], all {1,3} except the given overrides.
Coloring k4_coloring(int n, std::vector<std::pair<int, PairColor>> overrides) {
  Coloring phi = constant_coloring(4, n, PairColor{1, 3});
  for (auto [v, c] : overrides) phi = phi.with_entry(VertexSet{v}, c);
  return phi;
}

}  // namespace

TEST_CASE("chi returns the ranks of the two removed vertices") {
  CHECK(chi(OrderedTuple({3, 5, 8, 11}), VertexSet{8, 11}) == PairColor{1, 2});
  CHECK(chi(OrderedTuple({1, 2, 3, 4}), VertexSet{1, 3}) == PairColor{2, 4});
  // k = 4: the singleton {v1} of (v1, v2, v3) demands {2, 3}.
  CHECK(chi(OrderedTuple({4, 6, 9}), VertexSet{4}) == PairColor{2, 3});
  CHECK(chi(OrderedTuple({4, 6, 9}), VertexSet{6}) == PairColor{1, 3});
  CHECK(chi(OrderedTuple({4, 6, 9}), VertexSet{9}) == PairColor{1, 2});
}

TEST_CASE("chi rejects T outside f or with the wrong size") {
  CHECK_THROWS_AS(chi(OrderedTuple({1, 2, 3, 4}), VertexSet{1, 5}), DomainError);
  CHECK_THROWS_AS(chi(OrderedTuple({1, 2, 3, 4}), VertexSet{1}), DomainError);
  CHECK_THROWS_AS(chi(OrderedTuple({1, 2, 3, 4}), VertexSet{1, 2, 3}), DomainError);
}

TEST_CASE("property: chi is a bijection from co-pairs of f onto the pair colors") {
  std::mt19937_64 rng(3);
  for (int k = 4; k <= 9; ++k)
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<int> all(20);
      std::iota(all.begin(), all.end(), 1);
      std::shuffle(all.begin(), all.end(), rng);
      std::vector<int> pick(all.begin(), all.begin() + (k - 1));
      std::sort(pick.begin(), pick.end());
      const VertexSet f{std::span<const int>(pick)};
      std::set<int> seen;
      for (VertexSet t : subsets_of(f, k - 3)) seen.insert(chi(f, t).index());
      CHECK(seen.size() == static_cast<std::size_t>(color_count(k)));
      CHECK(*seen.rbegin() == color_count(k) - 1);
    }
}

TEST_CASE("pair color indices run over C(k-1,2) values in colex order") {
  CHECK(PairColor{1, 2}.index() == 0);
  CHECK(PairColor{1, 3}.index() == 1);
  CHECK(PairColor{2, 3}.index() == 2);
  CHECK(PairColor{1, 4}.index() == 3);
  for (int idx = 0; idx < 45; ++idx) CHECK(PairColor::from_index(idx).index() == idx);
  CHECK(color_count(5) == 6);
  CHECK(color_count(4) == 3);
}

TEST_CASE("sample_coloring covers every (k-3)-subset with a valid color") {
  const Coloring phi = sample_coloring(Params{5, 8, 1});
  CHECK(phi.size() == 28);
  for (VertexSet t : enumerate_subsets(8, 2)) {
    const PairColor c = phi.at(t);
    CHECK(c.i >= 1);
    CHECK(c.i < c.j);
    CHECK(c.j <= 4);
  }
  CHECK(phi.rng_id() == std::string(kRngId));
}

TEST_CASE("sample_coloring is deterministic in the seed") {
  CHECK(sample_coloring(Params{5, 12, 42}) == sample_coloring(Params{5, 12, 42}));
  CHECK_FALSE(sample_coloring(Params{5, 12, 42}) == sample_coloring(Params{5, 12, 43}));
}

TEST_CASE("pooled color frequencies are uniform") {
  // 3572 seeds x 28 entries ~ 1e5 draws. Per-color sd of the frequency is
  // sqrt((1/6)(5/6)/1e5) ~ 0.0012, so +-0.01 is over 8 sd; the chi-squared
  // statistic (5 df) must stay below 20.52, its 0.999 quantile.
  std::array<std::uint64_t, 6> counts{};
  std::uint64_t total = 0;
  for (std::uint64_t seed = 0; seed < 3572; ++seed) {
    const Coloring phi = sample_coloring(Params{5, 8, seed});
    for (std::uint8_t c : phi.table()) {
      ++counts[c];
      ++total;
    }
  }
  double chi2 = 0;
  for (std::uint64_t c : counts) {
    const double freq = static_cast<double>(c) / static_cast<double>(total);
    CHECK(std::abs(freq - 1.0 / 6.0) < 0.01);
    const double expected = static_cast<double>(total) / 6.0;
    chi2 += (static_cast<double>(c) - expected) * (static_cast<double>(c) - expected) / expected;
  }
  CHECK(chi2 < 20.52);
}

TEST_CASE("Params validation") {
  CHECK_NOTHROW((Params{4, 8, 0}.validate()));
  CHECK_THROWS_AS((Params{3, 8, 0}.validate()), ConfigError);
  CHECK_THROWS_AS((Params{5, 5, 0}.validate()), ConfigError);
  CHECK_THROWS_AS((Params{5, 65, 0}.validate()), ConfigError);
  CHECK_THROWS_AS((Params{5, 20, 0}.validate(16)), ConfigError);
}

TEST_CASE("k = 4 illustration: f is in G iff the colors are 23, 13, 12 along f") {
  const Coloring phi = k4_coloring(6, {{2, PairColor{2, 3}}, {4, PairColor{1, 3}}, {5, PairColor{1, 2}}});
  CHECK(membership_in_g(phi, OrderedTuple({2, 4, 5})));
  CHECK_FALSE(membership_in_g(phi, OrderedTuple({2, 4, 6})));
  const Coloring swapped = phi.with_entry(VertexSet{4}, PairColor{2, 3});
  CHECK_FALSE(membership_in_g(swapped, OrderedTuple({2, 4, 5})));
}

TEST_CASE("a constant coloring has empty G") {
  const Coloring phi = constant_coloring(4, 8, PairColor{1, 2});
  for (VertexSet f : enumerate_subsets(8, 3)) CHECK_FALSE(membership_in_g(phi, f));
  CHECK(build_g(phi).edges.empty());
  CHECK(build_g(constant_coloring(5, 9, PairColor{2, 4})).edges.empty());
}

TEST_CASE("build_g agrees with the naive definition") {
  for (std::uint64_t seed : {1, 2, 3, 87, 91}) {
    const Coloring phi = sample_coloring(Params{5, 9, seed});
    CHECK(as_tuples(build_g(phi).edges) == oracle::naive_g(phi));
  }
  for (std::uint64_t seed : {3, 4}) {
    const Coloring phi = sample_planted_coloring(Params{5, 9, seed}, 200);
    const auto naive = oracle::naive_g(phi);
    CHECK_FALSE(naive.empty());
    CHECK(as_tuples(build_g(phi).edges) == naive);
  }
  const Coloring k6 = sample_planted_coloring(Params{6, 10, 5}, 300);
  CHECK(as_tuples(build_g(k6).edges) == oracle::naive_g(k6));
}

TEST_CASE("k = 5, N = 6: G is contained in C(6,4) and every edge re-tests as a member") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Coloring phi = sample_planted_coloring(Params{5, 6, seed}, 15);
    const LinkHypergraph g = build_g(phi);
    CHECK(g.edges.size() <= 15);
    for (VertexSet f : g.edges) CHECK(membership_in_g(phi, f));
  }
}

TEST_CASE("golden fixture: k = 5, N = 12, seed s0") {
  // Counts recorded from oracle::naive_g / naive_h when the fixture was made.
  const Coloring phi = sample_coloring(Params{5, 12, kSeedS0});
  const LinkHypergraph g = build_g(phi);
  const ParityHypergraph h = build_h(g);
  CHECK(g.edges.size() == 3);
  CHECK(h.edges.size() == 22);
  CHECK(as_tuples(h.edges) == oracle::naive_h(oracle::naive_g(phi), 12, 5));

  const Coloring planted = sample_planted_coloring(Params{5, 12, 7}, 400);
  const LinkHypergraph pg = build_g(planted);
  CHECK(pg.edges.size() == 38);
  CHECK(build_h(pg).edges.size() == 122);
}

TEST_CASE("build_h on empty and single-edge G") {
  CHECK(build_h(link_from_edges(EdgeSet(4, 9, {}))).edges.empty());
  const ParityHypergraph h = build_h(link_from_edges(EdgeSet(4, 6, {VertexSet{1, 3, 4, 6}})));
  const std::vector<VertexSet> expected{{1, 2, 3, 4, 6}, {1, 3, 4, 5, 6}};
  CHECK(h.edges.edges() == expected);
}

TEST_CASE("property: H edges have exactly one link, non-edges have zero or two") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    for (int k : {5, 6}) {
      const Coloring phi = sample_planted_coloring(Params{k, 10, seed}, 250);
      const LinkHypergraph g = build_g(phi);
      const ParityHypergraph h = build_h(g);
      CHECK(as_tuples(h.edges) == oracle::naive_h(oracle::naive_g(phi), 10, k));
      for (VertexSet e : enumerate_subsets(10, k)) {
        const std::uint64_t links = induced_count(g.edges, e);
        if (h.edges.contains(e))
          CHECK(links == 1);
        else
          CHECK((links == 0 || links == 2));
      }
      // For f in G and every (k-3)-subset T of f, phi(T) = chi_f(T).
      for (VertexSet f : g.edges)
        for (VertexSet t : subsets_of(f, k - 3)) CHECK(phi.at(t) == chi(f, t));
      CHECK(build_h(build_g(phi)).edges == h.edges);
    }
  }
}

TEST_CASE("coloring files round-trip bit for bit") {
  for (const Coloring& phi : {sample_coloring(Params{5, 12, 3}), sample_planted_coloring(Params{6, 9, 2}, 50),
                              sample_coloring(Params{4, 7, 1})}) {
    const std::string text = coloring_to_string(phi);
    std::istringstream in(text);
    const Coloring back = read_coloring(in);
    CHECK(back == phi);
    CHECK(coloring_to_string(back) == text);
  }
  const std::string head = coloring_to_string(sample_coloring(Params{5, 6, 9})).substr(0, 40);
  CHECK(head.rfind("coloring 5 6 9 splitmix64-v1\n1 2 : ", 0) == 0);
}

TEST_CASE("malformed coloring files are rejected") {
  const std::string good = coloring_to_string(sample_coloring(Params{5, 6, 9}));
  const auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return read_coloring(in);
  };
  CHECK_NOTHROW(parse(good));
  CHECK_THROWS_AS(parse("colouring 5 6 9 x\n"), FormatError);
  CHECK_THROWS_AS(parse(good.substr(0, good.size() - 10)), FormatError);
  std::string swapped = good;
  swapped.replace(swapped.find("1 2 :"), 5, "1 3 :");
  CHECK_THROWS_AS(parse(swapped), FormatError);
  std::string bad_pair = good;
  bad_pair.replace(bad_pair.find(" : ") + 3, 3, "4 4");
  CHECK_THROWS_AS(parse(bad_pair), FormatError);
}
