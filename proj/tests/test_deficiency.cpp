#include <doctest.h>

#include <random>
#include <tuple>

#include "kfs/deficiency.hpp"
#include "oracles/oracles.hpp"

using namespace kfs;

namespace {

struct Best {
  long long delta = 0;
  VertexSet S, T;
};

/// Full 3^n scan with the reporting order spelled out directly.
std::optional<Best> naive_best(const Graph& g, int k, bool smallest_union) {
  const auto a = oracle::matrix_of(g);
  const int n = g.order();
  std::vector<int> role(n, 0);
  std::optional<Best> best;
  for (;;) {
    const long long d = oracle::naive_deficiency(a, role, k);
    if (d > 0) {
      Best cand{d, {}, {}};
      for (int v = 0; v < n; ++v) {
        if (role[v] == 1) cand.S.push_back(v);
        if (role[v] == 2) cand.T.push_back(v);
      }
      auto key = [&](const Best& b) {
        const long long sz = static_cast<long long>(b.S.size() + b.T.size());
        return std::make_tuple(-b.delta, smallest_union ? sz : -sz, b.S, b.T);
      };
      if (!best || key(cand) < key(*best)) best = cand;
    }
    int i = 0;
    while (i < n && role[i] == 2) role[i++] = 0;
    if (i == n) break;
    ++role[i];
  }
  return best;
}

}  // namespace

TEST_CASE("evaluator examples") {
  const GnkParams p{7, 2};
  const GnkLayout lay(p);
  const DeficiencyWitness w = deficiency(build_gnk(p), lay.s_block(), lay.u_block(), 2);
  CHECK(w.tau == 1);
  CHECK(w.q == 1);
  CHECK(w.t_degree_sum == 1);
  CHECK(w.delta == 2);

  const Graph mixed = disjoint_union(complete(3), disjoint_union(complete(4), empty_graph(1)));
  // Components of odd order are odd for k = 3 and even for k = 2.
  CHECK(tutte_deficiency(mixed, {}, {}, 3).delta == 2);
  CHECK(deficiency(mixed, {}, {}, 2).delta == 0);
  CHECK(deficiency(complete(6), {}, {}, 2).delta == 0);
}

TEST_CASE("evaluator errors") {
  const Graph g = complete(5);
  CHECK_THROWS_AS(deficiency(g, {0, 1}, {1, 2}, 2), std::invalid_argument);
  CHECK_THROWS_AS(deficiency(g, {0, 0}, {}, 2), std::invalid_argument);
  CHECK_THROWS_AS(deficiency(g, {7}, {}, 2), std::invalid_argument);
  CHECK_THROWS_AS(deficiency(g, {}, {}, 1), std::invalid_argument);
  CHECK_NOTHROW(tutte_deficiency(g, {}, {}, 1));
}

TEST_CASE("evaluator matches the definition and parity") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 2000; ++i) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const Graph g = oracle::random_graph(n, 0.5, rng);
    const auto a = oracle::matrix_of(g);
    std::vector<int> role(n);
    VertexSet S, T;
    for (int v = 0; v < n; ++v) {
      role[v] = static_cast<int>(rng() % 3);
      if (role[v] == 1) S.push_back(v);
      if (role[v] == 2) T.push_back(v);
    }
    for (int k = 2; k <= 4; ++k) {
      const DeficiencyWitness w = deficiency(g, S, T, k);
      REQUIRE(w.delta == oracle::naive_deficiency(a, role, k));
      REQUIRE((w.delta - static_cast<long long>(k) * n) % 2 == 0);
      REQUIRE(w.tau >= 0);
      REQUIRE(w.tau <= w.q);
    }
  }
}

TEST_CASE("search examples") {
  CHECK_FALSE(search_certificate(complete(5), 2).has_value());
  const auto k1 = search_certificate(complete(5), 1);
  REQUIRE(k1.has_value());
  CHECK(k1->delta > 0);
  const auto w = search_certificate(build_gnk({9, 2}), 2);
  REQUIRE(w.has_value());
  CHECK(w->delta == 2);
  CHECK_THROWS_AS(search_certificate(complete(15), 2), CapExceeded);
  SearchOptions wide;
  wide.cap = 15;
  CHECK_NOTHROW(search_certificate(complete(15), 2, wide));
  wide.cap = 40;
  CHECK_THROWS_AS(search_certificate(complete(21), 2, wide), CapExceeded);
}

TEST_CASE("search agrees with the naive scan including tie-breaks") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> dens(0.15, 0.9);
  for (int i = 0; i < 400; ++i) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const Graph g = oracle::random_graph(n, dens(rng), rng);
    for (int k = 1; k <= 3; ++k) {
      for (TieBreak tb : {TieBreak::SmallestUnion, TieBreak::LargestUnion}) {
        SearchStats stats;
        const auto got = search_certificate(g, k, {kDefaultExhaustiveCap, tb}, &stats);
        const auto want = naive_best(g, k, tb == TieBreak::SmallestUnion);
        REQUIRE(got.has_value() == want.has_value());
        REQUIRE(stats.parity_violations == 0);
        if (!got) continue;
        REQUIRE(got->delta == want->delta);
        REQUIRE(got->S == want->S);
        REQUIRE(got->T == want->T);
        REQUIRE(*got == tutte_deficiency(g, got->S, got->T, k));
      }
    }
  }
}

TEST_CASE("maximum deficiency matches the naive scan on larger graphs") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> dens(0.2, 0.9);
  for (int i = 0; i < 60; ++i) {
    const int n = 9 + i % 2;
    const Graph g = oracle::random_graph(n, dens(rng), rng);
    for (int k = 2; k <= 3; ++k) {
      const auto got = search_certificate(g, k);
      const long long naive = oracle::naive_max_deficiency(g, k);
      REQUIRE(got.has_value() == (naive > 0));
      if (got) REQUIRE(got->delta == naive);
    }
  }
}

TEST_CASE("slack pairs") {
  const GnkParams p{7, 2};
  const auto s = max_slack_pair(build_gnk(p), 2);
  REQUIRE(s.has_value());
  CHECK(s->slack >= 0);
  CHECK_FALSE(max_slack_pair(complete(6), 2).has_value());
}
