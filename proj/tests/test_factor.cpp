#include <doctest.h>

#include <random>

#include "kfs/factor.hpp"
#include "oracles/oracles.hpp"

using namespace kfs;

TEST_CASE("extremal graphs have no k-factor") {
  for (auto [n, k] : {std::pair{7, 2}, {9, 2}, {10, 3}, {13, 4}}) {
    const FactorOutcome out = has_k_factor(build_gnk({n, k}), k);
    INFO("n=" << n << " k=" << k);
    REQUIRE_FALSE(out.has_factor());
    const NoFactor& nf = out.no_factor();
    CHECK(nf.reason == NoFactorReason::Witness);
    REQUIRE(nf.witness.has_value());
    CHECK(nf.witness->delta > 0);
    CHECK(*nf.witness == deficiency(build_gnk({n, k}), nf.witness->S, nf.witness->T, k));
  }
}

TEST_CASE("no-factor grid") {
  for (int k = 2; k <= 5; ++k) {
    for (int n = 3 * k; n <= 60; ++n) {
      const FactorOutcome out = has_k_factor(build_gnk({n, k}), k);
      INFO("n=" << n << " k=" << k);
      REQUIRE_FALSE(out.has_factor());
      if (n > kDefaultExhaustiveCap) CHECK(out.no_factor().reason == NoFactorReason::MatchingOnly);
    }
  }
}

TEST_CASE("graphs with factors") {
  const FactorOutcome k6 = has_k_factor(complete(6), 3);
  REQUIRE(k6.has_factor());
  CHECK(is_k_factor(complete(6), k6.factor(), 3));

  const Graph c7 = Graph::from_edges(
      7, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 0}});
  const FactorOutcome c = has_k_factor(c7, 2);
  REQUIRE(c.has_factor());
  CHECK(c.factor() == c7.edges());

  const FactorOutcome k4 = has_k_factor(complete(4), 1);
  REQUIRE(k4.has_factor());
  CHECK(k4.factor().size() == 2);
  CHECK(is_k_factor(complete(4), k4.factor(), 1));
}

TEST_CASE("regular graphs are their own factor") {
  const Graph k5 = complete(5);
  const TutteGadget gd = tutte_gadget(k5, 4);
  CHECK(gd.aux.order() == 20);  // no internal nodes
  const FactorOutcome out = has_k_factor(k5, 4);
  REQUIRE(out.has_factor());
  CHECK(out.factor() == k5.edges());
}

TEST_CASE("gadget without a perfect matching") {
  const Graph g = build_gnk({9, 2});
  const TutteGadget gd = tutte_gadget(g, 2);
  CHECK_FALSE(max_matching(gd.aux).perfect());
  CHECK_FALSE(find_k_factor(g, 2).has_value());
  CHECK_THROWS_AS(tutte_gadget(g, 3), std::invalid_argument);
}

TEST_CASE("minimum degree below k") {
  const Graph g = disjoint_union(complete(4), Graph::from_edges(2, std::vector<Edge>{{0, 1}}));
  const FactorOutcome out = has_k_factor(g, 2);
  REQUIRE_FALSE(out.has_factor());
  CHECK(out.no_factor().reason == NoFactorReason::MinDegreeBelowK);
  REQUIRE(out.no_factor().witness.has_value());
  CHECK(out.no_factor().witness->S.empty());
  CHECK(out.no_factor().witness->T.size() == 1);
  CHECK(out.no_factor().witness->delta > 0);
  CHECK_THROWS_AS(has_k_factor(g, 0), std::invalid_argument);
}

TEST_CASE("agrees with brute-force enumeration for n <= 7") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> dens(0.3, 1.0);
  for (int i = 0; i < 1500; ++i) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const Graph g = oracle::random_graph(n, dens(rng), rng);
    for (int k = 1; k <= 3; ++k) {
      const FactorOutcome out = has_k_factor(g, k);
      REQUIRE(out.has_factor() == oracle::brute_force_has_k_factor(g, k));
      if (out.has_factor()) REQUIRE(is_k_factor(g, out.factor(), k));
    }
  }
}

TEST_CASE("large inputs use the matching side") {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 20; ++i) {
    const Graph g = oracle::random_graph(60, 0.3, rng);
    if (g.min_degree() < 3) continue;
    const FactorOutcome out = has_k_factor(g, 3);
    if (out.has_factor()) CHECK(is_k_factor(g, out.factor(), 3));
  }
}

TEST_CASE("class memberships") {
  const GnkParams p{7, 2};
  const Graph g = build_gnk(p);
  const GnkLayout lay(p);

  const auto b = in_class_Gkn(g, 2);
  REQUIRE(b.has_value());
  CHECK(b->B == lay.u_block());
  CHECK(b->slack == 0);
  CHECK(class_witness_holds(g, 2, *b));

  for (int n = 6; n <= 12; ++n) CHECK_FALSE(in_class_Gkn(complete(n), 2).has_value());
  CHECK_THROWS_AS(in_class_Gkn(empty_graph(6), 2), std::invalid_argument);

  ClassWitness st;
  st.kind = ClassKind::STPair;
  st.S = lay.s_block();
  st.T = lay.u_block();
  st.slack = 0;
  CHECK(class_witness_holds(g, 2, st));

  const auto big = in_class_Gnk_big(g, 2);
  REQUIRE(big.has_value());
  CHECK(big->slack >= 0);
  CHECK(class_witness_holds(g, 2, *big));
  CHECK_FALSE(in_class_Gnk_big(complete(6), 2).has_value());
}

TEST_CASE("no k-factor with kn even implies the pair class") {
  std::mt19937_64 rng(47);
  std::uniform_real_distribution<double> dens(0.3, 0.9);
  int checked = 0;
  for (int i = 0; i < 600; ++i) {
    const int n = 6 + static_cast<int>(rng() % 5);
    const Graph g = oracle::random_graph(n, dens(rng), rng);
    for (int k = 2; k <= 3; ++k) {
      if ((k * n) % 2 != 0 || g.min_degree() < k) continue;
      const FactorOutcome out = has_k_factor(g, k);
      if (out.has_factor()) continue;
      ++checked;
      CHECK(out.no_factor().witness->delta >= 2);
      const auto w = in_class_Gnk_big(g, k);
      REQUIRE(w.has_value());
      CHECK(class_witness_holds(g, k, *w));
    }
  }
  CHECK(checked > 0);
}
