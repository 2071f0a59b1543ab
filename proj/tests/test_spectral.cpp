#include <doctest.h>

#include <cmath>
#include <random>

#include "kfs/spectral.hpp"
#include "oracles/oracles.hpp"

using namespace kfs;

TEST_CASE("closed-form radii") {
  const SpectralEstimate k7 = rho(complete(7));
  CHECK(k7.contains(6.0));
  CHECK(k7.width() <= 1e-9);

  const Graph p3 = Graph::from_edges(3, std::vector<Edge>{{0, 1}, {1, 2}});
  const SpectralEstimate e = rho(p3);
  CHECK(e.contains(std::sqrt(2.0)));
  CHECK(e.converged);
  CHECK(e.width() <= 1e-9);

  CHECK(rho(empty_graph(1)).contains(0.0));
  CHECK(rho(empty_graph(5)).hi == 0.0);
  CHECK_THROWS_AS(rho(empty_graph(0)), std::invalid_argument);
  CHECK_THROWS_AS(rho(complete(3), 0.0), std::invalid_argument);
}

TEST_CASE("G_{20,2} lies in the window") {
  const SpectralEstimate e = rho(build_gnk({20, 2}));
  CHECK(e.lo > 16.0);
  CHECK(e.hi < 17.0);
}

TEST_CASE("bipartite and disconnected inputs") {
  // K_{3,3} has ρ = 3 and a ±3 pair that would stall plain power iteration.
  const Graph k33 = join(empty_graph(3), empty_graph(3));
  CHECK(rho(k33).contains(3.0));
  const Graph g = disjoint_union(complete(3), complete(5));
  const SpectralEstimate e = rho(g);
  CHECK(e.contains(4.0));
  // Perron vector lives on the larger clique.
  for (int v = 0; v < 3; ++v) CHECK(e.vector[v] == 0.0);
  for (int v = 3; v < 8; ++v) CHECK(e.vector[v] > 0.0);
}

TEST_CASE("enclosures contain the characteristic-polynomial root") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> order(2, 12);
  std::uniform_real_distribution<double> dens(0.05, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const Graph g = oracle::random_graph(order(rng), dens(rng), rng);
    const SpectralEstimate e = rho(g);
    const double exact = oracle::charpoly_spectral_radius(g);
    INFO("g6 order=" << g.order() << " m=" << g.size() << " lo=" << e.lo << " hi=" << e.hi
                     << " exact=" << exact);
    REQUIRE(e.lo <= e.rayleigh + 1e-15);
    REQUIRE(e.rayleigh <= e.hi + 1e-15);
    REQUIRE(e.contains(exact));
    REQUIRE(e.width() <= 1e-9);
    for (double x : e.vector) REQUIRE(x >= 0.0);
    if (is_connected(g)) {
      for (double x : e.vector) REQUIRE(x > 0.0);
    }
  }
}

TEST_CASE("degree bound") {
  CHECK(hsf_bound(4, 6, 3) == doctest::Approx(3.0).epsilon(1e-15));
  for (int n = 2; n <= 40; ++n) {
    CHECK(hsf_bound(n, static_cast<long long>(n) * (n - 1) / 2, n - 1) ==
          doctest::Approx(n - 1).epsilon(1e-15));
  }
  const Graph g = build_gnk({9, 2});
  // C(2,2) + 2*7 + C(4,2) + 1 edges.
  CHECK(g.size() == 22);
  CHECK(hsf_bound(9, 22, 2) >= rho(g).hi);
  CHECK(hsf_bound(9, 22, 2) >= rho(g).numeric_hi - 1e-9);
  CHECK_THROWS_AS(hsf_bound(10, 1, 9), std::domain_error);
}

TEST_CASE("comparisons") {
  CHECK(compare_rho(complete(5), complete(4)) == RhoOrder::Greater);
  CHECK(compare_rho(complete(4), complete(5)) == RhoOrder::Less);
  const Graph g = build_gnk({12, 2});
  CHECK(compare_rho(g, g) == RhoOrder::Ambiguous);
  CHECK(compare_rho(g, g, 1e-3) == RhoOrder::Ambiguous);
  const Graph big = build_gnk({50, 2});
  CHECK(compare_rho(big, disjoint_union(complete(47), empty_graph(3))) == RhoOrder::Greater);
}
