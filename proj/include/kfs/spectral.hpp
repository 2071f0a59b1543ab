#pragma once

#include <vector>

#include "kfs/graph.hpp"

namespace kfs {

inline constexpr double kDefaultTolerance = 1e-9;

/// Certified enclosure [lo, hi] of the spectral radius of a graph.
struct SpectralEstimate {
  double lo = 0.0;
  double hi = 0.0;
  /// Nonnegative unit vector approximating a Perron vector. For a
  /// disconnected graph it is supported on the component attaining lo.
  std::vector<double> vector;
  /// Rayleigh quotient of `vector`.
  double rayleigh = 0.0;
  /// ||A x - rayleigh * x||_2.
  double residual = 0.0;
  /// Upper bound from the iteration alone (Collatz–Wielandt), before it is
  /// intersected with the degree-based closed forms.
  double numeric_hi = 0.0;
  int iterations = 0;
  bool converged = false;

  double width() const { return hi - lo; }
  bool contains(double value) const { return lo <= value && value <= hi; }
};

/// Encloses ρ(g) to width <= tol.
///
/// Runs power iteration on A + I from the all-ones vector, separately on each
/// connected component. The lower bound is the larger of the Rayleigh
/// quotient and the Collatz–Wielandt minimum ratio; the upper bound is the
/// Collatz–Wielandt maximum ratio, intersected with hsf_bound() and Δ(g).
/// Both are widened by a rounding guard. If the iteration cap
/// 200·n·ln(1/tol) is hit first, the best enclosure is returned with
/// converged == false.
///
/// Throws std::invalid_argument for an empty graph or tol <= 0.
SpectralEstimate rho(const Graph& g, double tol = kDefaultTolerance);

/// (δ-1)/2 + sqrt(2m - nδ + (δ+1)²/4), an upper bound on ρ(G) for any graph
/// of order n with m edges and minimum degree at least δ.
/// Throws std::domain_error when the radicand is negative.
double hsf_bound(long long n, long long m, long long delta);

enum class RhoOrder { Less, Greater, Ambiguous };

const char* to_string(RhoOrder o);

/// Less/Greater when the two enclosures are disjoint, Ambiguous otherwise.
RhoOrder compare_estimates(const SpectralEstimate& a, const SpectralEstimate& b);

RhoOrder compare_rho(const Graph& g1, const Graph& g2, double tol = kDefaultTolerance);

}  // namespace kfs
