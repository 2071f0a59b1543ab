#include "kfs/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace kfs {

namespace {

struct ComponentResult {
  double lo = 0.0;
  double hi = 0.0;
  double rayleigh = 0.0;
  double residual = 0.0;
  std::vector<double> x;  // indexed like the component's vertex list
  int iterations = 0;
  bool converged = false;
};

/// Power iteration on (A + I) restricted to one connected component.
ComponentResult enclose_component(const Graph& g, const VertexSet& verts, double tol,
                                  long long cap) {
  ComponentResult res;
  const int c = static_cast<int>(verts.size());
  if (c == 1) {
    res.x = {1.0};
    res.converged = true;
    return res;
  }

  std::vector<int> local(g.order(), -1);
  for (int i = 0; i < c; ++i) local[verts[i]] = i;
  std::vector<int> start(c + 1, 0);
  std::vector<int> nbr;
  int max_deg = 0;
  for (int i = 0; i < c; ++i) {
    for (int w : g.neighbors(verts[i])) nbr.push_back(local[w]);
    start[i + 1] = static_cast<int>(nbr.size());
    max_deg = std::max(max_deg, start[i + 1] - start[i]);
  }

  // Rounding guard: each (Ax)_i sums at most Δ terms of magnitude <= 1.
  const double eps = std::numeric_limits<double>::epsilon();
  const double guard = 4.0 * (c + 2) * eps * std::max(1.0, static_cast<double>(max_deg));

  std::vector<double> x(c, 1.0 / std::sqrt(static_cast<double>(c)));
  std::vector<double> ax(c, 0.0);
  double best_lo = 0.0;
  double best_hi = static_cast<double>(max_deg) + guard;

  for (long long it = 0;; ++it) {
    for (int i = 0; i < c; ++i) {
      double s = 0.0;
      for (int p = start[i]; p < start[i + 1]; ++p) s += x[nbr[p]];
      ax[i] = s;
    }
    double mu = 0.0;
    double cw_min = std::numeric_limits<double>::infinity();
    double cw_max = 0.0;
    for (int i = 0; i < c; ++i) {
      mu += x[i] * ax[i];
      const double ratio = ax[i] / x[i];
      cw_min = std::min(cw_min, ratio);
      cw_max = std::max(cw_max, ratio);
    }
    double r2 = 0.0;
    for (int i = 0; i < c; ++i) {
      const double d = ax[i] - mu * x[i];
      r2 += d * d;
    }
    const double lo = std::max(mu, cw_min) - guard;
    const double hi = cw_max + guard;
    if (lo > best_lo) best_lo = lo;
    if (hi < best_hi) best_hi = hi;
    res.rayleigh = mu;
    res.residual = std::sqrt(r2);
    res.iterations = static_cast<int>(it);
    if (best_hi - best_lo <= tol) {
      res.converged = true;
      break;
    }
    if (it >= cap) break;

    double norm = 0.0;
    for (int i = 0; i < c; ++i) {
      x[i] += ax[i];
      norm += x[i] * x[i];
    }
    norm = std::sqrt(norm);
    for (double& v : x) v /= norm;
  }
  res.lo = std::max(0.0, best_lo);
  res.hi = best_hi;
  res.x = std::move(x);
  return res;
}

}  // namespace

SpectralEstimate rho(const Graph& g, double tol) {
  const int n = g.order();
  if (n < 1) throw std::invalid_argument("rho: graph must have at least one vertex");
  if (!(tol > 0.0)) throw std::invalid_argument("rho: tolerance must be positive");

  const long long cap = static_cast<long long>(
      std::ceil(200.0 * n * std::max(1.0, std::log(1.0 / tol))));

  SpectralEstimate est;
  est.converged = true;
  const auto comps = components(g);
  double best_lo = -1.0;
  double hi = 0.0;
  const VertexSet* best_comp = nullptr;
  ComponentResult best;
  for (const VertexSet& comp : comps) {
    ComponentResult r = enclose_component(g, comp, tol, cap);
    est.iterations = std::max(est.iterations, r.iterations);
    est.converged = est.converged && r.converged;
    hi = std::max(hi, r.hi);
    if (r.lo > best_lo) {
      best_lo = r.lo;
      best_comp = &comp;
      best = std::move(r);
    }
  }

  est.numeric_hi = hi;
  est.lo = best_lo;
  const double closed_form =
      std::min(hsf_bound(n, static_cast<long long>(g.size()), g.min_degree()),
               static_cast<double>(g.max_degree()));
  // Closed forms are exact expressions; pad by a few ulps for the sqrt.
  est.hi = std::min(hi, closed_form + 8.0 * std::numeric_limits<double>::epsilon() *
                                          std::max(1.0, closed_form));
  if (est.hi < est.lo) est.hi = est.lo;

  est.vector.assign(n, 0.0);
  for (std::size_t i = 0; i < best_comp->size(); ++i) est.vector[(*best_comp)[i]] = best.x[i];
  est.rayleigh = best.rayleigh;
  est.residual = best.residual;
  if (est.hi - est.lo <= tol) est.converged = true;
  return est;
}

double hsf_bound(long long n, long long m, long long delta) {
  const double radicand = 2.0 * static_cast<double>(m) -
                          static_cast<double>(n) * static_cast<double>(delta) +
                          (static_cast<double>(delta) + 1.0) * (static_cast<double>(delta) + 1.0) / 4.0;
  if (radicand < 0.0) {
    throw std::domain_error("hsf_bound: negative radicand for n=" + std::to_string(n) +
                            ", m=" + std::to_string(m) + ", delta=" + std::to_string(delta));
  }
  return (static_cast<double>(delta) - 1.0) / 2.0 + std::sqrt(radicand);
}

const char* to_string(RhoOrder o) {
  switch (o) {
    case RhoOrder::Less: return "less";
    case RhoOrder::Greater: return "greater";
    case RhoOrder::Ambiguous: return "ambiguous";
  }
  return "?";
}

RhoOrder compare_estimates(const SpectralEstimate& a, const SpectralEstimate& b) {
  if (a.hi < b.lo) return RhoOrder::Less;
  if (a.lo > b.hi) return RhoOrder::Greater;
  return RhoOrder::Ambiguous;
}

RhoOrder compare_rho(const Graph& g1, const Graph& g2, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("compare_rho: tolerance must be positive");
  return compare_estimates(rho(g1, tol), rho(g2, tol));
}

}  // namespace kfs
