#include <sstream>
#include <stdexcept>

#include "kfs/verifier.hpp"

namespace kfs {

bool recognize_gnk(const Graph& g, int k) {
  const int n = g.order();
  if (k < 2 || n < 3 * k) return false;
  if (g.size() != gnk_edge_count({n, k})) return false;

  std::vector<char> in_s(n, 0);
  int dominating = 0;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) == n - 1) {
      in_s[v] = 1;
      ++dominating;
    }
  }
  if (dominating != k) return false;

  // Degrees inside H = G - S.
  std::vector<int> hdeg(n, 0);
  std::vector<int> rest;
  int isolated = 0;
  for (int v = 0; v < n; ++v) {
    if (in_s[v]) continue;
    hdeg[v] = g.degree(v) - k;
    if (hdeg[v] == 0) {
      ++isolated;
    } else {
      rest.push_back(v);
    }
  }
  if (isolated != k) return false;
  const int clique = n - 1 - 2 * k;
  if (static_cast<int>(rest.size()) != clique + 1) return false;

  for (int w : rest) {
    if (hdeg[w] != k - 1) continue;
    bool ok = true;
    for (std::size_t i = 0; ok && i < rest.size(); ++i) {
      if (rest[i] == w) continue;
      for (std::size_t j = i + 1; ok && j < rest.size(); ++j) {
        if (rest[j] != w && !g.adjacent(rest[i], rest[j])) ok = false;
      }
    }
    // The edge count then forces w's k-1 neighbours into the clique, since
    // the isolated vertices of H have none.
    if (ok) return true;
  }
  return false;
}

bool in_theorem_range(int n, int k) {
  if (k < 2 || (static_cast<long long>(k) * n) % 2 != 0) return false;
  const long long need = std::max<long long>(1LL * k * k + 6LL * k + 7, 20LL * k + 10);
  return n >= need;
}

bool in_lemma5_range(int n, int k) {
  return k >= 2 && 2LL * n >= 1LL * k * k + 6LL * k + 2;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::VacuousHypothesis: return "VacuousHypothesis";
    case Verdict::FactorFound: return "FactorFound";
    case Verdict::ExtremalEquality: return "ExtremalEquality";
    case Verdict::Violation: return "Violation";
    case Verdict::Ambiguous: return "Ambiguous";
  }
  return "?";
}

ReferenceEstimate ReferenceEstimate::of(Graph g, double tol) {
  ReferenceEstimate r;
  r.coarse = rho(g, tol);
  r.fine = rho(g, tol / 100);
  r.graph = std::move(g);
  r.tol = tol;
  return r;
}

std::string TheoremCheck::describe(const ReferenceEstimate& ref) const {
  std::ostringstream out;
  out.precision(15);
  out << "verdict=" << to_string(verdict) << " reason=" << reason;
  if (estimate) {
    const SpectralEstimate& r = tightened ? ref.fine : ref.coarse;
    out << " rho=[" << estimate->lo << "," << estimate->hi << "] ref=[" << r.lo << "," << r.hi
        << "] order=" << to_string(order) << (tightened ? " tightened" : "");
  }
  if (outcome) {
    if (outcome->has_factor()) {
      out << " factor_edges=" << outcome->factor().size();
    } else {
      const NoFactor& nf = outcome->no_factor();
      out << " no_factor=" << to_string(nf.reason);
      if (nf.witness) {
        auto list = [&](const VertexSet& set) {
          for (std::size_t i = 0; i < set.size(); ++i) out << (i ? "," : "") << set[i];
        };
        out << " S={";
        list(nf.witness->S);
        out << "} T={";
        list(nf.witness->T);
        out << "} delta=" << nf.witness->delta;
      }
    }
  }
  return out.str();
}

TheoremCheck verify_theorem_on(const Graph& g, int k, const ReferenceEstimate& ref,
                               const FactorOptions& options) {
  const int n = g.order();
  if (n != ref.graph.order()) {
    throw std::invalid_argument("verify_theorem_on: order " + std::to_string(n) +
                                " differs from reference order " +
                                std::to_string(ref.graph.order()));
  }
  TheoremCheck c;
  if (n == 0 || g.min_degree() < k) {
    c.reason = "min-degree";
    return c;
  }
  if ((static_cast<long long>(k) * n) % 2 != 0) {
    c.reason = "parity";
    return c;
  }
  if (recognize_gnk(g, k)) {
    c.verdict = Verdict::ExtremalEquality;
    c.reason = "recognized";
    return c;
  }

  c.estimate = rho(g, ref.tol);
  c.order = compare_estimates(*c.estimate, ref.coarse);
  if (c.order == RhoOrder::Ambiguous) {
    c.tightened = true;
    c.estimate = rho(g, ref.tol / 100);
    c.order = compare_estimates(*c.estimate, ref.fine);
  }
  if (c.order == RhoOrder::Less) {
    c.reason = "spectral";
    return c;
  }

  c.outcome = has_k_factor(g, k, options);
  if (c.outcome->has_factor()) {
    c.verdict = Verdict::FactorFound;
    c.reason = "factor";
  } else if (c.order == RhoOrder::Greater) {
    c.verdict = Verdict::Violation;
    c.reason = "no-factor";
  } else {
    c.verdict = Verdict::Ambiguous;
    c.reason = "no-factor-ambiguous";
  }
  return c;
}

TheoremCheck verify_theorem_on(const Graph& g, int k, const Graph& reference, double tol) {
  return verify_theorem_on(g, k, ReferenceEstimate::of(reference, tol));
}

TheoremCheck verify_theorem_on(const Graph& g, int k, double tol) {
  return verify_theorem_on(g, k, build_gnk({g.order(), k}), tol);
}

EdgeCountCheck check_edge_count_consequence(const Graph& g, int k, const SpectralEstimate& est) {
  EdgeCountCheck c;
  const long long n = g.order();
  if (n == 0 || g.min_degree() < k) return c;
  if (!(est.lo > static_cast<double>(n - 2 - k))) return c;
  c.applies = true;
  c.derived = 2 * n > 3LL * (k + 1);
  c.complement_edges = n * (n - 1) / 2 - static_cast<long long>(g.size());
  c.limit = (k + 1LL) * n - (k + 1LL) * (k + 1LL);
  c.holds = c.complement_edges < c.limit;
  return c;
}

}  // namespace kfs
