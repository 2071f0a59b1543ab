#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>

#include "kfs/factor.hpp"
#include "kfs/graph.hpp"
#include "kfs/report.hpp"
#include "kfs/spectral.hpp"

namespace kfs {

/// True iff g is isomorphic to G_{n,k}, decided from its structure: k
/// dominating vertices, whose removal leaves k isolated vertices, a clique
/// on n-1-2k vertices and one more vertex with exactly k-1 neighbours, all
/// in that clique. False whenever k < 2 or n < 3k.
bool recognize_gnk(const Graph& g, int k);

/// n >= max(k²+6k+7, 20k+10), kn even, k >= 2.
bool in_theorem_range(int n, int k);
/// n >= k²/2 + 3k + 1, k >= 2.
bool in_lemma5_range(int n, int k);

enum class Verdict { VacuousHypothesis, FactorFound, ExtremalEquality, Violation, Ambiguous };

const char* to_string(Verdict v);

/// Spectral enclosures of a reference graph at tol and at tol/100, computed
/// once and shared across a campaign.
struct ReferenceEstimate {
  Graph graph;
  double tol = kDefaultTolerance;
  SpectralEstimate coarse;
  SpectralEstimate fine;

  static ReferenceEstimate of(Graph g, double tol = kDefaultTolerance);
};

/// Evidence behind one verdict.
struct TheoremCheck {
  Verdict verdict = Verdict::VacuousHypothesis;
  /// "min-degree", "parity", "spectral", "recognized", "factor",
  /// "no-factor" or "no-factor-ambiguous".
  std::string reason;
  /// Enclosure of ρ(g) used for the comparison, if one was computed.
  std::optional<SpectralEstimate> estimate;
  RhoOrder order = RhoOrder::Ambiguous;
  /// The first comparison overlapped and was redone at tol/100.
  bool tightened = false;
  std::optional<FactorOutcome> outcome;

  /// One-line description including enclosures and the factor outcome.
  std::string describe(const ReferenceEstimate& ref) const;
};

/// Checks the spectral k-factor theorem on one graph against `reference`
/// (normally G_{n,k}). Equality with the reference is decided structurally
/// through recognize_gnk, never numerically.
///
/// Order of checks: δ(g) < k or kn odd gives VacuousHypothesis; recognition
/// gives ExtremalEquality; a spectral comparison that is still overlapping
/// after one tightening to tol/100 is resolved by the factor outcome alone
/// (FactorFound or Ambiguous); Less gives VacuousHypothesis; otherwise a
/// factor gives FactorFound and its absence gives Violation.
/// Throws std::invalid_argument if the orders differ.
TheoremCheck verify_theorem_on(const Graph& g, int k, const ReferenceEstimate& reference,
                               const FactorOptions& options = {});
TheoremCheck verify_theorem_on(const Graph& g, int k, const Graph& reference,
                               double tol = kDefaultTolerance);
/// Against G_{n,k} itself.
TheoremCheck verify_theorem_on(const Graph& g, int k, double tol = kDefaultTolerance);

/// The edge-count consequence e(Ḡ) < (k+1)n - (k+1)² of a graph having
/// δ >= k and ρ > n-2-k. Its derivation squares n-k-2-(k-1)/2, so it is
/// only implied when 2n > 3(k+1) (`derived`).
struct EdgeCountCheck {
  bool applies = false;  // δ >= k and certified lo > n-2-k
  bool derived = false;  // applies and 2n > 3(k+1)
  bool holds = true;
  long long complement_edges = 0;
  long long limit = 0;
};

EdgeCountCheck check_edge_count_consequence(const Graph& g, int k, const SpectralEstimate& est);

struct CampaignOptions {
  double tol = kDefaultTolerance;
  int cap = kDefaultExhaustiveCap;
  /// Run outside the proven parameter range; violations become observations.
  bool force = false;
  /// Worker threads; <= 0 resolves through resolve_jobs.
  int jobs = 0;
};

/// Thrown for campaign parameters outside the supported or proven range.
class RangeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Every single-edge augmentation of G_{n,k} must yield FactorFound.
/// Throws RangeError outside the theorem range unless options.force.
VerificationReport edge_addition_sweep(int n, int k, const CampaignOptions& options = {});

/// Over every attachment pattern of k-1 U–C edges, up to permutations of the
/// U-block and of the C-block, G_{n,k}'s lower bound must exceed each other
/// member's upper bound by at least 1e-6. Supports k <= 4. Throws RangeError
/// below n >= k²/2+3k+1 unless options.force.
VerificationReport lemma5_restricted_extremality(int n, int k, const CampaignOptions& options = {});

inline constexpr double kLemma5Margin = 1e-6;

/// Theorem check plus cross-validation of the factor engine on every graph:
/// certificate search against gadget matching, the parity identity, the
/// degree bound against the numeric upper bound, and the edge-count
/// consequence. `n` labelled graphs (all 2^C(n,2) of them) for n <= 6.
/// Throws RangeError for n > 6.
VerificationReport exhaustive_small_campaign(int n, int k, const CampaignOptions& options = {});

/// Same checks over a graph6 stream; graphs must have at most 10 vertices.
/// Malformed or oversized lines are listed under input_errors.
VerificationReport exhaustive_stream_campaign(std::istream& in, int k,
                                              const CampaignOptions& options = {});

inline constexpr int kMaxInternalOrder = 6;
inline constexpr int kMaxStreamOrder = 10;

/// Density used by random_campaign when none is given: 1 - (k+2)/n.
double default_density(int n, int k);

/// `trials` graphs G(n, density), trial i drawn from its own generator seeded
/// from (seed, i), so results do not depend on the worker count. Throws
/// RangeError outside the theorem range unless options.force.
VerificationReport random_campaign(int n, int k, std::uint64_t trials, std::uint64_t seed,
                                   std::optional<double> density = std::nullopt,
                                   const CampaignOptions& options = {});

/// Oracle equivalence on random graphs: `trials` graphs with order uniform
/// in [n_min, n_max] and edge density uniform in [0.2, 0.9], each checked for
/// every k in [k_min, k_max] with the same cross-validations as the
/// exhaustive campaign (no theorem verdicts).
VerificationReport random_oracle_campaign(int n_min, int n_max, int k_min, int k_max,
                                          std::uint64_t trials, std::uint64_t seed,
                                          const CampaignOptions& options = {});

/// Strict subgraph monotonicity: for random connected graphs and one deleted
/// edge, the enclosures must separate.
VerificationReport subgraph_monotonicity_campaign(std::uint64_t trials, std::uint64_t seed,
                                                  const CampaignOptions& options = {});

/// Edge rewiring: delete edges with small Perron products, add non-edges with
/// large ones, with the first added edge avoiding every deleted edge. The
/// product inequality must hold with a margin of 10·residual on the
/// computed vector (otherwise the instance is skipped), and ρ must strictly
/// increase.
VerificationReport rewiring_campaign(std::uint64_t trials, std::uint64_t seed,
                                     const CampaignOptions& options = {});

/// Deterministic per-index generator: splitmix64 of (seed, index).
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index);

/// Uniform double in [0,1) from the top 53 bits of one 64-bit draw.
template <class Rng>
double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace kfs
