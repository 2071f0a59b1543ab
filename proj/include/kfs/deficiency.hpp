#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "kfs/graph.hpp"

namespace kfs {

/// The pair (S, T) together with its deficiency δ_G(S,T) for target degree k.
///
///   δ = τ + k|T| - k|S| - Σ_{u∈T} d_{G-S}(u)
///
/// where q counts the components C of G-(S∪T) and τ those with
/// e_G(C,T) + k|C| odd. δ ≡ kn (mod 2) always; δ > 0 proves that G has no
/// k-factor.
struct DeficiencyWitness {
  VertexSet S;
  VertexSet T;
  int k = 0;
  int tau = 0;
  int q = 0;
  long long delta = 0;
  /// Σ_{u∈T} d_{G-S}(u).
  long long t_degree_sum = 0;

  bool operator==(const DeficiencyWitness&) const = default;
};

/// Evaluates δ_G(S,T). S and T must be disjoint sets of vertices of g.
/// Throws std::invalid_argument for overlapping or out-of-range sets and for
/// k < 2; throws std::logic_error if the parity identity fails.
DeficiencyWitness deficiency(const Graph& g, const VertexSet& S, const VertexSet& T, int k);

/// Same evaluation without the k >= 2 restriction (Tutte's f-factor
/// deficiency for f ≡ k).
DeficiencyWitness tutte_deficiency(const Graph& g, const VertexSet& S, const VertexSet& T, int k);

/// Thrown when an exhaustive (S,T) scan is requested above the cap.
class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

inline constexpr int kDefaultExhaustiveCap = 14;
/// Scans use 32-bit vertex masks; the cap can never exceed this.
inline constexpr int kHardExhaustiveCap = 20;

/// Among pairs with equal objective, which one is reported.
enum class TieBreak {
  /// Smallest |S∪T|, then lexicographically smallest S, then T.
  SmallestUnion,
  /// Largest |S∪T|, then lexicographically smallest S, then T.
  LargestUnion,
};

struct SearchOptions {
  int cap = kDefaultExhaustiveCap;
  TieBreak tie_break = TieBreak::SmallestUnion;
};

/// Work counters of one exhaustive scan.
struct SearchStats {
  std::uint64_t nodes = 0;
  /// Complete (S,T) assignments whose objective was evaluated exactly.
  std::uint64_t evaluations = 0;
  /// Evaluations where δ ≢ kn (mod 2). Always zero for a correct evaluator.
  std::uint64_t parity_violations = 0;

  SearchStats& operator+=(const SearchStats& o) {
    nodes += o.nodes;
    evaluations += o.evaluations;
    parity_violations += o.parity_violations;
    return *this;
  }
};

/// Returns a pair with δ > 0 maximising δ (ties per options.tie_break), or
/// nullopt iff every pair has δ <= 0, i.e. iff g has a k-factor.
///
/// The scan is exhaustive over all 3^n assignments in effect; branches whose
/// upper bound on δ cannot reach the incumbent are skipped. k >= 1 is
/// accepted here since the formula is Tutte's f-factor deficiency with f ≡ k.
/// Throws CapExceeded if n > options.cap.
std::optional<DeficiencyWitness> search_certificate(const Graph& g, int k,
                                                    const SearchOptions& options = {},
                                                    SearchStats* stats = nullptr);

/// Pair (S,T) maximising slack = k|T| - k|S| - 2 + q - Σ_{u∈T} d_{G-S}(u),
/// returned only if that maximum is >= 0. Same scan and tie-breaking as
/// search_certificate.
struct SlackPair {
  VertexSet S;
  VertexSet T;
  int q = 0;
  long long slack = 0;
};

std::optional<SlackPair> max_slack_pair(const Graph& g, int k, const SearchOptions& options = {},
                                        SearchStats* stats = nullptr);

}  // namespace kfs
