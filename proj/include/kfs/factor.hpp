#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "kfs/deficiency.hpp"
#include "kfs/graph.hpp"
#include "kfs/matching.hpp"

namespace kfs {

/// Auxiliary graph whose perfect matchings correspond to k-factors of g.
///
/// Vertex v of g gets one external node per incident edge and d(v)-k
/// internal nodes, internal complete to external. Edge uv of g becomes one
/// cross edge between its external node at u and its external node at v.
/// In a perfect matching the internal nodes absorb d(v)-k external nodes of
/// v, so exactly k cross edges at v are matched: edge uv is in the factor
/// iff its cross edge is matched.
struct TutteGadget {
  SparseGraph aux;
  /// edges[i] is the i-th edge of g; cross[i] = {external node at edges[i].u,
  /// external node at edges[i].v}.
  std::vector<Edge> edges;
  std::vector<std::pair<int, int>> cross;

  /// Factor edges selected by a perfect matching of aux.
  std::vector<Edge> factor_from(const Matching& m) const;
  /// A matching of aux built from a greedy degree-<=k subgraph of g, used to
  /// seed the blossom search.
  Matching greedy_seed(int k) const;

 private:
  friend TutteGadget tutte_gadget(const Graph& g, int k);
  std::vector<int> owner_;          // original vertex of each aux node
  std::vector<int> internal_begin_;  // per original vertex
  std::vector<int> internal_end_;
  std::vector<std::vector<int>> external_;  // per original vertex, by incident edge
};

/// Throws std::invalid_argument if k < 1 or k > δ(g).
TutteGadget tutte_gadget(const Graph& g, int k);

/// Why no factor was returned.
enum class NoFactorReason {
  /// A deficiency pair with δ > 0 was found.
  Witness,
  /// δ(g) < k; the witness is (∅, {a minimum-degree vertex}).
  MinDegreeBelowK,
  /// The maximum matching of the gadget (or of g for k = 1) is not perfect;
  /// no (S,T) witness was searched for.
  MatchingOnly,
};

const char* to_string(NoFactorReason r);

struct NoFactor {
  std::optional<DeficiencyWitness> witness;
  NoFactorReason reason = NoFactorReason::MatchingOnly;
};

/// Either the edge set of a k-factor or evidence that none exists.
struct FactorOutcome {
  std::variant<std::vector<Edge>, NoFactor> value;

  bool has_factor() const { return value.index() == 0; }
  const std::vector<Edge>& factor() const { return std::get<0>(value); }
  const NoFactor& no_factor() const { return std::get<1>(value); }
};

struct FactorOptions {
  /// Witnesses are searched only when n <= cap.
  int cap = kDefaultExhaustiveCap;
  TieBreak tie_break = TieBreak::SmallestUnion;
  bool want_witness = true;
};

/// True iff `edges` ⊆ E(g) and every vertex meets exactly k of them.
bool is_k_factor(const Graph& g, const std::vector<Edge>& edges, int k);

/// Constructive route only: a k-factor found through the gadget (or a
/// perfect matching for k = 1), or nullopt if none exists.
std::optional<std::vector<Edge>> find_k_factor(const Graph& g, int k);

/// Decides k-factor existence constructively (gadget + blossom; k = 1 uses
/// a maximum matching of g directly). When no factor exists and n <= cap,
/// a maximum-deficiency witness is attached for k >= 2.
/// Throws std::invalid_argument for k < 1.
FactorOutcome has_k_factor(const Graph& g, int k, const FactorOptions& options = {});

enum class ClassKind { BSet, STPair };

/// Membership certificate for one of the two graph classes.
///  - BSet: |B| = k+1 with Σ_{u∈B} d(u) <= k²+2k-1; slack = k²+2k-1 - Σ.
///  - STPair: disjoint S, T with
///    Σ_{u∈T} d_{G-S}(u) <= k|T| - k|S| - 2 + q(S,T); slack = RHS - LHS.
struct ClassWitness {
  ClassKind kind = ClassKind::BSet;
  VertexSet B;
  VertexSet S;
  VertexSet T;
  long long slack = 0;
};

/// Recomputes the defining inequality from the stored sets.
bool class_witness_holds(const Graph& g, int k, const ClassWitness& w);

/// Membership in the class of order-n graphs with δ >= k having k+1
/// vertices of total degree <= k²+2k-1. Uses the k+1 smallest degrees.
/// Throws std::invalid_argument if δ(g) < k or n < 3k.
std::optional<ClassWitness> in_class_Gkn(const Graph& g, int k);

/// Membership in the class of graphs with δ >= k admitting a pair (S,T)
/// with Σ_{u∈T} d_{G-S}(u) <= k|T| - k|S| - 2 + q(S,T). Exhaustive; the
/// witness has maximal slack. Throws CapExceeded above options.cap.
std::optional<ClassWitness> in_class_Gnk_big(const Graph& g, int k,
                                              const SearchOptions& options = {});

}  // namespace kfs
