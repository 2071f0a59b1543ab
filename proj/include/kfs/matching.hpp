#pragma once

#include <span>
#include <vector>

#include "kfs/graph.hpp"

namespace kfs {

/// Adjacency-list graph without the Graph order cap. Used for the f-factor
/// gadget, whose order is roughly 4|E(G)|.
class SparseGraph {
 public:
  explicit SparseGraph(int n = 0) : adj_(n) {}

  static SparseGraph from(const Graph& g);

  int order() const { return static_cast<int>(adj_.size()); }
  std::size_t size() const { return m_; }

  int add_vertex() {
    adj_.emplace_back();
    return order() - 1;
  }
  /// No duplicate check; the caller guarantees simplicity.
  void add_edge(int u, int v);

  std::span<const int> neighbors(int v) const { return adj_[v]; }

 private:
  std::vector<std::vector<int>> adj_;
  std::size_t m_ = 0;
};

inline constexpr int kUnmatched = -1;

/// mate[v] is v's partner or kUnmatched.
struct Matching {
  std::vector<int> mate;

  std::size_t size() const;
  bool perfect() const;
  std::vector<Edge> edges() const;
};

/// Maximum-cardinality matching in a general graph (Edmonds' blossom
/// algorithm, one BFS per exposed vertex, blossom bases tracked with a
/// union-find). `initial`, if given, must be a valid matching and is
/// extended rather than rebuilt.
Matching max_matching(const SparseGraph& g, const Matching* initial = nullptr);

Matching max_matching(const Graph& g);

/// True iff `m` is a matching of g (every pair is an edge, mate is symmetric).
bool is_matching(const SparseGraph& g, const Matching& m);

}  // namespace kfs
