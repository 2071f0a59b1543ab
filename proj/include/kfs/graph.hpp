#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#ifndef KFS_MAX_VERTICES
#define KFS_MAX_VERTICES 1024
#endif

namespace kfs {

/// Upper bound on the order of a Graph. Set at build time via KFS_MAX_VERTICES.
inline constexpr int kMaxVertices = KFS_MAX_VERTICES;

/// An undirected edge, normalised so that u < v.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  auto operator<=>(const Edge&) const = default;
};

/// Vertex subset over 0..n-1, stored as a sorted list of distinct indices.
using VertexSet = std::vector<int>;

class GraphBuilder;

/// Simple undirected graph on vertices 0..n-1.
///
/// Adjacency is kept as one bitset row per vertex (ceil(n/64) words each).
/// Values are immutable once built; every edit below returns a new graph.
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph of order n.
  explicit Graph(int n);

  /// Throws std::invalid_argument on loops, out-of-range endpoints or
  /// repeated edges.
  static Graph from_edges(int n, std::span<const Edge> edges);

  int order() const { return n_; }
  std::size_t size() const { return m_; }

  bool adjacent(int u, int v) const {
    return (bits_[row_offset(u) + (v >> 6)] >> (v & 63)) & 1U;
  }
  int degree(int v) const;
  std::vector<int> neighbors(int v) const;
  std::vector<int> degrees() const;
  std::vector<Edge> edges() const;
  int min_degree() const;
  int max_degree() const;

  /// Raw adjacency row of v: words() 64-bit words, bit j set iff v~j.
  std::span<const std::uint64_t> row(int v) const {
    return {bits_.data() + row_offset(v), static_cast<std::size_t>(words_)};
  }
  int words() const { return words_; }

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && bits_ == other.bits_;
  }

 private:
  friend class GraphBuilder;

  std::size_t row_offset(int v) const {
    return static_cast<std::size_t>(v) * static_cast<std::size_t>(words_);
  }

  int n_ = 0;
  int words_ = 0;
  std::size_t m_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Mutable staging area for constructing a Graph.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n);
  explicit GraphBuilder(const Graph& g);

  int order() const { return g_.n_; }
  bool adjacent(int u, int v) const { return g_.adjacent(u, v); }

  /// Returns false if the edge was already present.
  bool add_edge(int u, int v);
  bool remove_edge(int u, int v);

  Graph build() &&;
  Graph build() const&;

 private:
  void check_pair(int u, int v) const;
  void flip(int u, int v);

  Graph g_;
};

Graph empty_graph(int n);

/// K_n. Throws std::invalid_argument for n == 0.
Graph complete(int n);

/// Disjoint union; vertices of g2 are shifted by g1.order().
Graph disjoint_union(const Graph& g1, const Graph& g2);

/// g1 ∪ g2 plus every edge between the two vertex sets.
Graph join(const Graph& g1, const Graph& g2);

Graph complement(const Graph& g);

/// Throws std::invalid_argument if u == v or uv is already an edge.
Graph add_edge(const Graph& g, int u, int v);

/// Throws std::invalid_argument if u == v or uv is not an edge.
Graph remove_edge(const Graph& g, int u, int v);

/// Graph h with h ~ (perm[u], perm[v]) for each edge uv of g.
Graph relabel(const Graph& g, std::span<const int> perm);

/// Induced subgraph on `keep` (sorted); vertex keep[i] becomes i.
Graph induced_subgraph(const Graph& g, std::span<const int> keep);

/// Connected components, each sorted, ordered by smallest vertex.
std::vector<VertexSet> components(const Graph& g);

bool is_connected(const Graph& g);

std::vector<Edge> non_edges(const Graph& g);

/// Parameters of the extremal graph G_{n,k}.
struct GnkParams {
  int n = 0;
  int k = 0;

  /// Throws std::invalid_argument unless k >= 2 and n >= 3k.
  void validate() const;
};

/// Fixed vertex layout of G_{n,k}: S-block [0, k), U-block [k, 2k+1),
/// C-block [2k+1, n). U[0] is the special vertex joined to C[0..k-2].
struct GnkLayout {
  int n = 0;
  int k = 0;

  explicit GnkLayout(GnkParams p) : n(p.n), k(p.k) {}

  int s(int i) const { return i; }
  int u(int i) const { return k + i; }
  int c(int i) const { return 2 * k + 1 + i; }
  int clique_size() const { return n - 1 - 2 * k; }

  VertexSet s_block() const;
  VertexSet u_block() const;
  VertexSet c_block() const;
};

/// K_k ∨ (K̄_{k+1} ∪ K_{n-1-2k}) with U[0] joined to C[0..k-2].
Graph build_gnk(GnkParams p);

/// An edge between U-block vertex `u_index` and C-block vertex `c_index`.
struct Attachment {
  int u_index = 0;
  int c_index = 0;

  auto operator<=>(const Attachment&) const = default;
};

/// K_k ∨ (K̄_{k+1} ∪ K_{n-1-2k}) plus exactly k-1 distinct U–C edges.
/// Uses the same vertex layout as build_gnk.
Graph build_base_family_member(int n, int k, std::span<const Attachment> attachments);

/// Number of edges of G_{n,k}.
std::size_t gnk_edge_count(GnkParams p);

}  // namespace kfs
