#include "kfs/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace kfs {

namespace {

int words_for(int n) { return (n + 63) / 64; }

void check_order(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw std::invalid_argument("graph order " + std::to_string(n) +
                                " outside [0, " + std::to_string(kMaxVertices) + "]");
  }
}

}  // namespace

Graph::Graph(int n) {
  check_order(n);
  n_ = n;
  words_ = words_for(n);
  bits_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(words_), 0);
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (const Edge& e : edges) {
    if (!b.add_edge(e.u, e.v)) {
      throw std::invalid_argument("repeated edge " + std::to_string(e.u) + "-" +
                                  std::to_string(e.v));
    }
  }
  return std::move(b).build();
}

int Graph::degree(int v) const {
  int d = 0;
  for (std::uint64_t w : row(v)) d += std::popcount(w);
  return d;
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  auto r = row(v);
  for (int w = 0; w < words_; ++w) {
    std::uint64_t bits = r[w];
    while (bits != 0) {
      out.push_back(w * 64 + std::countr_zero(bits));
      bits &= bits - 1;
    }
  }
  return out;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> d(n_);
  for (int v = 0; v < n_; ++v) d[v] = degree(v);
  return d;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u) {
    for (int v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

int Graph::min_degree() const {
  if (n_ == 0) return 0;
  int best = n_;
  for (int v = 0; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

GraphBuilder::GraphBuilder(int n) : g_(n) {}
GraphBuilder::GraphBuilder(const Graph& g) : g_(g) {}

void GraphBuilder::check_pair(int u, int v) const {
  if (u < 0 || v < 0 || u >= g_.n_ || v >= g_.n_) {
    throw std::invalid_argument("vertex out of range: " + std::to_string(u) + "-" +
                                std::to_string(v) + " in graph of order " +
                                std::to_string(g_.n_));
  }
  if (u == v) {
    throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  }
}

void GraphBuilder::flip(int u, int v) {
  g_.bits_[g_.row_offset(u) + (v >> 6)] ^= std::uint64_t{1} << (v & 63);
  g_.bits_[g_.row_offset(v) + (u >> 6)] ^= std::uint64_t{1} << (u & 63);
}

bool GraphBuilder::add_edge(int u, int v) {
  check_pair(u, v);
  if (g_.adjacent(u, v)) return false;
  flip(u, v);
  ++g_.m_;
  return true;
}

bool GraphBuilder::remove_edge(int u, int v) {
  check_pair(u, v);
  if (!g_.adjacent(u, v)) return false;
  flip(u, v);
  --g_.m_;
  return true;
}

Graph GraphBuilder::build() && { return std::move(g_); }
Graph GraphBuilder::build() const& { return g_; }

Graph empty_graph(int n) { return Graph(n); }

Graph complete(int n) {
  if (n <= 0) throw std::invalid_argument("complete graph needs n >= 1");
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
  return std::move(b).build();
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  const int n1 = g1.order();
  GraphBuilder b(n1 + g2.order());
  for (const Edge& e : g1.edges()) b.add_edge(e.u, e.v);
  for (const Edge& e : g2.edges()) b.add_edge(e.u + n1, e.v + n1);
  return std::move(b).build();
}

Graph join(const Graph& g1, const Graph& g2) {
  GraphBuilder b(disjoint_union(g1, g2));
  const int n1 = g1.order();
  for (int u = 0; u < n1; ++u)
    for (int v = 0; v < g2.order(); ++v) b.add_edge(u, n1 + v);
  return std::move(b).build();
}

Graph complement(const Graph& g) {
  const int n = g.order();
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) b.add_edge(u, v);
  return std::move(b).build();
}

Graph add_edge(const Graph& g, int u, int v) {
  GraphBuilder b(g);
  if (!b.add_edge(u, v)) {
    throw std::invalid_argument("add_edge: " + std::to_string(u) + "-" + std::to_string(v) +
                                " is already an edge");
  }
  return std::move(b).build();
}

Graph remove_edge(const Graph& g, int u, int v) {
  GraphBuilder b(g);
  if (!b.remove_edge(u, v)) {
    throw std::invalid_argument("remove_edge: " + std::to_string(u) + "-" +
                                std::to_string(v) + " is not an edge");
  }
  return std::move(b).build();
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  const int n = g.order();
  if (static_cast<int>(perm.size()) != n) {
    throw std::invalid_argument("relabel: permutation size mismatch");
  }
  std::vector<char> seen(n, 0);
  for (int p : perm) {
    if (p < 0 || p >= n || seen[p]) throw std::invalid_argument("relabel: not a permutation");
    seen[p] = 1;
  }
  GraphBuilder b(n);
  for (const Edge& e : g.edges()) b.add_edge(perm[e.u], perm[e.v]);
  return std::move(b).build();
}

Graph induced_subgraph(const Graph& g, std::span<const int> keep) {
  GraphBuilder b(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = i + 1; j < keep.size(); ++j)
      if (g.adjacent(keep[i], keep[j])) b.add_edge(static_cast<int>(i), static_cast<int>(j));
  return std::move(b).build();
}

std::vector<VertexSet> components(const Graph& g) {
  const int n = g.order();
  std::vector<int> comp(n, -1);
  std::vector<VertexSet> out;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    comp[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      out[id].push_back(v);
      for (int w : g.neighbors(v)) {
        if (comp[w] < 0) {
          comp[w] = id;
          stack.push_back(w);
        }
      }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

std::vector<Edge> non_edges(const Graph& g) {
  std::vector<Edge> out;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

void GnkParams::validate() const {
  if (k < 2) throw std::invalid_argument("G_{n,k} requires k >= 2, got k=" + std::to_string(k));
  if (n < 3 * k) {
    throw std::invalid_argument("G_{n,k} requires n >= 3k, got n=" + std::to_string(n) +
                                ", k=" + std::to_string(k));
  }
  check_order(n);
}

VertexSet GnkLayout::s_block() const {
  VertexSet out;
  for (int i = 0; i < k; ++i) out.push_back(s(i));
  return out;
}

VertexSet GnkLayout::u_block() const {
  VertexSet out;
  for (int i = 0; i <= k; ++i) out.push_back(u(i));
  return out;
}

VertexSet GnkLayout::c_block() const {
  VertexSet out;
  for (int i = 0; i < clique_size(); ++i) out.push_back(c(i));
  return out;
}

namespace {

GraphBuilder base_family_skeleton(GnkParams p) {
  p.validate();
  const GnkLayout lay(p);
  GraphBuilder b(p.n);
  for (int i = 0; i < p.k; ++i) {
    for (int j = i + 1; j < p.k; ++j) b.add_edge(lay.s(i), lay.s(j));
    for (int v = p.k; v < p.n; ++v) b.add_edge(lay.s(i), v);
  }
  for (int i = 0; i < lay.clique_size(); ++i)
    for (int j = i + 1; j < lay.clique_size(); ++j) b.add_edge(lay.c(i), lay.c(j));
  return b;
}

}  // namespace

Graph build_gnk(GnkParams p) {
  GraphBuilder b = base_family_skeleton(p);
  const GnkLayout lay(p);
  for (int i = 0; i < p.k - 1; ++i) b.add_edge(lay.u(0), lay.c(i));
  return std::move(b).build();
}

Graph build_base_family_member(int n, int k, std::span<const Attachment> attachments) {
  const GnkParams p{n, k};
  GraphBuilder b = base_family_skeleton(p);
  const GnkLayout lay(p);
  if (static_cast<int>(attachments.size()) != k - 1) {
    throw std::invalid_argument("base family member needs exactly k-1 = " +
                                std::to_string(k - 1) + " attachments");
  }
  for (const Attachment& a : attachments) {
    if (a.u_index < 0 || a.u_index > k || a.c_index < 0 || a.c_index >= lay.clique_size()) {
      throw std::invalid_argument("attachment index out of range");
    }
    if (!b.add_edge(lay.u(a.u_index), lay.c(a.c_index))) {
      throw std::invalid_argument("duplicate attachment (" + std::to_string(a.u_index) + "," +
                                  std::to_string(a.c_index) + ")");
    }
  }
  return std::move(b).build();
}

std::size_t gnk_edge_count(GnkParams p) {
  p.validate();
  auto choose2 = [](std::size_t x) { return x * (x - (x > 0 ? 1 : 0)) / 2; };
  const auto n = static_cast<std::size_t>(p.n);
  const auto k = static_cast<std::size_t>(p.k);
  return choose2(k) + k * (n - k) + choose2(n - 1 - 2 * k) + (k - 1);
}

}  // namespace kfs
