#include "kfs/matching.hpp"

#include <stdexcept>
#include <utility>

namespace kfs {

void SparseGraph::add_edge(int u, int v) {
  adj_[u].push_back(v);
  adj_[v].push_back(u);
  ++m_;
}

SparseGraph SparseGraph::from(const Graph& g) {
  SparseGraph s(g.order());
  for (const Edge& e : g.edges()) s.add_edge(e.u, e.v);
  return s;
}

std::size_t Matching::size() const {
  std::size_t c = 0;
  for (std::size_t v = 0; v < mate.size(); ++v)
    if (mate[v] != kUnmatched && static_cast<std::size_t>(mate[v]) > v) ++c;
  return c;
}

bool Matching::perfect() const {
  for (int m : mate)
    if (m == kUnmatched) return false;
  return true;
}

std::vector<Edge> Matching::edges() const {
  std::vector<Edge> out;
  for (std::size_t v = 0; v < mate.size(); ++v)
    if (mate[v] != kUnmatched && static_cast<std::size_t>(mate[v]) > v)
      out.emplace_back(static_cast<int>(v), mate[v]);
  return out;
}

bool is_matching(const SparseGraph& g, const Matching& m) {
  if (static_cast<int>(m.mate.size()) != g.order()) return false;
  for (int v = 0; v < g.order(); ++v) {
    const int w = m.mate[v];
    if (w == kUnmatched) continue;
    if (w < 0 || w >= g.order() || w == v || m.mate[w] != v) return false;
    bool found = false;
    for (int x : g.neighbors(v)) found = found || x == w;
    if (!found) return false;
  }
  return true;
}

namespace {

constexpr int kFree = -1;
constexpr int kEven = 0;
constexpr int kOdd = 1;

class BlossomSearch {
 public:
  BlossomSearch(const SparseGraph& g, std::vector<int>& mate)
      : g_(g),
        mate_(mate),
        label_(g.order(), kFree),
        parent_(g.order(), -1),
        base_(g.order()),
        stamp_(g.order(), 0) {
    for (int v = 0; v < g.order(); ++v) base_[v] = v;
  }

  /// Grows an alternating tree from `root`; augments and returns true if an
  /// exposed vertex is reached.
  bool augment_from(int root) {
    queue_.clear();
    head_ = 0;
    mark(root, kEven);
    queue_.push_back(root);
    bool found = false;
    while (head_ < queue_.size() && !found) {
      const int v = queue_[head_++];
      for (int u : g_.neighbors(v)) {
        if (label_[u] == kFree) {
          mark(u, kOdd);
          parent_[u] = v;
          if (mate_[u] == kUnmatched) {
            flip_path(u);
            found = true;
            break;
          }
          mark(mate_[u], kEven);
          queue_.push_back(mate_[u]);
        } else if (label_[u] == kEven) {
          const int bu = find(u);
          const int bv = find(v);
          if (bu == bv) continue;
          const int a = lowest_common_base(bu, bv);
          shrink(u, v, a);
          shrink(v, u, a);
        }
      }
    }
    reset();
    return found;
  }

 private:
  void mark(int v, int label) {
    if (label_[v] == kFree) touched_.push_back(v);
    label_[v] = label;
  }

  int find(int v) {
    while (base_[v] != v) {
      base_[v] = base_[base_[v]];
      v = base_[v];
    }
    return v;
  }

  int lowest_common_base(int a, int b) {
    ++clock_;
    for (;;) {
      if (a != -1) {
        if (stamp_[a] == clock_) return a;
        stamp_[a] = clock_;
        a = mate_[a] == kUnmatched ? -1 : find(parent_[mate_[a]]);
      }
      std::swap(a, b);
    }
  }

  /// Walks from v up to base a, rewiring parents across the new blossom and
  /// turning its odd vertices even.
  void shrink(int v, int w, int a) {
    while (find(v) != a) {
      parent_[v] = w;
      w = mate_[v];
      if (label_[w] == kOdd) {
        label_[w] = kEven;
        queue_.push_back(w);
      }
      base_[find(v)] = a;
      base_[find(w)] = a;
      v = parent_[w];
    }
  }

  void flip_path(int u) {
    while (u != -1) {
      const int pv = parent_[u];
      const int next = mate_[pv];
      mate_[u] = pv;
      mate_[pv] = u;
      u = next;
    }
  }

  void reset() {
    for (int v : touched_) {
      label_[v] = kFree;
      parent_[v] = -1;
      base_[v] = v;
    }
    touched_.clear();
  }

  const SparseGraph& g_;
  std::vector<int>& mate_;
  std::vector<int> label_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<int> stamp_;
  std::vector<int> touched_;
  std::vector<int> queue_;
  std::size_t head_ = 0;
  int clock_ = 0;
};

}  // namespace

Matching max_matching(const SparseGraph& g, const Matching* initial) {
  Matching m;
  if (initial != nullptr) {
    if (!is_matching(g, *initial)) throw std::invalid_argument("max_matching: bad initial matching");
    m = *initial;
  } else {
    m.mate.assign(g.order(), kUnmatched);
    for (int v = 0; v < g.order(); ++v) {
      if (m.mate[v] != kUnmatched) continue;
      for (int u : g.neighbors(v)) {
        if (m.mate[u] == kUnmatched) {
          m.mate[v] = u;
          m.mate[u] = v;
          break;
        }
      }
    }
  }
  BlossomSearch search(g, m.mate);
  for (int v = 0; v < g.order(); ++v) {
    if (m.mate[v] == kUnmatched) search.augment_from(v);
  }
  return m;
}

Matching max_matching(const Graph& g) { return max_matching(SparseGraph::from(g)); }

}  // namespace kfs
