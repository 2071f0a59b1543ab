#include "kfs/factor.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace kfs {

TutteGadget tutte_gadget(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("tutte_gadget: k must be >= 1");
  if (g.order() > 0 && g.min_degree() < k) {
    throw std::invalid_argument("tutte_gadget: k=" + std::to_string(k) +
                                " exceeds minimum degree " + std::to_string(g.min_degree()));
  }
  TutteGadget gd;
  const int n = g.order();
  gd.edges = g.edges();
  gd.external_.assign(n, {});
  gd.internal_begin_.assign(n, 0);
  gd.internal_end_.assign(n, 0);

  auto fresh = [&](int v) {
    gd.owner_.push_back(v);
    return gd.aux.add_vertex();
  };
  gd.cross.reserve(gd.edges.size());
  for (const Edge& e : gd.edges) {
    const int a = fresh(e.u);
    const int b = fresh(e.v);
    gd.external_[e.u].push_back(a);
    gd.external_[e.v].push_back(b);
    gd.cross.emplace_back(a, b);
    gd.aux.add_edge(a, b);
  }
  for (int v = 0; v < n; ++v) {
    const int extra = static_cast<int>(gd.external_[v].size()) - k;
    gd.internal_begin_[v] = gd.aux.order();
    for (int i = 0; i < extra; ++i) {
      const int in = fresh(v);
      for (int ex : gd.external_[v]) gd.aux.add_edge(in, ex);
    }
    gd.internal_end_[v] = gd.aux.order();
  }
  return gd;
}

std::vector<Edge> TutteGadget::factor_from(const Matching& m) const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (m.mate[cross[i].first] == cross[i].second) out.push_back(edges[i]);
  }
  return out;
}

Matching TutteGadget::greedy_seed(int k) const {
  const int n = static_cast<int>(external_.size());
  std::vector<int> deg(n, 0);
  for (const Edge& e : edges) {
    ++deg[e.u];
    ++deg[e.v];
  }
  std::vector<std::size_t> idx(edges.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return deg[edges[a].u] + deg[edges[a].v] < deg[edges[b].u] + deg[edges[b].v];
  });

  Matching m;
  m.mate.assign(aux.order(), kUnmatched);
  std::vector<int> room(n, k);
  for (std::size_t i : idx) {
    const Edge& e = edges[i];
    if (room[e.u] > 0 && room[e.v] > 0) {
      --room[e.u];
      --room[e.v];
      m.mate[cross[i].first] = cross[i].second;
      m.mate[cross[i].second] = cross[i].first;
    }
  }
  for (int v = 0; v < n; ++v) {
    int in = internal_begin_[v];
    for (int ex : external_[v]) {
      if (in == internal_end_[v]) break;
      if (m.mate[ex] != kUnmatched) continue;
      m.mate[ex] = in;
      m.mate[in] = ex;
      ++in;
    }
  }
  return m;
}

const char* to_string(NoFactorReason r) {
  switch (r) {
    case NoFactorReason::Witness: return "witness";
    case NoFactorReason::MinDegreeBelowK: return "min-degree-below-k";
    case NoFactorReason::MatchingOnly: return "matching-only";
  }
  return "?";
}

bool is_k_factor(const Graph& g, const std::vector<Edge>& edges, int k) {
  std::vector<int> deg(g.order(), 0);
  std::vector<Edge> sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (const Edge& e : sorted) {
    if (e.u < 0 || e.v >= g.order() || e.u == e.v || !g.adjacent(e.u, e.v)) return false;
    ++deg[e.u];
    ++deg[e.v];
  }
  return std::all_of(deg.begin(), deg.end(), [k](int d) { return d == k; });
}

std::optional<std::vector<Edge>> find_k_factor(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("find_k_factor: k must be >= 1");
  if (g.order() == 0) return std::vector<Edge>{};
  if (g.min_degree() < k) return std::nullopt;
  std::vector<Edge> factor;
  if (k == 1) {
    const Matching m = max_matching(g);
    if (!m.perfect()) return std::nullopt;
    factor = m.edges();
  } else {
    const TutteGadget gd = tutte_gadget(g, k);
    const Matching seed = gd.greedy_seed(k);
    const Matching m = max_matching(gd.aux, &seed);
    if (!m.perfect()) return std::nullopt;
    factor = gd.factor_from(m);
  }
  if (!is_k_factor(g, factor, k)) throw std::logic_error("find_k_factor: invalid factor recovered");
  return factor;
}

FactorOutcome has_k_factor(const Graph& g, int k, const FactorOptions& options) {
  if (k < 1) throw std::invalid_argument("has_k_factor: k must be >= 1");
  if (g.order() > 0 && g.min_degree() < k) {
    const auto degs = g.degrees();
    const int v = static_cast<int>(std::min_element(degs.begin(), degs.end()) - degs.begin());
    return {NoFactor{tutte_deficiency(g, {}, {v}, k), NoFactorReason::MinDegreeBelowK}};
  }
  if (auto factor = find_k_factor(g, k)) return {std::move(*factor)};

  const int cap = std::min(options.cap, kHardExhaustiveCap);
  if (k >= 2 && options.want_witness && g.order() <= cap) {
    SearchOptions so;
    so.cap = cap;
    so.tie_break = options.tie_break;
    auto w = search_certificate(g, k, so);
    if (!w) {
      throw std::logic_error("has_k_factor: matching found no factor but no deficiency pair exists");
    }
    return {NoFactor{std::move(w), NoFactorReason::Witness}};
  }
  return {NoFactor{std::nullopt, NoFactorReason::MatchingOnly}};
}

bool class_witness_holds(const Graph& g, int k, const ClassWitness& w) {
  if (g.order() == 0 || g.min_degree() < k) return false;
  if (w.kind == ClassKind::BSet) {
    if (static_cast<int>(w.B.size()) != k + 1) return false;
    std::vector<char> seen(g.order(), 0);
    long long sum = 0;
    for (int v : w.B) {
      if (v < 0 || v >= g.order() || seen[v]) return false;
      seen[v] = 1;
      sum += g.degree(v);
    }
    const long long limit = static_cast<long long>(k) * k + 2LL * k - 1;
    return sum <= limit && w.slack == limit - sum;
  }
  DeficiencyWitness d;
  try {
    d = tutte_deficiency(g, w.S, w.T, k);
  } catch (const std::invalid_argument&) {
    return false;
  }
  const long long rhs = static_cast<long long>(k) * static_cast<long long>(w.T.size()) -
                        static_cast<long long>(k) * static_cast<long long>(w.S.size()) - 2 + d.q;
  return d.t_degree_sum <= rhs && w.slack == rhs - d.t_degree_sum;
}

std::optional<ClassWitness> in_class_Gkn(const Graph& g, int k) {
  const int n = g.order();
  if (k < 1) throw std::invalid_argument("in_class_Gkn: k must be >= 1");
  if (n < 3 * k) throw std::invalid_argument("in_class_Gkn: requires n >= 3k");
  if (g.min_degree() < k) {
    throw std::invalid_argument("in_class_Gkn: minimum degree " + std::to_string(g.min_degree()) +
                                " below k=" + std::to_string(k));
  }
  const auto degs = g.degrees();
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return degs[a] < degs[b]; });
  idx.resize(k + 1);
  long long sum = 0;
  for (int v : idx) sum += degs[v];
  const long long limit = static_cast<long long>(k) * k + 2LL * k - 1;
  if (sum > limit) return std::nullopt;
  std::sort(idx.begin(), idx.end());
  ClassWitness w;
  w.kind = ClassKind::BSet;
  w.B = idx;
  w.slack = limit - sum;
  return w;
}

std::optional<ClassWitness> in_class_Gnk_big(const Graph& g, int k, const SearchOptions& options) {
  if (k < 1) throw std::invalid_argument("in_class_Gnk_big: k must be >= 1");
  if (g.order() > std::min(options.cap, kHardExhaustiveCap)) {
    throw CapExceeded("in_class_Gnk_big: n=" + std::to_string(g.order()) + " above cap");
  }
  if (g.order() == 0 || g.min_degree() < k) return std::nullopt;
  auto pair = max_slack_pair(g, k, options);
  if (!pair) return std::nullopt;
  ClassWitness w;
  w.kind = ClassKind::STPair;
  w.S = std::move(pair->S);
  w.T = std::move(pair->T);
  w.slack = pair->slack;
  return w;
}

}  // namespace kfs
