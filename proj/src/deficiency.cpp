#include "kfs/deficiency.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <vector>

namespace kfs {

namespace {

void check_sets(const Graph& g, const VertexSet& S, const VertexSet& T, std::vector<char>& role) {
  role.assign(g.order(), 0);
  auto place = [&](const VertexSet& set, char tag) {
    for (int v : set) {
      if (v < 0 || v >= g.order()) {
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
      }
      if (role[v] != 0) {
        throw std::invalid_argument(role[v] == tag ? "vertex " + std::to_string(v) + " repeated"
                                                   : "S and T overlap at vertex " +
                                                         std::to_string(v));
      }
      role[v] = tag;
    }
  };
  place(S, 'S');
  place(T, 'T');
}

/// δ_G(S,T) for any k >= 1; role must come from check_sets.
DeficiencyWitness evaluate(const Graph& g, const VertexSet& S, const VertexSet& T, int k,
                           const std::vector<char>& role) {
  DeficiencyWitness w;
  w.S = S;
  w.T = T;
  std::sort(w.S.begin(), w.S.end());
  std::sort(w.T.begin(), w.T.end());
  w.k = k;

  for (int u : w.T) {
    int d = 0;
    for (int x : g.neighbors(u)) d += role[x] != 'S';
    w.t_degree_sum += d;
  }

  std::vector<char> seen(g.order(), 0);
  std::vector<int> stack;
  for (int s = 0; s < g.order(); ++s) {
    if (role[s] != 0 || seen[s]) continue;
    ++w.q;
    long long size = 0;
    long long to_t = 0;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      ++size;
      for (int x : g.neighbors(v)) {
        if (role[x] == 'T') {
          ++to_t;
        } else if (role[x] == 0 && !seen[x]) {
          seen[x] = 1;
          stack.push_back(x);
        }
      }
    }
    if ((to_t + k * size) % 2 != 0) ++w.tau;
  }

  w.delta = w.tau + static_cast<long long>(k) * static_cast<long long>(w.T.size()) -
            static_cast<long long>(k) * static_cast<long long>(w.S.size()) - w.t_degree_sum;
  return w;
}

bool parity_ok(long long delta, int k, int n) {
  return ((delta - static_cast<long long>(k) * n) % 2) == 0;
}

using Mask = std::uint32_t;

VertexSet to_set(Mask m) {
  VertexSet out;
  while (m != 0) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

/// Lexicographic order on the sorted element lists of two masks.
bool lex_less(Mask a, Mask b) {
  if (a == b) return false;
  const std::uint64_t low = (a ^ b) & (~(a ^ b) + 1);
  const std::uint64_t above = ~((low << 1) - 1);
  if (a & low) return (b & above) != 0;
  return (a & above) == 0;
}

enum class Objective { Deficiency, Slack };

/// Depth-first assignment of each vertex to S, T or the remainder X, with an
/// admissible upper bound on the objective used to skip subtrees that cannot
/// beat the incumbent.
class PairScanner {
 public:
  PairScanner(const Graph& g, int k, Objective objective, TieBreak tie_break)
      : n_(g.order()), k_(k), objective_(objective), tie_break_(tie_break) {
    nb_.assign(n_, 0);
    for (int v = 0; v < n_; ++v)
      for (int w : g.neighbors(v)) nb_[v] |= Mask{1} << w;
    order_.resize(n_);
    for (int v = 0; v < n_; ++v) order_[v] = v;
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      return std::popcount(nb_[a]) > std::popcount(nb_[b]);
    });
    suffix_.assign(n_ + 1, 0);
    for (int i = n_ - 1; i >= 0; --i) suffix_[i] = suffix_[i + 1] | (Mask{1} << order_[i]);
    threshold_ = objective_ == Objective::Deficiency ? 1 : 0;
  }

  void run() { dfs(0, 0, 0, 0); }

  bool found() const { return found_; }
  Mask best_s() const { return best_s_; }
  Mask best_t() const { return best_t_; }
  long long best_value() const { return best_; }
  int best_q() const { return best_q_; }
  const SearchStats& stats() const { return stats_; }

 private:
  struct Parts {
    int count = 0;
    int odd = 0;               // components counted by τ
    int detached = 0;          // components with no edge to T
  };

  Parts split(Mask x, Mask t) const {
    Parts p;
    Mask rest = x;
    while (rest != 0) {
      Mask comp = rest & (~rest + 1);
      Mask frontier = comp;
      while (frontier != 0) {
        const int v = std::countr_zero(frontier);
        frontier &= frontier - 1;
        const Mask fresh = nb_[v] & rest & ~comp;
        comp |= fresh;
        frontier |= fresh;
      }
      rest &= ~comp;
      ++p.count;
      long long to_t = 0;
      Mask reach = 0;
      for (Mask c = comp; c != 0; c &= c - 1) {
        const Mask nbr = nb_[std::countr_zero(c)];
        to_t += std::popcount(nbr & t);
        reach |= nbr;
      }
      const long long size = std::popcount(comp);
      if ((to_t + k_ * size) % 2 != 0) ++p.odd;
      if ((reach & t) == 0) ++p.detached;
    }
    return p;
  }

  long long bound(Mask s, Mask t, Mask x, Mask u) const {
    const Parts parts = split(x, t);
    const long long k = k_;
    const long long ns = std::popcount(s);

    // Via τ <= q, with pending vertices adding at most one new component each.
    long long via_q = parts.count - k * ns;
    for (Mask m = t; m != 0; m &= m - 1) {
      via_q += k - std::popcount(nb_[std::countr_zero(m)] & ~(s | u));
    }
    for (Mask m = u; m != 0; m &= m - 1) {
      via_q += std::max<long long>(1, k - std::popcount(nb_[std::countr_zero(m)] & (t | x)));
    }
    if (objective_ == Objective::Slack) return via_q - 2;

    // Via τ <= e(T,X) + #(components with no edge to T and k|C| odd).
    const long long kodd = k % 2;
    long long inner = 0;
    for (Mask m = t; m != 0; m &= m - 1) inner += std::popcount(nb_[std::countr_zero(m)] & t);
    long long via_edges = k * std::popcount(t) - inner - k * ns + kodd * parts.detached;
    for (Mask m = u; m != 0; m &= m - 1) {
      const long long as_t = k - 2LL * std::popcount(nb_[std::countr_zero(m)] & t);
      via_edges += std::max(as_t, kodd);
    }
    return std::min(via_q, via_edges);
  }

  void leaf(Mask s, Mask t, Mask x) {
    ++stats_.evaluations;
    const Parts parts = split(x, t);
    long long deg_t = 0;
    for (Mask m = t; m != 0; m &= m - 1) deg_t += std::popcount(nb_[std::countr_zero(m)] & ~s);
    const long long k = k_;
    const long long base = k * std::popcount(t) - k * std::popcount(s) - deg_t;
    long long value = 0;
    if (objective_ == Objective::Deficiency) {
      value = parts.odd + base;
      if (!parity_ok(value, k_, n_)) ++stats_.parity_violations;
    } else {
      value = base - 2 + parts.count;
    }
    if (better(value, s, t)) {
      found_ = true;
      best_ = value;
      best_s_ = s;
      best_t_ = t;
      best_q_ = parts.count;
    }
  }

  bool better(long long value, Mask s, Mask t) const {
    if (!found_) return value >= threshold_;
    if (value != best_) return value > best_;
    const int size = std::popcount(s | t);
    const int best_size = std::popcount(best_s_ | best_t_);
    if (size != best_size) {
      return tie_break_ == TieBreak::SmallestUnion ? size < best_size : size > best_size;
    }
    if (s != best_s_) return lex_less(s, best_s_);
    return lex_less(t, best_t_);
  }

  void dfs(int pos, Mask s, Mask t, Mask x) {
    ++stats_.nodes;
    if (pos == n_) {
      leaf(s, t, x);
      return;
    }
    const long long need = found_ ? best_ : threshold_;
    if (bound(s, t, x, suffix_[pos]) < need) return;
    const Mask bit = Mask{1} << order_[pos];
    dfs(pos + 1, s, t | bit, x);
    dfs(pos + 1, s, t, x | bit);
    dfs(pos + 1, s | bit, t, x);
  }

  int n_;
  int k_;
  Objective objective_;
  TieBreak tie_break_;
  std::vector<Mask> nb_;
  std::vector<int> order_;
  std::vector<Mask> suffix_;
  long long threshold_ = 1;

  bool found_ = false;
  long long best_ = 0;
  Mask best_s_ = 0;
  Mask best_t_ = 0;
  int best_q_ = 0;
  SearchStats stats_;
};

void check_cap(const Graph& g, const SearchOptions& options) {
  const int cap = std::min(options.cap, kHardExhaustiveCap);
  if (g.order() > cap) {
    throw CapExceeded("exhaustive (S,T) scan limited to n <= " + std::to_string(cap) +
                      ", got n=" + std::to_string(g.order()));
  }
}

}  // namespace

DeficiencyWitness deficiency(const Graph& g, const VertexSet& S, const VertexSet& T, int k) {
  if (k < 2) throw std::invalid_argument("deficiency: k must be >= 2, got " + std::to_string(k));
  return tutte_deficiency(g, S, T, k);
}

DeficiencyWitness tutte_deficiency(const Graph& g, const VertexSet& S, const VertexSet& T, int k) {
  if (k < 1) throw std::invalid_argument("tutte_deficiency: k must be >= 1");
  std::vector<char> role;
  check_sets(g, S, T, role);
  DeficiencyWitness w = evaluate(g, S, T, k, role);
  if (!parity_ok(w.delta, k, g.order())) {
    throw std::logic_error("deficiency: parity identity violated");
  }
  return w;
}

std::optional<DeficiencyWitness> search_certificate(const Graph& g, int k,
                                                    const SearchOptions& options,
                                                    SearchStats* stats) {
  if (k < 1) throw std::invalid_argument("search_certificate: k must be >= 1");
  check_cap(g, options);
  PairScanner scan(g, k, Objective::Deficiency, options.tie_break);
  scan.run();
  if (stats != nullptr) *stats += scan.stats();
  if (!scan.found()) return std::nullopt;

  std::vector<char> role;
  const VertexSet S = to_set(scan.best_s());
  const VertexSet T = to_set(scan.best_t());
  check_sets(g, S, T, role);
  DeficiencyWitness w = evaluate(g, S, T, k, role);
  if (w.delta != scan.best_value()) {
    throw std::logic_error("search_certificate: scanner and evaluator disagree");
  }
  return w;
}

std::optional<SlackPair> max_slack_pair(const Graph& g, int k, const SearchOptions& options,
                                        SearchStats* stats) {
  if (k < 1) throw std::invalid_argument("max_slack_pair: k must be >= 1");
  check_cap(g, options);
  PairScanner scan(g, k, Objective::Slack, options.tie_break);
  scan.run();
  if (stats != nullptr) *stats += scan.stats();
  if (!scan.found()) return std::nullopt;
  return SlackPair{to_set(scan.best_s()), to_set(scan.best_t()), scan.best_q(), scan.best_value()};
}

}  // namespace kfs
