#include "cli.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "kfs/factor.hpp"
#include "kfs/graph6.hpp"
#include "kfs/parallel.hpp"
#include "kfs/report.hpp"
#include "kfs/spectral.hpp"
#include "kfs/verifier.hpp"

namespace kfs::cli {

namespace {

using nlohmann::json;

/// Input rejected after parsing (bad file, malformed graph, range).
class InputFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Settings {
  std::string in_path;
  std::string out_path;
  std::string format = "table";
  double tol = kDefaultTolerance;
  int cap = kDefaultExhaustiveCap;
  int jobs = 0;
  bool force = false;
  bool runtime = false;

  int n = 0;
  int k = 0;
  long long m = 0;
  long long delta = 0;
  std::string s_list;
  std::string t_list;
  std::string tie_break = "smallest";
  bool no_witness = false;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::optional<double> density;
  int n_min = 7;
  int n_max = 14;
  int k_min = 2;
  int k_max = 3;
};

const CLI::Validator kVertexList(
    [](std::string& s) -> std::string {
      if (s.empty()) return {};
      bool digit = false;
      for (char c : s) {
        if (c >= '0' && c <= '9') {
          digit = true;
        } else if (c == ',' && digit) {
          digit = false;
        } else {
          return "expected comma-separated vertex indices, got '" + s + "'";
        }
      }
      return digit ? std::string{} : "trailing comma in '" + s + "'";
    },
    "LIST", "vertex list");

VertexSet parse_list(const std::string& s) {
  VertexSet out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    const std::size_t end = std::min(s.find(',', pos), s.size());
    int v = 0;
    const auto res = std::from_chars(s.data() + pos, s.data() + end, v);
    if (res.ec != std::errc{}) throw InputFailure("vertex index out of range in '" + s + "'");
    out.push_back(v);
    pos = end + 1;
  }
  return out;
}

/// Shortest round-trip text for a double, always with a decimal point.
std::string number_text(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  std::string s(buf, res.ptr);
  if (s.find_first_of(".einf") == std::string::npos) s += ".0";
  return s;
}

/// Output target: the --out file if given, else the caller's stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : os_(&fallback) {
    if (path.empty()) return;
    file_.open(path);
    if (!file_) throw InputFailure("cannot open output file '" + path + "'");
    os_ = &file_;
  }
  std::ostream& operator*() { return *os_; }

 private:
  std::ofstream file_;
  std::ostream* os_;
};

/// Runs `body` on the --in file or on `in`.
template <class F>
auto with_input(const Settings& s, std::istream& in, F&& body) {
  if (s.in_path.empty() || s.in_path == "-") return body(in);
  std::ifstream file(s.in_path);
  if (!file) throw InputFailure("cannot open input file '" + s.in_path + "'");
  return body(file);
}

/// Valid graphs of the input stream; malformed lines are reported to err.
std::vector<Graph6Line> read_graphs(const Settings& s, std::istream& in, std::ostream& err,
                                    bool& had_errors) {
  auto lines = with_input(s, in, [](std::istream& is) { return read_graph6_stream(is); });
  std::vector<Graph6Line> ok;
  for (auto& line : lines) {
    if (line.error.empty()) {
      ok.push_back(std::move(line));
    } else {
      err << "line " << line.line_number << ": " << line.error << "\n";
      had_errors = true;
    }
  }
  if (lines.empty()) {
    err << "no graphs on input\n";
    had_errors = true;
  }
  return ok;
}

json edges_json(const std::vector<Edge>& edges) {
  json a = json::array();
  for (const Edge& e : edges) a.push_back({e.u, e.v});
  return a;
}

json witness_json(const DeficiencyWitness& w) {
  return {{"S", w.S},   {"T", w.T}, {"k", w.k},         {"tau", w.tau},
          {"q", w.q},   {"delta", w.delta}, {"t_degree_sum", w.t_degree_sum}};
}

json estimate_json(const SpectralEstimate& e) {
  return {{"lo", round12(e.lo)},
          {"hi", round12(e.hi)},
          {"rayleigh", round12(e.rayleigh)},
          {"residual", round12(e.residual)},
          {"iterations", e.iterations},
          {"converged", e.converged}};
}

std::string set_text(const VertexSet& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

void print_witness(std::ostream& out, const DeficiencyWitness& w) {
  out << "S=" << set_text(w.S) << " T=" << set_text(w.T) << " tau=" << w.tau << " q=" << w.q
      << " delta=" << w.delta << "\n";
}

bool as_json(const Settings& s) { return s.format == "json"; }

CampaignOptions campaign_options(const Settings& s) {
  CampaignOptions o;
  o.tol = s.tol;
  o.cap = s.cap;
  o.force = s.force;
  o.jobs = resolve_jobs(s.jobs);
  return o;
}

int emit_report(const Settings& s, std::ostream& out, const VerificationReport& r) {
  Sink sink(s.out_path, out);
  if (as_json(s)) {
    *sink << canonical_json(r, s.runtime);
  } else {
    print_table(*sink, r);
  }
  return r.pass() ? kSuccess : kFailure;
}

// ---------------------------------------------------------------------------
// Command bodies.

int cmd_build_gnk(const Settings& s, std::ostream& out) {
  const GnkParams p{s.n, s.k};
  p.validate();
  Sink sink(s.out_path, out);
  *sink << graph6_encode(build_gnk(p)) << "\n";
  return kSuccess;
}

int cmd_rho(const Settings& s, std::istream& in, std::ostream& out, std::ostream& err) {
  bool bad = false;
  const auto graphs = read_graphs(s, in, err, bad);
  Sink sink(s.out_path, out);
  for (const auto& line : graphs) {
    if (line.graph.order() == 0) {
      err << "line " << line.line_number << ": spectral radius of the empty graph is undefined\n";
      bad = true;
      continue;
    }
    const SpectralEstimate e = rho(line.graph, s.tol);
    if (as_json(s)) {
      json j = estimate_json(e);
      j["graph6"] = line.text;
      j["n"] = line.graph.order();
      j["m"] = line.graph.size();
      *sink << j.dump() << "\n";
    } else {
      std::ostringstream t;
      t.precision(15);
      t << "n=" << line.graph.order() << " m=" << line.graph.size() << " rho in [" << e.lo << ", "
        << e.hi << "] width=" << e.width() << " iterations=" << e.iterations
        << (e.converged ? "" : " (not converged)");
      *sink << t.str() << "\n";
    }
  }
  return bad ? kFailure : kSuccess;
}

int cmd_kfactor(const Settings& s, std::istream& in, std::ostream& out, std::ostream& err) {
  bool bad = false;
  const auto graphs = read_graphs(s, in, err, bad);
  FactorOptions fo;
  fo.cap = s.cap;
  fo.tie_break = s.tie_break == "largest" ? TieBreak::LargestUnion : TieBreak::SmallestUnion;
  fo.want_witness = !s.no_witness;
  Sink sink(s.out_path, out);
  for (const auto& line : graphs) {
    const FactorOutcome r = has_k_factor(line.graph, s.k, fo);
    if (as_json(s)) {
      json j = {{"graph6", line.text}, {"k", s.k}, {"has_factor", r.has_factor()}};
      if (r.has_factor()) {
        j["factor"] = edges_json(r.factor());
      } else {
        j["reason"] = to_string(r.no_factor().reason);
        j["witness"] = r.no_factor().witness ? witness_json(*r.no_factor().witness) : json();
      }
      *sink << j.dump() << "\n";
    } else if (r.has_factor()) {
      *sink << s.k << "-factor found (" << r.factor().size() << " edges):";
      for (const Edge& e : r.factor()) *sink << " " << e.u << "-" << e.v;
      *sink << "\n";
    } else {
      *sink << "no k-factor (k=" << s.k << ", " << to_string(r.no_factor().reason) << ")\n";
      if (r.no_factor().witness) {
        *sink << "witness ";
        print_witness(*sink, *r.no_factor().witness);
      }
    }
  }
  return bad ? kFailure : kSuccess;
}

int cmd_deficiency(const Settings& s, std::istream& in, std::ostream& out, std::ostream& err) {
  bool bad = false;
  const auto graphs = read_graphs(s, in, err, bad);
  const VertexSet S = parse_list(s.s_list);
  const VertexSet T = parse_list(s.t_list);
  Sink sink(s.out_path, out);
  for (const auto& line : graphs) {
    const DeficiencyWitness w = deficiency(line.graph, S, T, s.k);
    if (as_json(s)) {
      json j = witness_json(w);
      j["graph6"] = line.text;
      *sink << j.dump() << "\n";
    } else {
      print_witness(*sink, w);
    }
  }
  return bad ? kFailure : kSuccess;
}

int cmd_bound(const Settings& s, std::ostream& out) {
  const double b = hsf_bound(s.n, s.m, s.delta);
  Sink sink(s.out_path, out);
  if (as_json(s)) {
    *sink << json{{"n", s.n}, {"m", s.m}, {"delta", s.delta}, {"bound", round12(b)}}.dump()
          << "\n";
  } else {
    *sink << number_text(b) << "\n";
  }
  return kSuccess;
}

int cmd_verify_theorem(const Settings& s, std::istream& in, std::ostream& out,
                       std::ostream& err) {
  bool bad = false;
  const auto graphs = read_graphs(s, in, err, bad);
  std::map<int, ReferenceEstimate> refs;
  FactorOptions fo;
  fo.cap = s.cap;
  Sink sink(s.out_path, out);
  bool failed = false;
  for (const auto& line : graphs) {
    const int n = line.graph.order();
    if (s.k < 2 || n < 3 * s.k) {
      err << "line " << line.line_number << ": no reference graph for n=" << n << ", k=" << s.k
          << " (needs k >= 2, n >= 3k)\n";
      bad = true;
      continue;
    }
    auto it = refs.find(n);
    if (it == refs.end()) it = refs.emplace(n, ReferenceEstimate::of(build_gnk({n, s.k}), s.tol)).first;
    const TheoremCheck c = verify_theorem_on(line.graph, s.k, it->second, fo);
    const bool in_range = in_theorem_range(n, s.k);
    if (in_range && (c.verdict == Verdict::Violation || c.verdict == Verdict::Ambiguous)) {
      failed = true;
    }
    if (as_json(s)) {
      json j = {{"graph6", line.text},
                {"k", s.k},
                {"verdict", to_string(c.verdict)},
                {"reason", c.reason},
                {"in_range", in_range},
                {"tightened", c.tightened}};
      if (c.estimate) {
        j["rho"] = {{"lo", round12(c.estimate->lo)}, {"hi", round12(c.estimate->hi)}};
        const SpectralEstimate& r = c.tightened ? it->second.fine : it->second.coarse;
        j["reference"] = {{"lo", round12(r.lo)}, {"hi", round12(r.hi)}};
        j["order"] = to_string(c.order);
      }
      if (c.outcome && !c.outcome->has_factor() && c.outcome->no_factor().witness) {
        j["witness"] = witness_json(*c.outcome->no_factor().witness);
      }
      *sink << j.dump() << "\n";
    } else {
      *sink << c.describe(it->second) << (in_range ? "" : " (outside proven range)") << "\n";
    }
  }
  return (bad || failed) ? kFailure : kSuccess;
}

int cmd_exhaustive(const Settings& s, std::istream& in, std::ostream& out) {
  const CampaignOptions o = campaign_options(s);
  if (s.n > 0) return emit_report(s, out, exhaustive_small_campaign(s.n, s.k, o));
  const VerificationReport r =
      with_input(s, in, [&](std::istream& is) { return exhaustive_stream_campaign(is, s.k, o); });
  return emit_report(s, out, r);
}

int cmd_encode(const Settings& s, std::istream& in, std::ostream& out) {
  const Graph g = with_input(s, in, [](std::istream& is) {
    long long n = -1;
    if (!(is >> n) || n < 0 || n > kMaxVertices) {
      throw InputFailure("edge list must start with a vertex count in [0, " +
                         std::to_string(kMaxVertices) + "]");
    }
    GraphBuilder b(static_cast<int>(n));
    long long u = 0, v = 0;
    while (is >> u >> v) {
      if (u < 0 || v < 0 || u >= n || v >= n || u == v) {
        throw InputFailure("bad edge " + std::to_string(u) + " " + std::to_string(v));
      }
      if (!b.add_edge(static_cast<int>(u), static_cast<int>(v))) {
        throw InputFailure("repeated edge " + std::to_string(u) + " " + std::to_string(v));
      }
    }
    if (!is.eof()) throw InputFailure("edge list contains a non-integer token");
    return std::move(b).build();
  });
  Sink sink(s.out_path, out);
  *sink << graph6_encode(g) << "\n";
  return kSuccess;
}

int cmd_decode(const Settings& s, std::istream& in, std::ostream& out, std::ostream& err) {
  bool bad = false;
  const auto graphs = read_graphs(s, in, err, bad);
  Sink sink(s.out_path, out);
  for (const auto& line : graphs) {
    const auto edges = line.graph.edges();
    if (as_json(s)) {
      *sink << json{{"n", line.graph.order()}, {"edges", edges_json(edges)}}.dump() << "\n";
    } else {
      *sink << line.graph.order() << "\n";
      for (const Edge& e : edges) *sink << e.u << " " << e.v << "\n";
    }
  }
  return bad ? kFailure : kSuccess;
}

// ---------------------------------------------------------------------------
// Option wiring.

void add_format(CLI::App* c, Settings& s) {
  c->add_option("--format", s.format, "Output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();
  c->add_option("--out", s.out_path, "Write output to this file instead of stdout");
}

void add_input(CLI::App* c, Settings& s) {
  c->add_option("--in", s.in_path, "graph6 input file (default: stdin)");
}

void add_tol(CLI::App* c, Settings& s) {
  c->add_option("--tol", s.tol, "Spectral enclosure width")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

void add_cap(CLI::App* c, Settings& s) {
  c->add_option("--cap", s.cap, "Largest order for exhaustive (S,T) witness search")
      ->check(CLI::Range(1, kHardExhaustiveCap))
      ->capture_default_str();
}

void add_campaign(CLI::App* c, Settings& s) {
  add_format(c, s);
  add_tol(c, s);
  add_cap(c, s);
  c->add_flag("--force", s.force, "Allow parameters outside the proven range");
  c->add_option("--jobs", s.jobs, "Worker threads (default: KFS_JOBS or all cores)")
      ->check(CLI::NonNegativeNumber);
  c->add_flag("--runtime", s.runtime, "Include the runtime in JSON output");
}

CLI::Option* add_n(CLI::App* c, Settings& s, bool required = true) {
  auto* o = c->add_option("--n", s.n, "Number of vertices")->check(CLI::PositiveNumber);
  if (required) o->required();
  return o;
}

void add_k(CLI::App* c, Settings& s) {
  c->add_option("--k", s.k, "Factor degree")->required()->check(CLI::PositiveNumber);
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Settings s;
  CLI::App app{"Spectral k-factor toolkit: extremal graphs, certified spectral radii, k-factor "
               "decisions and verification campaigns"};
  app.name("kfs");
  app.require_subcommand(1);

  std::function<int()> action;

  auto* build = app.add_subcommand("build-gnk", "Print G_{n,k} in graph6");
  add_n(build, s);
  add_k(build, s);
  build->add_option("--out", s.out_path, "Write to this file instead of stdout");
  build->callback([&] { action = [&] { return cmd_build_gnk(s, out); }; });

  auto* rho_cmd = app.add_subcommand("rho", "Enclose the spectral radius of each input graph");
  add_input(rho_cmd, s);
  add_format(rho_cmd, s);
  add_tol(rho_cmd, s);
  rho_cmd->callback([&] { action = [&] { return cmd_rho(s, in, out, err); }; });

  auto* kf = app.add_subcommand("kfactor", "Decide k-factor existence for each input graph");
  add_input(kf, s);
  add_format(kf, s);
  add_k(kf, s);
  add_cap(kf, s);
  kf->add_option("--tie-break", s.tie_break, "Witness preference among equal deficiency")
      ->check(CLI::IsMember({"smallest", "largest"}))
      ->capture_default_str();
  kf->add_flag("--no-witness", s.no_witness, "Skip the (S,T) witness search");
  kf->callback([&] { action = [&] { return cmd_kfactor(s, in, out, err); }; });

  auto* def = app.add_subcommand("deficiency", "Evaluate the deficiency of a pair (S,T)");
  add_input(def, s);
  add_format(def, s);
  add_k(def, s);
  def->add_option("--S", s.s_list, "Comma-separated vertex indices")->check(kVertexList);
  def->add_option("--T", s.t_list, "Comma-separated vertex indices")->check(kVertexList);
  def->callback([&] { action = [&] { return cmd_deficiency(s, in, out, err); }; });

  auto* bound = app.add_subcommand("bound", "Degree-based upper bound on the spectral radius");
  add_n(bound, s);
  bound->add_option("--m", s.m, "Number of edges")->required()->check(CLI::NonNegativeNumber);
  bound->add_option("--delta", s.delta, "Minimum degree")->required()->check(CLI::NonNegativeNumber);
  add_format(bound, s);
  bound->callback([&] { action = [&] { return cmd_bound(s, out); }; });

  auto* enc = app.add_subcommand("encode", "Edge list (n, then 'u v' pairs) to graph6");
  add_input(enc, s);
  enc->add_option("--out", s.out_path, "Write to this file instead of stdout");
  enc->callback([&] { action = [&] { return cmd_encode(s, in, out); }; });

  auto* dec = app.add_subcommand("decode", "graph6 to edge lists");
  add_input(dec, s);
  add_format(dec, s);
  dec->callback([&] { action = [&] { return cmd_decode(s, in, out, err); }; });

  auto* verify = app.add_subcommand("verify", "Verification campaigns");
  verify->require_subcommand(1);

  auto* theorem = verify->add_subcommand("theorem", "Check the theorem on each input graph");
  add_input(theorem, s);
  add_format(theorem, s);
  add_k(theorem, s);
  add_tol(theorem, s);
  add_cap(theorem, s);
  theorem->callback([&] { action = [&] { return cmd_verify_theorem(s, in, out, err); }; });

  auto* sweep = verify->add_subcommand("sweep", "Every single-edge augmentation of G_{n,k}");
  add_n(sweep, s);
  add_k(sweep, s);
  add_campaign(sweep, s);
  sweep->callback([&] {
    action = [&] { return emit_report(s, out, edge_addition_sweep(s.n, s.k, campaign_options(s))); };
  });

  auto* lemma5 = verify->add_subcommand("lemma5", "Extremality over the attachment family");
  add_n(lemma5, s);
  add_k(lemma5, s);
  add_campaign(lemma5, s);
  lemma5->callback([&] {
    action = [&] {
      return emit_report(s, out, lemma5_restricted_extremality(s.n, s.k, campaign_options(s)));
    };
  });

  auto* exh = verify->add_subcommand(
      "exhaustive", "All labelled graphs on --n <= 6 vertices, or a graph6 stream (n <= 10)");
  add_n(exh, s, false);
  add_k(exh, s);
  add_input(exh, s);
  add_campaign(exh, s);
  exh->callback([&] { action = [&] { return cmd_exhaustive(s, in, out); }; });

  auto* rnd = verify->add_subcommand("random", "Random graphs G(n, density)");
  add_n(rnd, s);
  add_k(rnd, s);
  rnd->add_option("--trials", s.trials, "Number of sampled graphs")->required();
  rnd->add_option("--seed", s.seed, "Base seed")->required();
  rnd->add_option("--density", s.density, "Edge probability (default 1-(k+2)/n)")
      ->check(CLI::Range(0.0, 1.0));
  add_campaign(rnd, s);
  rnd->callback([&] {
    action = [&] {
      return emit_report(s, out,
                         random_campaign(s.n, s.k, s.trials, s.seed, s.density, campaign_options(s)));
    };
  });

  auto* orc = verify->add_subcommand("oracle", "Certificate search versus matching on random graphs");
  orc->add_option("--n-min", s.n_min, "Smallest order")->capture_default_str();
  orc->add_option("--n-max", s.n_max, "Largest order")->capture_default_str();
  orc->add_option("--k-min", s.k_min, "Smallest k")->capture_default_str();
  orc->add_option("--k-max", s.k_max, "Largest k")->capture_default_str();
  orc->add_option("--trials", s.trials, "Number of sampled graphs")->required();
  orc->add_option("--seed", s.seed, "Base seed")->required();
  add_campaign(orc, s);
  orc->callback([&] {
    action = [&] {
      return emit_report(s, out,
                         random_oracle_campaign(s.n_min, s.n_max, s.k_min, s.k_max, s.trials,
                                                s.seed, campaign_options(s)));
    };
  });

  auto* mono = verify->add_subcommand("monotonicity", "Edge deletion strictly lowers rho");
  mono->add_option("--trials", s.trials, "Number of instances")->required();
  mono->add_option("--seed", s.seed, "Base seed")->required();
  add_campaign(mono, s);
  mono->callback([&] {
    action = [&] {
      return emit_report(s, out, subgraph_monotonicity_campaign(s.trials, s.seed, campaign_options(s)));
    };
  });

  auto* rew = verify->add_subcommand("rewiring", "Perron-guided rewiring strictly raises rho");
  rew->add_option("--trials", s.trials, "Number of instances")->required();
  rew->add_option("--seed", s.seed, "Base seed")->required();
  add_campaign(rew, s);
  rew->callback([&] {
    action = [&] { return emit_report(s, out, rewiring_campaign(s.trials, s.seed, campaign_options(s))); };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }
  if (!action) return kUsage;

  try {
    return action();
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
}

}  // namespace kfs::cli
