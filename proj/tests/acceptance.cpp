// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "kfs/factor.hpp"
#include "kfs/parallel.hpp"
#include "kfs/report.hpp"
#include "kfs/spectral.hpp"
#include "kfs/verifier.hpp"

using namespace kfs;

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kSeed = 20240611;
constexpr std::uint64_t kOracleTrials = 50000;
constexpr std::uint64_t kPropertyTrials = 1000;
constexpr std::uint64_t kRandomTrials = 500;
constexpr double kWindowMargin = 1e-6;
constexpr double kBoundTolerance = 1e-9;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

long long sum(const std::vector<const VerificationReport*>& reports, const std::string& counter) {
  long long total = 0;
  for (const auto* r : reports) total += r->counter(counter);
  return total;
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

int failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail) {
  std::cout << (pass ? "PASS" : "FAIL") << " " << id << " " << name << ": " << detail
            << std::endl;
  if (!pass) ++failures;
}

struct Run {
  std::function<VerificationReport(int jobs)> make;
  VerificationReport report;
};

}  // namespace

int main() {
  const int jobs = resolve_jobs(0);
  CampaignOptions opts;
  opts.jobs = jobs;
  std::cout << "acceptance suite: seed " << kSeed << ", " << jobs << " worker(s)" << std::endl;

  // Every campaign is kept with a recipe for the determinism rerun.
  std::vector<Run> runs;
  auto campaign = [&](std::function<VerificationReport(int)> make) -> const VerificationReport& {
    runs.push_back({make, make(jobs)});
    return runs.back().report;
  };
  auto with_jobs = [&](int j) {
    CampaignOptions o = opts;
    o.jobs = j;
    return o;
  };
  runs.reserve(16);

  // 1 and 2: oracle equivalence and the parity invariant.
  const auto c1_start = Clock::now();
  const auto& exh2 = campaign([&](int j) { return exhaustive_small_campaign(6, 2, with_jobs(j)); });
  const auto& exh3 = campaign([&](int j) { return exhaustive_small_campaign(6, 3, with_jobs(j)); });
  const VerificationReport oracle =
      random_oracle_campaign(7, 14, 2, 3, kOracleTrials, kSeed, opts);
  const double c1_time = seconds_since(c1_start);
  const std::vector<const VerificationReport*> population{&exh2, &exh3, &oracle};
  {
    const long long checked = sum(population, "oracle_checked");
    const long long expected = 2 * 32768 + 2 * static_cast<long long>(kOracleTrials);
    const long long disagreements = sum(population, "oracle_disagreements");
    const long long invalid = sum(population, "witness_invalid");
    report(1, "oracle equivalence",
           checked == expected && disagreements == 0 && invalid == 0 && c1_time < 300,
           std::to_string(checked) + "/" + std::to_string(expected) + " decisions, " +
               std::to_string(disagreements) + " disagreements, " + std::to_string(invalid) +
               " invalid witnesses, " + fmt(c1_time) + " s (limit 300 s)");
    const long long evaluations = sum(population, "deficiency_evaluations");
    const long long parity = sum(population, "parity_violations");
    report(2, "parity invariant", evaluations > 0 && parity == 0,
           std::to_string(evaluations) + " deficiency evaluations, " + std::to_string(parity) +
               " parity exceptions");
  }

  // 3: G_{n,k} has no k-factor.
  {
    const auto start = Clock::now();
    int cases = 0, wrong = 0;
    std::string first_wrong;
    for (int k = 2; k <= 5; ++k) {
      for (int n = 3 * k; n <= 60; ++n) {
        ++cases;
        if (has_k_factor(build_gnk({n, k}), k).has_factor()) {
          if (wrong++ == 0) first_wrong = " first at (" + std::to_string(n) + "," + std::to_string(k) + ")";
        }
      }
    }
    const double t = seconds_since(start);
    report(3, "no-factor grid", wrong == 0 && t < 120,
           std::to_string(cases) + " (n,k) pairs, " + std::to_string(wrong) + " with a factor" +
               first_wrong + ", " + fmt(t) + " s (limit 120 s)");
  }

  // 4: n-2-k < rho(G_{n,k}) < n-1-k with room to spare.
  {
    int cases = 0, outside = 0;
    double min_margin = INFINITY;
    for (int k = 2; k <= 5; ++k) {
      const int n0 = std::max(3 * k, (k * k + 6 * k + 2 + 1) / 2);
      for (int n = n0; n <= 80; ++n) {
        ++cases;
        const SpectralEstimate e = rho(build_gnk({n, k}), kDefaultTolerance);
        const double margin = std::min(e.lo - (n - 2 - k), (n - 1 - k) - e.hi);
        min_margin = std::min(min_margin, margin);
        if (margin < kWindowMargin) ++outside;
      }
    }
    report(4, "spectral window", outside == 0,
           std::to_string(cases) + " graphs, " + std::to_string(outside) +
               " closer than 1e-6 to the window, min margin " + fmt(min_margin));
  }

  // 5: every single-edge augmentation has a k-factor.
  {
    const auto start = Clock::now();
    const auto& s50 = campaign([&](int j) { return edge_addition_sweep(50, 2, with_jobs(j)); });
    const auto& s70 = campaign([&](int j) { return edge_addition_sweep(70, 3, with_jobs(j)); });
    const double t = seconds_since(start);
    bool ok = t < 900;
    std::string detail;
    for (const auto* r : {&s50, &s70}) {
      ok = ok && r->pass() && r->counter("violations") == 0 &&
           r->counter("factor_found") == r->counter("non_edges") && r->counter("non_edges") > 0;
      detail += "(" + r->params["n"].dump() + "," + r->params["k"].dump() + "): " +
                std::to_string(r->counter("factor_found")) + "/" +
                std::to_string(r->counter("non_edges")) + " FactorFound, " +
                std::to_string(r->counter("violations")) + " violations; ";
    }
    report(5, "edge-addition sweep", ok, detail + fmt(t) + " s (limit 900 s)");
  }

  // 6: G_{n,k} is the unique maximiser in the attachment family.
  {
    bool ok = true;
    std::string detail;
    for (const auto& [n, k] : {std::pair{16, 3}, std::pair{34, 3}, std::pair{24, 4}}) {
      const auto& r = campaign(
          [n = n, k = k, &with_jobs](int j) { return lemma5_restricted_extremality(n, k, with_jobs(j)); });
      const auto margin = r.metrics.find("min_margin");
      const bool this_ok = r.pass() && r.counter("extremal_classes") == 1 &&
                           r.counter("separated") == r.counter("compared") &&
                           margin != r.metrics.end() && margin->second >= kLemma5Margin;
      ok = ok && this_ok;
      detail += "(" + std::to_string(n) + "," + std::to_string(k) + "): " +
                std::to_string(r.counter("separated")) + "/" + std::to_string(r.counter("compared")) +
                " separated, margin " + (margin == r.metrics.end() ? "n/a" : fmt(margin->second)) + "; ";
    }
    report(6, "restricted extremality", ok, detail);
  }

  // 7: degree bound against the certified upper bound; equality on K_n.
  {
    const long long checked = sum(population, "degree_bound_checked");
    const long long failed = sum(population, "degree_bound_failures");
    double min_margin = INFINITY;
    for (const auto* r : population) {
      const auto it = r->metrics.find("degree_bound_min_margin");
      if (it != r->metrics.end()) min_margin = std::min(min_margin, it->second);
    }
    int complete_bad = 0;
    for (int n = 4; n <= 20; ++n) {
      const long long m = 1LL * n * (n - 1) / 2;
      const double b = hsf_bound(n, m, n - 1);
      const SpectralEstimate e = rho(complete(n), kDefaultTolerance);
      if (std::abs(b - (n - 1)) > kBoundTolerance || std::abs(b - e.hi) > kBoundTolerance ||
          !(e.lo <= b + kBoundTolerance)) {
        ++complete_bad;
      }
    }
    report(7, "degree bound", checked > 0 && failed == 0 && complete_bad == 0,
           std::to_string(checked) + " graphs, " + std::to_string(failed) +
               " below the upper bound, min margin " + fmt(min_margin) + "; K_4..K_20 " +
               std::to_string(complete_bad) + " off equality");
  }

  // 8: strict monotonicity and rewiring.
  {
    const auto& mono =
        campaign([&](int j) { return subgraph_monotonicity_campaign(kPropertyTrials, kSeed, with_jobs(j)); });
    const auto& rew =
        campaign([&](int j) { return rewiring_campaign(kPropertyTrials, kSeed, with_jobs(j)); });
    bool ok = true;
    std::string detail;
    for (const auto* r : {&mono, &rew}) {
      const long long inst = r->counter("instances");
      const double skip = inst == 0 ? 1.0 : static_cast<double>(r->counter("skipped")) / inst;
      ok = ok && r->pass() && inst == static_cast<long long>(kPropertyTrials) &&
           r->counter("unresolved") == 0 &&
           r->counter("separated") + r->counter("skipped") == inst && skip < 0.05;
      detail += r->campaign + ": " + std::to_string(r->counter("separated")) + " separated, " +
                std::to_string(r->counter("unresolved")) + " unresolved, skip rate " + fmt(skip) +
                "; ";
    }
    report(8, "property suites", ok, detail);
  }

  // Random theorem campaigns add dense in-range graphs to criterion 9.
  campaign([&](int j) { return random_campaign(50, 2, kRandomTrials, kSeed, std::nullopt, with_jobs(j)); });
  campaign([&](int j) { return random_campaign(70, 3, kRandomTrials, kSeed, std::nullopt, with_jobs(j)); });

  // 9: the edge-count consequence, over everything run above.
  {
    std::vector<const VerificationReport*> all{&oracle};
    for (const auto& r : runs) all.push_back(&r.report);
    const long long checked = sum(all, "edge_count_checked");
    const long long failed = sum(all, "edge_count_failures");
    const long long outside = sum(all, "edge_count_outside_derivation");
    bool all_pass = true;
    for (const auto* r : all) all_pass = all_pass && r->pass();
    report(9, "edge-count consequence", checked > 0 && failed == 0 && all_pass,
           std::to_string(checked) + " graphs checked across " + std::to_string(all.size()) +
               " campaigns, " + std::to_string(failed) + " failures, " + std::to_string(outside) +
               " outside the derivation's range (informational)");
  }

  // 10: byte-identical reports on rerun, with a different worker count.
  {
    const int other = jobs == 1 ? 3 : 1;
    int identical = 0, total = 0;
    std::string differing;
    for (const auto& r : runs) {
      ++total;
      if (canonical_json(r.make(other)) == canonical_json(r.report)) {
        ++identical;
      } else {
        differing += " " + r.report.campaign;
      }
    }
    ++total;
    const auto a = random_oracle_campaign(7, 14, 2, 3, 5000, kSeed, with_jobs(jobs));
    const auto b = random_oracle_campaign(7, 14, 2, 3, 5000, kSeed, with_jobs(other));
    if (canonical_json(a) == canonical_json(b)) {
      ++identical;
    } else {
      differing += " oracle";
    }
    report(10, "determinism", identical == total,
           std::to_string(identical) + "/" + std::to_string(total) +
               " reports byte-identical on rerun with " + std::to_string(other) + " worker(s)" +
               (differing.empty() ? "" : "; differing:" + differing));
  }

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
