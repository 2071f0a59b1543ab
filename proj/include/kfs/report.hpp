#pragma once

#include <cstddef>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace kfs {

/// A graph that failed a check, with enough detail to reproduce it.
struct FailureRecord {
  std::string graph6;
  std::string detail;
};

/// A line of an input stream that could not be used.
struct InputError {
  std::size_t line = 0;
  std::string text;
  std::string error;
};

/// Outcome of one verification campaign.
///
/// `failures` are hard errors: any entry makes the campaign FAIL.
/// `observations` are informational records (for example theorem violations
/// below the proven parameter range) and never affect the verdict.
/// `counters` hold every total, including the number of observations, since
/// only the first kMaxObservations records are kept.
struct VerificationReport {
  static constexpr std::size_t kMaxObservations = 200;

  std::string campaign;
  nlohmann::json params = nlohmann::json::object();
  std::map<std::string, long long> counters;
  std::map<std::string, double> metrics;
  std::vector<FailureRecord> failures;
  std::vector<FailureRecord> observations;
  std::vector<InputError> input_errors;
  bool in_range = true;
  double runtime_seconds = 0.0;

  bool pass() const { return failures.empty(); }

  long long counter(const std::string& name) const;
  void bump(const std::string& name, long long by = 1) { counters[name] += by; }
  void observe(FailureRecord r);
  /// Keeps the smaller of the current and the new value.
  void track_min(const std::string& name, double value);
  void track_max(const std::string& name, double value);

  /// examined == vacuous + factor_found + extremal_matches + violations +
  /// ambiguous, for campaigns that record theorem verdicts.
  bool counters_consistent() const;
};

/// Canonical JSON: keys sorted, reals rounded to 12 significant digits.
/// The runtime is left out unless requested, so that reports of identical
/// runs are byte-identical.
nlohmann::json to_json(const VerificationReport& r, bool include_runtime = false);
std::string canonical_json(const VerificationReport& r, bool include_runtime = false);

/// Human-readable summary.
void print_table(std::ostream& out, const VerificationReport& r);

/// Rounds to 12 significant digits.
double round12(double x);

}  // namespace kfs
