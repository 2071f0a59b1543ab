#include "kfs/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iomanip>

namespace kfs {

double round12(double x) {
  if (!std::isfinite(x) || x == 0.0) return x;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

long long VerificationReport::counter(const std::string& name) const {
  const auto it = counters.find(name);
  return it == counters.end() ? 0 : it->second;
}

void VerificationReport::observe(FailureRecord r) {
  bump("observations");
  if (observations.size() < kMaxObservations) observations.push_back(std::move(r));
}

void VerificationReport::track_min(const std::string& name, double value) {
  const auto it = metrics.find(name);
  if (it == metrics.end() || value < it->second) metrics[name] = value;
}

void VerificationReport::track_max(const std::string& name, double value) {
  const auto it = metrics.find(name);
  if (it == metrics.end() || value > it->second) metrics[name] = value;
}

bool VerificationReport::counters_consistent() const {
  return counter("examined") == counter("vacuous") + counter("factor_found") +
                                    counter("extremal_matches") + counter("violations") +
                                    counter("ambiguous");
}

namespace {

nlohmann::json rounded(const nlohmann::json& j) {
  if (j.is_number_float()) return round12(j.get<double>());
  if (j.is_object()) {
    nlohmann::json out = nlohmann::json::object();
    for (auto it = j.begin(); it != j.end(); ++it) out[it.key()] = rounded(it.value());
    return out;
  }
  if (j.is_array()) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& v : j) out.push_back(rounded(v));
    return out;
  }
  return j;
}

nlohmann::json records(const std::vector<FailureRecord>& rs) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : rs) out.push_back({{"graph6", r.graph6}, {"detail", r.detail}});
  return out;
}

}  // namespace

nlohmann::json to_json(const VerificationReport& r, bool include_runtime) {
  nlohmann::json j;
  j["campaign"] = r.campaign;
  j["params"] = rounded(r.params);
  j["counters"] = r.counters;
  nlohmann::json metrics = nlohmann::json::object();
  for (const auto& [k, v] : r.metrics) metrics[k] = round12(v);
  j["metrics"] = metrics;
  j["failures"] = records(r.failures);
  j["observations"] = records(r.observations);
  nlohmann::json errors = nlohmann::json::array();
  for (const auto& e : r.input_errors) {
    errors.push_back({{"line", e.line}, {"text", e.text}, {"error", e.error}});
  }
  j["input_errors"] = errors;
  j["in_range"] = r.in_range;
  j["verdict"] = r.pass() ? "PASS" : "FAIL";
  if (include_runtime) j["runtime_seconds"] = round12(r.runtime_seconds);
  return j;
}

std::string canonical_json(const VerificationReport& r, bool include_runtime) {
  return to_json(r, include_runtime).dump(2) + "\n";
}

void print_table(std::ostream& out, const VerificationReport& r) {
  out << "campaign  " << r.campaign << "\n";
  out << "verdict   " << (r.pass() ? "PASS" : "FAIL") << (r.in_range ? "" : " (outside proven range)")
      << "\n";
  out << "params    " << rounded(r.params).dump() << "\n";
  std::size_t width = 8;
  for (const auto& [k, v] : r.counters) width = std::max(width, k.size());
  for (const auto& [k, v] : r.metrics) width = std::max(width, k.size());
  for (const auto& [k, v] : r.counters) {
    out << "  " << std::left << std::setw(static_cast<int>(width)) << k << "  " << v << "\n";
  }
  for (const auto& [k, v] : r.metrics) {
    out << "  " << std::left << std::setw(static_cast<int>(width)) << k << "  " << round12(v)
        << "\n";
  }
  const std::size_t shown = 20;
  for (std::size_t i = 0; i < r.failures.size() && i < shown; ++i) {
    out << "FAIL " << r.failures[i].graph6 << "  " << r.failures[i].detail << "\n";
  }
  if (r.failures.size() > shown) out << "... " << r.failures.size() - shown << " more failures\n";
  for (std::size_t i = 0; i < r.observations.size() && i < shown; ++i) {
    out << "note " << r.observations[i].graph6 << "  " << r.observations[i].detail << "\n";
  }
  if (r.observations.size() > shown) {
    out << "... " << r.observations.size() - shown << " more observations\n";
  }
  for (const auto& e : r.input_errors) {
    out << "input line " << e.line << ": " << e.error << "\n";
  }
  out << "runtime   " << std::fixed << std::setprecision(2) << r.runtime_seconds << " s\n";
  out.unsetf(std::ios::floatfield);
}

}  // namespace kfs
