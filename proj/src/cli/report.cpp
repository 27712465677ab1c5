#include "addcomb/cli/report.hpp"

namespace addcomb::cli {

Json report_header(const std::string& command, std::uint64_t seed, const Budgets& budgets) {
  Json j;
  j["version"] = kReportVersion;
  j["command"] = command;
  j["seed"] = seed;
  j["budget"] = to_json(budgets);
  return j;
}

Json witness_json(const colorings::Witness& w) {
  Json j;
  j["kind"] = w.kind;
  j["n"] = w.n;
  j["d"] = w.d;
  j["pattern"] = w.pattern;
  j["points"] = w.points;
  j["colors"] = w.colors;
  j["detail"] = w.detail;
  return j;
}

std::string witness_summary(const colorings::Witness& w) {
  std::string s = w.kind + " at n = " + std::to_string(w.n) + ", d = " + std::to_string(w.d);
  if (!w.detail.empty()) s += " (" + w.detail + ")";
  return s;
}

void put_rational(Json& j, const std::string& key, const core::Rational& v) {
  j[key] = core::to_string(v);
  j[key + "_value"] = core::to_double(v);
}

Json estimate_json(const torus::Estimate& e) {
  Json j;
  j["mean"] = e.mean;
  j["stderr"] = e.standard_error;
  j["samples"] = e.sample_count;
  j["seed"] = e.seed;
  j["exact"] = false;
  return j;
}

}  // namespace addcomb::cli
