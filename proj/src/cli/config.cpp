#include "addcomb/cli/config.hpp"

#include <charconv>
#include <cmath>

#include "addcomb/core/errors.hpp"

namespace addcomb::cli {

std::uint64_t parse_count(std::string_view text, std::string_view what) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec == std::errc() && p == text.data() + text.size()) return v;
  double d = 0;
  auto [q, ec2] = std::from_chars(text.data(), text.data() + text.size(), d);
  if (ec2 != std::errc() || q != text.data() + text.size() || !(d >= 0) || d >= 9.2e18 || std::floor(d) != d)
    throw InvalidArgument("bad " + std::string(what) + " '" + std::string(text) + "'");
  return static_cast<std::uint64_t>(d);
}

void apply_budget_overrides(Budgets& b, std::string_view spec) {
  while (!spec.empty()) {
    const auto comma = spec.find(',');
    const std::string_view item = spec.substr(0, comma);
    spec = comma == std::string_view::npos ? std::string_view{} : spec.substr(comma + 1);
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw InvalidArgument("budget override '" + std::string(item) + "' needs key=value");
    const std::string_view key = item.substr(0, eq), val = item.substr(eq + 1);
    if (key == "nodes" && val == "unlimited") {
      b.nodes = 0;
      continue;
    }
    const std::uint64_t v = parse_count(val, std::string(key) + " budget");
    if (v == 0) throw InvalidArgument("budget '" + std::string(key) + "' must be positive");
    if (key == "samples") b.samples = v;
    else if (key == "cells") b.cells = static_cast<std::int64_t>(v);
    else if (key == "exact") b.exact = v;
    else if (key == "nodes") b.nodes = v;
    else if (key == "verify") b.verify = v;
    else if (key == "modulus") b.modulus = static_cast<std::int64_t>(v);
    else throw InvalidArgument("unknown budget '" + std::string(key) + "'");
  }
}

nlohmann::ordered_json to_json(const Budgets& b) {
  nlohmann::ordered_json j;
  j["samples"] = b.samples;
  j["cells"] = b.cells;
  j["exact"] = b.exact;
  if (b.nodes == 0) j["nodes"] = "unlimited";
  else j["nodes"] = b.nodes;
  j["verify"] = b.verify;
  j["modulus"] = b.modulus;
  return j;
}

}  // namespace addcomb::cli
