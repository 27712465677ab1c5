#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

namespace addcomb::cli {

inline constexpr int kReportVersion = 1;
inline constexpr const char* kBudgetEnv = "ADDCOMB_BUDGET";

struct Budgets {
  std::uint64_t samples = 1'000'000;         // Monte Carlo samples
  std::int64_t cells = 1'000'000;            // torus coloring cells D
  std::uint64_t exact = 4'000'000'000ULL;    // D^2 * pieces for exact pattern probabilities
  std::uint64_t nodes = 0;                   // search nodes / resampling steps, 0 = unlimited
  std::uint64_t verify = 50'000'000;         // solution-freeness tuples
  std::int64_t modulus = std::int64_t{1} << 24;  // largest m tried for greedy solution-free sets
};

// Applies "key=value,key=value" overrides (keys as in Budgets, values
// integers or integral scientific notation, "unlimited" for nodes).
// Throws InvalidArgument on unknown keys or non-positive values.
void apply_budget_overrides(Budgets& b, std::string_view spec);
std::uint64_t parse_count(std::string_view text, std::string_view what);

nlohmann::ordered_json to_json(const Budgets& b);

}  // namespace addcomb::cli
