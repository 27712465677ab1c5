#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "addcomb/core/pattern.hpp"
#include "addcomb/core/rational.hpp"
#include "addcomb/uniformity/grid_function.hpp"

namespace addcomb::uniformity {

struct LambdaValue {
  double value = 0;
  std::optional<core::Rational> exact;  // set for indicator inputs and small exact inputs
};

// Bound on N^2 * k.
inline constexpr std::uint64_t kDefaultLambdaBudget = 100'000'000'000ULL;
// Exact non-indicator inputs use rational arithmetic up to this N^2 * k.
inline constexpr std::uint64_t kRationalLambdaLimit = 4'000'000;

// E_{n,d} prod_i f_i(n + a_i d) over (Z/NZ)^2. Indicators take a bitset path
// with an exact count; other exact inputs are summed in rationals when small.
LambdaValue lambda_exact(std::span<const GridFunction> fs, const core::PatternSpec& spec,
                         std::uint64_t budget = kDefaultLambdaBudget);
LambdaValue lambda_exact(const GridFunction& f, const core::PatternSpec& spec,
                         std::uint64_t budget = kDefaultLambdaBudget);

}  // namespace addcomb::uniformity
