#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "addcomb/colorings/clauses.hpp"
#include "addcomb/core/pattern.hpp"
#include "addcomb/core/rational.hpp"
#include "addcomb/torus/torus_coloring.hpp"

namespace addcomb::torus {

enum class Predicate { binomial_pattern, symmetric, mono_subset };

Predicate parse_predicate(std::string_view name);
const char* predicate_name(Predicate p) noexcept;

// subset (0-based positions) is used only by mono_subset and needs >= 2 entries.
colorings::ClauseSet predicate_clauses(const core::PatternSpec& spec, Predicate p,
                                       const std::vector<int>& subset = {});

// Bound on D^2 * (number of cell pieces).
inline constexpr std::uint64_t kDefaultExactBudget = 4'000'000'000ULL;

// Exact Pr over (x, y) uniform on T^2 that the colors of x + a_i y satisfy the
// predicate. Throws ResourceError when the work exceeds the budget.
core::Rational pattern_probability_exact(const TorusColoring& phi, const core::PatternSpec& spec,
                                         const colorings::ClauseSet& predicate,
                                         std::uint64_t budget = kDefaultExactBudget, unsigned workers = 1);

}  // namespace addcomb::torus
