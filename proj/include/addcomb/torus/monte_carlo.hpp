#pragma once

#include <cstdint>
#include <functional>

#include "addcomb/colorings/clauses.hpp"
#include "addcomb/core/pattern.hpp"
#include "addcomb/torus/torus_coloring.hpp"

namespace addcomb::torus {

struct Estimate {
  double mean = 0;
  double standard_error = 0;  // sample sd / sqrt(sample_count)
  std::uint64_t sample_count = 0;
  std::uint64_t seed = 0;
};

using TorusFunction = std::function<double(double x, double y)>;

// Lambda-tilde of F for the pattern: x_i = x_0 + a_i x_1, y_1..y_{k-1} uniform and
// y_k uniform among the solutions of the pattern's binomial equation. Worker w
// draws from derive_seed(seed, w); the result depends on (seed, workers).
Estimate lambda_tilde_mc(const TorusFunction& F, const core::PatternSpec& spec, std::uint64_t samples,
                         std::uint64_t seed, unsigned workers = 1);

// Frequency of the clause predicate on the colors of x + a_i y, (x, y) uniform.
Estimate pattern_probability_mc(const TorusColoring& phi, const core::PatternSpec& spec,
                                const colorings::ClauseSet& predicate, std::uint64_t samples, std::uint64_t seed,
                                unsigned workers = 1);

}  // namespace addcomb::torus
