#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "addcomb/core/pattern.hpp"
#include "addcomb/torus/monte_carlo.hpp"
#include "addcomb/torus/torus_set.hpp"

namespace addcomb::uniformity {

struct ConvergenceRow {
  std::int64_t N = 0;
  double lambda = 0;         // Lambda(f_N)
  double centered_norm = 0;  // ||f_N - mean||_{U^{k-2}}
  double gap = 0;            // |lambda - reference|
};

struct ConvergenceReport {
  double reference = 0;  // Lambda-tilde(F)
  double reference_stderr = 0;
  std::string reference_method;  // "given" or "monte-carlo"
  std::vector<ConvergenceRow> rows;
};

struct ConvergenceOptions {
  std::optional<double> reference;  // skips Monte Carlo when set
  std::uint64_t mc_samples = 1'000'000;
  std::uint64_t seed = 1;
  unsigned workers = 1;
};

// Degree k - 2 discretization; U^{k-2} column needs k <= 5 (k = 3 reports
// the centered U^1 seminorm, which is 0).
ConvergenceReport convergence_experiment(const torus::TorusFunction& F, const core::PatternSpec& spec,
                                         const std::vector<std::int64_t>& N_list,
                                         const ConvergenceOptions& opts = {});
ConvergenceReport convergence_experiment(const torus::TorusSet& A, const core::PatternSpec& spec,
                                         const std::vector<std::int64_t>& N_list,
                                         const ConvergenceOptions& opts = {});

}  // namespace addcomb::uniformity
