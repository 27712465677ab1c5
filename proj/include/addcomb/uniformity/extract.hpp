#pragma once

#include <cstdint>
#include <optional>

#include "addcomb/colorings/coloring.hpp"
#include "addcomb/torus/monte_carlo.hpp"

namespace addcomb::uniformity {

struct ExtractionRequest {
  double alpha = 0;  // first marginal of F
  int k = 4;         // even
  int r = 1;
  std::int64_t N = 1;
  std::uint64_t seed = 1;
  std::uint64_t attempts = 1;
  bool stop_at_first = true;  // false: run every attempt and count successes
  unsigned workers = 1;
};

struct ExtractionResult {
  std::optional<colorings::Coloring> coloring;  // first success by attempt index
  std::uint64_t first_success = 0;              // attempt index, valid with coloring
  std::uint64_t attempts_run = 0;
  std::uint64_t successes = 0;
  std::uint64_t undefined = 0;  // some phi(i) had no j
  std::uint64_t rejected = 0;   // defined but has a symmetric k-AP
  double undefined_bound = 0;   // N (1 - alpha/2)^r
};

// Attempt t draws x_0, x_1, y_1..y_r from derive_seed(seed, t) and sets
// phi(i) = least j with F(x_0 + i x_1, y_j) >= alpha/2, i = 1..N.
ExtractionResult extract_coloring(const torus::TorusFunction& F, const ExtractionRequest& req);

}  // namespace addcomb::uniformity
