#pragma once

#include <cstdint>

#include "addcomb/colorings/coloring.hpp"
#include "addcomb/sets/residue_set.hpp"

namespace addcomb::sets {

// Digits x_j in [0, d) written in base B = (k-1)(d-1) + 1, restricted to the
// centered sphere sum_j (2 x_j - d + 1)^2 = radius2.
struct BehrendParams {
  int digits = 1;  // d
  int dim = 0;
  std::int64_t base = 1;
  std::int64_t radius2 = 0;
  std::int64_t population = 1;
};

struct BehrendResult {
  ResidueSet set;
  BehrendParams params;
};

// k-pattern-free subset of Z/NZ. Scans (d, dim, shell) with (k-1) max(S) < N
// so no relation wraps, and keeps the largest shell (ties: smaller d, dim,
// radius). N too small for two points gives {0}.
BehrendResult behrend_set(std::int64_t N, int k);

// Colors Z/mZ by random translates of S: n gets the first i with n in S + t_i,
// ids relabeled in order of first appearance. Throws ResourceError after
// max_translates draws without covering.
colorings::Coloring covering_coloring(const ResidueSet& s, std::uint64_t seed, std::int64_t max_translates = 0);

}  // namespace addcomb::sets
