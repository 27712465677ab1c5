#pragma once

// With x = (p + s)/D and y = (q + t)/D, the point x + a_i y sits in cell
// p + a_i q + floor(s + a_i t) (mod D). The unit (s, t) square splits into
// convex pieces on which every floor is constant; the split depends only on a.

#include <cstdint>
#include <vector>

#include "addcomb/core/pattern.hpp"
#include "addcomb/core/rational.hpp"

namespace addcomb::torus {

struct CellPiece {
  std::vector<std::int64_t> floors;  // floor(s + a_i t) per position
  core::Rational area;
};

// Pieces merged by floor vector, sorted by it. Areas sum to 1.
std::vector<CellPiece> cell_decomposition(const core::PatternSpec& spec);

}  // namespace addcomb::torus
