#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "addcomb/colorings/coloring.hpp"
#include "addcomb/core/pattern.hpp"
#include "addcomb/core/rational.hpp"

namespace addcomb::torus {

inline constexpr std::int64_t kDefaultMaxCells = 1'000'000;

// Step coloring of the circle: cell j = [j/D, (j+1)/D) has color cell_colors[j].
// Ids are >= 1; r is the largest id (not every id needs to occur).
class TorusColoring {
 public:
  explicit TorusColoring(std::vector<std::int32_t> cell_colors);

  // D = N, cell j colored phi(j).
  static TorusColoring lift(const colorings::Coloring& phi);

  std::int64_t D() const noexcept { return static_cast<std::int64_t>(cells_.size()); }
  int r() const noexcept { return r_; }
  std::span<const std::int32_t> cell_colors() const noexcept { return cells_; }
  std::int32_t cell(std::int64_t j) const { return cells_[static_cast<std::size_t>(j)]; }

  std::int64_t cell_of(double x) const;
  std::int64_t cell_of(const core::Rational& x) const;
  std::int32_t color_at(double x) const { return cell(cell_of(x)); }
  std::int32_t color_at(const core::Rational& x) const { return cell(cell_of(x)); }

  friend bool operator==(const TorusColoring&, const TorusColoring&) = default;

 private:
  std::vector<std::int32_t> cells_;
  int r_ = 0;
};

// k^2 interlaced copies of phi with disjoint palettes, D = k^2 N, k^2 r colors.
// Throws InvalidArgument for k < 3, ResourceError when D exceeds max_cells.
TorusColoring interlace_k(const colorings::Coloring& phi, int k, std::int64_t max_cells = kDefaultMaxCells);

// Phi(x) = phi(floor(N x)) + r (floor(m N x) mod m), D = m N.
TorusColoring interlace_m(const colorings::Coloring& phi, std::int64_t m, int r,
                          std::int64_t max_cells = kDefaultMaxCells);

// (a_k - a_1 + 1)!; ResourceError past 20!.
std::int64_t interlace_modulus(const core::PatternSpec& spec);

}  // namespace addcomb::torus
