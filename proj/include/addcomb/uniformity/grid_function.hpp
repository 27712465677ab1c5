#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "addcomb/core/rational.hpp"
#include "addcomb/torus/monte_carlo.hpp"
#include "addcomb/torus/torus_set.hpp"

namespace addcomb::uniformity {

// f : Z/NZ -> [0, 1]. Exact rational values are kept when the source was exact.
class GridFunction {
 public:
  explicit GridFunction(std::vector<double> values);
  explicit GridFunction(std::vector<core::Rational> values);
  static GridFunction constant(std::int64_t N, const core::Rational& alpha);
  // 1 on the listed residues, 0 elsewhere (exact).
  static GridFunction indicator(std::int64_t N, std::span<const std::int64_t> members);

  std::int64_t N() const noexcept { return static_cast<std::int64_t>(values_.size()); }
  std::span<const double> values() const noexcept { return values_; }
  double operator[](std::int64_t n) const { return values_[static_cast<std::size_t>(n)]; }
  bool exact() const noexcept { return exact_.has_value(); }
  std::span<const core::Rational> exact_values() const;
  // Every value is exactly 0 or 1.
  bool is_indicator() const noexcept { return indicator_; }
  double mean() const;
  std::optional<core::Rational> exact_mean() const;

 private:
  std::vector<double> values_;
  std::optional<std::vector<core::Rational>> exact_;
  bool indicator_ = false;
};

// f_N(n) = F(n/N, (n^degree mod N)/N).
GridFunction discretize(const torus::TorusFunction& F, std::int64_t N, int degree);
// Same with exact rational cell lookup.
GridFunction discretize(const torus::TorusSet& A, std::int64_t N, int degree);

}  // namespace addcomb::uniformity
