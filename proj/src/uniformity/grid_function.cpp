#include "addcomb/uniformity/grid_function.hpp"

#include <cmath>

#include "addcomb/core/errors.hpp"

namespace addcomb::uniformity {

GridFunction::GridFunction(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) throw InvalidArgument("grid function needs N >= 1");
  indicator_ = true;
  for (double v : values_) {
    if (!(v >= 0.0 && v <= 1.0)) throw InvalidArgument("grid function values must lie in [0, 1]");
    if (v != 0.0 && v != 1.0) indicator_ = false;
  }
}

GridFunction::GridFunction(std::vector<core::Rational> values) {
  if (values.empty()) throw InvalidArgument("grid function needs N >= 1");
  values_.reserve(values.size());
  indicator_ = true;
  for (const auto& v : values) {
    if (v < 0 || v > 1) throw InvalidArgument("grid function values must lie in [0, 1]");
    if (v != 0 && v != 1) indicator_ = false;
    values_.push_back(core::to_double(v));
  }
  exact_ = std::move(values);
}

GridFunction GridFunction::constant(std::int64_t N, const core::Rational& alpha) {
  if (N < 1) throw InvalidArgument("grid function needs N >= 1");
  return GridFunction(std::vector<core::Rational>(static_cast<std::size_t>(N), alpha));
}

GridFunction GridFunction::indicator(std::int64_t N, std::span<const std::int64_t> members) {
  if (N < 1) throw InvalidArgument("grid function needs N >= 1");
  std::vector<core::Rational> v(static_cast<std::size_t>(N), core::Rational(0));
  for (auto x : members) v[static_cast<std::size_t>(core::mod(x, N))] = 1;
  return GridFunction(std::move(v));
}

std::span<const core::Rational> GridFunction::exact_values() const {
  if (!exact_) throw InvalidArgument("grid function has no exact values");
  return *exact_;
}

double GridFunction::mean() const {
  double s = 0, c = 0;  // Kahan
  for (double v : values_) {
    const double y = v - c;
    const double t = s + y;
    c = (t - s) - y;
    s = t;
  }
  return s / static_cast<double>(values_.size());
}

std::optional<core::Rational> GridFunction::exact_mean() const {
  if (!exact_) return std::nullopt;
  core::Rational s = 0;
  for (const auto& v : *exact_) s += v;
  return s / N();
}

GridFunction discretize(const torus::TorusFunction& F, std::int64_t N, int degree) {
  if (N < 1) throw InvalidArgument("N must be >= 1");
  if (degree < 1) throw InvalidArgument("degree must be >= 1");
  std::vector<double> v(static_cast<std::size_t>(N));
  const double inv = 1.0 / static_cast<double>(N);
  for (std::int64_t n = 0; n < N; ++n) {
    const std::int64_t y = core::powmod(n, static_cast<std::uint64_t>(degree), N);
    v[static_cast<std::size_t>(n)] = F(static_cast<double>(n) * inv, static_cast<double>(y) * inv);
  }
  return GridFunction(std::move(v));
}

GridFunction discretize(const torus::TorusSet& A, std::int64_t N, int degree) {
  if (N < 1) throw InvalidArgument("N must be >= 1");
  if (degree < 1) throw InvalidArgument("degree must be >= 1");
  std::vector<core::Rational> v(static_cast<std::size_t>(N));
  for (std::int64_t n = 0; n < N; ++n) {
    const std::int64_t y = core::powmod(n, static_cast<std::uint64_t>(degree), N);
    v[static_cast<std::size_t>(n)] = A.contains(core::Rational(n, N), core::Rational(y, N)) ? 1 : 0;
  }
  return GridFunction(std::move(v));
}

}  // namespace addcomb::uniformity
