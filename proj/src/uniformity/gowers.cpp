#include "addcomb/uniformity/gowers.hpp"

#include <cmath>

#include "addcomb/core/errors.hpp"
#include "addcomb/simd/kernels.hpp"
#include "fft_plan.hpp"

namespace addcomb::uniformity {
namespace {

// sum_r |ghat(r)|^4 for the function currently in plan.in().
double fourth_moment(FftPlan& plan) {
  plan.execute();
  const double inv = 1.0 / static_cast<double>(plan.size());
  const double s = simd::kernels().sum_abs4(reinterpret_cast<const double*>(plan.out()), plan.size());
  return s * inv * inv * inv * inv;
}

}  // namespace

double gowers_u2(std::span<const double> f) {
  FftPlan plan(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) plan.in()[i] = f[i];
  return std::pow(std::max(0.0, fourth_moment(plan)), 0.25);
}

double gowers_u3(std::span<const double> f, std::int64_t cap) {
  const auto N = static_cast<std::int64_t>(f.size());
  if (N > cap) throw ResourceError("U^3 is capped at N = " + std::to_string(cap));
  FftPlan plan(f.size());
  double total = 0;
  for (std::int64_t h = 0; h < N; ++h) {
    for (std::int64_t n = 0; n < N; ++n)
      plan.in()[static_cast<std::size_t>(n)] = f[static_cast<std::size_t>(n)] * f[static_cast<std::size_t>((n + h) % N)];
    total += fourth_moment(plan);
  }
  return std::pow(std::max(0.0, total / static_cast<double>(N)), 0.125);
}

double gowers_norm(const GridFunction& f, int s, bool center, std::int64_t u3_cap) {
  if (s != 2 && s != 3) throw InvalidArgument("Gowers norm order must be 2 or 3");
  std::vector<double> v(f.values().begin(), f.values().end());
  if (center) {
    const double m = f.mean();
    for (auto& x : v) x -= m;
  }
  return s == 2 ? gowers_u2(v) : gowers_u3(v, u3_cap);
}

namespace naive {

double gowers_u2(std::span<const double> f) {
  const std::size_t N = f.size();
  double s = 0;
  for (std::size_t n = 0; n < N; ++n)
    for (std::size_t a = 0; a < N; ++a)
      for (std::size_t b = 0; b < N; ++b) s += f[n] * f[(n + a) % N] * f[(n + b) % N] * f[(n + a + b) % N];
  const double Nd = static_cast<double>(N);
  return std::pow(std::max(0.0, s / (Nd * Nd * Nd)), 0.25);
}

double gowers_u3(std::span<const double> f) {
  const std::size_t N = f.size();
  double s = 0;
  for (std::size_t n = 0; n < N; ++n)
    for (std::size_t a = 0; a < N; ++a)
      for (std::size_t b = 0; b < N; ++b)
        for (std::size_t c = 0; c < N; ++c)
          s += f[n] * f[(n + a) % N] * f[(n + b) % N] * f[(n + c) % N] * f[(n + a + b) % N] *
               f[(n + a + c) % N] * f[(n + b + c) % N] * f[(n + a + b + c) % N];
  const double Nd = static_cast<double>(N);
  return std::pow(std::max(0.0, s / (Nd * Nd * Nd * Nd)), 0.125);
}

}  // namespace naive
}  // namespace addcomb::uniformity
