#include "addcomb/uniformity/fourier.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <numbers>

#include "fft_plan.hpp"

namespace addcomb::uniformity {

std::mutex& fftw_planner_mutex() {
  static std::mutex m;
  return m;
}

FftPlan::FftPlan(std::size_t n) : n_(n) {
  in_ = static_cast<std::complex<double>*>(fftw_malloc(sizeof(fftw_complex) * n));
  out_ = static_cast<std::complex<double>*>(fftw_malloc(sizeof(fftw_complex) * n));
  std::lock_guard lock(fftw_planner_mutex());
  plan_ = fftw_plan_dft_1d(static_cast<int>(n), reinterpret_cast<fftw_complex*>(in_),
                           reinterpret_cast<fftw_complex*>(out_), FFTW_FORWARD, FFTW_ESTIMATE);
}

FftPlan::~FftPlan() {
  {
    std::lock_guard lock(fftw_planner_mutex());
    fftw_destroy_plan(static_cast<fftw_plan>(plan_));
  }
  fftw_free(in_);
  fftw_free(out_);
}

void FftPlan::execute() { fftw_execute(static_cast<fftw_plan>(plan_)); }

std::vector<std::complex<double>> fourier_coefficients(std::span<const double> f) {
  FftPlan plan(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) plan.in()[i] = f[i];
  plan.execute();
  const double inv = 1.0 / static_cast<double>(f.size());
  std::vector<std::complex<double>> out(plan.out(), plan.out() + f.size());
  for (auto& z : out) z *= inv;
  return out;
}

SpectrumReport spectrum(const GridFunction& f, bool keep_table) {
  auto coeffs = fourier_coefficients(f.values());
  SpectrumReport rep;
  rep.alpha = coeffs[0].real();
  double energy = 0;
  for (std::size_t r = 0; r < coeffs.size(); ++r) {
    const double mag = std::abs(coeffs[r]);
    energy += mag * mag;
    if (r > 0 && mag > rep.max_nonzero) {
      rep.max_nonzero = mag;
      rep.argmax = static_cast<std::int64_t>(r);
    }
  }
  double sq = 0;
  for (double v : f.values()) sq += v * v;
  sq /= static_cast<double>(f.N());
  rep.parseval_error = std::abs(energy - sq) / std::max(sq, 1e-300);
  if (sq == 0) rep.parseval_error = energy;
  if (keep_table) rep.coefficients = std::move(coeffs);
  return rep;
}

namespace naive {

std::vector<std::complex<double>> fourier_coefficients(std::span<const double> f) {
  const std::size_t N = f.size();
  std::vector<std::complex<double>> out(N);
  for (std::size_t r = 0; r < N; ++r) {
    std::complex<double> s = 0;
    for (std::size_t n = 0; n < N; ++n) {
      const double ang = -2 * std::numbers::pi * static_cast<double>((r * n) % N) / static_cast<double>(N);
      s += f[n] * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    out[r] = s / static_cast<double>(N);
  }
  return out;
}

}  // namespace naive
}  // namespace addcomb::uniformity
