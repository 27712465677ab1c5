#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "addcomb/uniformity/grid_function.hpp"

namespace addcomb::uniformity {

// fhat(r) = (1/N) sum_n f(n) e(-r n / N), all r, via FFTW.
std::vector<std::complex<double>> fourier_coefficients(std::span<const double> f);

struct SpectrumReport {
  double alpha = 0;           // fhat(0)
  double max_nonzero = 0;     // max_{r != 0} |fhat(r)|
  std::int64_t argmax = 0;    // smallest r attaining it (0 when N = 1)
  double parseval_error = 0;  // |sum |fhat|^2 - E f^2| / max(E f^2, tiny)
  std::vector<std::complex<double>> coefficients;  // filled when requested
};

SpectrumReport spectrum(const GridFunction& f, bool keep_table = false);

namespace naive {
// O(N^2) direct sum, for tests.
std::vector<std::complex<double>> fourier_coefficients(std::span<const double> f);
}  // namespace naive

}  // namespace addcomb::uniformity
