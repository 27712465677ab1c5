#include "addcomb/torus/torus_coloring.hpp"

#include <algorithm>
#include <cmath>

#include "addcomb/core/errors.hpp"

namespace addcomb::torus {
namespace {

void check_cells(std::int64_t D, std::int64_t max_cells) {
  if (D > max_cells)
    throw ResourceError("torus coloring needs " + std::to_string(D) + " cells, cap is " + std::to_string(max_cells));
}

}  // namespace

TorusColoring::TorusColoring(std::vector<std::int32_t> cell_colors) : cells_(std::move(cell_colors)) {
  if (cells_.empty()) throw InvalidArgument("torus coloring needs D >= 1");
  for (auto c : cells_) {
    if (c < 1) throw InvalidArgument("color ids must be >= 1");
    r_ = std::max<int>(r_, c);
  }
}

TorusColoring TorusColoring::lift(const colorings::Coloring& phi) {
  return TorusColoring(std::vector<std::int32_t>(phi.colors().begin(), phi.colors().end()));
}

std::int64_t TorusColoring::cell_of(double x) const {
  const double f = x - std::floor(x);
  const auto j = static_cast<std::int64_t>(f * static_cast<double>(D()));
  return std::clamp<std::int64_t>(j, 0, D() - 1);
}

std::int64_t TorusColoring::cell_of(const core::Rational& x) const {
  const core::BigInt num = boost::multiprecision::numerator(x) * D();
  const core::BigInt den = boost::multiprecision::denominator(x);
  core::BigInt q = num / den;
  if (q * den > num) --q;  // floor for negative x
  core::BigInt r = q % D();
  if (r < 0) r += D();
  return static_cast<std::int64_t>(r);
}

TorusColoring interlace_k(const colorings::Coloring& phi, int k, std::int64_t max_cells) {
  if (k < 3) throw InvalidArgument("interlace_k needs k >= 3");
  const std::int64_t N = phi.size();
  const std::int64_t kk = k;
  check_cells(kk * kk * N, max_cells);
  const std::int32_t r = phi.r();
  std::vector<std::int32_t> cells(static_cast<std::size_t>(kk * kk * N));
  for (std::int64_t a = 0; a < kk; ++a)
    for (std::int64_t b = 0; b < N; ++b)
      for (std::int64_t c = 0; c < kk; ++c)
        cells[static_cast<std::size_t>(a * kk * N + b * kk + c)] =
            static_cast<std::int32_t>((a * kk + c) * r) + phi[b];
  return TorusColoring(std::move(cells));
}

TorusColoring interlace_m(const colorings::Coloring& phi, std::int64_t m, int r, std::int64_t max_cells) {
  if (m < 1) throw InvalidArgument("interlace_m needs m >= 1");
  if (r < phi.r()) throw InvalidArgument("r is smaller than the number of colors of phi");
  const std::int64_t N = phi.size();
  if (m > max_cells / N)
    throw ResourceError("interlace_m needs m N cells with m = " + std::to_string(m) + ", cap is " +
                        std::to_string(max_cells));
  std::vector<std::int32_t> cells(static_cast<std::size_t>(m * N));
  for (std::int64_t j = 0; j < m * N; ++j)
    cells[static_cast<std::size_t>(j)] = phi[j / m] + static_cast<std::int32_t>(r * (j % m));
  return TorusColoring(std::move(cells));
}

std::int64_t interlace_modulus(const core::PatternSpec& spec) {
  const std::int64_t n = spec.width() + 1;
  if (n > 20) throw ResourceError("(a_k - a_1 + 1)! overflows 64 bits");
  std::int64_t f = 1;
  for (std::int64_t i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace addcomb::torus
