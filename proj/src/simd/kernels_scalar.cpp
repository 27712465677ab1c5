#include <bit>

#include "addcomb/simd/kernels.hpp"
#include "bit_ops.hpp"

namespace addcomb::simd::detail {
namespace {

inline bool matches_at(const PatternScan& s, std::int64_t n) {
  for (std::size_t c = 0; c < s.clause_count; ++c) {
    bool all = true;
    for (std::size_t p = s.clause_begin[c]; p < s.clause_begin[c + 1] && all; ++p)
      all = s.lanes[s.lhs[p]][n] == s.lanes[s.rhs[p]][n];
    if (all) return true;
  }
  return false;
}

std::int64_t count_matches_scalar(const PatternScan& scan, std::int64_t count) {
  std::int64_t total = 0;
  for (std::int64_t n = 0; n < count; ++n) total += matches_at(scan, n);
  return total;
}

std::int64_t first_match_scalar(const PatternScan& scan, std::int64_t count) {
  for (std::int64_t n = 0; n < count; ++n)
    if (matches_at(scan, n)) return n;
  return -1;
}

double shifted_product_sum_scalar(std::span<const double* const> rows, std::int64_t count) {
  double total = 0.0;
  for (std::int64_t n = 0; n < count; ++n) {
    double prod = 1.0;
    for (const double* row : rows) prod *= row[n];
    total += prod;
  }
  return total;
}

std::uint64_t shifted_and_popcount_scalar(std::span<const std::uint64_t* const> rows,
                                          std::span<const std::uint64_t> offsets, std::uint64_t nbits) {
  const std::uint64_t full = nbits / 64;
  std::uint64_t total = 0;
  for (std::uint64_t w = 0; w <= full; ++w) {
    std::uint64_t x = ~0ULL;
    for (std::size_t i = 0; i < rows.size(); ++i) x &= fetch64(rows[i], offsets[i] + 64 * w);
    if (w == full) x &= low_mask(static_cast<unsigned>(nbits % 64));
    total += static_cast<std::uint64_t>(std::popcount(x));
  }
  return total;
}

double sum_abs4_scalar(const double* z, std::size_t n) {
  double total = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double m2 = z[2 * j] * z[2 * j] + z[2 * j + 1] * z[2 * j + 1];
    total += m2 * m2;
  }
  return total;
}

void linear_or_scalar(std::uint64_t* dst, const std::uint64_t* src, std::uint64_t first_bit,
                      std::uint64_t nwords) {
  for (std::uint64_t j = 0; j < nwords; ++j) dst[j] |= fetch64(src, first_bit + 64 * j);
}

void or_rotated_scalar(std::uint64_t* dst, const std::uint64_t* src, std::uint64_t nbits,
                       std::uint64_t shift) {
  or_rotated_impl(dst, src, nbits, shift, linear_or_scalar);
}

}  // namespace

const Kernels scalar_kernels{
    Isa::scalar,         count_matches_scalar, first_match_scalar, shifted_product_sum_scalar,
    shifted_and_popcount_scalar, sum_abs4_scalar,    or_rotated_scalar,
};

}  // namespace addcomb::simd::detail
