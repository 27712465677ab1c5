// Compiled with -mavx2 -mpopcnt; only reached after a CPUID check.

#include "addcomb/simd/kernels.hpp"

#if defined(__AVX2__)

#include <immintrin.h>

#include <bit>

#include "bit_ops.hpp"

namespace addcomb::simd::detail {
namespace {

// Bitmask (one bit per n in the block of 8) of positions matching the scan.
inline unsigned block_mask(const PatternScan& s, std::int64_t n) {
  __m256i v[kMaxLanes];
  for (std::size_t i = 0; i < s.lane_count; ++i)
    v[i] = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(s.lanes[i] + n));
  __m256i any = _mm256_setzero_si256();
  for (std::size_t c = 0; c < s.clause_count; ++c) {
    __m256i all = _mm256_set1_epi32(-1);
    for (std::size_t p = s.clause_begin[c]; p < s.clause_begin[c + 1]; ++p)
      all = _mm256_and_si256(all, _mm256_cmpeq_epi32(v[s.lhs[p]], v[s.rhs[p]]));
    any = _mm256_or_si256(any, all);
  }
  return static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(any)));
}

inline bool matches_at(const PatternScan& s, std::int64_t n) {
  for (std::size_t c = 0; c < s.clause_count; ++c) {
    bool all = true;
    for (std::size_t p = s.clause_begin[c]; p < s.clause_begin[c + 1] && all; ++p)
      all = s.lanes[s.lhs[p]][n] == s.lanes[s.rhs[p]][n];
    if (all) return true;
  }
  return false;
}

std::int64_t count_matches_avx2(const PatternScan& scan, std::int64_t count) {
  std::int64_t total = 0;
  std::int64_t n = 0;
  for (; n + 8 <= count; n += 8) total += std::popcount(block_mask(scan, n));
  for (; n < count; ++n) total += matches_at(scan, n);
  return total;
}

std::int64_t first_match_avx2(const PatternScan& scan, std::int64_t count) {
  std::int64_t n = 0;
  for (; n + 8 <= count; n += 8)
    if (unsigned m = block_mask(scan, n)) return n + std::countr_zero(m);
  for (; n < count; ++n)
    if (matches_at(scan, n)) return n;
  return -1;
}

double shifted_product_sum_avx2(std::span<const double* const> rows, std::int64_t count) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::int64_t n = 0;
  for (; n + 8 <= count; n += 8) {
    __m256d p0 = _mm256_set1_pd(1.0);
    __m256d p1 = _mm256_set1_pd(1.0);
    for (const double* row : rows) {
      p0 = _mm256_mul_pd(p0, _mm256_loadu_pd(row + n));
      p1 = _mm256_mul_pd(p1, _mm256_loadu_pd(row + n + 4));
    }
    acc0 = _mm256_add_pd(acc0, p0);
    acc1 = _mm256_add_pd(acc1, p1);
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, _mm256_add_pd(acc0, acc1));
  double total = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (; n < count; ++n) {
    double prod = 1.0;
    for (const double* row : rows) prod *= row[n];
    total += prod;
  }
  return total;
}

inline __m256i fetch256(const std::uint64_t* src, std::uint64_t pos) {
  const std::uint64_t q = pos >> 6;
  const int r = static_cast<int>(pos & 63);
  const __m256i lo = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + q));
  const __m256i hi = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + q + 1));
  // A shift count of 64 yields zero, so r == 0 needs no special case.
  return _mm256_or_si256(_mm256_srl_epi64(lo, _mm_cvtsi32_si128(r)),
                         _mm256_sll_epi64(hi, _mm_cvtsi32_si128(64 - r)));
}

inline std::uint64_t popcount256(__m256i v) {
  return static_cast<std::uint64_t>(_mm_popcnt_u64(static_cast<std::uint64_t>(_mm256_extract_epi64(v, 0))) +
                                    _mm_popcnt_u64(static_cast<std::uint64_t>(_mm256_extract_epi64(v, 1))) +
                                    _mm_popcnt_u64(static_cast<std::uint64_t>(_mm256_extract_epi64(v, 2))) +
                                    _mm_popcnt_u64(static_cast<std::uint64_t>(_mm256_extract_epi64(v, 3))));
}

std::uint64_t shifted_and_popcount_avx2(std::span<const std::uint64_t* const> rows,
                                        std::span<const std::uint64_t> offsets, std::uint64_t nbits) {
  const std::uint64_t full = nbits / 64;  // complete words
  std::uint64_t total = 0;
  std::uint64_t w = 0;
  // fetch256 reads 5 words past the start; stay clear of the last padded word.
  for (; w + 4 <= full; w += 4) {
    __m256i x = _mm256_set1_epi64x(-1);
    for (std::size_t i = 0; i < rows.size(); ++i) x = _mm256_and_si256(x, fetch256(rows[i], offsets[i] + 64 * w));
    total += popcount256(x);
  }
  for (; w <= full; ++w) {
    std::uint64_t x = ~0ULL;
    for (std::size_t i = 0; i < rows.size(); ++i) x &= fetch64(rows[i], offsets[i] + 64 * w);
    if (w == full) x &= low_mask(static_cast<unsigned>(nbits % 64));
    total += static_cast<std::uint64_t>(std::popcount(x));
  }
  return total;
}

double sum_abs4_avx2(const double* z, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    // (re0 im0 re1 im1), (re2 im2 re3 im3)
    const __m256d a = _mm256_loadu_pd(z + 2 * j);
    const __m256d b = _mm256_loadu_pd(z + 2 * j + 4);
    const __m256d sa = _mm256_mul_pd(a, a);
    const __m256d sb = _mm256_mul_pd(b, b);
    const __m256d m2 = _mm256_hadd_pd(sa, sb);  // |z0|^2 |z2|^2 |z1|^2 |z3|^2
    acc = _mm256_add_pd(acc, _mm256_mul_pd(m2, m2));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double total = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (; j < n; ++j) {
    const double m2 = z[2 * j] * z[2 * j] + z[2 * j + 1] * z[2 * j + 1];
    total += m2 * m2;
  }
  return total;
}

void linear_or_avx2(std::uint64_t* dst, const std::uint64_t* src, std::uint64_t first_bit,
                    std::uint64_t nwords) {
  std::uint64_t j = 0;
  // The last vector iteration may touch src up to 5 words ahead; keep one word of slack.
  for (; j + 5 <= nwords; j += 4) {
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + j));
    d = _mm256_or_si256(d, fetch256(src, first_bit + 64 * j));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + j), d);
  }
  for (; j < nwords; ++j) dst[j] |= fetch64(src, first_bit + 64 * j);
}

void or_rotated_avx2(std::uint64_t* dst, const std::uint64_t* src, std::uint64_t nbits, std::uint64_t shift) {
  or_rotated_impl(dst, src, nbits, shift, linear_or_avx2);
}

const Kernels avx2_table{
    Isa::avx2,         count_matches_avx2, first_match_avx2, shifted_product_sum_avx2,
    shifted_and_popcount_avx2, sum_abs4_avx2,    or_rotated_avx2,
};

}  // namespace

const Kernels* avx2_kernels() noexcept { return &avx2_table; }

}  // namespace addcomb::simd::detail

#else

namespace addcomb::simd::detail {
const Kernels* avx2_kernels() noexcept { return nullptr; }
}  // namespace addcomb::simd::detail

#endif
