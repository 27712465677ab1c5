#pragma once

// Helpers shared by the scalar and vector kernel translation units.

#include <bit>
#include <cstdint>

namespace addcomb::simd::detail {

// 64 bits of src starting at bit pos; reads src[pos/64] and src[pos/64 + 1].
inline std::uint64_t fetch64(const std::uint64_t* src, std::uint64_t pos) {
  const std::uint64_t q = pos >> 6;
  const unsigned r = static_cast<unsigned>(pos & 63);
  if (r == 0) return src[q];
  return (src[q] >> r) | (src[q + 1] << (64 - r));
}

inline std::uint64_t low_mask(unsigned bits) { return bits >= 64 ? ~0ULL : ((1ULL << bits) - 1); }

inline bool test_bit(const std::uint64_t* w, std::uint64_t i) { return (w[i >> 6] >> (i & 63)) & 1u; }
inline void set_bit(std::uint64_t* w, std::uint64_t i) { w[i >> 6] |= 1ULL << (i & 63); }

// dst |= ring-rotation of src. LinearOr(dst_words, src, first_src_bit, nwords)
// ORs fetch64(src, first_src_bit + 64 j) into dst_words[j] for j < nwords.
template <class LinearOr>
void or_rotated_impl(std::uint64_t* dst, const std::uint64_t* src, std::uint64_t nbits,
                     std::uint64_t shift, LinearOr linear_or) {
  if (nbits == 0) return;
  shift %= nbits;
  const std::uint64_t nwords = (nbits + 63) / 64;
  if (nbits < 128) {
    for (std::uint64_t b = 0; b < nbits; ++b)
      if (test_bit(src, b)) set_bit(dst, (b + shift) % nbits);
    return;
  }
  const std::uint64_t w0 = shift / 64;
  const unsigned rho = static_cast<unsigned>(shift % 64);
  // Words entirely fed from the tail of src.
  if (w0 > 0) linear_or(dst, src, nbits - shift, w0);
  std::uint64_t next = w0;
  if (rho != 0) {
    const std::uint64_t tail = fetch64(src, nbits - rho) & low_mask(rho);
    dst[w0] |= tail | (src[0] << rho);
    next = w0 + 1;
  }
  if (next < nwords) linear_or(dst + next, src, 64 * next - shift, nwords - next);
  if (nbits % 64) dst[nwords - 1] &= low_mask(static_cast<unsigned>(nbits % 64));
}

}  // namespace addcomb::simd::detail
