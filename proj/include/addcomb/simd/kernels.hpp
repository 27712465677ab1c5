#pragma once

// Data-parallel inner loops. Every kernel has a scalar reference and an AVX2
// variant; the variant is picked once at startup from CPUID, and can be forced
// with ADDCOMB_SIMD=scalar|avx2 or force_isa(). The scalar path is the
// specification the vector paths are tested against.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>

namespace addcomb::simd {

enum class Isa { scalar, avx2 };

const char* isa_name(Isa isa) noexcept;
bool isa_available(Isa isa) noexcept;
Isa active_isa() noexcept;
// Throws InvalidArgument if the ISA is not available on this CPU.
void force_isa(Isa isa);

inline constexpr std::size_t kMaxLanes = 32;
inline constexpr std::size_t kMaxPairs = 256;
inline constexpr std::size_t kMaxClauses = 64;

// A disjunction of conjunctions of color equalities over k lanes. Lane i
// reads lanes[i][n]; position n matches if for some clause every pair
// (lhs, rhs) in it satisfies lanes[lhs][n] == lanes[rhs][n].
struct PatternScan {
  std::array<const std::int32_t*, kMaxLanes> lanes{};
  std::size_t lane_count = 0;
  std::array<std::uint8_t, kMaxPairs> lhs{};
  std::array<std::uint8_t, kMaxPairs> rhs{};
  // Clause c owns pairs [clause_begin[c], clause_begin[c + 1]).
  std::array<std::uint16_t, kMaxClauses + 1> clause_begin{};
  std::size_t clause_count = 0;
};

struct Kernels {
  Isa isa;
  // Number of n in [0, count) matching the scan.
  std::int64_t (*count_matches)(const PatternScan& scan, std::int64_t count);
  // Smallest matching n in [0, count), or -1.
  std::int64_t (*first_match)(const PatternScan& scan, std::int64_t count);
  // sum_{n < count} prod_i rows[i][n]
  double (*shifted_product_sum)(std::span<const double* const> rows, std::int64_t count);
  // Number of bit positions j < nbits where bit (offsets[i] + j) of every rows[i]
  // is set. Rows must be readable one word past offsets[i] + nbits.
  std::uint64_t (*shifted_and_popcount)(std::span<const std::uint64_t* const> rows,
                                        std::span<const std::uint64_t> offsets, std::uint64_t nbits);
  // sum_j |z_j|^4 over n interleaved (re, im) pairs.
  double (*sum_abs4)(const double* interleaved, std::size_t n);
  // dst |= src rotated by shift inside a ring of nbits bits: bit b of src lands
  // on bit (b + shift) mod nbits. Both buffers hold words_for(nbits) words.
  void (*or_rotated)(std::uint64_t* dst, const std::uint64_t* src, std::uint64_t nbits,
                     std::uint64_t shift);
};

const Kernels& kernels() noexcept;
const Kernels& kernels_for(Isa isa);

// Words needed for an nbits ring plus the one padding word the readers use.
inline std::size_t words_for(std::uint64_t nbits) { return static_cast<std::size_t>(nbits / 64 + 2); }

namespace detail {
extern const Kernels scalar_kernels;
const Kernels* avx2_kernels() noexcept;  // nullptr when not compiled in
}  // namespace detail

}  // namespace addcomb::simd
