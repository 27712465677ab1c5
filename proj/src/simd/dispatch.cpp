#include <atomic>
#include <cstdlib>
#include <string_view>

#include "addcomb/core/errors.hpp"
#include "addcomb/simd/kernels.hpp"

namespace addcomb::simd {
namespace {

bool cpu_has_avx2() noexcept {
#if defined(__x86_64__) || defined(__i386__)
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
  return false;
#endif
}

Isa detect() noexcept {
  const bool avx2 = detail::avx2_kernels() != nullptr && cpu_has_avx2();
  if (const char* env = std::getenv("ADDCOMB_SIMD")) {
    std::string_view v(env);
    if (v == "scalar") return Isa::scalar;
    if (v == "avx2" && avx2) return Isa::avx2;
  }
  return avx2 ? Isa::avx2 : Isa::scalar;
}

std::atomic<const Kernels*>& active() noexcept {
  static std::atomic<const Kernels*> table{detect() == Isa::avx2 ? detail::avx2_kernels()
                                                                 : &detail::scalar_kernels};
  return table;
}

}  // namespace

const char* isa_name(Isa isa) noexcept { return isa == Isa::avx2 ? "avx2" : "scalar"; }

bool isa_available(Isa isa) noexcept {
  if (isa == Isa::scalar) return true;
  return detail::avx2_kernels() != nullptr && cpu_has_avx2();
}

Isa active_isa() noexcept { return active().load()->isa; }

void force_isa(Isa isa) { active().store(&kernels_for(isa)); }

const Kernels& kernels() noexcept { return *active().load(std::memory_order_relaxed); }

const Kernels& kernels_for(Isa isa) {
  if (!isa_available(isa)) throw InvalidArgument(std::string("ISA not available: ") + isa_name(isa));
  return isa == Isa::avx2 ? *detail::avx2_kernels() : detail::scalar_kernels;
}

}  // namespace addcomb::simd
