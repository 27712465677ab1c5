#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace addcomb::uniformity {

struct Monomial {
  std::int64_t coeff = 0;
  std::vector<int> exponents;  // one per variable
};

// Integer polynomial in 1 or 2 variables n1, n2 ("n" is n1).
struct Polynomial {
  int vars = 1;
  std::vector<Monomial> terms;

  // e.g. "n^2", "3*n1^2*n2 - n2 + 5".
  static Polynomial parse(std::string_view text);
  // P(n) mod N, exact.
  std::int64_t eval_mod(std::span<const std::int64_t> n, std::int64_t N) const;
  std::string to_string() const;
};

inline constexpr std::uint64_t kDefaultWeylBudget = 400'000'000ULL;

// N^{-s} sum over (Z/NZ)^s of e(P(n)/N); phases come from an exact residue.
std::complex<double> weyl_sum(const Polynomial& P, std::int64_t N, std::uint64_t budget = kDefaultWeylBudget);

}  // namespace addcomb::uniformity
