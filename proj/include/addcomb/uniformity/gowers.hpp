#pragma once

#include <cstdint>
#include <span>

#include "addcomb/uniformity/grid_function.hpp"

namespace addcomb::uniformity {

inline constexpr std::int64_t kDefaultU3Cap = 8192;

// ||f||_{U^2}^4 = sum_r |fhat(r)|^4.
double gowers_u2(std::span<const double> f);
// ||f||_{U^3}^8 = E_h ||f(.) f(. + h)||_{U^2}^4; ResourceError above cap.
double gowers_u3(std::span<const double> f, std::int64_t cap = kDefaultU3Cap);

// s in {2, 3}; center subtracts the mean first.
double gowers_norm(const GridFunction& f, int s, bool center, std::int64_t u3_cap = kDefaultU3Cap);

namespace naive {
// Straight from the derivative definition: O(N^3) and O(N^4).
double gowers_u2(std::span<const double> f);
double gowers_u3(std::span<const double> f);
}  // namespace naive

}  // namespace addcomb::uniformity
