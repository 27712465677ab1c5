#pragma once

#include <cstdint>

#include "addcomb/colorings/coloring.hpp"

namespace addcomb::colorings {

// Largest ambient size any construction here will materialize.
inline constexpr std::int64_t kMaxConstructedSize = 100'000'000;

// Colors n in Z/N^ell Z digit by digit in base N (least significant first):
// id = 1 + sum_j (c(n_j) - 1) r^j. Throws ResourceError past kMaxConstructedSize.
Coloring tensor_power(const Coloring& c, int ell);

// Pairs (c1(n), c2(n)) relabeled by first appearance. Throws InvalidArgument
// on ambient or size mismatch.
Coloring product_coloring(const Coloring& c1, const Coloring& c2);

// Z/M^m Z with n read as base-M digits (n_1, ..., n_m); color is the pair
// (n_1^2 + ... + n_m^2 + 1, (n_i mod a_bound!)_i), relabeled. Free of ABAB and
// asymmetric ABBA patterns with a_4 <= a_bound. Throws PreconditionError
// unless gcd(M, a_bound!) = 1.
Coloring mod_behrend_coloring(std::int64_t M, int m, int a_bound);

// copies disjoint-color copies of an interval coloring laid end to end as a
// coloring of Z/(copies N)Z.
Coloring copies_to_cyclic(const Coloring& c, int copies);

}  // namespace addcomb::colorings
