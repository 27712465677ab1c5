#pragma once

// Reference scanners: plain O(N^2 k) loops with no SIMD, no doubled arrays
// and predicates evaluated directly. Used to cross-check the verifiers and
// to re-verify extracted colorings.

#include "addcomb/colorings/coloring.hpp"
#include "addcomb/core/pattern.hpp"

namespace addcomb::colorings::naive {

// Same witness convention as the fast verifiers: lex-least (n, d), pattern
// normalized so a_1 = 0.
Verdict symmetric_ap(const Coloring& c, const core::PatternSpec& spec);
Verdict binomial_pattern(const Coloring& c, const core::PatternSpec& spec);
Verdict abab_abba(const Coloring& c, int a_bound);
// O(N^3 k^2) triple scan; lex-least (n1, n2, n3).
Verdict mono_pattern(const Coloring& c, int k);

}  // namespace addcomb::colorings::naive
