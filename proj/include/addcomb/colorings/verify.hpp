#pragma once

// Pattern-freeness verifiers. Each returns nullopt when the coloring is free
// of the pattern, otherwise the witness with lexicographically least (n, d).
//
// Cyclic ambient: d ranges over 1..N-1 and points are taken mod N (they may
// coincide). Interval ambient: d ranges over nonzero integers with every
// point inside [0, N).

#include <string_view>

#include "addcomb/colorings/clauses.hpp"
#include "addcomb/colorings/coloring.hpp"
#include "addcomb/core/pattern.hpp"

namespace addcomb::colorings {

// Lex-least (n, d) such that the tuple (n + a_i d) satisfies some clause.
Verdict find_pattern(const Coloring& c, const core::PatternSpec& spec, const ClauseSet& clauses,
                     std::string_view kind);

// k even, k >= 4; InvalidArgument otherwise.
Verdict verify_symmetric_ap_free(const Coloring& c, int k);
// spec symmetric; InvalidArgument otherwise.
Verdict verify_sym_a_ap_free(const Coloring& c, const core::PatternSpec& spec);
// Witness points are the triple (n1, n2, n3), lex-least; n and d are unused.
Verdict verify_mono_pattern_free(const Coloring& c, int k);
Verdict verify_binomial_pattern_free(const Coloring& c, const core::PatternSpec& spec);
// All 0 < a_1 < a_2 < a_3 < a_4 <= a_bound; patterns are reported normalized.
Verdict verify_abab_abba_free(const Coloring& c, int a_bound);

// Re-evaluates a witness from scratch against the coloring.
bool witness_reproduces(const Coloring& c, const Witness& w, const ClauseSet& clauses);

}  // namespace addcomb::colorings
