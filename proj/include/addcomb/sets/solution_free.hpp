#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "addcomb/core/pattern.hpp"
#include "addcomb/sets/residue_set.hpp"

namespace addcomb::sets {

enum class SolutionMode {
  all_nontrivial,  // any solution that is not trivial
  abba_only,       // k = 4: any solution other than n_1 = n_4, n_2 = n_3
};

inline constexpr std::uint64_t kDefaultVerifyBudget = 50'000'000;

// Lexicographically least offending tuple (values from S), or nullopt.
// Meet-in-the-middle over the two halves of the positions; throws
// ResourceError if |S|^ceil(k/2) exceeds the budget.
std::optional<std::vector<std::int64_t>> verify_solution_free(const ResidueSet& s, const core::BinomialSystem& sys,
                                                              SolutionMode mode,
                                                              std::uint64_t budget = kDefaultVerifyBudget);

struct GreedyResult {
  ResidueSet set;
  bool success = false;  // false: the scan of 0..m-1 ended short of r
};

// Scans 0, 1, ..., m-1 and keeps a candidate iff the enlarged set still has
// no nontrivial solution mod m.
GreedyResult greedy_solution_free_set(const core::BinomialSystem& sys, std::int64_t m, std::size_t r);

// First r positive integers with base-9 digits in {0, 1, 2}. Throws
// PreconditionError unless m > 36 r^2.
ResidueSet base9_set(std::size_t r, std::int64_t m);

struct GreedyFit {
  std::vector<std::int64_t> min_modulus;  // index r: least m at which greedy reaches r
  double constant = 0;                    // max_r min_modulus[r] / r^(k-1)
};

// Empirical constant in "greedy succeeds once m >= C r^(k-1)".
GreedyFit fit_greedy_constant(const core::BinomialSystem& sys, std::size_t r_max, std::int64_t m_limit);

}  // namespace addcomb::sets
