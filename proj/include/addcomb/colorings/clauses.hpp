#pragma once

// Color predicates on a k-tuple of positions: a disjunction of clauses, each
// a conjunction of equalities color(i) == color(j). Symmetric colorings,
// pairings, monochromatic subsets and ABAB/ABBA all reduce to this form.

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "addcomb/core/pattern.hpp"
#include "addcomb/simd/kernels.hpp"

namespace addcomb::colorings {

struct Clause {
  std::vector<std::pair<int, int>> pairs;  // 0-based tuple indices
  std::string label;
};

class ClauseSet {
 public:
  ClauseSet() = default;
  ClauseSet(int k, std::vector<Clause> clauses);

  int k() const noexcept { return k_; }
  std::span<const Clause> clauses() const noexcept { return clauses_; }
  bool empty() const noexcept { return clauses_.empty(); }

  // Index of the first clause satisfied by the colors, or -1.
  int first_satisfied(std::span<const std::int32_t> colors) const;
  bool holds(std::span<const std::int32_t> colors) const { return first_satisfied(colors) >= 0; }

  // Scans n in [0, count), lane i reading lanes[i][n].
  std::int64_t count_matches(std::span<const std::int32_t* const> lanes, std::int64_t count) const;
  std::int64_t first_match(std::span<const std::int32_t* const> lanes, std::int64_t count) const;

 private:
  int k_ = 0;
  std::vector<Clause> clauses_;
  std::vector<simd::PatternScan> batches_;  // lanes filled in per call
};

// One clause: pairs (i, k-1-i). Requires a symmetric spec.
ClauseSet symmetric_clauses(const core::PatternSpec& spec);
// Clause (a) for every pairing (k even) and clause (b) for every zero-sum
// subset of size >= 3 of the pattern's binomial system.
ClauseSet binomial_clauses(const core::PatternSpec& spec);
// All k positions share a color.
ClauseSet monochromatic_clause(int k);
// On 4-tuples: ABAB, and ABBA only when asymmetric is true.
ClauseSet abab_abba_clauses(bool include_abba);

}  // namespace addcomb::colorings
