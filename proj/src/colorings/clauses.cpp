#include "addcomb/colorings/clauses.hpp"

#include <algorithm>

#include "addcomb/core/errors.hpp"

namespace addcomb::colorings {

ClauseSet::ClauseSet(int k, std::vector<Clause> clauses) : k_(k), clauses_(std::move(clauses)) {
  if (k < 1 || static_cast<std::size_t>(k) > simd::kMaxLanes)
    throw InvalidArgument("clause arity out of range: " + std::to_string(k));
  simd::PatternScan cur;
  cur.lane_count = static_cast<std::size_t>(k);
  std::size_t npairs = 0;
  for (const auto& c : clauses_) {
    if (c.pairs.empty()) throw InvalidArgument("empty clause");
    if (c.pairs.size() > simd::kMaxPairs) throw ResourceError("clause has too many pairs");
    for (auto [i, j] : c.pairs)
      if (i < 0 || j < 0 || i >= k || j >= k) throw InvalidArgument("clause index out of range");
    if (cur.clause_count == simd::kMaxClauses || npairs + c.pairs.size() > simd::kMaxPairs) {
      batches_.push_back(cur);
      cur.clause_count = 0;
      npairs = 0;
    }
    cur.clause_begin[cur.clause_count] = static_cast<std::uint16_t>(npairs);
    for (auto [i, j] : c.pairs) {
      cur.lhs[npairs] = static_cast<std::uint8_t>(i);
      cur.rhs[npairs] = static_cast<std::uint8_t>(j);
      ++npairs;
    }
    ++cur.clause_count;
    cur.clause_begin[cur.clause_count] = static_cast<std::uint16_t>(npairs);
  }
  if (cur.clause_count > 0) batches_.push_back(cur);
}

int ClauseSet::first_satisfied(std::span<const std::int32_t> colors) const {
  for (std::size_t c = 0; c < clauses_.size(); ++c) {
    bool all = true;
    for (auto [i, j] : clauses_[c].pairs)
      if (colors[static_cast<std::size_t>(i)] != colors[static_cast<std::size_t>(j)]) {
        all = false;
        break;
      }
    if (all) return static_cast<int>(c);
  }
  return -1;
}

std::int64_t ClauseSet::count_matches(std::span<const std::int32_t* const> lanes, std::int64_t count) const {
  if (batches_.empty() || count <= 0) return 0;
  const auto& kern = simd::kernels();
  if (batches_.size() == 1) {
    simd::PatternScan s = batches_[0];
    std::copy(lanes.begin(), lanes.end(), s.lanes.begin());
    return kern.count_matches(s, count);
  }
  // Several batches overlap; fall back to a per-position union.
  std::int64_t total = 0;
  std::vector<std::int32_t> tuple(static_cast<std::size_t>(k_));
  for (std::int64_t n = 0; n < count; ++n) {
    for (int i = 0; i < k_; ++i) tuple[static_cast<std::size_t>(i)] = lanes[static_cast<std::size_t>(i)][n];
    total += holds(tuple);
  }
  return total;
}

std::int64_t ClauseSet::first_match(std::span<const std::int32_t* const> lanes, std::int64_t count) const {
  if (batches_.empty() || count <= 0) return -1;
  const auto& kern = simd::kernels();
  std::int64_t best = -1;
  for (const auto& b : batches_) {
    simd::PatternScan s = b;
    std::copy(lanes.begin(), lanes.end(), s.lanes.begin());
    const std::int64_t limit = best < 0 ? count : best;
    const std::int64_t n = kern.first_match(s, limit);
    if (n >= 0) best = n;
  }
  return best;
}

ClauseSet symmetric_clauses(const core::PatternSpec& spec) {
  if (!core::is_symmetric(spec)) throw InvalidArgument("pattern " + spec.to_string() + " is not symmetric");
  const int k = static_cast<int>(spec.k());
  Clause c;
  for (int i = 0; i < k / 2; ++i) c.pairs.emplace_back(i, k - 1 - i);
  c.label = core::symmetric_pairing(k).to_string();
  return ClauseSet(k, {std::move(c)});
}

ClauseSet binomial_clauses(const core::PatternSpec& spec) {
  const int k = static_cast<int>(spec.k());
  std::vector<Clause> out;
  if (k % 2 == 0) {
    for (const auto& p : core::enumerate_pairings(spec)) out.push_back({p.pairs, "pairing " + p.to_string()});
  }
  const auto sys = core::a_binomial_system(spec);
  for (const auto& subset : core::zero_sum_subsets(sys, 3)) {
    Clause c;
    std::string label = "subset {";
    for (std::size_t t = 0; t < subset.size(); ++t) {
      if (t > 0) {
        c.pairs.emplace_back(subset[0], subset[t]);
        label += ",";
      }
      label += std::to_string(subset[t] + 1);
    }
    c.label = label + "}";
    out.push_back(std::move(c));
  }
  return ClauseSet(k, std::move(out));
}

ClauseSet monochromatic_clause(int k) {
  Clause c;
  for (int i = 1; i < k; ++i) c.pairs.emplace_back(0, i);
  c.label = "monochromatic";
  return ClauseSet(k, {std::move(c)});
}

ClauseSet abab_abba_clauses(bool include_abba) {
  std::vector<Clause> out{{{{0, 2}, {1, 3}}, "ABAB"}};
  if (include_abba) out.push_back({{{0, 3}, {1, 2}}, "ABBA"});
  return ClauseSet(4, std::move(out));
}

}  // namespace addcomb::colorings
