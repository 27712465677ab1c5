#include "addcomb/sets/solution_free.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "addcomb/core/errors.hpp"
#include "addcomb/core/rational.hpp"
#include "addcomb/simd/kernels.hpp"

namespace addcomb::sets {
namespace {

using Tuple = std::vector<std::int64_t>;

// Trivial: within every group of equal values the coefficients sum to zero.
bool trivial(std::span<const std::int64_t> coeffs, std::span<const std::int64_t> n) {
  for (std::size_t i = 0; i < n.size(); ++i) {
    bool first = true;
    for (std::size_t j = 0; j < i && first; ++j) first = n[j] != n[i];
    if (!first) continue;
    std::int64_t s = 0;
    for (std::size_t j = i; j < n.size(); ++j)
      if (n[j] == n[i]) s += coeffs[j];
    if (s != 0) return false;
  }
  return true;
}

std::uint64_t checked_count(std::size_t base, std::size_t exp, std::uint64_t budget) {
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && v > budget / base) throw ResourceError("solution search exceeds the budget");
    v *= base;
  }
  return v;
}

// Lex-least tuple over values with sum coeffs . n = 0 (mod m) that is bad.
template <class Bad>
std::optional<Tuple> least_solution(std::span<const std::int64_t> values, std::span<const std::int64_t> coeffs,
                                    std::int64_t m, std::uint64_t budget, Bad bad) {
  const std::size_t k = coeffs.size();
  const std::size_t s = values.size();
  if (k == 0 || s == 0) return std::nullopt;
  const std::size_t h = k / 2;
  const std::uint64_t nleft = checked_count(s, h, budget);
  const std::uint64_t nright = checked_count(s, k - h, budget);

  auto decode = [&](std::uint64_t code, std::size_t len, std::size_t offset, Tuple& out) {
    // Most significant digit first so code order is lex order.
    for (std::size_t i = len; i-- > 0;) {
      out[offset + i] = values[code % s];
      code /= s;
    }
  };
  auto partial = [&](std::uint64_t code, std::size_t len, std::size_t offset) {
    Tuple t(k);
    decode(code, len, offset, t);
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < len; ++i)
      sum = core::mod(sum + core::mulmod(core::mod(coeffs[offset + i], m), core::mod(t[offset + i], m), m), m);
    return sum;
  };

  std::vector<std::pair<std::int64_t, std::uint64_t>> left(nleft);
  for (std::uint64_t c = 0; c < nleft; ++c) left[c] = {partial(c, h, 0), c};
  std::sort(left.begin(), left.end());

  std::optional<Tuple> best;
  Tuple t(k);
  for (std::uint64_t rc = 0; rc < nright; ++rc) {
    const std::int64_t want = core::mod(-partial(rc, k - h, h), m);
    auto lo = std::lower_bound(left.begin(), left.end(), std::pair{want, std::uint64_t{0}});
    for (auto it = lo; it != left.end() && it->first == want; ++it) {
      decode(it->second, h, 0, t);
      decode(rc, k - h, h, t);
      if (best && !(t < *best)) continue;
      if (bad(t)) best = t;
    }
  }
  return best;
}

}  // namespace

std::optional<std::vector<std::int64_t>> verify_solution_free(const ResidueSet& s, const core::BinomialSystem& sys,
                                                              SolutionMode mode, std::uint64_t budget) {
  const auto coeffs = sys.coefficients();
  if (mode == SolutionMode::abba_only && coeffs.size() != 4)
    throw InvalidArgument("abba_only mode needs a 4-term system");
  return least_solution(s.elements(), coeffs, s.modulus(), budget, [&](const Tuple& t) {
    if (mode == SolutionMode::abba_only) return !(t[0] == t[3] && t[1] == t[2]);
    return !trivial(coeffs, t);
  });
}

namespace {

// Achievable sums R_Q = { sum_{i in Q} e_i n_i mod m : n_i in S } for every
// position subset Q, as m-bit rings.
class ReachableSums {
 public:
  ReachableSums(std::vector<std::int64_t> coeffs, std::int64_t m)
      : e_(std::move(coeffs)), m_(m), k_(e_.size()), words_(simd::words_for(static_cast<std::uint64_t>(m))) {
    const std::size_t subsets = std::size_t{1} << k_;
    bits_.assign(subsets * words_, 0);
    coef_sum_.assign(subsets, 0);
    for (std::size_t q = 0; q < subsets; ++q)
      for (std::size_t i = 0; i < k_; ++i)
        if (q >> i & 1) coef_sum_[q] += e_[i];
    row(0)[0] = 1;  // R_empty = {0}
  }

  bool has(std::size_t q, std::int64_t v) const {
    const auto b = static_cast<std::uint64_t>(v);
    return row(q)[b / 64] >> (b % 64) & 1;
  }
  std::int64_t coef_sum(std::size_t q) const { return coef_sum_[q]; }

  // R_Q(S + s) = union over T subset of Q of (E_T s + R_{Q \ T}(S)).
  void insert(std::int64_t s) {
    const auto& kern = simd::kernels();
    const std::size_t subsets = std::size_t{1} << k_;
    std::vector<std::uint64_t> next(bits_.size(), 0);
    for (std::size_t q = 1; q < subsets; ++q) {
      std::uint64_t* dst = next.data() + q * words_;
      for (std::size_t t = q;; t = (t - 1) & q) {
        const std::int64_t shift = core::mulmod(core::mod(coef_sum_[t], m_), s, m_);
        kern.or_rotated(dst, row(q & ~t), static_cast<std::uint64_t>(m_), static_cast<std::uint64_t>(shift));
        if (t == 0) break;
      }
    }
    std::copy(bits_.begin(), bits_.begin() + static_cast<std::ptrdiff_t>(words_), next.begin());
    bits_.swap(next);
  }

 private:
  const std::uint64_t* row(std::size_t q) const { return bits_.data() + q * words_; }
  std::uint64_t* row(std::size_t q) { return bits_.data() + q * words_; }

  std::vector<std::int64_t> e_;
  std::int64_t m_;
  std::size_t k_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
  std::vector<std::int64_t> coef_sum_;
};

}  // namespace

GreedyResult greedy_solution_free_set(const core::BinomialSystem& sys, std::int64_t m, std::size_t r) {
  if (m < 2) throw InvalidArgument("modulus must be >= 2");
  const auto e = sys.coefficients();
  const std::size_t k = e.size();
  if (k > 16) throw ResourceError("greedy search supports k <= 16");
  const std::size_t full = (std::size_t{1} << k) - 1;
  ReachableSums reach(e, m);

  // Zero-sum proper position sets P: a solution placing x on P is trivial
  // only if the rest is, so such P never depend on x.
  std::vector<std::size_t> zero_sum;
  for (std::size_t p = 1; p < full; ++p)
    if (reach.coef_sum(p) == 0) zero_sum.push_back(p);

  std::vector<std::int64_t> chosen;
  for (std::int64_t x = 0; x < m && chosen.size() < r; ++x) {
    bool bad = false;
    for (std::size_t p = 1; p <= full && !bad; ++p) {
      const std::int64_t ep = reach.coef_sum(p);
      if (ep == 0) continue;
      const std::int64_t target = core::mod(-core::mulmod(core::mod(ep, m), x, m), m);
      bad = reach.has(full & ~p, target);
    }
    if (bad) continue;
    // Solutions with x on a zero-sum P are nontrivial iff the complement is
    // a nontrivial solution of its own subsystem within chosen + {x}.
    std::vector<std::int64_t> trial = chosen;
    trial.push_back(x);
    for (std::size_t p : zero_sum) {
      std::vector<std::int64_t> sub;
      for (std::size_t i = 0; i < k; ++i)
        if (!(p >> i & 1)) sub.push_back(e[i]);
      const auto hit = least_solution(trial, sub, m, kDefaultVerifyBudget,
                                      [&](const Tuple& t) { return !trivial(sub, t); });
      if (hit) {
        bad = true;
        break;
      }
    }
    if (bad) continue;
    chosen.push_back(x);
    reach.insert(x);
  }
  const bool ok = chosen.size() == r;
  return {ResidueSet(m, std::move(chosen)), ok};
}

ResidueSet base9_set(std::size_t r, std::int64_t m) {
  const auto rr = static_cast<std::int64_t>(r);
  if (rr > 0 && m <= 36 * rr * rr)
    throw PreconditionError("base-9 set needs m > 36 r^2 = " + std::to_string(36 * rr * rr));
  std::vector<std::int64_t> out;
  for (std::int64_t j = 1; static_cast<std::size_t>(out.size()) < r; ++j) {
    std::int64_t x = j, v = 0, place = 1;
    while (x > 0) {
      v += (x % 3) * place;
      x /= 3;
      place *= 9;
    }
    out.push_back(v);
  }
  return ResidueSet(m, std::move(out));
}

GreedyFit fit_greedy_constant(const core::BinomialSystem& sys, std::size_t r_max, std::int64_t m_limit) {
  GreedyFit fit;
  fit.min_modulus.assign(r_max + 1, 0);
  const double power = static_cast<double>(sys.k()) - 1.0;
  for (std::size_t r = 1; r <= r_max; ++r) {
    std::int64_t m = std::max<std::int64_t>(2, fit.min_modulus[r - 1]);
    while (m <= m_limit && !greedy_solution_free_set(sys, m, r).success) ++m;
    if (m > m_limit) throw ResourceError("greedy did not reach r = " + std::to_string(r) + " below m_limit");
    fit.min_modulus[r] = m;
    fit.constant = std::max(fit.constant, static_cast<double>(m) / std::pow(static_cast<double>(r), power));
  }
  return fit;
}

}  // namespace addcomb::sets
