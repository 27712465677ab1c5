#include "addcomb/colorings/naive.hpp"

#include <functional>

#include "addcomb/core/errors.hpp"

namespace addcomb::colorings::naive {
namespace {

using Predicate = std::function<bool(const std::vector<std::int32_t>&)>;

std::int64_t wrap(std::int64_t v, std::int64_t m) {
  v %= m;
  return v < 0 ? v + m : v;
}

// Visits (n, d) in lex order and returns the first tuple satisfying pred.
Verdict first_tuple(const Coloring& c, const core::PatternSpec& spec, const Predicate& pred, const char* kind) {
  const auto a = spec.normalized();
  const std::int64_t N = c.size();
  const bool cyclic = c.ambient() == Ambient::cyclic;
  std::vector<std::int64_t> pts(a.k());
  std::vector<std::int32_t> col(a.k());
  for (std::int64_t n = 0; n < N; ++n) {
    for (std::int64_t d = cyclic ? 1 : -(N - 1); d < N; ++d) {
      if (d == 0) continue;
      bool inside = true;
      for (std::size_t i = 0; i < a.k(); ++i) {
        std::int64_t p = n + a[i] * d;
        if (cyclic) p = wrap(p, N);
        else if (p < 0 || p >= N) inside = false;
        pts[i] = p;
      }
      if (!inside) continue;
      for (std::size_t i = 0; i < a.k(); ++i) col[i] = c[pts[i]];
      if (pred(col)) {
        Witness w;
        w.kind = kind;
        w.n = n;
        w.d = d;
        w.pattern.assign(a.a().begin(), a.a().end());
        w.points = pts;
        w.colors = col;
        return w;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

Verdict symmetric_ap(const Coloring& c, const core::PatternSpec& spec) {
  if (!core::is_symmetric(spec)) throw InvalidArgument("pattern is not symmetric");
  const std::size_t k = spec.k();
  return first_tuple(
      c, spec,
      [k](const std::vector<std::int32_t>& col) {
        for (std::size_t i = 0; i < k / 2; ++i)
          if (col[i] != col[k - 1 - i]) return false;
        return true;
      },
      "symmetric-ap");
}

Verdict binomial_pattern(const Coloring& c, const core::PatternSpec& spec) {
  const std::size_t k = spec.k();
  std::vector<core::Pairing> pairings;
  if (k % 2 == 0) pairings = core::enumerate_pairings(spec);
  // Zero-sum subsets of the reciprocals 1/c_i, recomputed here in rationals.
  const auto cs = core::a_coefficients(spec);
  std::vector<std::vector<std::size_t>> subsets;
  for (std::uint64_t mask = 1; mask < (1ULL << k); ++mask) {
    if (__builtin_popcountll(mask) < 3) continue;
    core::Rational s = 0;
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1) {
        s += core::Rational(1) / core::Rational(cs[i]);
        idx.push_back(i);
      }
    if (s == 0) subsets.push_back(std::move(idx));
  }
  return first_tuple(
      c, spec,
      [&](const std::vector<std::int32_t>& col) {
        for (const auto& p : pairings) {
          bool ok = true;
          for (std::size_t i = 0; i < k && ok; ++i) ok = col[i] == col[static_cast<std::size_t>(p.partner(static_cast<int>(i)))];
          if (ok) return true;
        }
        for (const auto& idx : subsets) {
          bool ok = true;
          for (auto i : idx) ok = ok && col[i] == col[idx[0]];
          if (ok) return true;
        }
        return false;
      },
      "binomial-pattern");
}

Verdict abab_abba(const Coloring& c, int a_bound) {
  if (a_bound < 4) throw InvalidArgument("a_bound must be >= 4");
  Verdict best;
  for (std::int64_t a1 = 1; a1 <= a_bound; ++a1)
    for (std::int64_t a2 = a1 + 1; a2 <= a_bound; ++a2)
      for (std::int64_t a3 = a2 + 1; a3 <= a_bound; ++a3)
        for (std::int64_t a4 = a3 + 1; a4 <= a_bound; ++a4) {
          const bool asym = a1 + a4 != a2 + a3;
          auto v = first_tuple(
              c, core::PatternSpec({a1, a2, a3, a4}),
              [asym](const std::vector<std::int32_t>& col) {
                return (col[0] == col[2] && col[1] == col[3]) || (asym && col[0] == col[3] && col[1] == col[2]);
              },
              "abab-abba");
          if (v && (!best || v->n < best->n || (v->n == best->n && v->d < best->d))) best = std::move(v);
        }
  return best;
}

Verdict mono_pattern(const Coloring& c, int k) {
  if (k < 3) throw InvalidArgument("k must be >= 3");
  const std::int64_t N = c.size();
  const bool cyclic = c.ambient() == Ambient::cyclic;
  for (std::int64_t n1 = 0; n1 < N; ++n1)
    for (std::int64_t n2 = 0; n2 < N; ++n2)
      for (std::int64_t n3 = 0; n3 < N; ++n3) {
        if (n1 == n2 && n2 == n3) continue;
        if (c[n1] != c[n2] || c[n2] != c[n3]) continue;
        for (std::int64_t a = 1; a <= k - 2; ++a)
          for (std::int64_t b = 1; a + b <= k - 1; ++b) {
            const std::int64_t lhs = a * n1 + b * n2 - (a + b) * n3;
            if (cyclic ? lhs % N == 0 : lhs == 0) {
              Witness w;
              w.kind = "mono-k-pattern";
              w.points = {n1, n2, n3};
              w.colors = {c[n1], c[n2], c[n3]};
              return w;
            }
          }
      }
  return std::nullopt;
}

}  // namespace addcomb::colorings::naive
