#include "addcomb/colorings/verify.hpp"

#include <array>
#include <numeric>

#include "addcomb/core/errors.hpp"
#include "addcomb/core/rational.hpp"

namespace addcomb::colorings {
namespace {

struct Hit {
  std::int64_t n = -1;
  std::int64_t d = 0;
  bool better_than(const Hit& o) const { return o.n < 0 || n < o.n || (n == o.n && d < o.d); }
};

Hit scan_cyclic(const Coloring& c, std::span<const std::int64_t> a, const ClauseSet& clauses) {
  const std::int64_t N = c.size();
  std::vector<std::int32_t> doubled(static_cast<std::size_t>(2 * N));
  std::copy(c.colors().begin(), c.colors().end(), doubled.begin());
  std::copy(c.colors().begin(), c.colors().end(), doubled.begin() + N);
  std::array<const std::int32_t*, simd::kMaxLanes> lanes{};
  Hit best;
  for (std::int64_t d = 1; d < N; ++d) {
    for (std::size_t i = 0; i < a.size(); ++i)
      lanes[i] = doubled.data() + core::mulmod(core::mod(a[i], N), d, N);
    const std::int64_t limit = best.n < 0 ? N : best.n + 1;
    const std::int64_t n = clauses.first_match(std::span(lanes.data(), a.size()), limit);
    if (n >= 0 && Hit{n, d}.better_than(best)) best = {n, d};
    if (best.n == 0) break;
  }
  return best;
}

Hit scan_interval(const Coloring& c, std::span<const std::int64_t> a, const ClauseSet& clauses) {
  const std::int64_t N = c.size();
  const std::int64_t W = a.back();
  const auto* base = c.colors().data();
  std::array<const std::int32_t*, simd::kMaxLanes> lanes{};
  Hit best;
  if (W == 0) return best;
  const std::int64_t dmax = (N - 1) / W;
  for (std::int64_t d = -dmax; d <= dmax; ++d) {
    if (d == 0) continue;
    const std::int64_t e = d < 0 ? -d : d;
    const std::int64_t count = N - W * e;
    const std::int64_t shift = d < 0 ? W * e : 0;  // n = n' + shift
    for (std::size_t i = 0; i < a.size(); ++i) lanes[i] = base + (d > 0 ? a[i] * e : (W - a[i]) * e);
    std::int64_t limit = count;
    if (best.n >= 0) limit = std::min(count, best.n - shift + 1);
    if (limit <= 0) continue;
    const std::int64_t np = clauses.first_match(std::span(lanes.data(), a.size()), limit);
    if (np >= 0 && Hit{np + shift, d}.better_than(best)) best = {np + shift, d};
  }
  return best;
}

Witness make_witness(const Coloring& c, std::span<const std::int64_t> a, const ClauseSet& clauses, Hit h,
                     std::string_view kind) {
  Witness w;
  w.kind = std::string(kind);
  w.n = h.n;
  w.d = h.d;
  w.pattern.assign(a.begin(), a.end());
  for (auto ai : a) {
    std::int64_t p = h.n + ai * h.d;
    if (c.ambient() == Ambient::cyclic) p = core::mod(p, c.size());
    w.points.push_back(p);
    w.colors.push_back(c[p]);
  }
  const int idx = clauses.first_satisfied(w.colors);
  if (idx >= 0) w.detail = clauses.clauses()[static_cast<std::size_t>(idx)].label;
  return w;
}

void require_even_k(int k) {
  if (k < 4 || k % 2 != 0) throw InvalidArgument("k must be even and >= 4, got " + std::to_string(k));
}

}  // namespace

Verdict find_pattern(const Coloring& c, const core::PatternSpec& spec, const ClauseSet& clauses,
                     std::string_view kind) {
  if (static_cast<std::size_t>(clauses.k()) != spec.k()) throw InvalidArgument("clause arity does not match pattern");
  if (clauses.empty()) return std::nullopt;
  const auto norm = spec.normalized();
  const auto a = norm.a();
  const Hit h = c.ambient() == Ambient::cyclic ? scan_cyclic(c, a, clauses) : scan_interval(c, a, clauses);
  if (h.n < 0) return std::nullopt;
  return make_witness(c, a, clauses, h, kind);
}

Verdict verify_symmetric_ap_free(const Coloring& c, int k) {
  require_even_k(k);
  const auto spec = core::PatternSpec::arithmetic(k);
  return find_pattern(c, spec, symmetric_clauses(spec), "symmetric-ap");
}

Verdict verify_sym_a_ap_free(const Coloring& c, const core::PatternSpec& spec) {
  return find_pattern(c, spec, symmetric_clauses(spec), "symmetric-a-ap");
}

Verdict verify_binomial_pattern_free(const Coloring& c, const core::PatternSpec& spec) {
  return find_pattern(c, spec, binomial_clauses(spec), "binomial-pattern");
}

Verdict verify_mono_pattern_free(const Coloring& c, int k) {
  if (k < 3) throw InvalidArgument("k must be >= 3");
  const std::int64_t N = c.size();
  const bool cyclic = c.ambient() == Ambient::cyclic;
  for (std::int64_t n1 = 0; n1 < N; ++n1) {
    for (std::int64_t n2 = cyclic ? n1 : n1 + 1; n2 < N; ++n2) {
      if (c[n2] != c[n1]) continue;
      std::int64_t best = -1;
      std::int64_t best_a = 0, best_b = 0;
      for (std::int64_t a = 1; a < k - 1; ++a) {
        for (std::int64_t b = 1; a + b <= k - 1; ++b) {
          if (cyclic) {
            // (a+b) n3 = a n1 + b n2 (mod N)
            const std::int64_t s = a + b;
            const std::int64_t rhs = core::mod(a * n1 + b * n2, N);
            const std::int64_t g = std::gcd(s, N);
            if (rhs % g != 0) continue;
            const std::int64_t Ng = N / g;
            const std::int64_t n3 = core::mulmod(*core::modinv(s / g, Ng), (rhs / g) % Ng, Ng);
            for (std::int64_t x = n3; x < N; x += Ng) {
              if (best >= 0 && x >= best) break;
              if (c[x] != c[n1] || (n1 == n2 && n2 == x)) continue;
              best = x;
              best_a = a;
              best_b = b;
              break;
            }
          } else {
            const std::int64_t num = a * n1 + b * n2;
            if (num % (a + b) != 0) continue;
            const std::int64_t x = num / (a + b);
            if (c[x] != c[n1]) continue;
            if (best < 0 || x < best) {
              best = x;
              best_a = a;
              best_b = b;
            }
          }
        }
      }
      if (best >= 0) {
        Witness w;
        w.kind = "mono-k-pattern";
        w.points = {n1, n2, best};
        w.colors = {c[n1], c[n2], c[best]};
        w.detail = "a=" + std::to_string(best_a) + ", b=" + std::to_string(best_b);
        return w;
      }
    }
  }
  return std::nullopt;
}

Verdict verify_abab_abba_free(const Coloring& c, int a_bound) {
  if (a_bound < 4) throw InvalidArgument("a_bound must be >= 4");
  const ClauseSet abab = abab_abba_clauses(false);
  const ClauseSet both = abab_abba_clauses(true);
  Verdict best;
  // Translation invariance: 0 < a_1 < ... < a_4 <= a_bound normalizes to
  // (0, b2, b3, b4) with b4 <= a_bound - 1.
  for (std::int64_t b2 = 1; b2 <= a_bound - 3; ++b2)
    for (std::int64_t b3 = b2 + 1; b3 <= a_bound - 2; ++b3)
      for (std::int64_t b4 = b3 + 1; b4 <= a_bound - 1; ++b4) {
        const core::PatternSpec spec({0, b2, b3, b4});
        const bool asym = b4 != b2 + b3;
        auto v = find_pattern(c, spec, asym ? both : abab, "abab-abba");
        if (v && (!best || v->n < best->n || (v->n == best->n && v->d < best->d))) best = std::move(v);
        if (best && c.ambient() == Ambient::cyclic && best->n == 0 && best->d == 1) return best;
      }
  return best;
}

bool witness_reproduces(const Coloring& c, const Witness& w, const ClauseSet& clauses) {
  if (w.d == 0 || w.pattern.size() != static_cast<std::size_t>(clauses.k())) return false;
  std::vector<std::int32_t> col;
  for (auto ai : w.pattern) {
    std::int64_t p = w.n + ai * w.d;
    if (c.ambient() == Ambient::cyclic) p = core::mod(p, c.size());
    else if (p < 0 || p >= c.size()) return false;
    col.push_back(c[p]);
  }
  return clauses.holds(col);
}

}  // namespace addcomb::colorings
