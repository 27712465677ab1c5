#include "addcomb/torus/cells.hpp"

#include <algorithm>
#include <map>

namespace addcomb::torus {
namespace {

using core::Rational;

std::int64_t floor_of(const Rational& v) {
  const core::BigInt num = boost::multiprecision::numerator(v);
  const core::BigInt den = boost::multiprecision::denominator(v);
  core::BigInt q = num / den;
  if (q * den > num) --q;
  return static_cast<std::int64_t>(q);
}

Rational frac_of(const Rational& v) { return v - floor_of(v); }

void add_grid(std::vector<Rational>& out, std::int64_t d) {
  if (d < 0) d = -d;
  for (std::int64_t n = 0; n <= d; ++n) out.push_back(Rational(n, d == 0 ? 1 : d));
}

}  // namespace

std::vector<CellPiece> cell_decomposition(const core::PatternSpec& spec) {
  const auto a = spec.a();
  const std::size_t k = a.size();
  // Vertices of the arrangement have t with a_i t or (a_i - a_j) t integral;
  // between consecutive such t every piece has linear cross-section length.
  std::vector<Rational> ts{Rational(0), Rational(1)};
  for (std::size_t i = 0; i < k; ++i) {
    if (a[i] != 0) add_grid(ts, a[i]);
    for (std::size_t j = i + 1; j < k; ++j) add_grid(ts, a[j] - a[i]);
  }
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());

  std::map<std::vector<std::int64_t>, Rational> pieces;
  std::vector<std::int64_t> f(k);
  for (std::size_t ti = 0; ti + 1 < ts.size(); ++ti) {
    const Rational dt = ts[ti + 1] - ts[ti];
    const Rational tm = (ts[ti] + ts[ti + 1]) / 2;
    std::vector<Rational> cuts{Rational(0), Rational(1)};
    for (std::size_t i = 0; i < k; ++i) cuts.push_back(frac_of(-a[i] * tm));
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    for (std::size_t ci = 0; ci + 1 < cuts.size(); ++ci) {
      const Rational sm = (cuts[ci] + cuts[ci + 1]) / 2;
      for (std::size_t i = 0; i < k; ++i) f[i] = floor_of(sm + a[i] * tm);
      pieces[f] += (cuts[ci + 1] - cuts[ci]) * dt;
    }
  }
  std::vector<CellPiece> out;
  out.reserve(pieces.size());
  for (auto& [floors, area] : pieces) out.push_back({floors, area});
  return out;
}

}  // namespace addcomb::torus
