#include "addcomb/torus/torus_set.hpp"

#include <cmath>

#include "addcomb/core/errors.hpp"

namespace addcomb::torus {

bool TorusSet::contains(double x, double y) const {
  const std::int32_t j = base.color_at(x);
  const double yy = y - std::floor(y);
  const double lo = static_cast<double>(s[static_cast<std::size_t>(j - 1)]) / static_cast<double>(m);
  return yy >= lo && yy < lo + core::to_double(w);
}

bool TorusSet::contains(const core::Rational& x, const core::Rational& y) const {
  const std::int32_t j = base.color_at(x);
  const core::BigInt num = boost::multiprecision::numerator(y);
  const core::BigInt den = boost::multiprecision::denominator(y);
  core::BigInt fl = num / den;
  if (fl * den > num) --fl;
  const core::Rational yy = y - fl;
  const core::Rational lo(s[static_cast<std::size_t>(j - 1)], m);
  return yy >= lo && yy < lo + w;
}

core::Rational TorusSet::slice_measure(const core::Rational& x) const {
  const std::int32_t j = base.color_at(x);
  if (static_cast<std::size_t>(j) > s.size()) throw InvalidArgument("color without a y-interval");
  return w;
}

bool TorusSet::marginal_invariant() const {
  if (m < 1 || w <= 0 || w * m > 1) return false;
  if (s.size() < static_cast<std::size_t>(base.r())) return false;
  for (auto v : s)
    if (v < 0 || v >= m) return false;
  return true;
}

core::Rational certificate_width(const core::BinomialSystem& sys, std::int64_t m) {
  if (m < 1) throw InvalidArgument("modulus must be >= 1");
  return core::Rational(1) / (core::BigInt(2) * m * sys.l1_norm());
}

namespace {

TorusSet make_set(const TorusColoring& phi, const sets::ResidueSet& S, core::Rational w) {
  if (S.size() < static_cast<std::size_t>(phi.r()))
    throw InvalidArgument("set has " + std::to_string(S.size()) + " elements, coloring uses " +
                          std::to_string(phi.r()) + " colors");
  TorusSet A{phi, S.modulus(), std::move(w), {}};
  A.s.assign(S.elements().begin(), S.elements().begin() + phi.r());
  return A;
}

}  // namespace

TorusSet build_torus_set(const TorusColoring& phi, const sets::ResidueSet& S, int k) {
  if (k < 1 || k > 62) throw InvalidArgument("k out of range");
  return make_set(phi, S, core::Rational(1) / (core::BigInt(S.modulus()) << k));
}

TorusSet build_torus_set(const TorusColoring& phi, const sets::ResidueSet& S, const core::BinomialSystem& sys) {
  return make_set(phi, S, certificate_width(sys, S.modulus()));
}

Certificate lambda_tilde_certificate(const TorusColoring& phi, const sets::ResidueSet& S,
                                     const core::PatternSpec& spec, std::uint64_t budget, unsigned workers) {
  const auto A = build_torus_set(phi, S, core::a_binomial_system(spec));
  Certificate c;
  c.width = A.w;
  c.epsilon = pattern_probability_exact(phi, spec, colorings::binomial_clauses(spec), budget, workers);
  c.bound = c.epsilon;
  for (std::size_t i = 1; i < spec.k(); ++i) c.bound *= c.width;
  return c;
}

Estimate lambda_tilde_mc(const TorusSet& A, const core::PatternSpec& spec, std::uint64_t samples, std::uint64_t seed,
                         unsigned workers) {
  return lambda_tilde_mc([&A](double x, double y) { return A(x, y); }, spec, samples, seed, workers);
}

}  // namespace addcomb::torus
