#pragma once

#include <cstdint>
#include <vector>

#include "addcomb/core/pattern.hpp"
#include "addcomb/core/rational.hpp"
#include "addcomb/sets/residue_set.hpp"
#include "addcomb/torus/monte_carlo.hpp"
#include "addcomb/torus/probability.hpp"
#include "addcomb/torus/torus_coloring.hpp"

namespace addcomb::torus {

// A = {(x, y) : y in [s_j/m, s_j/m + w) with j = Phi(x)}.
struct TorusSet {
  TorusColoring base;
  std::int64_t m = 1;
  core::Rational w;
  std::vector<std::int64_t> s;  // s[j - 1] for color j

  bool contains(double x, double y) const;
  bool contains(const core::Rational& x, const core::Rational& y) const;
  double operator()(double x, double y) const { return contains(x, y) ? 1.0 : 0.0; }
  // Measure of the vertical slice at x: w for every x.
  core::Rational slice_measure(const core::Rational& x) const;
  // Every slice is exactly one interval of width w inside [0, 1).
  bool marginal_invariant() const;
};

// 1 / (2 m sum|e_i|); for the k-binomial system this is 1/(2^k m).
core::Rational certificate_width(const core::BinomialSystem& sys, std::int64_t m);

// Width 1/(2^k m). Throws InvalidArgument when |S| < r.
TorusSet build_torus_set(const TorusColoring& phi, const sets::ResidueSet& S, int k);
// Width from certificate_width(sys, m), for a-binomial systems.
TorusSet build_torus_set(const TorusColoring& phi, const sets::ResidueSet& S, const core::BinomialSystem& sys);

struct Certificate {
  core::Rational epsilon;  // exact binomial-pattern probability of Phi
  core::Rational width;
  core::Rational bound;    // epsilon * width^(k-1)
};

Certificate lambda_tilde_certificate(const TorusColoring& phi, const sets::ResidueSet& S,
                                     const core::PatternSpec& spec, std::uint64_t budget = kDefaultExactBudget,
                                     unsigned workers = 1);

Estimate lambda_tilde_mc(const TorusSet& A, const core::PatternSpec& spec, std::uint64_t samples, std::uint64_t seed,
                         unsigned workers = 1);

}  // namespace addcomb::torus
