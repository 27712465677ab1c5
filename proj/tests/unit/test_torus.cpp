#include <doctest.h>

#include <cmath>
#include <map>
#include <random>

#include "addcomb/colorings/verify.hpp"
#include "addcomb/core/errors.hpp"
#include "addcomb/sets/solution_free.hpp"
#include "addcomb/torus/cells.hpp"
#include "addcomb/torus/probability.hpp"
#include "addcomb/torus/torus_set.hpp"

using namespace addcomb;
using namespace addcomb::torus;
using colorings::Ambient;
using colorings::Coloring;
using core::PatternSpec;
using core::Rational;

namespace {

constexpr const char* kZ22 = "1333221232131211333233";

using Pt = std::pair<Rational, Rational>;

// Keeps the part of the polygon with s + a t >= c (ge) or <= c.
std::vector<Pt> clip(const std::vector<Pt>& poly, std::int64_t a, std::int64_t c, bool ge) {
  auto val = [&](const Pt& p) -> Rational {
    const Rational v = p.first + a * p.second - c;
    return ge ? v : Rational(-v);
  };
  std::vector<Pt> out;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Pt& P = poly[i];
    const Pt& Q = poly[(i + 1) % poly.size()];
    const Rational vp = val(P), vq = val(Q);
    if (vp >= 0) out.push_back(P);
    if ((vp > 0 && vq < 0) || (vp < 0 && vq > 0)) {
      const Rational lam = vp / (vp - vq);
      out.push_back({P.first + lam * (Q.first - P.first), P.second + lam * (Q.second - P.second)});
    }
  }
  return out;
}

Rational shoelace(const std::vector<Pt>& poly) {
  Rational s = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Pt& P = poly[i];
    const Pt& Q = poly[(i + 1) % poly.size()];
    s += P.first * Q.second - Q.first * P.second;
  }
  return Rational(abs(s) / 2);
}

// Polygon-clipping oracle: area of {f_i <= s + a_i t < f_i + 1} for every f,
// clipping one position at a time and pruning empty polygons.
void clip_rec(const PatternSpec& spec, std::size_t i, const std::vector<Pt>& poly, std::vector<std::int64_t>& f,
              std::map<std::vector<std::int64_t>, Rational>& out) {
  if (poly.size() < 3) return;
  if (i == spec.k()) {
    const Rational ar = shoelace(poly);
    if (ar > 0) out[f] = ar;
    return;
  }
  const std::int64_t a = spec[i];
  for (std::int64_t v = std::min<std::int64_t>(0, a); v <= std::max<std::int64_t>(0, a); ++v) {
    auto piece = clip(poly, a, v, true);
    if (piece.size() >= 3) piece = clip(piece, a, v + 1, false);
    f.push_back(v);
    clip_rec(spec, i + 1, piece, f, out);
    f.pop_back();
  }
}

std::map<std::vector<std::int64_t>, Rational> clipped_cells(const PatternSpec& spec) {
  std::map<std::vector<std::int64_t>, Rational> out;
  std::vector<std::int64_t> f;
  clip_rec(spec, 0, {{0, 0}, {1, 0}, {1, 1}, {0, 1}}, f, out);
  return out;
}

// Direct predicates, no clause machinery.
bool naive_symmetric(const std::vector<std::int32_t>& c) {
  for (std::size_t i = 0; i < c.size() / 2; ++i)
    if (c[i] != c[c.size() - 1 - i]) return false;
  return true;
}

Rational naive_exact(const TorusColoring& phi, const PatternSpec& spec) {
  const auto cells = clipped_cells(spec);
  const std::int64_t D = phi.D();
  Rational total = 0;
  for (const auto& [f, area] : cells) {
    std::int64_t hits = 0;
    for (std::int64_t p = 0; p < D; ++p)
      for (std::int64_t q = 0; q < D; ++q) {
        std::vector<std::int32_t> c;
        for (std::size_t i = 0; i < f.size(); ++i) c.push_back(phi.cell(core::mod(p + spec[i] * q + f[i], D)));
        hits += naive_symmetric(c);
      }
    total += area * hits;
  }
  return total / (D * D);
}

TorusColoring random_torus(std::mt19937_64& rng, std::int64_t D, int r) {
  std::vector<std::int32_t> c(static_cast<std::size_t>(D));
  for (auto& v : c) v = 1 + static_cast<std::int32_t>(rng() % static_cast<std::uint64_t>(r));
  return TorusColoring(c);
}

// Lambda-tilde of 1_{[0,alpha)}(y) for the 4-AP system: alpha^3 P(0 <= V < alpha)
// with V = U1 - 3 U2 + 3 U3 on [0, alpha); U2 - U3 has a triangular density,
// and U1 contributes the overlap length. Midpoint rule in one variable.
double slab_oracle(double alpha) {
  const int steps = 200000;
  double p = 0;
  for (int i = 0; i < steps; ++i) {
    const double u = -alpha + (i + 0.5) * 2 * alpha / steps;  // u = U2 - U3
    const double dens = (alpha - std::abs(u)) / (alpha * alpha);
    double hit = 0;
    for (int wrap = -4; wrap <= 4; ++wrap) {
      // U1 in [3u + wrap, 3u + wrap + alpha) intersect [0, alpha)
      const double lo = std::max(0.0, 3 * u + wrap);
      const double hi = std::min(alpha, 3 * u + wrap + alpha);
      if (hi > lo) hit += (hi - lo) / alpha;
    }
    p += dens * hit * 2 * alpha / steps;
  }
  return alpha * alpha * alpha * p;
}

}  // namespace

TEST_SUITE("torus") {
  TEST_CASE("torus colorings") {
    const TorusColoring t({1, 3, 2});
    CHECK(t.D() == 3);
    CHECK(t.r() == 3);
    CHECK(t.color_at(0.5) == 3);
    CHECK(t.color_at(-0.1) == 2);
    CHECK(t.color_at(Rational(1, 3)) == 3);
    CHECK(t.color_at(Rational(-1, 3)) == 2);
    CHECK(t.color_at(Rational(7, 3)) == 3);
    CHECK_THROWS_AS(TorusColoring({}), InvalidArgument);
    CHECK_THROWS_AS(TorusColoring({0, 1}), InvalidArgument);
  }

  TEST_CASE("interlace_k") {
    const auto one = interlace_k(Coloring::constant(Ambient::interval, 1), 4);
    CHECK(one.D() == 16);
    for (std::int64_t j = 0; j < 16; ++j) CHECK(one.cell(j) == j + 1);

    const auto z22 = Coloring::from_digits(Ambient::cyclic, kZ22);
    const auto phi = interlace_k(z22, 4);
    CHECK(phi.D() == 352);
    CHECK(phi.r() == 48);
    const int k = 4, N = 22, r = 3;
    for (int a = 1; a <= k; ++a)
      for (int b = 1; b <= N; ++b)
        for (int c = 1; c <= k; ++c) {
          // midpoint of I_{a,b,c}
          const Rational x = Rational((a - 1) * k * N + (b - 1) * k + c - 1, k * k * N) + Rational(1, 2 * k * k * N);
          CHECK(phi.color_at(x) == ((a - 1) * k + c - 1) * r + z22[b - 1]);
          CHECK(x >= Rational(a - 1, k));
          CHECK(x < Rational(a, k));
        }
    CHECK_THROWS_AS(interlace_k(z22, 2), InvalidArgument);
    CHECK_THROWS_AS(interlace_k(z22, 4, 100), ResourceError);
  }

  TEST_CASE("interlace_m") {
    const auto phi = Coloring::from_labels(Ambient::cyclic, std::vector<std::int64_t>{1, 2, 1});
    CHECK(interlace_m(phi, 1, 2) == TorusColoring::lift(phi));
    CHECK(interlace_m(phi, 2, 2) == TorusColoring({1, 3, 2, 4, 1, 3}));
    const PatternSpec a({1, 2, 3, 6, 7, 8});
    CHECK(interlace_modulus(a) == 40320);
    const auto z25 = Coloring::all_distinct(Ambient::cyclic, 25);
    CHECK_THROWS_AS(interlace_m(z25, interlace_modulus(a), 25), ResourceError);
    CHECK_THROWS_AS(interlace_m(phi, 0, 2), InvalidArgument);
    CHECK_THROWS_AS(interlace_modulus(PatternSpec({0, 1, 30})), ResourceError);
  }

  TEST_CASE("cell decomposition matches polygon clipping") {
    for (const auto& spec : {PatternSpec::arithmetic(3), PatternSpec::arithmetic(4), PatternSpec({0, 1, 3, 4}),
                             PatternSpec({-2, 1, 5}), PatternSpec({1, 2, 10, 16, 17, 20})}) {
      const auto pieces = cell_decomposition(spec);
      const auto oracle = clipped_cells(spec);
      Rational total = 0;
      REQUIRE(pieces.size() == oracle.size());
      for (const auto& p : pieces) {
        total += p.area;
        REQUIRE(oracle.count(p.floors));
        CHECK(oracle.at(p.floors) == p.area);
      }
      CHECK(total == 1);
    }
  }

  TEST_CASE("exact pattern probabilities") {
    const auto sym4 = predicate_clauses(PatternSpec::arithmetic(4), Predicate::symmetric);
    CHECK(pattern_probability_exact(TorusColoring({1, 1, 1}), PatternSpec::arithmetic(4), sym4) == 1);

    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 6; ++trial) {
      const auto phi = random_torus(rng, 2 + static_cast<std::int64_t>(rng() % 14), 1 + static_cast<int>(rng() % 3));
      const auto exact = pattern_probability_exact(phi, PatternSpec::arithmetic(4), sym4);
      CHECK(exact == naive_exact(phi, PatternSpec::arithmetic(4)));
      CHECK(exact == pattern_probability_exact(phi, PatternSpec::arithmetic(4), sym4, kDefaultExactBudget, 3));
    }

    // All-distinct cells: only coincidences count.
    std::vector<std::int32_t> ids(10);
    for (int j = 0; j < 10; ++j) ids[static_cast<std::size_t>(j)] = j + 1;
    const TorusColoring distinct(ids);
    const auto pd = pattern_probability_exact(distinct, PatternSpec::arithmetic(4), sym4);
    CHECK(pd > 0);
    CHECK(pd < 1);
    const auto mc = pattern_probability_mc(distinct, PatternSpec::arithmetic(4), sym4, 400000, 3);
    CHECK(std::abs(mc.mean - core::to_double(pd)) <= 4 * mc.standard_error);

    const auto mono = predicate_clauses(PatternSpec::arithmetic(3), Predicate::mono_subset, {0, 2});
    // x and x + 2y share one of D cells: probability 1/D for a coloring with D distinct colors.
    CHECK(pattern_probability_exact(distinct, PatternSpec::arithmetic(3), mono) == Rational(1, 10));

    CHECK_THROWS_AS(pattern_probability_exact(distinct, PatternSpec::arithmetic(4), sym4, 10), ResourceError);
    CHECK_THROWS_AS(predicate_clauses(PatternSpec::arithmetic(3), Predicate::mono_subset, {1}), InvalidArgument);
    CHECK(parse_predicate("symmetric") == Predicate::symmetric);
    CHECK_THROWS_AS(parse_predicate("nope"), InvalidArgument);
  }

  TEST_CASE("exact agrees with Monte Carlo on random colorings") {
    std::mt19937_64 rng(12);
    const auto spec = PatternSpec::arithmetic(4);
    const auto sym4 = predicate_clauses(spec, Predicate::symmetric);
    for (int trial = 0; trial < 10; ++trial) {
      const auto phi = random_torus(rng, 1 + static_cast<std::int64_t>(rng() % 40), 1 + static_cast<int>(rng() % 4));
      const double exact = core::to_double(pattern_probability_exact(phi, spec, sym4));
      const auto mc = pattern_probability_mc(phi, spec, sym4, 200000, 100 + trial);
      CHECK(std::abs(mc.mean - exact) <= 4 * mc.standard_error + 1e-12);
    }
  }

  TEST_CASE("interlaced Z/22Z witness has binomial density below k/N") {
    const auto z22 = Coloring::from_digits(Ambient::cyclic, kZ22);
    const auto phi = interlace_k(z22, 4);
    const auto spec = PatternSpec::arithmetic(4);
    const auto eps = pattern_probability_exact(phi, spec, predicate_clauses(spec, Predicate::binomial_pattern));
    CHECK(eps <= Rational(4, 22));
    CHECK(eps == Rational(1, 1056));  // frozen after the MC cross-check below
    const auto mc = pattern_probability_mc(phi, spec, colorings::binomial_clauses(spec), 1000000, 5);
    CHECK(std::abs(mc.mean - core::to_double(eps)) <= 4 * mc.standard_error);
  }

  TEST_CASE("torus sets") {
    const TorusColoring one({1});
    const auto A = build_torus_set(one, sets::ResidueSet(2, {0}), 4);
    CHECK(A.w == Rational(1, 32));
    CHECK(A.marginal_invariant());
    CHECK(A.contains(0.3, 0.01));
    CHECK_FALSE(A.contains(0.3, 1.0 / 32));
    CHECK(A.slice_measure(Rational(5, 7)) == Rational(1, 32));
    CHECK_THROWS_AS(build_torus_set(TorusColoring({1, 2}), sets::ResidueSet(5, {0}), 4), InvalidArgument);

    const auto z22 = Coloring::from_digits(Ambient::cyclic, kZ22);
    const auto phi = interlace_k(z22, 4);
    const std::int64_t m = 36 * 48 * 48 + 1;
    const auto S = sets::base9_set(48, m);
    const auto B = build_torus_set(phi, S, 4);
    CHECK(B.marginal_invariant());
    CHECK(B.w == Rational(1, 16 * m));
    for (int j = 0; j < 50; ++j) CHECK(B.slice_measure(Rational(j, 50)) == B.w);
    CHECK(certificate_width(core::k_binomial_system(4), m) == B.w);
  }

  TEST_CASE("certificates") {
    const auto spec = PatternSpec::arithmetic(4);
    const TorusColoring one({1});
    const auto c1 = lambda_tilde_certificate(one, sets::ResidueSet(3, {0}), spec);
    CHECK(c1.epsilon == 1);
    CHECK(c1.bound == Rational(1, 48 * 48 * 48));
    const auto c2 = lambda_tilde_certificate(one, sets::ResidueSet(6, {0}), spec);
    CHECK(c2.bound * 8 == c1.bound);

    // A wide interval: the certificate dominates the MC estimate.
    const auto z22 = Coloring::from_digits(Ambient::cyclic, kZ22);
    const auto phi = interlace_k(z22, 4);
    const std::int64_t m = 36 * 48 * 48 + 1;
    const auto S = sets::base9_set(48, m);
    const auto cert = lambda_tilde_certificate(phi, S, spec);
    CHECK(cert.bound == cert.epsilon / (core::BigInt(16 * m) * (16 * m) * (16 * m)));
    const auto est = lambda_tilde_mc(build_torus_set(phi, S, 4), spec, 200000, 9);
    CHECK(est.mean <= core::to_double(cert.bound) + 4 * est.standard_error);
  }

  TEST_CASE("lambda-tilde Monte Carlo") {
    const auto spec = PatternSpec::arithmetic(4);
    const auto flat = lambda_tilde_mc([](double, double) { return 0.3; }, spec, 1000, 1);
    CHECK(flat.mean == doctest::Approx(0.3 * 0.3 * 0.3 * 0.3).epsilon(1e-12));
    CHECK(flat.standard_error == 0);

    CHECK(slab_oracle(0.25) == doctest::Approx(1.0 / 216).epsilon(1e-6));
    const auto slab = lambda_tilde_mc([](double, double y) { return y < 0.25 ? 1.0 : 0.0; }, spec, 1000000, 2);
    CHECK(std::abs(slab.mean - slab_oracle(0.25)) <= 4 * slab.standard_error);
    const auto slab_half = lambda_tilde_mc([](double, double y) { return y < 0.5 ? 1.0 : 0.0; }, spec, 400000, 3);
    CHECK(std::abs(slab_half.mean - slab_oracle(0.5)) <= 4 * slab_half.standard_error);

    // Scaling F by c scales the estimate by c^k with matched seeds.
    auto F = [](double x, double y) { return 0.5 + 0.5 * std::sin(6.283185307179586 * (x + 2 * y)); };
    const auto base = lambda_tilde_mc(F, spec, 20000, 4);
    const auto scaled = lambda_tilde_mc([&](double x, double y) { return 0.6 * F(x, y); }, spec, 20000, 4);
    CHECK(scaled.mean == doctest::Approx(base.mean * std::pow(0.6, 4)).epsilon(1e-12));

    // Workers change the stream but not the target.
    const auto par = lambda_tilde_mc([](double, double y) { return y < 0.25 ? 1.0 : 0.0; }, spec, 400000, 2, 3);
    CHECK(std::abs(par.mean - slab_oracle(0.25)) <= 4 * par.standard_error);
    CHECK(par.sample_count == 400000);
    const auto par2 = lambda_tilde_mc([](double, double y) { return y < 0.25 ? 1.0 : 0.0; }, spec, 400000, 2, 3);
    CHECK(par.mean == par2.mean);

    // a-binomial system with |e_k| > 1.
    const PatternSpec gen({0, 1, 3});
    const auto g = lambda_tilde_mc([](double, double) { return 0.5; }, gen, 100, 5);
    CHECK(g.mean == doctest::Approx(0.125).epsilon(1e-12));
    CHECK_THROWS_AS(lambda_tilde_mc([](double, double) { return 1.0; }, spec, 0, 1), InvalidArgument);
  }
}
