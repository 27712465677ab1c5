#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "addcomb/colorings/naive.hpp"
#include "addcomb/core/errors.hpp"
#include "addcomb/uniformity/convergence.hpp"
#include "addcomb/uniformity/extract.hpp"
#include "addcomb/uniformity/fourier.hpp"
#include "addcomb/uniformity/gowers.hpp"
#include "addcomb/uniformity/lambda.hpp"
#include "addcomb/uniformity/weyl.hpp"

using namespace addcomb;
using namespace addcomb::uniformity;
using core::PatternSpec;
using core::Rational;

namespace {

double brute_lambda(const std::vector<GridFunction>& fs, const PatternSpec& spec) {
  const std::int64_t N = fs[0].N();
  double s = 0;
  for (std::int64_t n = 0; n < N; ++n)
    for (std::int64_t d = 0; d < N; ++d) {
      double p = 1;
      for (std::size_t i = 0; i < spec.k(); ++i) p *= fs[i][core::mod(n + spec[i] * d, N)];
      s += p;
    }
  return s / static_cast<double>(N * N);
}

std::int64_t brute_count(const std::vector<bool>& in, const PatternSpec& spec) {
  const auto N = static_cast<std::int64_t>(in.size());
  std::int64_t c = 0;
  for (std::int64_t n = 0; n < N; ++n)
    for (std::int64_t d = 0; d < N; ++d) {
      bool all = true;
      for (std::size_t i = 0; i < spec.k() && all; ++i) all = in[static_cast<std::size_t>(core::mod(n + spec[i] * d, N))];
      c += all;
    }
  return c;
}

std::vector<double> random_values(std::mt19937_64& rng, std::int64_t N) {
  std::uniform_real_distribution<double> u(0, 1);
  std::vector<double> v(static_cast<std::size_t>(N));
  for (auto& x : v) x = u(rng);
  return v;
}

double slab(double y, double alpha) { return y < alpha ? 1.0 : 0.0; }

}  // namespace

TEST_SUITE("uniformity") {
  TEST_CASE("grid functions and discretization") {
    CHECK_THROWS_AS(GridFunction(std::vector<double>{}), InvalidArgument);
    CHECK_THROWS_AS(GridFunction(std::vector<double>{1.5}), InvalidArgument);
    CHECK_THROWS_AS(GridFunction(std::vector<Rational>{Rational(-1, 2)}), InvalidArgument);
    const auto c = GridFunction::constant(5, Rational(1, 3));
    CHECK(c.exact());
    CHECK(*c.exact_mean() == Rational(1, 3));
    CHECK_FALSE(c.is_indicator());

    const auto flat = discretize([](double, double) { return 0.3; }, 11, 2);
    for (std::int64_t n = 0; n < 11; ++n) CHECK(flat[n] == 0.3);

    const std::int64_t N = 101;
    const auto q = discretize([](double, double y) { return slab(y, 0.25); }, N, 2);
    for (std::int64_t n = 0; n < N; ++n) CHECK(q[n] == ((n * n % N) * 4 < N ? 1.0 : 0.0));
    CHECK(q.is_indicator());
    CHECK_THROWS_AS(discretize([](double, double) { return 0.0; }, N, 0), InvalidArgument);

    // Exact TorusSet lookup: mean within (cell boundaries)/N of the marginal.
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<std::int32_t> cells(5);
      for (auto& v : cells) v = 1 + static_cast<std::int32_t>(rng() % 3);
      const torus::TorusColoring phi(cells);
      const auto A = torus::build_torus_set(phi, sets::ResidueSet(7, {0, 2, 5}), 2);
      const std::int64_t M = 3001;
      const auto g = discretize(A, M, 2);
      CHECK(g.exact());
      const double boundaries = static_cast<double>(phi.D() + 2 * phi.r());
      CHECK(std::abs(g.mean() - core::to_double(A.w)) <= boundaries / static_cast<double>(M) + 0.05);
      const auto gd = discretize([&](double x, double y) { return A(x, y); }, M, 2);
      std::int64_t differ = 0;
      for (std::int64_t n = 0; n < M; ++n) differ += g[n] != gd[n];
      CHECK(differ <= 2);  // floating lookup may only disagree on boundaries
    }
  }

  TEST_CASE("Lambda counts") {
    const auto spec3 = PatternSpec::arithmetic(3);
    const auto two = GridFunction::indicator(5, std::vector<std::int64_t>{0, 1});
    const auto l = lambda_exact(two, spec3);
    REQUIRE(l.exact);
    CHECK(*l.exact == Rational(brute_count({true, true, false, false, false}, spec3), 25));
    CHECK(*l.exact == Rational(2, 25));

    const auto c = GridFunction::constant(7, Rational(2, 5));
    const auto lc = lambda_exact(c, PatternSpec::arithmetic(4));
    REQUIRE(lc.exact);
    CHECK(*lc.exact == Rational(16, 625));
    const auto ld = lambda_exact(GridFunction(std::vector<double>(9, 0.5)), PatternSpec::arithmetic(4));
    CHECK(ld.value == doctest::Approx(0.0625).epsilon(1e-14));

    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
      const std::int64_t N = 3 + static_cast<std::int64_t>(rng() % 30);
      const PatternSpec spec = trial % 2 ? PatternSpec::arithmetic(3 + static_cast<int>(rng() % 3))
                                         : PatternSpec({0, 1, 3, 7});
      std::vector<GridFunction> fs;
      std::vector<bool> bits(static_cast<std::size_t>(N));
      for (std::size_t i = 0; i < spec.k(); ++i) fs.emplace_back(random_values(rng, N));
      CHECK(lambda_exact(fs, spec).value == doctest::Approx(brute_lambda(fs, spec)).epsilon(1e-12));

      std::vector<std::int64_t> members;
      for (std::int64_t n = 0; n < N; ++n)
        if (rng() % 2) {
          members.push_back(n);
          bits[static_cast<std::size_t>(n)] = true;
        }
      const auto ind = GridFunction::indicator(N, members);
      CHECK(*lambda_exact(ind, spec).exact == Rational(brute_count(bits, spec), N * N));

      std::vector<Rational> rv;
      for (std::int64_t n = 0; n < N; ++n) rv.emplace_back(static_cast<std::int64_t>(rng() % 4), 3);
      const GridFunction rf(rv);
      const auto lr = lambda_exact(rf, spec);
      REQUIRE(lr.exact);
      CHECK(lr.value == doctest::Approx(brute_lambda(std::vector<GridFunction>(spec.k(), rf), spec)).epsilon(1e-12));

      // Translation and reflection (with the pattern reversed) are exact symmetries.
      std::vector<std::int64_t> shifted, reflected;
      for (auto m : members) {
        shifted.push_back(m + 4);
        reflected.push_back(-m);
      }
      std::vector<std::int64_t> rev;
      for (std::size_t i = spec.k(); i-- > 0;) rev.push_back(-spec[i]);
      CHECK(*lambda_exact(GridFunction::indicator(N, shifted), spec).exact == *lambda_exact(ind, spec).exact);
      CHECK(*lambda_exact(GridFunction::indicator(N, reflected), PatternSpec(rev)).exact ==
            *lambda_exact(ind, spec).exact);
    }
    CHECK_THROWS_AS(lambda_exact(two, PatternSpec::arithmetic(3), 10), ResourceError);
    CHECK_THROWS_AS(lambda_exact(std::vector<GridFunction>{two}, spec3), InvalidArgument);
  }

  TEST_CASE("quadratic demo set") {
    const auto spec = PatternSpec::arithmetic(4);
    const std::int64_t N = 997;
    const auto f = discretize([](double, double y) { return slab(y, 0.25); }, N, 2);
    std::vector<bool> bits(static_cast<std::size_t>(N));
    for (std::int64_t n = 0; n < N; ++n) bits[static_cast<std::size_t>(n)] = 4 * (n * n % N) < N;
    const auto l = lambda_exact(f, spec);
    REQUIRE(l.exact);
    CHECK(*l.exact == Rational(brute_count(bits, spec), N * N));
    CHECK(l.value == doctest::Approx(0.005592504695631529).epsilon(1e-12));  // independent numpy run
    CHECK(l.value > std::pow(0.25, 4));

    // Centered U^2 decreases along the ladder; values frozen from this build.
    const double expect[] = {0.114119, 0.096080, 0.083383, 0.068931};
    double prev = 1;
    int i = 0;
    for (std::int64_t M : {499, 997, 1999, 4001}) {
      const auto g = discretize([](double, double y) { return slab(y, 0.25); }, M, 2);
      const double u = gowers_norm(g, 2, true);
      CHECK(u == doctest::Approx(expect[i++]).epsilon(1e-5));
      CHECK(u < prev);
      prev = u;
    }
  }

  TEST_CASE("spectra") {
    const auto c = spectrum(GridFunction(std::vector<double>(16, 0.25)));
    CHECK(c.alpha == doctest::Approx(0.25));
    CHECK(c.max_nonzero <= 1e-15);
    CHECK(c.parseval_error <= 1e-10);

    for (std::int64_t N : {10, 64, 97, 1000}) {
      const std::int64_t L = N / 2;
      std::vector<double> v(static_cast<std::size_t>(N), 0.0);
      for (std::int64_t n = 0; n < L; ++n) v[static_cast<std::size_t>(n)] = 1.0;
      const auto rep = spectrum(GridFunction(v), true);
      CHECK(rep.parseval_error <= 1e-10);
      double maxnz = 0;
      for (std::int64_t r = 1; r < N; ++r) {
        // Dirichlet kernel: (1/N) (1 - e(-rL/N)) / (1 - e(-r/N))
        const std::complex<double> w = std::polar(1.0, -2 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(N));
        const std::complex<double> wl = std::polar(1.0, -2 * std::numbers::pi * static_cast<double>(r * L % N) / static_cast<double>(N));
        const std::complex<double> expect = (1.0 - wl) / (1.0 - w) / static_cast<double>(N);
        CHECK(std::abs(rep.coefficients[static_cast<std::size_t>(r)] - expect) <= 1e-12);
        maxnz = std::max(maxnz, std::abs(expect));
      }
      CHECK(rep.max_nonzero == doctest::Approx(maxnz).epsilon(1e-12));
      if (N == 1000) CHECK(rep.max_nonzero == doctest::Approx(1 / std::numbers::pi).epsilon(1e-3));
    }

    std::mt19937_64 rng(7);
    for (std::int64_t N = 1; N <= 64; N += 9) {
      const auto v = random_values(rng, N);
      const auto fast = fourier_coefficients(v);
      const auto slow = naive::fourier_coefficients(v);
      for (std::size_t r = 0; r < v.size(); ++r) CHECK(std::abs(fast[r] - slow[r]) <= 1e-12);
      CHECK(spectrum(GridFunction(v)).parseval_error <= 1e-10);
    }

    const auto q = discretize([](double, double y) { return slab(y, 0.5); }, 10007, 2);
    const auto qs = spectrum(q);
    CHECK(qs.max_nonzero <= 0.05);
    CHECK(qs.parseval_error <= 1e-10);
  }

  TEST_CASE("Gowers norms") {
    const GridFunction c(std::vector<double>(12, 0.4));
    CHECK(gowers_norm(c, 2, false) == doctest::Approx(0.4).epsilon(1e-12));
    CHECK(gowers_norm(c, 3, false) == doctest::Approx(0.4).epsilon(1e-12));
    CHECK(gowers_norm(c, 2, true) <= 1e-12);
    CHECK_THROWS_AS(gowers_norm(c, 4, false), InvalidArgument);
    CHECK_THROWS_AS(gowers_norm(c, 3, false, 8), ResourceError);

    std::mt19937_64 rng(11);
    for (std::int64_t N = 1; N <= 64; N += 7) {
      const auto v = random_values(rng, N);
      CHECK(gowers_u2(v) == doctest::Approx(naive::gowers_u2(v)).epsilon(1e-10));
    }
    for (std::int64_t N = 1; N <= 24; N += 5) {
      const auto v = random_values(rng, N);
      CHECK(gowers_u3(v) == doctest::Approx(naive::gowers_u3(v)).epsilon(1e-10));
    }
    for (int trial = 0; trial < 50; ++trial) {
      const GridFunction f(random_values(rng, 5 + static_cast<std::int64_t>(rng() % 40)));
      CHECK(gowers_norm(f, 2, true) <= gowers_norm(f, 3, true) + 1e-12);
    }
  }

  TEST_CASE("Weyl sums") {
    CHECK(weyl_sum(Polynomial::parse("0"), 13) == std::complex<double>(1, 0));
    for (std::int64_t N : {2, 10, 97}) CHECK(weyl_sum(Polynomial::parse("n"), N) == std::complex<double>(0, 0));
    for (std::int64_t p : {101, 997, 10007}) {
      CHECK(std::abs(weyl_sum(Polynomial::parse("n^2"), p)) == doctest::Approx(1 / std::sqrt(double(p))).epsilon(1e-9));
    }
    CHECK(std::abs(weyl_sum(Polynomial::parse("n1*n2"), 31) - std::complex<double>(1.0 / 31, 0)) <= 1e-12);
    const auto P = Polynomial::parse("3*n1^2*n2 - n2 + 5");
    CHECK(P.vars == 2);
    const std::int64_t pt[] = {4, 7};
    CHECK(P.eval_mod(pt, 100) == (3 * 16 * 7 - 7 + 5) % 100);
    CHECK(P.to_string() == "3*n1^2*n2 - n2 + 5");
    CHECK_THROWS_AS(Polynomial::parse("n +"), FormatError);
    CHECK_THROWS_AS(Polynomial::parse("x"), FormatError);
    CHECK_THROWS_AS(weyl_sum(Polynomial::parse("n1*n2"), 100000, 1000), ResourceError);
  }

  TEST_CASE("convergence experiment") {
    const auto spec = PatternSpec::arithmetic(4);
    ConvergenceOptions opts;
    opts.reference = 0.25 * 0.25 * 0.25 * 0.25;
    const auto flat = convergence_experiment([](double, double) { return 0.25; }, spec, {31, 61}, opts);
    for (const auto& row : flat.rows) {
      CHECK(row.lambda == doctest::Approx(std::pow(0.25, 4)).epsilon(1e-12));
      CHECK(row.centered_norm == 0);
    }
    opts.reference = 1.0 / 216;
    const auto rep = convergence_experiment([](double, double y) { return slab(y, 0.25); }, spec,
                                            {499, 997, 1999, 4001}, opts);
    REQUIRE(rep.rows.size() == 4);
    CHECK(rep.rows.back().gap <= 0.01);
    CHECK(rep.reference_method == "given");

    ConvergenceOptions mc;
    mc.mc_samples = 100000;
    const auto rep_mc = convergence_experiment([](double, double y) { return slab(y, 0.25); }, spec, {101}, mc);
    CHECK(rep_mc.reference_method == "monte-carlo");
    CHECK(std::abs(rep_mc.reference - 1.0 / 216) <= 4 * rep_mc.reference_stderr);
    CHECK_THROWS_AS(convergence_experiment([](double, double) { return 0.5; }, PatternSpec::arithmetic(6), {11}, opts),
                    InvalidArgument);
  }

  TEST_CASE("coloring extraction") {
    ExtractionRequest req;
    req.alpha = 1;
    req.k = 4;
    req.r = 1;
    req.N = 6;
    req.attempts = 20;
    const auto all = extract_coloring([](double, double) { return 1.0; }, req);
    CHECK_FALSE(all.coloring);
    CHECK(all.rejected == all.attempts_run);

    // A set whose slices move with x: every success is independently re-verified.
    auto F = [](double x, double y) {
      const double s = std::floor(8 * x) / 8;
      double d = y - s;
      d -= std::floor(d);
      return d < 0.25 ? 1.0 : 0.0;
    };
    req.alpha = 0.25;
    req.r = 12;
    req.N = 8;
    req.attempts = 2000;
    req.stop_at_first = false;
    const auto res = extract_coloring(F, req);
    CHECK(res.attempts_run == 2000);
    CHECK(res.successes + res.undefined + res.rejected == 2000);
    CHECK(res.undefined_bound == doctest::Approx(8 * std::pow(1 - 0.125, 12)));
    CHECK(res.successes > 0);
    REQUIRE(res.coloring);
    CHECK_FALSE(colorings::naive::symmetric_ap(*res.coloring, PatternSpec::arithmetic(4)));

    // Worker count does not change the first success.
    req.stop_at_first = true;
    const auto one = extract_coloring(F, req);
    req.workers = 3;
    const auto three = extract_coloring(F, req);
    REQUIRE(one.coloring);
    REQUIRE(three.coloring);
    CHECK(one.first_success == three.first_success);
    CHECK(*one.coloring == *three.coloring);
    req.k = 5;
    CHECK_THROWS_AS(extract_coloring(F, req), InvalidArgument);
  }
}
