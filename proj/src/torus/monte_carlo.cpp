#include "addcomb/torus/monte_carlo.hpp"

#include <cmath>
#include <thread>

#include "addcomb/core/errors.hpp"
#include "addcomb/core/random.hpp"

namespace addcomb::torus {
namespace {

// Welford running moments, merged pairwise.
struct Moments {
  double mean = 0;
  double m2 = 0;
  std::uint64_t n = 0;

  void add(double v) {
    ++n;
    const double delta = v - mean;
    mean += delta / static_cast<double>(n);
    m2 += delta * (v - mean);
  }
  void merge(const Moments& o) {
    if (o.n == 0) return;
    const double na = static_cast<double>(n), nb = static_cast<double>(o.n);
    const double delta = o.mean - mean;
    n += o.n;
    mean += delta * nb / static_cast<double>(n);
    m2 += o.m2 + delta * delta * na * nb / static_cast<double>(n);
  }
};

double frac(double v) { return v - std::floor(v); }

// Splits samples over workers; sample(rng) returns one observation.
template <class Sample>
Estimate run_mc(std::uint64_t samples, std::uint64_t seed, unsigned workers, Sample sample) {
  if (samples == 0) throw InvalidArgument("samples must be >= 1");
  workers = std::max(1u, workers);
  std::vector<Moments> parts(workers);
  auto run = [&](unsigned w) {
    core::Rng rng(core::derive_seed(seed, w));
    const std::uint64_t n = samples / workers + (w < samples % workers ? 1 : 0);
    Moments m;
    for (std::uint64_t i = 0; i < n; ++i) m.add(sample(rng));
    parts[w] = m;
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  Moments all;
  for (const auto& p : parts) all.merge(p);
  const double n = static_cast<double>(all.n);
  Estimate e;
  e.mean = all.mean;
  e.sample_count = all.n;
  e.seed = seed;
  if (all.n > 1) e.standard_error = std::sqrt(all.m2 / (n - 1) / n);
  return e;
}

}  // namespace

Estimate lambda_tilde_mc(const TorusFunction& F, const core::PatternSpec& spec, std::uint64_t samples,
                         std::uint64_t seed, unsigned workers) {
  const auto e = core::a_binomial_system(spec).coefficients();
  const auto a = spec.a();
  const std::size_t k = a.size();
  const std::int64_t ek = e[k - 1];
  const auto ek_abs = static_cast<std::uint64_t>(ek < 0 ? -ek : ek);
  return run_mc(samples, seed, workers, [&](core::Rng& rng) {
    const double x0 = rng.unit();
    const double x1 = rng.unit();
    double rest = 0;
    double prod = 1;
    for (std::size_t i = 0; i + 1 < k; ++i) {
      const double y = rng.unit();
      rest -= static_cast<double>(e[i]) * y;
      prod *= F(frac(x0 + static_cast<double>(a[i]) * x1), y);
    }
    const double j = static_cast<double>(ek_abs > 1 ? rng.below(ek_abs) : 0);
    const double yk = frac((frac(rest) + j) / static_cast<double>(ek));
    return prod * F(frac(x0 + static_cast<double>(a[k - 1]) * x1), yk);
  });
}

Estimate pattern_probability_mc(const TorusColoring& phi, const core::PatternSpec& spec,
                                const colorings::ClauseSet& predicate, std::uint64_t samples, std::uint64_t seed,
                                unsigned workers) {
  if (predicate.k() != static_cast<int>(spec.k())) throw InvalidArgument("predicate arity differs from the pattern");
  const auto a = spec.a();
  return run_mc(samples, seed, workers, [&](core::Rng& rng) {
    const double x = rng.unit();
    const double y = rng.unit();
    std::int32_t colors[64];
    for (std::size_t i = 0; i < a.size(); ++i) colors[i] = phi.color_at(x + static_cast<double>(a[i]) * y);
    return predicate.holds(std::span<const std::int32_t>(colors, a.size())) ? 1.0 : 0.0;
  });
}

}  // namespace addcomb::torus
