#include "addcomb/uniformity/extract.hpp"

#include <atomic>
#include <cmath>
#include <mutex>
#include <thread>

#include "addcomb/colorings/verify.hpp"
#include "addcomb/core/errors.hpp"
#include "addcomb/core/random.hpp"

namespace addcomb::uniformity {
namespace {

enum class Outcome { success, undefined, rejected };

Outcome attempt(const torus::TorusFunction& F, const ExtractionRequest& req, std::uint64_t t,
                std::optional<colorings::Coloring>& out) {
  core::Rng rng(core::derive_seed(req.seed, t));
  const double x0 = rng.unit();
  const double x1 = rng.unit();
  std::vector<double> y(static_cast<std::size_t>(req.r));
  for (auto& v : y) v = rng.unit();
  std::vector<std::int64_t> labels(static_cast<std::size_t>(req.N));
  for (std::int64_t i = 1; i <= req.N; ++i) {
    const double xi = x0 + static_cast<double>(i) * x1;
    const double x = xi - std::floor(xi);
    std::int64_t color = 0;
    for (int j = 0; j < req.r && color == 0; ++j)
      if (F(x, y[static_cast<std::size_t>(j)]) >= req.alpha / 2) color = j + 1;
    if (color == 0) return Outcome::undefined;
    labels[static_cast<std::size_t>(i - 1)] = color;
  }
  auto c = colorings::Coloring::from_labels(colorings::Ambient::interval, labels);
  if (colorings::verify_symmetric_ap_free(c, req.k)) return Outcome::rejected;
  out = std::move(c);
  return Outcome::success;
}

}  // namespace

ExtractionResult extract_coloring(const torus::TorusFunction& F, const ExtractionRequest& req) {
  if (req.k < 4 || req.k % 2) throw InvalidArgument("extraction needs an even k >= 4");
  if (req.r < 1 || req.N < 1) throw InvalidArgument("extraction needs r >= 1 and N >= 1");
  ExtractionResult res;
  res.undefined_bound = static_cast<double>(req.N) * std::pow(1 - req.alpha / 2, req.r);

  const unsigned workers = std::max(1u, req.workers);
  std::atomic<std::uint64_t> best{UINT64_MAX};
  std::mutex mu;
  std::uint64_t run = 0, ok = 0, undef = 0, rej = 0;
  auto work = [&](unsigned w) {
    std::uint64_t lrun = 0, lok = 0, lundef = 0, lrej = 0;
    for (std::uint64_t t = w; t < req.attempts; t += workers) {
      if (req.stop_at_first && t > best.load()) break;
      std::optional<colorings::Coloring> c;
      const Outcome o = attempt(F, req, t, c);
      ++lrun;
      if (o == Outcome::undefined) ++lundef;
      if (o == Outcome::rejected) ++lrej;
      if (o == Outcome::success) {
        ++lok;
        std::lock_guard lock(mu);
        if (t < best.load()) {
          best = t;
          res.coloring = std::move(c);
        }
      }
    }
    std::lock_guard lock(mu);
    run += lrun;
    ok += lok;
    undef += lundef;
    rej += lrej;
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }
  res.attempts_run = run;
  res.successes = ok;
  res.undefined = undef;
  res.rejected = rej;
  if (res.coloring) res.first_success = best.load();
  return res;
}

}  // namespace addcomb::uniformity
