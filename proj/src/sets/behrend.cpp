#include "addcomb/sets/behrend.hpp"

#include <algorithm>

#include "addcomb/core/errors.hpp"
#include "addcomb/core/random.hpp"

namespace addcomb::sets {
namespace {

constexpr std::int64_t kPointBudget = 4'000'000;  // d^dim per configuration

// Visits every digit vector in [0, d)^dim.
template <class F>
void for_each_point(int d, int dim, F&& f) {
  std::vector<int> x(static_cast<std::size_t>(dim), 0);
  while (true) {
    f(x);
    int j = 0;
    while (j < dim && ++x[static_cast<std::size_t>(j)] == d) x[static_cast<std::size_t>(j++)] = 0;
    if (j == dim) return;
  }
}

std::int64_t centered_norm(const std::vector<int>& x, int d) {
  std::int64_t s = 0;
  for (int v : x) {
    const std::int64_t c = 2 * v - d + 1;
    s += c * c;
  }
  return s;
}

}  // namespace

BehrendResult behrend_set(std::int64_t N, int k) {
  if (N < 2) throw InvalidArgument("N must be >= 2");
  if (k < 3) throw InvalidArgument("k must be >= 3");
  BehrendParams best;  // d = 1: the single point {0}
  for (int d = 2;; ++d) {
    const std::int64_t B = static_cast<std::int64_t>(k - 1) * (d - 1) + 1;
    if (static_cast<std::int64_t>(k - 1) * (d - 1) >= N) break;
    std::int64_t power = 1;  // B^dim
    std::int64_t points = 1;  // d^dim
    for (int dim = 1;; ++dim) {
      power *= B;
      points *= d;
      const std::int64_t maxval = (d - 1) * ((power - 1) / (B - 1));
      if (maxval > (N - 1) / (k - 1) || (k - 1) * maxval >= N || points > kPointBudget) break;
      std::vector<std::int64_t> hist(static_cast<std::size_t>(dim) * (d - 1) * (d - 1) + 1, 0);
      for_each_point(d, dim, [&](const std::vector<int>& x) { ++hist[static_cast<std::size_t>(centered_norm(x, d))]; });
      for (std::size_t R = 0; R < hist.size(); ++R)
        if (hist[R] > best.population) best = {d, dim, B, static_cast<std::int64_t>(R), hist[R]};
      if (power > N) break;
    }
  }
  std::vector<std::int64_t> elems;
  if (best.dim == 0) {
    elems.push_back(0);
  } else {
    for_each_point(best.digits, best.dim, [&](const std::vector<int>& x) {
      if (centered_norm(x, best.digits) != best.radius2) return;
      std::int64_t n = 0;
      for (int j = best.dim - 1; j >= 0; --j) n = n * best.base + x[static_cast<std::size_t>(j)];
      elems.push_back(n);
    });
  }
  return {ResidueSet(N, std::move(elems)), best};
}

colorings::Coloring covering_coloring(const ResidueSet& s, std::uint64_t seed, std::int64_t max_translates) {
  if (s.empty()) throw InvalidArgument("covering needs a nonempty set");
  const std::int64_t N = s.modulus();
  if (max_translates <= 0) max_translates = 64 * N + 1000;
  core::Rng rng(seed);
  std::vector<std::int64_t> label(static_cast<std::size_t>(N), -1);
  std::int64_t uncovered = N;
  for (std::int64_t i = 0; uncovered > 0; ++i) {
    if (i == max_translates) throw ResourceError("covering did not finish within the translate budget");
    const auto t = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(N)));
    for (auto x : s.elements()) {
      auto& l = label[static_cast<std::size_t>((x + t) % N)];
      if (l < 0) {
        l = i;
        --uncovered;
      }
    }
  }
  return colorings::Coloring::from_labels(colorings::Ambient::cyclic, label);
}

}  // namespace addcomb::sets
