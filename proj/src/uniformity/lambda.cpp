#include "addcomb/uniformity/lambda.hpp"

#include <algorithm>

#include "addcomb/core/errors.hpp"
#include "addcomb/simd/kernels.hpp"

namespace addcomb::uniformity {
namespace {

std::vector<std::int64_t> offsets_for(std::span<const std::int64_t> a, std::int64_t d, std::int64_t N) {
  std::vector<std::int64_t> o(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) o[i] = core::mulmod(a[i], d, N);
  return o;
}

LambdaValue lambda_bits(std::span<const GridFunction> fs, std::span<const std::int64_t> a, std::int64_t N) {
  const auto& kern = simd::kernels();
  const std::size_t words = simd::words_for(static_cast<std::uint64_t>(2 * N)) + 1;
  std::vector<std::vector<std::uint64_t>> bits(fs.size(), std::vector<std::uint64_t>(words, 0));
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::int64_t n = 0; n < N; ++n)
      if (fs[i][n] != 0.0)
        for (std::int64_t b : {n, n + N}) bits[i][static_cast<std::size_t>(b / 64)] |= std::uint64_t{1} << (b % 64);
  std::vector<const std::uint64_t*> rows(fs.size());
  for (std::size_t i = 0; i < fs.size(); ++i) rows[i] = bits[i].data();
  std::vector<std::uint64_t> offs(fs.size());
  std::uint64_t count = 0;
  for (std::int64_t d = 0; d < N; ++d) {
    const auto o = offsets_for(a, d, N);
    std::copy(o.begin(), o.end(), offs.begin());
    count += kern.shifted_and_popcount(rows, offs, static_cast<std::uint64_t>(N));
  }
  LambdaValue v;
  v.exact = core::Rational(core::BigInt(count), core::BigInt(N) * N);
  v.value = core::to_double(*v.exact);
  return v;
}

LambdaValue lambda_rational(std::span<const GridFunction> fs, std::span<const std::int64_t> a, std::int64_t N) {
  core::Rational total = 0;
  for (std::int64_t d = 0; d < N; ++d) {
    const auto o = offsets_for(a, d, N);
    for (std::int64_t n = 0; n < N; ++n) {
      core::Rational p = 1;
      for (std::size_t i = 0; i < fs.size() && p != 0; ++i)
        p *= fs[i].exact_values()[static_cast<std::size_t>((n + o[i]) % N)];
      total += p;
    }
  }
  LambdaValue v;
  v.exact = total / (core::BigInt(N) * N);
  v.value = core::to_double(*v.exact);
  return v;
}

LambdaValue lambda_double(std::span<const GridFunction> fs, std::span<const std::int64_t> a, std::int64_t N) {
  const auto& kern = simd::kernels();
  std::vector<std::vector<double>> doubled(fs.size(), std::vector<double>(static_cast<std::size_t>(2 * N)));
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::int64_t n = 0; n < 2 * N; ++n) doubled[i][static_cast<std::size_t>(n)] = fs[i][n % N];
  std::vector<const double*> rows(fs.size());
  double s = 0, c = 0;
  for (std::int64_t d = 0; d < N; ++d) {
    const auto o = offsets_for(a, d, N);
    for (std::size_t i = 0; i < fs.size(); ++i) rows[i] = doubled[i].data() + o[i];
    const double y = kern.shifted_product_sum(rows, N) - c;
    const double t = s + y;
    c = (t - s) - y;
    s = t;
  }
  LambdaValue v;
  v.value = s / (static_cast<double>(N) * static_cast<double>(N));
  return v;
}

}  // namespace

LambdaValue lambda_exact(std::span<const GridFunction> fs, const core::PatternSpec& spec, std::uint64_t budget) {
  const std::size_t k = spec.k();
  if (fs.size() != k) throw InvalidArgument("need one grid function per pattern position");
  const std::int64_t N = fs[0].N();
  for (const auto& f : fs)
    if (f.N() != N) throw InvalidArgument("grid functions have different N");
  const auto work = static_cast<unsigned __int128>(N) * N * k;
  if (work > budget) throw ResourceError("Lambda needs N^2 k = " + std::to_string(static_cast<double>(work)) +
                                         " operations, budget is " + std::to_string(budget));
  const bool all_indicator = std::all_of(fs.begin(), fs.end(), [](const GridFunction& f) { return f.is_indicator(); });
  if (all_indicator) return lambda_bits(fs, spec.a(), N);
  const bool all_exact = std::all_of(fs.begin(), fs.end(), [](const GridFunction& f) { return f.exact(); });
  if (all_exact && work <= kRationalLambdaLimit) return lambda_rational(fs, spec.a(), N);
  return lambda_double(fs, spec.a(), N);
}

LambdaValue lambda_exact(const GridFunction& f, const core::PatternSpec& spec, std::uint64_t budget) {
  std::vector<GridFunction> fs(spec.k(), f);
  return lambda_exact(fs, spec, budget);
}

}  // namespace addcomb::uniformity
