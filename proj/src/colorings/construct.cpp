#include "addcomb/colorings/construct.hpp"

#include <limits>
#include <numeric>
#include <unordered_map>

#include "addcomb/core/errors.hpp"
#include "addcomb/core/pattern.hpp"

namespace addcomb::colorings {
namespace {

std::int64_t checked_pow(std::int64_t base, int exp, std::int64_t cap, const char* what) {
  std::int64_t v = 1;
  for (int i = 0; i < exp; ++i) {
    if (v > cap / base) throw ResourceError(std::string(what) + " exceeds " + std::to_string(cap));
    v *= base;
  }
  return v;
}

}  // namespace

Coloring tensor_power(const Coloring& c, int ell) {
  if (ell < 1) throw InvalidArgument("ell must be >= 1");
  if (c.ambient() != Ambient::cyclic) throw InvalidArgument("tensor power needs a cyclic coloring");
  const std::int64_t N = c.size();
  const std::int64_t total = checked_pow(N, ell, kMaxConstructedSize, "N^ell");
  checked_pow(c.r(), ell, std::numeric_limits<std::int32_t>::max(), "r^ell");
  const std::int32_t r = c.r();
  std::vector<std::int32_t> out(static_cast<std::size_t>(total));
  for (std::int64_t n = 0; n < total; ++n) {
    std::int64_t x = n;
    std::int32_t id = 0;
    std::int32_t scale = 1;
    for (int j = 0; j < ell; ++j) {
      id += (c[x % N] - 1) * scale;
      x /= N;
      scale *= r;
    }
    out[static_cast<std::size_t>(n)] = id + 1;
  }
  return Coloring(Ambient::cyclic, std::move(out));
}

Coloring product_coloring(const Coloring& c1, const Coloring& c2) {
  if (c1.ambient() != c2.ambient() || c1.size() != c2.size())
    throw InvalidArgument("product coloring needs identical ambient and size");
  std::vector<std::int64_t> labels(static_cast<std::size_t>(c1.size()));
  for (std::int64_t n = 0; n < c1.size(); ++n)
    labels[static_cast<std::size_t>(n)] = static_cast<std::int64_t>(c1[n]) * (c2.r() + 1) + c2[n];
  return Coloring::from_labels(c1.ambient(), labels);
}

Coloring mod_behrend_coloring(std::int64_t M, int m, int a_bound) {
  if (M < 2 || m < 1 || a_bound < 4) throw InvalidArgument("need M >= 2, m >= 1, a_bound >= 4");
  if (a_bound > 20) throw InvalidArgument("a_bound must be <= 20");
  const std::int64_t fact = static_cast<std::int64_t>(core::factorial(a_bound));
  if (std::gcd(M, fact) != 1)
    throw PreconditionError("M = " + std::to_string(M) + " is not coprime to " + std::to_string(a_bound) + "!");
  const std::int64_t N = checked_pow(M, m, kMaxConstructedSize, "M^m");
  const std::int64_t residues = std::min(M, fact);
  std::vector<std::int64_t> labels(static_cast<std::size_t>(N));
  for (std::int64_t n = 0; n < N; ++n) {
    std::int64_t x = n, psi = 1, chi = 0, scale = 1;
    for (int j = 0; j < m; ++j) {
      const std::int64_t digit = x % M;
      x /= M;
      psi += digit * digit;
      chi += (digit % fact) * scale;
      scale *= residues;
    }
    labels[static_cast<std::size_t>(n)] = psi * N + chi;
  }
  return Coloring::from_labels(Ambient::cyclic, labels);
}

Coloring copies_to_cyclic(const Coloring& c, int copies) {
  if (copies < 1) throw InvalidArgument("copies must be >= 1");
  const std::int64_t N = c.size();
  if (N * copies > kMaxConstructedSize) throw ResourceError("copies * N too large");
  std::vector<std::int32_t> out;
  out.reserve(static_cast<std::size_t>(N * copies));
  for (int j = 0; j < copies; ++j)
    for (std::int64_t n = 0; n < N; ++n) out.push_back(c[n] + j * c.r());
  return Coloring(Ambient::cyclic, std::move(out));
}

}  // namespace addcomb::colorings
