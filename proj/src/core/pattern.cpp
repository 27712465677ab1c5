#include "addcomb/core/pattern.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "addcomb/core/errors.hpp"

namespace addcomb::core {

PatternSpec::PatternSpec(std::vector<std::int64_t> a) : a_(std::move(a)) {
  if (a_.size() < 3) throw InvalidArgument("pattern needs k >= 3 coordinates");
  for (std::size_t i = 1; i < a_.size(); ++i)
    if (a_[i] <= a_[i - 1]) throw InvalidArgument("pattern coordinates must strictly increase");
}

PatternSpec PatternSpec::arithmetic(int k) {
  if (k < 3) throw InvalidArgument("k-AP needs k >= 3");
  std::vector<std::int64_t> a(static_cast<std::size_t>(k));
  std::iota(a.begin(), a.end(), 0);
  return PatternSpec(std::move(a));
}

PatternSpec PatternSpec::parse(std::string_view csv) {
  std::vector<std::int64_t> a;
  std::string token;
  std::istringstream in{std::string(csv)};
  while (std::getline(in, token, ',')) {
    std::size_t pos = 0;
    try {
      a.push_back(std::stoll(token, &pos));
    } catch (const std::exception&) {
      throw InvalidArgument("bad pattern coordinate '" + token + "'");
    }
    if (token.find_first_not_of(" \t", pos) != std::string::npos)
      throw InvalidArgument("bad pattern coordinate '" + token + "'");
  }
  return PatternSpec(std::move(a));
}

PatternSpec PatternSpec::normalized() const {
  std::vector<std::int64_t> b(a_);
  for (auto& v : b) v -= a_.front();
  return PatternSpec(std::move(b));
}

bool PatternSpec::is_arithmetic() const noexcept {
  for (std::size_t i = 1; i < a_.size(); ++i)
    if (a_[i] - a_[i - 1] != a_[1] - a_[0]) return false;
  return true;
}

std::string PatternSpec::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(a_[i]);
  }
  return s;
}

std::vector<std::int64_t> BinomialSystem::coefficients() const {
  std::vector<std::int64_t> out;
  out.reserve(e.size());
  for (const auto& v : e) out.push_back(to_int64(v));
  return out;
}

BigInt BinomialSystem::l1_norm() const {
  BigInt s = 0;
  for (const auto& v : e) s += abs(v);
  return s;
}

BinomialSystem BinomialSystem::canonical(std::vector<BigInt> e, SystemSource source) {
  if (e.empty()) throw InvalidArgument("empty binomial system");
  BigInt sum = 0;
  BigInt g = 0;
  for (const auto& v : e) {
    if (v == 0) throw InvalidArgument("binomial system coefficients must be nonzero");
    sum += v;
    g = gcd(g, abs(v));
  }
  if (sum != 0) throw InvalidArgument("binomial system coefficients must sum to zero");
  const bool flip = e.front() < 0;
  for (auto& v : e) {
    v /= g;
    if (flip) v = -v;
  }
  return BinomialSystem{std::move(e), source};
}

int Pairing::partner(int i) const {
  for (const auto& [x, y] : pairs) {
    if (x == i) return y;
    if (y == i) return x;
  }
  throw InvalidArgument("index not covered by pairing");
}

std::string Pairing::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(pairs[i].first + 1) + "<->" + std::to_string(pairs[i].second + 1);
  }
  return s + "}";
}

BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  BigInt v = 1;
  for (int i = 1; i <= r; ++i) v = v * (n - r + i) / i;
  return v;
}

BinomialSystem k_binomial_system(int k) {
  if (k < 3) throw InvalidArgument("k-binomial system needs k >= 3");
  std::vector<BigInt> e;
  for (int i = 1; i <= k; ++i) {
    BigInt c = binomial(k - 1, i - 1);
    e.push_back((i % 2 == 0) ? BigInt(c) : BigInt(-c));
  }
  return BinomialSystem::canonical(std::move(e), SystemSource::k_binomial);
}

std::vector<BigInt> a_coefficients(const PatternSpec& spec) {
  std::vector<BigInt> c;
  const auto a = spec.a();
  for (std::size_t i = 0; i < a.size(); ++i) {
    BigInt p = 1;
    for (std::size_t j = 0; j < a.size(); ++j)
      if (j != i) p *= BigInt(a[i] - a[j]);
    c.push_back(p);
  }
  return c;
}

BinomialSystem a_binomial_system(const PatternSpec& spec) {
  auto c = a_coefficients(spec);
  BigInt l = 1;
  for (const auto& v : c) l = lcm(l, v);
  std::vector<BigInt> e;
  for (const auto& v : c) e.push_back(l / v);
  return BinomialSystem::canonical(std::move(e), SystemSource::a_binomial);
}

bool is_trivial_solution(const BinomialSystem& sys, std::span<const std::int64_t> n) {
  if (n.size() != sys.k()) throw InvalidArgument("solution length does not match system");
  std::map<std::int64_t, BigInt> per_value;
  for (std::size_t i = 0; i < n.size(); ++i) per_value[n[i]] += sys.e[i];
  return std::all_of(per_value.begin(), per_value.end(), [](const auto& kv) { return kv.second == 0; });
}

std::vector<std::vector<int>> zero_sum_subsets(const BinomialSystem& sys, int min_size) {
  const int k = static_cast<int>(sys.k());
  if (k > 24) throw ResourceError("zero-sum subset enumeration capped at k = 24");
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  // Depth-first over ascending index lists yields lexicographic order directly.
  std::function<void(int, BigInt)> rec = [&](int start, BigInt sum) {
    if (static_cast<int>(current.size()) >= min_size && sum == 0) out.push_back(current);
    for (int i = start; i < k; ++i) {
      current.push_back(i);
      rec(i + 1, sum + sys.e[static_cast<std::size_t>(i)]);
      current.pop_back();
    }
  };
  rec(0, 0);
  return out;
}

std::vector<Pairing> enumerate_pairings(const PatternSpec& spec) {
  const int k = static_cast<int>(spec.k());
  if (k % 2 != 0) throw InvalidArgument("pairings need even k");
  if (k > 16) throw ResourceError("pairing enumeration capped at k = 16");
  const auto c = a_coefficients(spec);
  std::vector<Pairing> out;
  std::vector<int> mate(static_cast<std::size_t>(k), -1);
  std::function<void()> rec = [&]() {
    int i = 0;
    while (i < k && mate[static_cast<std::size_t>(i)] >= 0) ++i;
    if (i == k) {
      Pairing p;
      for (int x = 0; x < k; ++x)
        if (x < mate[static_cast<std::size_t>(x)]) p.pairs.emplace_back(x, mate[static_cast<std::size_t>(x)]);
      out.push_back(std::move(p));
      return;
    }
    for (int j = i + 1; j < k; ++j) {
      if (mate[static_cast<std::size_t>(j)] >= 0) continue;
      if (c[static_cast<std::size_t>(i)] != -c[static_cast<std::size_t>(j)]) continue;
      mate[static_cast<std::size_t>(i)] = j;
      mate[static_cast<std::size_t>(j)] = i;
      rec();
      mate[static_cast<std::size_t>(i)] = mate[static_cast<std::size_t>(j)] = -1;
    }
  };
  rec();
  std::sort(out.begin(), out.end());
  return out;
}

bool is_symmetric(const PatternSpec& spec) {
  const auto a = spec.a();
  const std::size_t k = a.size();
  if (k % 2 != 0) return false;
  for (std::size_t i = 1; i < k / 2; ++i)
    if (a[i] + a[k - 1 - i] != a[0] + a[k - 1]) return false;
  return true;
}

Pairing symmetric_pairing(int k) {
  if (k % 2 != 0) throw InvalidArgument("symmetric pairing needs even k");
  Pairing p;
  for (int i = 0; i < k / 2; ++i) p.pairs.emplace_back(i, k - 1 - i);
  return p;
}

bool is_k_pattern(std::int64_t n1, std::int64_t n2, std::int64_t n3, int k, std::int64_t modulus) {
  if (k < 3) throw InvalidArgument("k-pattern needs k >= 3");
  if (modulus < 1) throw InvalidArgument("modulus must be positive");
  n1 = mod(n1, modulus);
  n2 = mod(n2, modulus);
  n3 = mod(n3, modulus);
  if (n1 == n2 && n2 == n3) return false;
  for (std::int64_t a = 1; a < k - 1; ++a)
    for (std::int64_t b = 1; a + b <= k - 1; ++b) {
      __int128 v = static_cast<__int128>(a) * n1 + static_cast<__int128>(b) * n2 -
                   static_cast<__int128>(a + b) * n3;
      if (v % modulus == 0) return true;
    }
  return false;
}

std::optional<std::int64_t> ap_with_jumps(std::span<const std::int64_t> n, std::int64_t p,
                                          std::int64_t modulus) {
  if (n.size() < 2) throw InvalidArgument("AP with jumps needs at least two terms");
  auto norm = [&](std::int64_t v) { return modulus > 0 ? mod(v, modulus) : v; };
  const std::int64_t first = n[1] - n[0];
  for (std::int64_t d : {first, first - p}) {
    bool ok = true;
    for (std::size_t i = 0; i + 1 < n.size() && ok; ++i) {
      std::int64_t step = norm(n[i + 1] - n[i]);
      ok = step == norm(d) || step == norm(d + p);
    }
    if (ok) return norm(d);
  }
  return std::nullopt;
}

std::optional<RecoveredAp> recover_ap(std::span<const std::int64_t> n, std::int64_t p, int a,
                                      std::int64_t modulus) {
  const int k = static_cast<int>(n.size());
  if (k < 2) throw InvalidArgument("need at least two terms");
  if (k > a) throw PreconditionError("recover_ap requires k <= a");
  if (a > 20) throw ResourceError("a! overflows 64 bits for a > 20");
  const std::int64_t fact = to_int64(factorial(a));
  if (std::gcd(mod(p, fact), fact) != 1) throw PreconditionError("p must be coprime to a!");
  if (modulus != 0 && modulus % fact != 0)
    throw PreconditionError("modulus must be a multiple of a!");
  auto d = ap_with_jumps(n, p, modulus);
  if (!d) return std::nullopt;
  auto norm = [&](std::int64_t v) { return modulus > 0 ? mod(v, modulus) : v; };
  const std::int64_t diff = norm(n[1] - n[0]);
  auto is_ap = [&] {
    for (int i = 0; i + 1 < k; ++i)
      if (norm(n[static_cast<std::size_t>(i + 1)] - n[static_cast<std::size_t>(i)]) != diff) return false;
    return true;
  };
  // No jumps taken: already a genuine AP.
  if (is_ap()) return RecoveredAp{std::vector<std::int64_t>(n.begin(), n.end()), diff};
  auto congruent = [&](std::int64_t x, std::int64_t y) { return mod(x - y, fact) == 0; };
  bool certified = congruent(n[0], n[static_cast<std::size_t>(k - 1)]);
  for (int k1 = 1; k1 < k - 1 && !certified; ++k1)
    for (int k2 = k1 + 1; k2 < k - 1 && !certified; ++k2)
      certified = congruent(n[0], n[static_cast<std::size_t>(k2)]) &&
                  congruent(n[static_cast<std::size_t>(k1)], n[static_cast<std::size_t>(k - 1)]);
  if (!certified) return std::nullopt;
  if (!is_ap()) throw std::logic_error("congruence certificate held but terms are not an AP");
  return RecoveredAp{std::vector<std::int64_t>(n.begin(), n.end()), diff};
}

PairingStructure classify_pairing(const PatternSpec& spec, const Pairing& pairing) {
  const int k = static_cast<int>(spec.k());
  const auto a = spec.a();
  for (const auto& [i1, i3] : pairing.pairs)
    for (const auto& [i2, i4] : pairing.pairs)
      if (i1 < i2 && i2 < i3 && i3 < i4)
        return {PairingStructure::Kind::crossing, {i1, i2, i3, i4}};
  for (const auto& [i1, i4] : pairing.pairs)
    for (const auto& [i2, i3] : pairing.pairs)
      if (i1 < i2 && i3 < i4 && i2 < i3 &&
          a[static_cast<std::size_t>(i1)] + a[static_cast<std::size_t>(i4)] !=
              a[static_cast<std::size_t>(i2)] + a[static_cast<std::size_t>(i3)])
        return {PairingStructure::Kind::asymmetric_nesting, {i1, i2, i3, i4}};
  if (is_symmetric(spec) && pairing == symmetric_pairing(k))
    return {PairingStructure::Kind::symmetric, {}};
  throw std::logic_error("pairing " + pairing.to_string() + " fits no structural case");
}

Rational binomial_identity_residual(const PatternSpec& spec, const Rational& x, const Rational& y) {
  const auto c = a_coefficients(spec);
  const auto deg = static_cast<unsigned>(spec.k() - 2);
  Rational sum = 0;
  for (std::size_t i = 0; i < spec.k(); ++i) {
    Rational base = x + Rational(spec[i]) * y;
    Rational term = 1;
    for (unsigned t = 0; t < deg; ++t) term *= base;
    sum += term / Rational(c[i]);
  }
  return sum;
}

}  // namespace addcomb::core
