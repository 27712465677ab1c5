#include "addcomb/core/rational.hpp"

#include <tuple>

#include <charconv>
#include <limits>

#include "addcomb/core/errors.hpp"

namespace addcomb::core {

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InvalidArgument("rational with zero denominator");
  return Rational(BigInt(num), BigInt(den));
}

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
  if (text.empty()) throw InvalidArgument("empty integer in rational '" + std::string(whole) + "'");
  std::size_t i = 0;
  bool neg = false;
  if (text[0] == '-' || text[0] == '+') {
    neg = text[0] == '-';
    i = 1;
  }
  if (i == text.size()) throw InvalidArgument("bad rational '" + std::string(whole) + "'");
  BigInt v = 0;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c < '0' || c > '9') throw InvalidArgument("bad rational '" + std::string(whole) + "'");
    v = v * 10 + (c - '0');
  }
  return neg ? BigInt(-v) : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  BigInt num = parse_integer(text.substr(0, slash), text);
  BigInt den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string to_string(const BigInt& v) { return v.str(); }

std::string to_string(const Rational& v) {
  auto num = boost::multiprecision::numerator(v);
  auto den = boost::multiprecision::denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double to_double(const Rational& v) { return v.convert_to<double>(); }

std::int64_t to_int64(const BigInt& v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw ResourceError("integer " + v.str() + " does not fit in 64 bits");
  return v.convert_to<std::int64_t>();
}

BigInt gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }

BigInt lcm(const BigInt& a, const BigInt& b) {
  if (a == 0 || b == 0) return 0;
  BigInt g = gcd(a, b);
  BigInt r = (a / g) * b;
  return r < 0 ? BigInt(-r) : r;
}

std::int64_t powmod(std::int64_t base, std::uint64_t exp, std::int64_t m) {
  if (m == 1) return 0;
  std::int64_t result = 1;
  std::int64_t b = mod(base, m);
  while (exp > 0) {
    if (exp & 1u) result = mulmod(result, b, m);
    b = mulmod(b, b, m);
    exp >>= 1;
  }
  return result;
}

std::optional<std::int64_t> modinv(std::int64_t a, std::int64_t m) {
  if (m == 1) return 0;
  std::int64_t r0 = m, r1 = mod(a, m), t0 = 0, t1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::pair(r1, r0 - q * r1);
    std::tie(t0, t1) = std::pair(t1, t0 - q * t1);
  }
  if (r0 != 1) return std::nullopt;
  return mod(t0, m);
}

}  // namespace addcomb::core
