#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace addcomb::core {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Rational make_rational(std::int64_t num, std::int64_t den = 1);

// "p/q", "p", or "-p/q". Throws InvalidArgument on anything else.
Rational parse_rational(std::string_view text);

std::string to_string(const BigInt& v);
std::string to_string(const Rational& v);
double to_double(const Rational& v);

// Narrowing with an overflow check; throws ResourceError when out of range.
std::int64_t to_int64(const BigInt& v);

BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);

// Nonnegative residue of v mod m (m > 0).
inline std::int64_t mod(std::int64_t v, std::int64_t m) {
  std::int64_t r = v % m;
  return r < 0 ? r + m : r;
}

// (a * b) mod m without overflow for m < 2^62.
inline std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>((static_cast<__int128>(mod(a, m)) * mod(b, m)) % m);
}

std::int64_t powmod(std::int64_t base, std::uint64_t exp, std::int64_t m);

// Inverse of a mod m (m >= 1), or nullopt when gcd(a, m) != 1.
std::optional<std::int64_t> modinv(std::int64_t a, std::int64_t m);

}  // namespace addcomb::core
