#pragma once

// Symbol layer: patterns a = (a_1 < ... < a_k), their coefficient vectors,
// the linear "binomial" equations they induce, trivial solutions and
// pairings. Everything here is exact (arbitrary-precision where the values
// grow factorially) and free of side effects.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "addcomb/core/rational.hpp"

namespace addcomb::core {

class PatternSpec {
 public:
  // Throws InvalidArgument unless k >= 3 and coordinates strictly increase.
  explicit PatternSpec(std::vector<std::int64_t> a);

  // (0, 1, ..., k-1).
  static PatternSpec arithmetic(int k);
  // Comma-separated integers, e.g. "1,2,10,16,17,20".
  static PatternSpec parse(std::string_view csv);

  std::size_t k() const noexcept { return a_.size(); }
  std::span<const std::int64_t> a() const noexcept { return a_; }
  std::int64_t operator[](std::size_t i) const { return a_[i]; }

  // Translated so that a_1 = 0. Every predicate here is translation invariant.
  PatternSpec normalized() const;
  std::int64_t width() const noexcept { return a_.back() - a_.front(); }
  bool is_arithmetic() const noexcept;

  std::string to_string() const;

  friend bool operator==(const PatternSpec&, const PatternSpec&) = default;

 private:
  std::vector<std::int64_t> a_;
};

enum class SystemSource { k_binomial, a_binomial, custom };

// sum_i e_i n_i = 0 with e canonicalized: nonzero entries, sum zero,
// gcd 1, e_1 > 0.
struct BinomialSystem {
  std::vector<BigInt> e;
  SystemSource source = SystemSource::custom;

  std::size_t k() const noexcept { return e.size(); }
  // Throws ResourceError if a coefficient exceeds 64 bits.
  std::vector<std::int64_t> coefficients() const;
  // sum |e_i|
  BigInt l1_norm() const;

  // Divides by the gcd and flips the sign so e_1 > 0. Throws InvalidArgument
  // on a zero entry or a nonzero sum.
  static BinomialSystem canonical(std::vector<BigInt> e, SystemSource source);

  friend bool operator==(const BinomialSystem& x, const BinomialSystem& y) { return x.e == y.e; }
};

// Fixed-point-free involution on {0, ..., k-1}, stored as sorted pairs (i < j).
struct Pairing {
  std::vector<std::pair<int, int>> pairs;

  int partner(int i) const;
  std::string to_string() const;  // 1-based, e.g. "{1<->6, 2<->3, 4<->5}"

  friend bool operator==(const Pairing&, const Pairing&) = default;
  friend auto operator<=>(const Pairing&, const Pairing&) = default;
};

BinomialSystem k_binomial_system(int k);

// c_i = prod_{j != i} (a_i - a_j)
std::vector<BigInt> a_coefficients(const PatternSpec& spec);

// Integer form of sum_i n_i / c_i = 0.
BinomialSystem a_binomial_system(const PatternSpec& spec);

bool is_trivial_solution(const BinomialSystem& sys, std::span<const std::int64_t> n);

// All index sets I (0-based, ascending) with |I| >= min_size and
// sum_{i in I} e_i = 0, in lexicographic order.
std::vector<std::vector<int>> zero_sum_subsets(const BinomialSystem& sys, int min_size);

// Every pairing f with c_i = -c_{f(i)}. Throws InvalidArgument for odd k
// and ResourceError above k = 16.
std::vector<Pairing> enumerate_pairings(const PatternSpec& spec);

bool is_symmetric(const PatternSpec& spec);
Pairing symmetric_pairing(int k);

// (n1, n2, n3) in Z/NZ, not all equal, with a n1 + b n2 = (a+b) n3 for some
// a, b >= 1, a + b <= k - 1.
bool is_k_pattern(std::int64_t n1, std::int64_t n2, std::int64_t n3, int k, std::int64_t modulus);

// Common difference d of a k-AP with jumps of size p (steps in {d, d+p}),
// or nullopt. modulus == 0 means the ambient group is Z.
std::optional<std::int64_t> ap_with_jumps(std::span<const std::int64_t> n, std::int64_t p,
                                          std::int64_t modulus = 0);

struct RecoveredAp {
  std::vector<std::int64_t> terms;
  std::int64_t difference;
};

// Returns n unchanged when it is already an AP. Otherwise uses the
// a!-congruence certificate: if n is an AP with jumps of size p and
// either n_1 = n_k (mod a!) or n_1 = n_{k''}, n_{k'} = n_k (mod a!) for some
// 1 < k' < k'' < k, then n is a genuine AP. Returns nullopt when no
// certificate applies. Throws PreconditionError if k > a, gcd(p, a!) != 1,
// or the modulus is not a multiple of a!.
std::optional<RecoveredAp> recover_ap(std::span<const std::int64_t> n, std::int64_t p, int a,
                                      std::int64_t modulus = 0);

// Structure of a pairing: a crossing (i1 < i2 < i3 < i4, f(i1)=i3, f(i2)=i4),
// an asymmetric nesting (f(i1)=i4, f(i2)=i3, a_i1 + a_i4 != a_i2 + a_i3),
// or the symmetric pairing of a symmetric pattern.
struct PairingStructure {
  enum class Kind { crossing, asymmetric_nesting, symmetric } kind;
  std::vector<int> indices;  // 0-based (i1, i2, i3, i4), empty for symmetric
};
PairingStructure classify_pairing(const PatternSpec& spec, const Pairing& pairing);

// sum_i (x + a_i y)^(k-2) / c_i; identically zero as a polynomial.
Rational binomial_identity_residual(const PatternSpec& spec, const Rational& x, const Rational& y);

BigInt factorial(int n);
BigInt binomial(int n, int r);

}  // namespace addcomb::core
