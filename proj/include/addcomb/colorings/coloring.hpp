#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace addcomb::colorings {

enum class Ambient { cyclic, interval };

const char* ambient_name(Ambient a) noexcept;
Ambient parse_ambient(std::string_view name);

// A map from Z/NZ (cyclic) or {0, ..., N-1} (interval) to color ids 1..r,
// where every id in 1..r is used.
class Coloring {
 public:
  // Throws InvalidArgument if the ids are not exactly {1, ..., r}.
  Coloring(Ambient ambient, std::vector<std::int32_t> colors);

  // Relabels arbitrary labels by order of first appearance.
  static Coloring from_labels(Ambient ambient, std::span<const std::int64_t> labels);
  // "1333221232131211333233": one base-36 digit per position.
  static Coloring from_digits(Ambient ambient, std::string_view digits);
  static Coloring constant(Ambient ambient, std::int64_t n);
  static Coloring all_distinct(Ambient ambient, std::int64_t n);

  Ambient ambient() const noexcept { return ambient_; }
  std::int64_t size() const noexcept { return static_cast<std::int64_t>(colors_.size()); }
  int r() const noexcept { return r_; }
  std::span<const std::int32_t> colors() const noexcept { return colors_; }
  std::int32_t operator[](std::int64_t n) const { return colors_[static_cast<std::size_t>(n)]; }
  // Reduces n mod N first (cyclic use).
  std::int32_t at_mod(std::int64_t n) const;

  // Base-36 digits when r <= 35, otherwise empty.
  std::string to_digits() const;

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  Ambient ambient_;
  std::vector<std::int32_t> colors_;
  int r_ = 0;
};

// Counterexample certificate for a verifier.
struct Witness {
  std::string kind;                   // e.g. "symmetric-ap", "abab", "mono-k-pattern"
  std::int64_t n = 0;                 // base point (pattern normalized so a_1 = 0)
  std::int64_t d = 0;                 // common difference
  std::vector<std::int64_t> pattern;  // the a-tuple used, normalized
  std::vector<std::int64_t> points;
  std::vector<std::int32_t> colors;
  std::string detail;                 // clause that fired (pairing, subset, coefficients)
};

using Verdict = std::optional<Witness>;  // nullopt means the coloring passed

}  // namespace addcomb::colorings
