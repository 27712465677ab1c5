#include "addcomb/colorings/coloring.hpp"

#include <algorithm>
#include <unordered_map>

#include "addcomb/core/errors.hpp"
#include "addcomb/core/rational.hpp"

namespace addcomb::colorings {

const char* ambient_name(Ambient a) noexcept { return a == Ambient::cyclic ? "cyclic" : "interval"; }

Ambient parse_ambient(std::string_view name) {
  if (name == "cyclic") return Ambient::cyclic;
  if (name == "interval") return Ambient::interval;
  throw InvalidArgument("unknown ambient '" + std::string(name) + "'");
}

Coloring::Coloring(Ambient ambient, std::vector<std::int32_t> colors)
    : ambient_(ambient), colors_(std::move(colors)) {
  if (colors_.empty()) throw InvalidArgument("coloring must have N >= 1");
  const auto [lo, hi] = std::minmax_element(colors_.begin(), colors_.end());
  if (*lo < 1) throw InvalidArgument("color ids must be >= 1");
  std::vector<bool> seen(static_cast<std::size_t>(*hi) + 1, false);
  for (auto c : colors_) seen[static_cast<std::size_t>(c)] = true;
  for (std::int32_t c = 1; c <= *hi; ++c)
    if (!seen[static_cast<std::size_t>(c)])
      throw InvalidArgument("color ids must be exactly 1..r; id " + std::to_string(c) + " unused");
  r_ = *hi;
}

Coloring Coloring::from_labels(Ambient ambient, std::span<const std::int64_t> labels) {
  std::unordered_map<std::int64_t, std::int32_t> ids;
  std::vector<std::int32_t> colors;
  colors.reserve(labels.size());
  for (auto v : labels) {
    auto [it, inserted] = ids.try_emplace(v, static_cast<std::int32_t>(ids.size() + 1));
    colors.push_back(it->second);
  }
  return Coloring(ambient, std::move(colors));
}

Coloring Coloring::from_digits(Ambient ambient, std::string_view digits) {
  std::vector<std::int32_t> colors;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    char ch = digits[i];
    int v;
    if (ch >= '0' && ch <= '9') v = ch - '0';
    else if (ch >= 'a' && ch <= 'z') v = ch - 'a' + 10;
    else if (ch >= 'A' && ch <= 'Z') v = ch - 'A' + 10;
    else throw FormatError(std::string("bad color digit '") + ch + "'", 1, static_cast<int>(i) + 1);
    colors.push_back(v);
  }
  return Coloring(ambient, std::move(colors));
}

Coloring Coloring::constant(Ambient ambient, std::int64_t n) {
  return Coloring(ambient, std::vector<std::int32_t>(static_cast<std::size_t>(n), 1));
}

Coloring Coloring::all_distinct(Ambient ambient, std::int64_t n) {
  std::vector<std::int32_t> c(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = static_cast<std::int32_t>(i + 1);
  return Coloring(ambient, std::move(c));
}

std::int32_t Coloring::at_mod(std::int64_t n) const {
  return colors_[static_cast<std::size_t>(core::mod(n, size()))];
}

std::string Coloring::to_digits() const {
  if (r_ > 35) return {};
  std::string s;
  s.reserve(colors_.size());
  for (auto c : colors_) s.push_back(c < 10 ? static_cast<char>('0' + c) : static_cast<char>('a' + c - 10));
  return s;
}

}  // namespace addcomb::colorings
