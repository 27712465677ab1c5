#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace addcomb::sets {

// Sorted distinct residues in [0, m).
class ResidueSet {
 public:
  // Sorts; throws InvalidArgument on duplicates, out-of-range values or m < 1.
  ResidueSet(std::int64_t m, std::vector<std::int64_t> elements);

  std::int64_t modulus() const noexcept { return m_; }
  std::span<const std::int64_t> elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }
  bool contains(std::int64_t x) const;
  std::int64_t operator[](std::size_t i) const { return elements_[i]; }

  friend bool operator==(const ResidueSet&, const ResidueSet&) = default;

 private:
  std::int64_t m_;
  std::vector<std::int64_t> elements_;
};

}  // namespace addcomb::sets
