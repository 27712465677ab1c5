#include "addcomb/sets/residue_set.hpp"

#include <algorithm>

#include "addcomb/core/errors.hpp"

namespace addcomb::sets {

ResidueSet::ResidueSet(std::int64_t m, std::vector<std::int64_t> elements) : m_(m), elements_(std::move(elements)) {
  if (m_ < 1) throw InvalidArgument("modulus must be >= 1");
  std::sort(elements_.begin(), elements_.end());
  if (std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end())
    throw InvalidArgument("residue set has duplicate elements");
  if (!elements_.empty() && (elements_.front() < 0 || elements_.back() >= m_))
    throw InvalidArgument("residue outside [0, m)");
}

bool ResidueSet::contains(std::int64_t x) const { return std::binary_search(elements_.begin(), elements_.end(), x); }

}  // namespace addcomb::sets
