#pragma once

#include <cstdint>
#include <optional>

#include "addcomb/colorings/coloring.hpp"
#include "addcomb/core/pattern.hpp"

namespace addcomb::colorings {

enum class SearchMode { exhaustive, randomized };
enum class SearchStatus { found, none_exists, exhausted };

const char* search_status_name(SearchStatus s) noexcept;

struct SearchRequest {
  std::int64_t n = 0;
  core::PatternSpec spec = core::PatternSpec::arithmetic(4);  // must be symmetric
  int r = 1;
  Ambient ambient = Ambient::cyclic;
  SearchMode mode = SearchMode::exhaustive;
  // Exhaustive: search-tree nodes; randomized: resampling steps. 0 = unlimited
  // (exhaustive only).
  std::uint64_t budget = 0;
  std::uint64_t seed = 0;
  int workers = 1;
  std::int64_t exhaustive_cap = 64;
};

struct SearchResult {
  SearchStatus status = SearchStatus::exhausted;
  std::optional<Coloring> coloring;  // set iff status == found
  std::uint64_t work = 0;            // nodes or resampling steps spent
};

// Finds a coloring with at most r colors and no symmetrically colored
// spec-AP (d != 0). Exhaustive mode returns the lexicographically least
// canonical coloring, independent of the worker count.
SearchResult search_coloring(const SearchRequest& req);

}  // namespace addcomb::colorings
