#pragma once

#include <cstdint>

namespace pogroup {

/// Bounds for every enumerative procedure. Identical budgets and inputs give
/// identical results: max_candidates caps canonical-order searches,
/// max_word_len caps word enumeration, and max_abs_coord with seed drive the
/// randomized instance sweeps.
struct SearchBudget {
  std::int64_t max_abs_coord = 4;
  std::int64_t max_word_len = 6;
  std::int64_t max_candidates = 200000;
  std::uint64_t seed = 0;
};

} // namespace pogroup
