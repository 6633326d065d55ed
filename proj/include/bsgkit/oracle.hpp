#pragma once

#include "bsgkit/instance.hpp"

#include <optional>
#include <vector>

namespace bsg {

struct BestSubsets {
  std::vector<IndexSet> subsets;
  std::size_t sumset_size = 0;
};

/// Exhaustive minimum of |A'_1 + ... + A'_r| over A'_i in A_i with
/// |A'_i| >= min_sizes[i]; ties go to the lexicographically least choice.
/// nullopt when some floor exceeds its part. Throws TooLarge when
/// sum |A_i| > 24.
std::optional<BestSubsets> brute_force_best_subsets(const Instance& inst, const std::vector<std::size_t>& min_sizes);

}  // namespace bsg
