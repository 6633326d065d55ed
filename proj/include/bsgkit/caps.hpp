#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace bsg {

/// Resource limits for the exhaustive parts of the toolkit.
struct Caps {
  std::uint64_t enumeration_budget = 10'000'000;  // octopus witnesses per support
  std::size_t convolution_cells = 100'000'000;    // representation grid
  std::uint64_t exhaustive_supports = 10'000;     // verify every support up to this many
  std::uint64_t support_samples = 1'000;          // otherwise sample this many
  std::uint64_t sample_seed = 0x5eed;
  unsigned workers = 1;
};

/// Applies "key=value,key=value" overrides (keys: enum, conv, exhaust,
/// samples, seed). Throws ConfigInvalid on unknown keys or bad values.
Caps apply_caps_overrides(Caps caps, std::string_view spec);

}  // namespace bsg
