#pragma once

#include "bsgkit/numeric.hpp"

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace bsg {

/// The generator whose raw 64-bit output stream is fixed by the C++
/// standard; range reduction below is done by hand so that draws are
/// reproducible across standard libraries and languages.
using Prng = std::mt19937_64;
inline constexpr std::string_view kPrngName = "mt19937_64";

/// Uniform integer in [0, bound) by rejection on the top of the range.
inline std::uint64_t uniform_below(Prng& rng, std::uint64_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound + 1) % bound;
  for (;;) {
    std::uint64_t x = rng();
    if (x <= limit) return x % bound;
  }
}

/// True with probability exactly p = a/b (requires 0 <= p <= 1 and b < 2^64).
inline bool bernoulli(Prng& rng, const Rational& p) {
  const auto b = static_cast<std::uint64_t>(den(p));
  const auto a = static_cast<std::uint64_t>(num(p));
  return uniform_below(rng, b) < a;
}

/// Fisher-Yates from the back.
template <class T>
void shuffle(Prng& rng, std::vector<T>& items) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(uniform_below(rng, i));
    std::swap(items[i - 1], items[j]);
  }
}

}  // namespace bsg
