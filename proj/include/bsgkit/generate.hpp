#pragma once

#include "bsgkit/instance.hpp"

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace bsg {

namespace family {
/// Arithmetic-progression parts with every tuple an edge.
struct Complete {};
/// Random distinct parts; tuples kept with probability 1/K, then topped up
/// to ceil(prod |A_i| / K) edges.
struct RandomDensity {
  Rational K{2};
};
/// Parts are an AP prefix of length ceil(ap_fraction n) followed by random
/// elements; edges are the tuples whose sum lies in {0, g, ..., (t-1)g} with
/// t = floor(target_C n), topped up to ceil(prod |A_i| / K) edges.
struct Planted {
  Rational ap_fraction{1, 2};
  Rational target_C{2};
  Rational K{2};
};
/// AP parts, complete hypergraph minus floor(delta prod |A_i|) random tuples.
struct Dense {
  Rational delta{1, 100};
};
}  // namespace family

using Family = std::variant<family::Complete, family::RandomDensity, family::Planted, family::Dense>;

struct GenConfig {
  std::vector<std::uint32_t> sizes;  // one per part
  GroupSpec group = make_group({0});
  std::uint64_t seed = 0;
  Family family = family::Complete{};
};

std::string family_name(const Family& f);

/// Throws ConfigInvalid on bad sizes or parameters, or when a finite group
/// is too small for the requested parts.
Instance gen_instance(const GenConfig& cfg);

}  // namespace bsg
