#pragma once

#include "bsgkit/group.hpp"
#include "bsgkit/hypergraph.hpp"
#include "bsgkit/sumsets.hpp"

#include <vector>

namespace bsg {

/// r ground sets of group elements with an r-partite hypergraph whose
/// coordinate i indexes into parts[i].
struct Instance {
  GroupSpec spec;
  std::vector<ElemSet> parts;
  PartiteHypergraph graph;

  std::size_t arity() const noexcept { return parts.size(); }
  std::vector<std::uint32_t> part_sizes() const;
  /// Product of |A_i|.
  BigInt tuple_space() const;
  GroupElem tuple_sum(std::span<const Index> tuple) const;
};

/// Checks r >= 2, shared group, and that the hypergraph matches the parts.
Instance make_instance(GroupSpec spec, std::vector<ElemSet> parts, PartiteHypergraph graph);

/// Sums over edges only.
ElemSet restricted_sumset(const Instance& inst);

}  // namespace bsg
