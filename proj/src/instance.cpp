#include "bsgkit/instance.hpp"

#include "bsgkit/error.hpp"

#include <string>

namespace bsg {

std::vector<std::uint32_t> Instance::part_sizes() const {
  std::vector<std::uint32_t> sizes;
  sizes.reserve(parts.size());
  for (const auto& p : parts) sizes.push_back(static_cast<std::uint32_t>(p.size()));
  return sizes;
}

BigInt Instance::tuple_space() const {
  BigInt total = 1;
  for (const auto& p : parts) total *= p.size();
  return total;
}

GroupElem Instance::tuple_sum(std::span<const Index> tuple) const {
  GroupElem acc = identity(spec);
  for (std::size_t j = 0; j < tuple.size(); ++j) add_assign(spec, acc, parts[j][tuple[j]]);
  return acc;
}

Instance make_instance(GroupSpec spec, std::vector<ElemSet> parts, PartiteHypergraph graph) {
  if (parts.size() < 2) throw Error(Errc::ArityMismatch, "an instance needs at least two parts");
  if (graph.arity() != parts.size())
    throw Error(Errc::ArityMismatch, "hypergraph arity " + std::to_string(graph.arity()) + " but " +
                                         std::to_string(parts.size()) + " parts");
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (!(parts[i].spec() == spec)) throw Error(Errc::SpecMismatch, "part " + std::to_string(i) + " group differs");
    if (parts[i].size() != graph.part_size(i))
      throw Error(Errc::ArityMismatch, "part " + std::to_string(i) + " size disagrees with hypergraph");
  }
  return Instance{std::move(spec), std::move(parts), std::move(graph)};
}

ElemSet restricted_sumset(const Instance& inst) {
  std::vector<GroupElem> sums;
  sums.reserve(inst.graph.edge_count());
  for (std::size_t k = 0; k < inst.graph.edge_count(); ++k) sums.push_back(inst.tuple_sum(inst.graph.edge(k)));
  return ElemSet(inst.spec, std::move(sums));
}

}  // namespace bsg
