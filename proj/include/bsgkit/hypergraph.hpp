#pragma once

#include "bsgkit/numeric.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace bsg {

using Index = std::uint32_t;
using Tuple = std::vector<Index>;
using IndexSet = std::vector<Index>;

/// Bipartite graph between `left_size` vertices and the tuple space Z of the
/// remaining parts of a flattened hypergraph. Right vertices are identified
/// by their mixed-radix code in Z; labels are decoded on demand.
class Bipartite {
 public:
  Bipartite(std::vector<std::uint32_t> right_radix, std::vector<std::vector<std::uint64_t>> adjacency);

  std::size_t left_size() const noexcept { return adj_.size(); }
  std::uint64_t right_size() const noexcept { return right_size_; }
  std::size_t edge_count() const noexcept { return edge_count_; }

  std::size_t degree(Index v) const;
  std::span<const std::uint64_t> neighbors(Index v) const;
  /// |N(v) ∩ N(w)|; codegree(v, v) is the degree of v.
  std::size_t codegree(Index v, Index w) const;

  Tuple right_label(std::uint64_t z) const;

  /// Right vertices of positive degree, ascending by code, with their
  /// (sorted) left neighbourhoods.
  struct RightVertex {
    std::uint64_t id;
    IndexSet neighbors;
  };
  const std::vector<RightVertex>& right_vertices() const noexcept { return right_; }

  /// Induced subgraph on the given left vertices (in the given order) and
  /// all of Z.
  Bipartite restrict_left(std::span<const Index> keep) const;

 private:
  void check_left(Index v) const;

  std::vector<std::uint32_t> right_radix_;
  std::uint64_t right_size_ = 1;
  std::vector<std::vector<std::uint64_t>> adj_;
  std::vector<RightVertex> right_;
  std::size_t edge_count_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;  // left_size * words_, empty if too large
};

class PartiteHypergraph;

struct Induced;

/// r-partite r-uniform hypergraph over parts of given sizes. Vertex
/// identity is (part, position). Edges are kept sorted lexicographically.
class PartiteHypergraph {
 public:
  PartiteHypergraph() = default;

  static PartiteHypergraph complete(std::vector<std::uint32_t> part_sizes);

  std::size_t arity() const noexcept { return sizes_.size(); }
  const std::vector<std::uint32_t>& part_sizes() const noexcept { return sizes_; }
  std::uint32_t part_size(std::size_t p) const { return sizes_.at(p); }
  std::size_t edge_count() const noexcept { return codes_.size(); }
  /// Product of the part sizes.
  BigInt tuple_space() const;

  std::span<const Index> edge(std::size_t k) const {
    return {flat_.data() + k * arity(), arity()};
  }
  bool contains(std::span<const Index> tuple) const;

  std::size_t degree(std::size_t part, Index v) const;
  /// Ids of edges containing v at coordinate `part`, ascending.
  std::span<const std::uint32_t> incident(std::size_t part, Index v) const;

  Rational density() const;
  /// Reciprocal density; nullopt when there are no edges.
  std::optional<Rational> measured_K() const;

  PartiteHypergraph link(std::size_t part, Index v) const;
  Bipartite flatten(std::size_t part) const;
  Induced induce(const std::vector<IndexSet>& subsets) const;
  Induced prune_low_degree(std::size_t part, const Rational& threshold) const;

  friend PartiteHypergraph build_hypergraph(std::size_t r, std::vector<std::uint32_t> part_sizes,
                                            const std::vector<Tuple>& edges);

 private:
  void check_vertex(std::size_t part, Index v) const;
  std::uint64_t encode(std::span<const Index> tuple) const;
  void finalize(std::vector<std::uint64_t> codes);

  std::vector<std::uint32_t> sizes_;
  std::vector<std::uint64_t> strides_;
  std::vector<std::uint64_t> codes_;  // sorted, one per edge
  std::vector<Index> flat_;           // edge k occupies [k*r, (k+1)*r)
  std::vector<std::vector<std::vector<std::uint32_t>>> incidence_;
  std::vector<std::uint64_t> dense_;  // membership bitset when the tuple space is small
};

/// Induced sub-hypergraph and, per part, the original index of each kept
/// vertex (new index -> old index).
struct Induced {
  PartiteHypergraph graph;
  std::vector<IndexSet> origin;
};

/// Deduplicates edges; rejects wrong arity and out-of-range indices.
PartiteHypergraph build_hypergraph(std::size_t r, std::vector<std::uint32_t> part_sizes,
                                   const std::vector<Tuple>& edges);

}  // namespace bsg
