#pragma once

#include "bsgkit/group.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace bsg {

/// Finite subset of a group, deduplicated and kept in lexicographic order.
class ElemSet {
 public:
  ElemSet() = default;
  ElemSet(GroupSpec spec, std::vector<GroupElem> elems);

  const GroupSpec& spec() const noexcept { return spec_; }
  const std::vector<GroupElem>& elems() const noexcept { return elems_; }
  std::size_t size() const noexcept { return elems_.size(); }
  bool empty() const noexcept { return elems_.empty(); }
  const GroupElem& operator[](std::size_t i) const { return elems_[i]; }
  bool contains(const GroupElem& e) const;
  /// Position of e in the ordered element list, or size() when absent.
  std::size_t index_of(const GroupElem& e) const;

  ElemSet subset(std::span<const std::uint32_t> indices) const;

  friend bool operator==(const ElemSet&, const ElemSet&) = default;

 private:
  GroupSpec spec_;
  std::vector<GroupElem> elems_;
};

struct SumStats {
  std::size_t sumset_size = 0;
  Rational doubling;
  BigInt energy;
};

ElemSet sumset(const ElemSet& a, const ElemSet& b);
ElemSet iterated_sumset(std::span<const ElemSet> sets);

/// Ordered quadruples (x, y, x', y') in A^4 with x + y = x' + y'.
BigInt additive_energy(const ElemSet& a);
Rational doubling_constant(const ElemSet& a);
SumStats sum_stats(const ElemSet& a);

/// Signed-sum histogram of (c_1, ..., c_{2r-1}) in S^{2r-1} under
///   c_1 + ... + c_{r-1} - (c_r + ... + c_{2r-2}) + c_{2r-1},
/// computed by exact schoolbook convolution on a dense grid. Free
/// coordinates use the exact bounding box of attainable sums.
class RepresentationTable {
 public:
  RepresentationTable(const ElemSet& s, unsigned r, std::size_t cell_cap);

  BigInt count(const GroupElem& target) const;
  /// Sum over all cells; equals |S|^{2r-1}.
  BigInt total() const;
  std::size_t cells() const noexcept { return cells_.size(); }

 private:
  struct Axis {
    std::uint64_t modulus;  // 0 for free
    BigInt low;             // free axes only
    std::size_t width;
  };

  std::size_t index_of(const GroupElem& e) const;
  bool locate(const GroupElem& e, std::size_t& index) const;

  GroupSpec spec_;
  std::vector<Axis> axes_;
  std::vector<BigInt> cells_;
};

BigInt representation_count(const GroupSpec& spec, const ElemSet& s, const GroupElem& target, unsigned r,
                            std::size_t cell_cap = 100'000'000);

}  // namespace bsg
