#pragma once

#include "bsgkit/numeric.hpp"

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace bsg {

/// An abelian group Z^d x Z_{m_1} x ... x Z_{m_k}, one modulus per
/// coordinate. Modulus 0 marks a free integer coordinate.
class GroupSpec {
 public:
  GroupSpec() = default;

  const std::vector<std::uint64_t>& moduli() const noexcept { return moduli_; }
  std::size_t rank() const noexcept { return moduli_.size(); }
  bool is_free(std::size_t j) const { return moduli_[j] == 0; }
  bool has_free_coordinate() const noexcept;
  /// Order of the group, 0 when some coordinate is free.
  BigInt order() const;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;

 private:
  friend GroupSpec make_group(std::vector<std::uint64_t> moduli);
  std::vector<std::uint64_t> moduli_;
};

/// Validates moduli (each 0 or >= 2, at least one coordinate).
GroupSpec make_group(std::vector<std::uint64_t> moduli);

/// An element in canonical form: modular coordinates lie in [0, m).
struct GroupElem {
  std::vector<BigInt> coords;

  friend bool operator==(const GroupElem&, const GroupElem&) = default;
  /// Lexicographic order on canonical coordinate vectors.
  friend std::strong_ordering operator<=>(const GroupElem& a, const GroupElem& b);
};

struct GroupElemHash {
  std::size_t operator()(const GroupElem& e) const noexcept;
};

/// Reduces arbitrary integer coordinates into canonical form.
GroupElem make_elem(const GroupSpec& spec, std::vector<BigInt> coords);
GroupElem make_elem(const GroupSpec& spec, std::initializer_list<long long> coords);

GroupElem identity(const GroupSpec& spec);
bool is_canonical(const GroupSpec& spec, const GroupElem& a);

GroupElem add(const GroupSpec& spec, const GroupElem& a, const GroupElem& b);
GroupElem sub(const GroupSpec& spec, const GroupElem& a, const GroupElem& b);
GroupElem neg(const GroupSpec& spec, const GroupElem& a);
GroupElem sum_tuple(const GroupSpec& spec, std::span<const GroupElem> elems);

/// In-place a += b without re-validating the shape.
void add_assign(const GroupSpec& spec, GroupElem& a, const GroupElem& b);

}  // namespace bsg
