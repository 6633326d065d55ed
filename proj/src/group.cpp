#include "bsgkit/group.hpp"

#include "bsgkit/error.hpp"

#include <algorithm>
#include <string>

namespace bsg {

GroupSpec make_group(std::vector<std::uint64_t> moduli) {
  if (moduli.empty()) throw Error(Errc::InvalidModulus, "group needs at least one coordinate");
  for (std::size_t j = 0; j < moduli.size(); ++j)
    if (moduli[j] == 1)
      throw Error(Errc::InvalidModulus, "coordinate " + std::to_string(j) + " has modulus 1");
  GroupSpec spec;
  spec.moduli_ = std::move(moduli);
  return spec;
}

bool GroupSpec::has_free_coordinate() const noexcept {
  return std::find(moduli_.begin(), moduli_.end(), 0u) != moduli_.end();
}

BigInt GroupSpec::order() const {
  BigInt result = 1;
  for (auto m : moduli_) {
    if (m == 0) return 0;
    result *= m;
  }
  return result;
}

std::strong_ordering operator<=>(const GroupElem& a, const GroupElem& b) {
  const std::size_t n = std::min(a.coords.size(), b.coords.size());
  for (std::size_t j = 0; j < n; ++j) {
    if (a.coords[j] < b.coords[j]) return std::strong_ordering::less;
    if (b.coords[j] < a.coords[j]) return std::strong_ordering::greater;
  }
  return a.coords.size() <=> b.coords.size();
}

std::size_t GroupElemHash::operator()(const GroupElem& e) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (const auto& c : e.coords) {
    auto low = static_cast<std::uint64_t>(boost::multiprecision::abs(c) & BigInt(0xffffffffffffffffull));
    std::uint64_t x = low ^ (c < 0 ? 0xa5a5a5a5a5a5a5a5ull : 0);
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdull;
    x ^= x >> 33;
    h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

namespace {

void check_shape(const GroupSpec& spec, const GroupElem& a) {
  if (a.coords.size() != spec.rank())
    throw Error(Errc::ShapeMismatch, "element has " + std::to_string(a.coords.size()) +
                                         " coordinates, group has " + std::to_string(spec.rank()));
}

void reduce(std::uint64_t m, BigInt& c) {
  if (m == 0) return;
  c %= m;
  if (c < 0) c += m;
}

}  // namespace

GroupElem make_elem(const GroupSpec& spec, std::vector<BigInt> coords) {
  GroupElem e{std::move(coords)};
  check_shape(spec, e);
  for (std::size_t j = 0; j < spec.rank(); ++j) reduce(spec.moduli()[j], e.coords[j]);
  return e;
}

GroupElem make_elem(const GroupSpec& spec, std::initializer_list<long long> coords) {
  std::vector<BigInt> v;
  v.reserve(coords.size());
  for (auto c : coords) v.emplace_back(c);
  return make_elem(spec, std::move(v));
}

GroupElem identity(const GroupSpec& spec) {
  return GroupElem{std::vector<BigInt>(spec.rank(), BigInt(0))};
}

bool is_canonical(const GroupSpec& spec, const GroupElem& a) {
  if (a.coords.size() != spec.rank()) return false;
  for (std::size_t j = 0; j < spec.rank(); ++j) {
    auto m = spec.moduli()[j];
    if (m != 0 && (a.coords[j] < 0 || a.coords[j] >= m)) return false;
  }
  return true;
}

void add_assign(const GroupSpec& spec, GroupElem& a, const GroupElem& b) {
  for (std::size_t j = 0; j < spec.rank(); ++j) {
    a.coords[j] += b.coords[j];
    auto m = spec.moduli()[j];
    if (m != 0 && a.coords[j] >= m) a.coords[j] -= m;
  }
}

GroupElem add(const GroupSpec& spec, const GroupElem& a, const GroupElem& b) {
  check_shape(spec, a);
  check_shape(spec, b);
  GroupElem out = a;
  add_assign(spec, out, b);
  return out;
}

GroupElem neg(const GroupSpec& spec, const GroupElem& a) {
  check_shape(spec, a);
  GroupElem out = a;
  for (std::size_t j = 0; j < spec.rank(); ++j) {
    out.coords[j] = -out.coords[j];
    reduce(spec.moduli()[j], out.coords[j]);
  }
  return out;
}

GroupElem sub(const GroupSpec& spec, const GroupElem& a, const GroupElem& b) {
  return add(spec, a, neg(spec, b));
}

GroupElem sum_tuple(const GroupSpec& spec, std::span<const GroupElem> elems) {
  GroupElem acc = identity(spec);
  for (const auto& e : elems) {
    check_shape(spec, e);
    add_assign(spec, acc, e);
  }
  return acc;
}

}  // namespace bsg
