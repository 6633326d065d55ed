#include "bsgkit/sumsets.hpp"

#include "bsgkit/error.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace bsg {

ElemSet::ElemSet(GroupSpec spec, std::vector<GroupElem> elems) : spec_(std::move(spec)), elems_(std::move(elems)) {
  for (auto& e : elems_) e = make_elem(spec_, std::move(e.coords));
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

bool ElemSet::contains(const GroupElem& e) const { return std::binary_search(elems_.begin(), elems_.end(), e); }

std::size_t ElemSet::index_of(const GroupElem& e) const {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), e);
  if (it == elems_.end() || *it != e) return elems_.size();
  return static_cast<std::size_t>(it - elems_.begin());
}

ElemSet ElemSet::subset(std::span<const std::uint32_t> indices) const {
  std::vector<GroupElem> picked;
  picked.reserve(indices.size());
  for (auto i : indices) {
    if (i >= elems_.size()) throw Error(Errc::IndexOutOfRange, "subset index " + std::to_string(i));
    picked.push_back(elems_[i]);
  }
  return ElemSet(spec_, std::move(picked));
}

namespace {

void require_same_spec(const ElemSet& a, const ElemSet& b) {
  if (!(a.spec() == b.spec())) throw Error(Errc::SpecMismatch, "sets live in different groups");
}

}  // namespace

ElemSet sumset(const ElemSet& a, const ElemSet& b) {
  require_same_spec(a, b);
  std::vector<GroupElem> sums;
  sums.reserve(a.size() * b.size());
  for (const auto& x : a.elems())
    for (const auto& y : b.elems()) {
      GroupElem s = x;
      add_assign(a.spec(), s, y);
      sums.push_back(std::move(s));
    }
  return ElemSet(a.spec(), std::move(sums));
}

ElemSet iterated_sumset(std::span<const ElemSet> sets) {
  if (sets.empty()) throw Error(Errc::EmptySet, "iterated sumset of no sets");
  ElemSet acc = sets.front();
  for (std::size_t i = 1; i < sets.size(); ++i) acc = sumset(acc, sets[i]);
  return acc;
}

BigInt additive_energy(const ElemSet& a) {
  std::map<GroupElem, std::uint64_t> histogram;
  for (const auto& x : a.elems())
    for (const auto& y : a.elems()) {
      GroupElem s = x;
      add_assign(a.spec(), s, y);
      ++histogram[s];
    }
  BigInt energy = 0;
  for (const auto& [sum, count] : histogram) energy += BigInt(count) * count;
  return energy;
}

Rational doubling_constant(const ElemSet& a) {
  if (a.empty()) throw Error(Errc::EmptySet, "doubling constant of the empty set");
  return Rational(BigInt(sumset(a, a).size()), BigInt(a.size()));
}

SumStats sum_stats(const ElemSet& a) {
  SumStats stats;
  stats.sumset_size = sumset(a, a).size();
  stats.doubling = doubling_constant(a);
  stats.energy = additive_energy(a);
  return stats;
}

// ---------------------------------------------------------------------------

RepresentationTable::RepresentationTable(const ElemSet& s, unsigned r, std::size_t cell_cap) : spec_(s.spec()) {
  if (r < 2) throw Error(Errc::ConfigInvalid, "representation counting needs r >= 2");
  const std::size_t rank = spec_.rank();

  // Per-coordinate extent of S on free axes.
  std::vector<BigInt> smin(rank), smax(rank);
  for (std::size_t j = 0; j < rank; ++j) {
    if (!spec_.is_free(j) || s.empty()) continue;
    smin[j] = smax[j] = s[0].coords[j];
    for (const auto& e : s.elems()) {
      smin[j] = std::min(smin[j], e.coords[j]);
      smax[j] = std::max(smax[j], e.coords[j]);
    }
  }

  axes_.resize(rank);
  for (std::size_t j = 0; j < rank; ++j) {
    auto m = spec_.moduli()[j];
    axes_[j] = Axis{m, BigInt(0), m == 0 ? std::size_t{1} : static_cast<std::size_t>(m)};
  }

  auto grid_size = [&](const std::vector<Axis>& axes) {
    BigInt total = 1;
    for (const auto& ax : axes) total *= ax.width;
    return total;
  };
  if (grid_size(axes_) > cell_cap)
    throw Error(Errc::UnsupportedGroup, "representation grid exceeds cell cap");

  cells_.assign(static_cast<std::size_t>(grid_size(axes_)), BigInt(0));
  cells_[index_of(identity(spec_))] = 1;
  if (s.empty()) {
    cells_.assign(cells_.size(), BigInt(0));
    return;
  }

  // Signs of the 2r-1 convolution steps.
  std::vector<int> signs;
  for (unsigned i = 0; i + 1 < r; ++i) signs.push_back(+1);
  for (unsigned i = 0; i + 1 < r; ++i) signs.push_back(-1);
  signs.push_back(+1);

  for (int sign : signs) {
    std::vector<Axis> next = axes_;
    std::vector<std::vector<std::size_t>> shift(s.size(), std::vector<std::size_t>(rank));
    for (std::size_t j = 0; j < rank; ++j) {
      if (axes_[j].modulus != 0) continue;
      BigInt span = smax[j] - smin[j];
      BigInt width = BigInt(axes_[j].width) + span;
      if (width > cell_cap) throw Error(Errc::UnsupportedGroup, "representation grid exceeds cell cap");
      next[j].width = static_cast<std::size_t>(width);
      next[j].low = sign > 0 ? BigInt(axes_[j].low + smin[j]) : BigInt(axes_[j].low - smax[j]);
    }
    if (grid_size(next) > cell_cap) throw Error(Errc::UnsupportedGroup, "representation grid exceeds cell cap");

    for (std::size_t k = 0; k < s.size(); ++k)
      for (std::size_t j = 0; j < rank; ++j) {
        const BigInt& c = s[k].coords[j];
        if (axes_[j].modulus == 0) {
          shift[k][j] = static_cast<std::size_t>(sign > 0 ? BigInt(c - smin[j]) : BigInt(smax[j] - c));
        } else {
          auto m = axes_[j].modulus;
          auto v = static_cast<std::uint64_t>(c);
          shift[k][j] = static_cast<std::size_t>(sign > 0 ? v : (m - v) % m);
        }
      }

    std::vector<BigInt> out(static_cast<std::size_t>(grid_size(next)), BigInt(0));
    std::vector<std::size_t> digit(rank);
    for (std::size_t idx = 0; idx < cells_.size(); ++idx) {
      if (cells_[idx] == 0) continue;
      std::size_t rem = idx;
      for (std::size_t j = rank; j-- > 0;) {
        digit[j] = rem % axes_[j].width;
        rem /= axes_[j].width;
      }
      for (std::size_t k = 0; k < s.size(); ++k) {
        std::size_t target = 0;
        for (std::size_t j = 0; j < rank; ++j) {
          std::size_t d = digit[j] + shift[k][j];
          if (next[j].modulus != 0 && d >= next[j].width) d -= next[j].width;
          target = target * next[j].width + d;
        }
        out[target] += cells_[idx];
      }
    }
    axes_ = std::move(next);
    cells_ = std::move(out);
  }
}

bool RepresentationTable::locate(const GroupElem& e, std::size_t& index) const {
  if (e.coords.size() != axes_.size()) throw Error(Errc::ShapeMismatch, "target has wrong rank");
  index = 0;
  for (std::size_t j = 0; j < axes_.size(); ++j) {
    std::size_t d;
    if (axes_[j].modulus == 0) {
      BigInt off = e.coords[j] - axes_[j].low;
      if (off < 0 || off >= axes_[j].width) return false;
      d = static_cast<std::size_t>(off);
    } else {
      BigInt c = e.coords[j] % axes_[j].modulus;
      if (c < 0) c += axes_[j].modulus;
      d = static_cast<std::size_t>(c);
    }
    index = index * axes_[j].width + d;
  }
  return true;
}

std::size_t RepresentationTable::index_of(const GroupElem& e) const {
  std::size_t index = 0;
  locate(e, index);
  return index;
}

BigInt RepresentationTable::count(const GroupElem& target) const {
  std::size_t index = 0;
  if (!locate(target, index)) return 0;
  return cells_[index];
}

BigInt RepresentationTable::total() const {
  BigInt sum = 0;
  for (const auto& c : cells_) sum += c;
  return sum;
}

BigInt representation_count(const GroupSpec& spec, const ElemSet& s, const GroupElem& target, unsigned r,
                            std::size_t cell_cap) {
  if (!(spec == s.spec())) throw Error(Errc::SpecMismatch, "set does not live in the given group");
  RepresentationTable table(s, r, cell_cap);
  return table.count(target);
}

}  // namespace bsg
