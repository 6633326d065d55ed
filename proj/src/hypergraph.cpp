#include "bsgkit/hypergraph.hpp"

#include "bsgkit/error.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <utility>

namespace bsg {

namespace {

constexpr std::uint64_t kDenseMembershipLimit = std::uint64_t{1} << 26;
constexpr std::uint64_t kCodegreeBitLimit = std::uint64_t{1} << 28;

std::uint64_t checked_product(std::span<const std::uint32_t> sizes) {
  unsigned __int128 total = 1;
  for (auto s : sizes) {
    total *= s;
    if (total >= (static_cast<unsigned __int128>(1) << 63))
      throw Error(Errc::TooLarge, "tuple space exceeds 2^63");
  }
  return static_cast<std::uint64_t>(total);
}

}  // namespace

// ---------------------------------------------------------------- Bipartite

Bipartite::Bipartite(std::vector<std::uint32_t> right_radix, std::vector<std::vector<std::uint64_t>> adjacency)
    : right_radix_(std::move(right_radix)), adj_(std::move(adjacency)) {
  right_size_ = checked_product(right_radix_);
  std::vector<std::pair<std::uint64_t, Index>> pairs;
  for (Index v = 0; v < adj_.size(); ++v) {
    auto& nb = adj_[v];
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    for (auto z : nb) {
      if (z >= right_size_) throw Error(Errc::IndexOutOfRange, "right vertex out of range");
      pairs.emplace_back(z, v);
    }
    edge_count_ += nb.size();
  }
  std::sort(pairs.begin(), pairs.end());
  for (const auto& [z, v] : pairs) {
    if (right_.empty() || right_.back().id != z) right_.push_back(RightVertex{z, {}});
    right_.back().neighbors.push_back(v);
  }

  words_ = static_cast<std::size_t>((right_size_ + 63) / 64);
  if (static_cast<unsigned __int128>(words_) * 64 * adj_.size() <= kCodegreeBitLimit) {
    bits_.assign(words_ * adj_.size(), 0);
    for (std::size_t v = 0; v < adj_.size(); ++v)
      for (auto z : adj_[v]) bits_[v * words_ + z / 64] |= std::uint64_t{1} << (z % 64);
  }
}

void Bipartite::check_left(Index v) const {
  if (v >= adj_.size()) throw Error(Errc::IndexOutOfRange, "left vertex " + std::to_string(v));
}

std::size_t Bipartite::degree(Index v) const {
  check_left(v);
  return adj_[v].size();
}

std::span<const std::uint64_t> Bipartite::neighbors(Index v) const {
  check_left(v);
  return adj_[v];
}

std::size_t Bipartite::codegree(Index v, Index w) const {
  check_left(v);
  check_left(w);
  if (v == w) return adj_[v].size();
  if (!bits_.empty()) {
    const std::uint64_t* a = bits_.data() + v * words_;
    const std::uint64_t* b = bits_.data() + w * words_;
    std::size_t count = 0;
    for (std::size_t k = 0; k < words_; ++k) count += static_cast<std::size_t>(std::popcount(a[k] & b[k]));
    return count;
  }
  const auto& a = adj_[v];
  const auto& b = adj_[w];
  std::size_t count = 0;
  for (std::size_t i = 0, j = 0; i < a.size() && j < b.size();) {
    if (a[i] < b[j]) ++i;
    else if (b[j] < a[i]) ++j;
    else { ++count; ++i; ++j; }
  }
  return count;
}

Tuple Bipartite::right_label(std::uint64_t z) const {
  if (z >= right_size_) throw Error(Errc::IndexOutOfRange, "right vertex out of range");
  Tuple label(right_radix_.size());
  for (std::size_t j = right_radix_.size(); j-- > 0;) {
    label[j] = static_cast<Index>(z % right_radix_[j]);
    z /= right_radix_[j];
  }
  return label;
}

Bipartite Bipartite::restrict_left(std::span<const Index> keep) const {
  std::vector<std::vector<std::uint64_t>> adj;
  adj.reserve(keep.size());
  for (auto v : keep) {
    check_left(v);
    adj.push_back(adj_[v]);
  }
  return Bipartite(right_radix_, std::move(adj));
}

// ------------------------------------------------------- PartiteHypergraph

PartiteHypergraph build_hypergraph(std::size_t r, std::vector<std::uint32_t> part_sizes,
                                   const std::vector<Tuple>& edges) {
  if (r < 1) throw Error(Errc::ArityMismatch, "arity must be positive");
  if (part_sizes.size() != r)
    throw Error(Errc::ArityMismatch, "expected " + std::to_string(r) + " part sizes, got " +
                                         std::to_string(part_sizes.size()));
  PartiteHypergraph h;
  h.sizes_ = std::move(part_sizes);
  checked_product(h.sizes_);
  h.strides_.assign(r, 1);
  for (std::size_t j = r - 1; j-- > 0;) h.strides_[j] = h.strides_[j + 1] * h.sizes_[j + 1];

  std::vector<std::uint64_t> codes;
  codes.reserve(edges.size());
  for (const auto& e : edges) {
    if (e.size() != r)
      throw Error(Errc::ArityMismatch, "edge of length " + std::to_string(e.size()) + " in arity " + std::to_string(r));
    for (std::size_t j = 0; j < r; ++j)
      if (e[j] >= h.sizes_[j])
        throw Error(Errc::IndexOutOfRange, "edge coordinate " + std::to_string(j) + " = " + std::to_string(e[j]) +
                                               " exceeds part size " + std::to_string(h.sizes_[j]));
    codes.push_back(h.encode(e));
  }
  h.finalize(std::move(codes));
  return h;
}

PartiteHypergraph PartiteHypergraph::complete(std::vector<std::uint32_t> part_sizes) {
  const std::size_t r = part_sizes.size();
  PartiteHypergraph empty = build_hypergraph(r, part_sizes, {});
  std::uint64_t total = checked_product(part_sizes);
  std::vector<std::uint64_t> codes(total);
  for (std::uint64_t c = 0; c < total; ++c) codes[c] = c;
  empty.finalize(std::move(codes));
  return empty;
}

std::uint64_t PartiteHypergraph::encode(std::span<const Index> tuple) const {
  std::uint64_t code = 0;
  for (std::size_t j = 0; j < tuple.size(); ++j) code += strides_[j] * tuple[j];
  return code;
}

void PartiteHypergraph::finalize(std::vector<std::uint64_t> codes) {
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  codes_ = std::move(codes);
  const std::size_t r = arity();
  flat_.assign(codes_.size() * r, 0);
  incidence_.assign(r, {});
  for (std::size_t j = 0; j < r; ++j) incidence_[j].assign(sizes_[j], {});
  for (std::size_t k = 0; k < codes_.size(); ++k) {
    std::uint64_t c = codes_[k];
    for (std::size_t j = 0; j < r; ++j) {
      Index x = static_cast<Index>(c / strides_[j]);
      c %= strides_[j];
      flat_[k * r + j] = x;
      incidence_[j][x].push_back(static_cast<std::uint32_t>(k));
    }
  }
  dense_.clear();
  std::uint64_t total = checked_product(sizes_);
  if (total <= kDenseMembershipLimit) {
    dense_.assign((total + 63) / 64, 0);
    for (auto c : codes_) dense_[c / 64] |= std::uint64_t{1} << (c % 64);
  }
}

BigInt PartiteHypergraph::tuple_space() const {
  BigInt total = 1;
  for (auto s : sizes_) total *= s;
  return total;
}

bool PartiteHypergraph::contains(std::span<const Index> tuple) const {
  if (tuple.size() != arity()) return false;
  for (std::size_t j = 0; j < arity(); ++j)
    if (tuple[j] >= sizes_[j]) return false;
  std::uint64_t c = encode(tuple);
  if (!dense_.empty()) return (dense_[c / 64] >> (c % 64)) & 1u;
  return std::binary_search(codes_.begin(), codes_.end(), c);
}

void PartiteHypergraph::check_vertex(std::size_t part, Index v) const {
  if (part >= arity()) throw Error(Errc::IndexOutOfRange, "part " + std::to_string(part));
  if (v >= sizes_[part])
    throw Error(Errc::IndexOutOfRange, "vertex " + std::to_string(v) + " in part " + std::to_string(part));
}

std::size_t PartiteHypergraph::degree(std::size_t part, Index v) const {
  check_vertex(part, v);
  return incidence_[part][v].size();
}

std::span<const std::uint32_t> PartiteHypergraph::incident(std::size_t part, Index v) const {
  check_vertex(part, v);
  return incidence_[part][v];
}

Rational PartiteHypergraph::density() const {
  for (auto s : sizes_)
    if (s == 0) throw Error(Errc::EmptyPart, "density of a hypergraph with an empty part");
  return Rational(BigInt(edge_count()), tuple_space());
}

std::optional<Rational> PartiteHypergraph::measured_K() const {
  Rational d = density();
  if (d == 0) return std::nullopt;
  return 1 / d;
}

PartiteHypergraph PartiteHypergraph::link(std::size_t part, Index v) const {
  check_vertex(part, v);
  if (arity() < 2) throw Error(Errc::ArityMismatch, "link of a 1-uniform hypergraph");
  std::vector<std::uint32_t> sizes;
  for (std::size_t j = 0; j < arity(); ++j)
    if (j != part) sizes.push_back(sizes_[j]);
  std::vector<Tuple> rest;
  rest.reserve(incidence_[part][v].size());
  for (auto k : incidence_[part][v]) {
    auto e = edge(k);
    Tuple t;
    t.reserve(arity() - 1);
    for (std::size_t j = 0; j < arity(); ++j)
      if (j != part) t.push_back(e[j]);
    rest.push_back(std::move(t));
  }
  return build_hypergraph(arity() - 1, std::move(sizes), rest);
}

Bipartite PartiteHypergraph::flatten(std::size_t part) const {
  if (part >= arity()) throw Error(Errc::IndexOutOfRange, "part " + std::to_string(part));
  std::vector<std::uint32_t> radix;
  for (std::size_t j = 0; j < arity(); ++j)
    if (j != part) radix.push_back(sizes_[j]);
  std::vector<std::vector<std::uint64_t>> adj(sizes_[part]);
  for (Index v = 0; v < sizes_[part]; ++v) {
    adj[v].reserve(incidence_[part][v].size());
    for (auto k : incidence_[part][v]) {
      auto e = edge(k);
      std::uint64_t z = 0;
      for (std::size_t j = 0; j < arity(); ++j)
        if (j != part) z = z * sizes_[j] + e[j];
      adj[v].push_back(z);
    }
  }
  return Bipartite(std::move(radix), std::move(adj));
}

Induced PartiteHypergraph::induce(const std::vector<IndexSet>& subsets) const {
  const std::size_t r = arity();
  if (subsets.size() != r)
    throw Error(Errc::ArityMismatch, "induce expects one subset per part");
  Induced out;
  out.origin.resize(r);
  std::vector<std::vector<std::int64_t>> remap(r);
  std::vector<std::uint32_t> sizes(r);
  for (std::size_t j = 0; j < r; ++j) {
    IndexSet keep = subsets[j];
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    remap[j].assign(sizes_[j], -1);
    for (std::size_t i = 0; i < keep.size(); ++i) {
      check_vertex(j, keep[i]);
      remap[j][keep[i]] = static_cast<std::int64_t>(i);
    }
    sizes[j] = static_cast<std::uint32_t>(keep.size());
    out.origin[j] = std::move(keep);
  }
  std::vector<Tuple> kept;
  Tuple t(r);
  for (std::size_t k = 0; k < edge_count(); ++k) {
    auto e = edge(k);
    bool inside = true;
    for (std::size_t j = 0; j < r && inside; ++j) {
      auto m = remap[j][e[j]];
      if (m < 0) inside = false;
      else t[j] = static_cast<Index>(m);
    }
    if (inside) kept.push_back(t);
  }
  out.graph = build_hypergraph(r, std::move(sizes), kept);
  return out;
}

Induced PartiteHypergraph::prune_low_degree(std::size_t part, const Rational& threshold) const {
  if (part >= arity()) throw Error(Errc::IndexOutOfRange, "part " + std::to_string(part));
  std::vector<IndexSet> subsets(arity());
  for (std::size_t j = 0; j < arity(); ++j) {
    if (j == part) {
      for (Index v = 0; v < sizes_[j]; ++v)
        if (Rational(BigInt(incidence_[j][v].size())) >= threshold) subsets[j].push_back(v);
    } else {
      subsets[j].resize(sizes_[j]);
      for (Index v = 0; v < sizes_[j]; ++v) subsets[j][v] = v;
    }
  }
  return induce(subsets);
}

}  // namespace bsg
