#include "bsgkit/generate.hpp"

#include "bsgkit/error.hpp"
#include "bsgkit/random.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace bsg {

namespace {

constexpr std::uint64_t kMaxTupleSpace = std::uint64_t{1} << 24;

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

/// k * g where g is the first basis vector.
GroupElem ap_term(const GroupSpec& spec, std::uint64_t k) {
  std::vector<BigInt> coords(spec.rank(), 0);
  coords[0] = k;
  return make_elem(spec, std::move(coords));
}

GroupElem random_elem(const GroupSpec& spec, Prng& rng, std::uint64_t span) {
  std::vector<BigInt> coords(spec.rank());
  for (std::size_t j = 0; j < spec.rank(); ++j) {
    const std::uint64_t m = spec.moduli()[j];
    coords[j] = uniform_below(rng, m == 0 ? span : m);
  }
  return make_elem(spec, std::move(coords));
}

/// AP prefix of length `ap`, then distinct random elements up to n.
ElemSet make_part(const GroupSpec& spec, Prng& rng, std::uint32_t n, std::uint32_t ap) {
  const BigInt order = spec.order();
  if (order != 0 && order < n) throw Error(Errc::ConfigInvalid, "group too small for a part of size " + std::to_string(n));
  if (ap > 0 && !spec.is_free(0) && spec.moduli()[0] < ap)
    throw Error(Errc::ConfigInvalid, "first modulus too small for an AP of length " + std::to_string(ap));
  std::set<GroupElem> elems;
  for (std::uint32_t k = 0; k < ap; ++k) elems.insert(ap_term(spec, k));
  const std::uint64_t span = 4 * std::uint64_t{n} + 4;
  while (elems.size() < n) elems.insert(random_elem(spec, rng, span));
  return ElemSet(spec, {elems.begin(), elems.end()});
}

Tuple decode(std::uint64_t code, const std::vector<std::uint32_t>& sizes) {
  Tuple t(sizes.size());
  for (std::size_t j = sizes.size(); j-- > 0;) {
    t[j] = static_cast<Index>(code % sizes[j]);
    code /= sizes[j];
  }
  return t;
}

std::uint64_t tuple_space(const std::vector<std::uint32_t>& sizes) {
  std::uint64_t total = 1;
  for (auto s : sizes) {
    total *= s;
    if (total > kMaxTupleSpace) throw Error(Errc::ConfigInvalid, "tuple space exceeds 2^24");
  }
  return total;
}

/// Adds seeded random absent tuples until at least `floor` are present.
void top_up(std::vector<std::uint8_t>& present, std::uint64_t floor, Prng& rng) {
  std::uint64_t have = std::count(present.begin(), present.end(), 1);
  if (have >= floor) return;
  std::vector<std::uint64_t> absent;
  for (std::uint64_t c = 0; c < present.size(); ++c)
    if (!present[c]) absent.push_back(c);
  shuffle(rng, absent);
  for (std::uint64_t k = 0; have < floor; ++k, ++have) present[absent[k]] = 1;
}

std::uint64_t density_floor(std::uint64_t total, const Rational& K) {
  if (K < 1) throw Error(Errc::ConfigInvalid, "K must be at least 1");
  return static_cast<std::uint64_t>(ceil(Rational(BigInt(total)) / K));
}

void require_probability(const Rational& p, const char* what) {
  if (p < 0 || p > 1) throw Error(Errc::ConfigInvalid, std::string(what) + " must lie in [0, 1]");
}

}  // namespace

std::string family_name(const Family& f) {
  return std::visit(Overloaded{[](const family::Complete&) { return std::string("complete"); },
                                    [](const family::RandomDensity&) { return std::string("random-density"); },
                                    [](const family::Planted&) { return std::string("planted"); },
                                    [](const family::Dense&) { return std::string("dense"); }},
                    f);
}

Instance gen_instance(const GenConfig& cfg) {
  const std::size_t r = cfg.sizes.size();
  if (r < 2) throw Error(Errc::ConfigInvalid, "need at least two parts");
  for (auto s : cfg.sizes)
    if (s == 0) throw Error(Errc::ConfigInvalid, "part sizes must be positive");
  const std::uint64_t total = tuple_space(cfg.sizes);
  const GroupSpec& spec = cfg.group;
  Prng rng(cfg.seed);

  std::vector<ElemSet> parts;
  std::vector<std::uint8_t> present(total, 0);

  std::visit(
      Overloaded{
          [&](const family::Complete&) {
            for (auto n : cfg.sizes) parts.push_back(make_part(spec, rng, n, n));
            std::fill(present.begin(), present.end(), 1);
          },
          [&](const family::RandomDensity& f) {
            const std::uint64_t floor = density_floor(total, f.K);
            for (auto n : cfg.sizes) parts.push_back(make_part(spec, rng, n, 0));
            const Rational p = 1 / f.K;
            for (auto& bit : present) bit = bernoulli(rng, p) ? 1 : 0;
            top_up(present, floor, rng);
          },
          [&](const family::Planted& f) {
            require_probability(f.ap_fraction, "ap_fraction");
            if (f.target_C <= 0) throw Error(Errc::ConfigInvalid, "target_C must be positive");
            const std::uint64_t floor = density_floor(total, f.K);
            std::uint32_t largest = 0;
            for (auto n : cfg.sizes) {
              const auto ap = static_cast<std::uint32_t>(ceil(f.ap_fraction * Rational(n)));
              parts.push_back(make_part(spec, rng, n, ap));
              largest = std::max(largest, n);
            }
            const auto t = static_cast<std::uint64_t>(bsg::floor(f.target_C * Rational(largest)));
            std::set<GroupElem> target;
            for (std::uint64_t k = 0; k < t; ++k) target.insert(ap_term(spec, k));
            for (std::uint64_t c = 0; c < total; ++c) {
              const Tuple tup = decode(c, cfg.sizes);
              GroupElem s = identity(spec);
              for (std::size_t j = 0; j < r; ++j) add_assign(spec, s, parts[j][tup[j]]);
              if (target.count(s)) present[c] = 1;
            }
            top_up(present, floor, rng);
          },
          [&](const family::Dense& f) {
            require_probability(f.delta, "delta");
            for (auto n : cfg.sizes) parts.push_back(make_part(spec, rng, n, n));
            std::fill(present.begin(), present.end(), 1);
            std::vector<std::uint64_t> codes(total);
            for (std::uint64_t c = 0; c < total; ++c) codes[c] = c;
            shuffle(rng, codes);
            const auto removed = static_cast<std::uint64_t>(bsg::floor(f.delta * Rational(BigInt(total))));
            for (std::uint64_t k = 0; k < removed; ++k) present[codes[k]] = 0;
          }},
      cfg.family);

  std::vector<Tuple> edges;
  for (std::uint64_t c = 0; c < total; ++c)
    if (present[c]) edges.push_back(decode(c, cfg.sizes));
  PartiteHypergraph graph = build_hypergraph(r, cfg.sizes, edges);
  return make_instance(spec, std::move(parts), std::move(graph));
}

}  // namespace bsg
