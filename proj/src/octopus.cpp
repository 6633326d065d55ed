#include "bsgkit/octopus.hpp"

#include "bsgkit/error.hpp"

#include <limits>
#include <optional>
#include <string>

namespace bsg {

namespace {

constexpr std::uint64_t kUnknown = std::numeric_limits<std::uint64_t>::max();
constexpr std::size_t kLegCacheMaxPart = 4096;

BigInt to_big(unsigned __int128 x) {
  BigInt out = static_cast<std::uint64_t>(x >> 64);
  out <<= 64;
  out += static_cast<std::uint64_t>(x);
  return out;
}

}  // namespace

OctopusCounter::OctopusCounter(const PartiteHypergraph& graph)
    : graph_(graph), cache_(std::make_unique<PartCache[]>(graph.arity())) {}

const Bipartite& OctopusCounter::flattening(std::size_t part) const {
  if (part >= graph_.arity()) throw Error(Errc::IndexOutOfRange, "part " + std::to_string(part));
  PartCache& c = cache_[part];
  std::call_once(c.built, [&] {
    c.flat = std::make_unique<Bipartite>(graph_.flatten(part));
    const std::size_t n = graph_.part_size(part);
    if (n <= kLegCacheMaxPart) {
      c.legs = std::make_unique<std::atomic<std::uint64_t>[]>(n * n);
      for (std::size_t k = 0; k < n * n; ++k) c.legs[k].store(kUnknown, std::memory_order_relaxed);
    }
  });
  return *c.flat;
}

std::uint64_t OctopusCounter::pair_codegree(std::size_t part, Index v, Index w) const {
  const Bipartite& flat = flattening(part);
  PartCache& c = cache_[part];
  if (!c.legs) return flat.codegree(v, w);
  const std::size_t n = graph_.part_size(part);
  if (v >= n || w >= n) throw Error(Errc::IndexOutOfRange, "vertex out of range in part " + std::to_string(part));
  const std::size_t key = v < w ? static_cast<std::size_t>(v) * n + w : static_cast<std::size_t>(w) * n + v;
  std::uint64_t cached = c.legs[key].load(std::memory_order_relaxed);
  if (cached != kUnknown) return cached;
  std::uint64_t value = flat.codegree(v, w);
  c.legs[key].store(value, std::memory_order_relaxed);
  return value;
}

std::uint64_t OctopusCounter::leg_count(std::size_t part, Index v, Index w) const {
  if (v == w) throw Error(Errc::SameVertex, "legs need two distinct vertices");
  return pair_codegree(part, v, w);
}

void OctopusCounter::check_support(std::span<const Index> support) const {
  if (support.size() != graph_.arity())
    throw Error(Errc::ArityMismatch, "support needs one vertex per part");
  if (graph_.arity() < 2) throw Error(Errc::ArityMismatch, "octopuses need arity >= 2");
  for (std::size_t j = 0; j < support.size(); ++j)
    if (support[j] >= graph_.part_size(j))
      throw Error(Errc::IndexOutOfRange, "support vertex " + std::to_string(support[j]) + " in part " + std::to_string(j));
}

BigInt OctopusCounter::relaxed(std::span<const Index> support) const {
  check_support(support);
  const std::size_t last = graph_.arity() - 1;
  BigInt total = 0;
  unsigned __int128 pending = 0;
  for (auto k : graph_.incident(last, support[last])) {
    auto e = graph_.edge(k);
    bool skip = false;
    for (std::size_t i = 0; i < last && !skip; ++i) skip = e[i] == support[i];
    if (skip) continue;

    unsigned __int128 product = 1;
    std::optional<BigInt> big;
    for (std::size_t i = 0; i < last; ++i) {
      const std::uint64_t legs = pair_codegree(i, support[i], e[i]);
      if (legs == 0) {
        product = 0;
        big.reset();
        break;
      }
      if (big) {
        *big *= legs;
      } else {
        unsigned __int128 next;
        if (__builtin_mul_overflow(product, static_cast<unsigned __int128>(legs), &next))
          big = to_big(product) * legs;
        else
          product = next;
      }
    }
    if (big) {
      total += *big;
    } else {
      unsigned __int128 next;
      if (__builtin_add_overflow(pending, product, &next)) {
        total += to_big(pending);
        next = product;
      }
      pending = next;
    }
  }
  return total + to_big(pending);
}

void OctopusCounter::for_each_witness(std::span<const Index> support, Disjointness mode, std::uint64_t budget,
                                      const std::function<bool(const OctopusWitness&)>& visit) const {
  check_support(support);
  BigInt estimate = relaxed(support);
  if (estimate > budget)
    throw Error(Errc::BudgetExceeded, "enumeration would visit up to " + estimate.str() + " candidates");

  const std::size_t r = graph_.arity();
  const std::size_t last = r - 1;
  std::vector<std::vector<std::uint8_t>> used(r);
  for (std::size_t j = 0; j < r; ++j) used[j].assign(graph_.part_size(j), 0);
  const bool disjoint = mode != Disjointness::Relaxed;

  OctopusWitness witness;
  witness.support.assign(support.begin(), support.end());
  witness.mates.assign(last, 0);
  witness.legs.assign(last, Tuple(r, 0));
  bool stop = false;

  std::function<void(std::size_t)> place_leg = [&](std::size_t i) {
    if (stop) return;
    if (i == last) {
      if (!visit(witness)) stop = true;
      return;
    }
    const Bipartite& flat = flattening(i);
    auto a = flat.neighbors(support[i]);
    auto b = flat.neighbors(witness.mates[i]);
    for (std::size_t x = 0, y = 0; x < a.size() && y < b.size() && !stop;) {
      if (a[x] < b[y]) { ++x; continue; }
      if (b[y] < a[x]) { ++y; continue; }
      Tuple label = flat.right_label(a[x]);
      ++x;
      ++y;
      Tuple& leg = witness.legs[i];
      for (std::size_t j = 0, k = 0; j < r; ++j) leg[j] = j == i ? support[i] : label[k++];
      bool ok = true;
      if (disjoint)
        for (std::size_t j = 0; j < r && ok; ++j)
          if (j != i && used[j][leg[j]]) ok = false;
      if (!ok) continue;
      if (disjoint)
        for (std::size_t j = 0; j < r; ++j)
          if (j != i) used[j][leg[j]] = 1;
      place_leg(i + 1);
      if (disjoint)
        for (std::size_t j = 0; j < r; ++j)
          if (j != i) used[j][leg[j]] = 0;
    }
  };

  for (auto k : graph_.incident(last, support[last])) {
    if (stop) break;
    auto e = graph_.edge(k);
    bool skip = false;
    for (std::size_t i = 0; i < last && !skip; ++i) skip = e[i] == support[i];
    if (skip) continue;
    for (std::size_t i = 0; i < last; ++i) witness.mates[i] = e[i];
    if (disjoint) {
      for (std::size_t i = 0; i < last; ++i) {
        used[i][support[i]] = 1;
        used[i][e[i]] = 1;
      }
      if (mode == Disjointness::Full) used[last][support[last]] = 1;
    }
    place_leg(0);
    if (disjoint) {
      for (std::size_t i = 0; i < last; ++i) {
        used[i][support[i]] = 0;
        used[i][e[i]] = 0;
      }
      used[last][support[last]] = 0;
    }
  }
}

BigInt OctopusCounter::exact(std::span<const Index> support, Disjointness mode, std::uint64_t budget) const {
  std::uint64_t count = 0;
  for_each_witness(support, mode, budget, [&](const OctopusWitness&) {
    ++count;
    return true;
  });
  return BigInt(count);
}

std::uint64_t leg_count(const PartiteHypergraph& h, std::size_t part, Index v, Index w) {
  if (v == w) throw Error(Errc::SameVertex, "legs need two distinct vertices");
  return h.flatten(part).codegree(v, w);
}

BigInt octopus_count_relaxed(const PartiteHypergraph& h, std::span<const Index> support) {
  return OctopusCounter(h).relaxed(support);
}

BigInt octopus_count_exact(const PartiteHypergraph& h, std::span<const Index> support, Disjointness mode,
                           std::uint64_t budget) {
  return OctopusCounter(h).exact(support, mode, budget);
}

Rational eps_good_threshold(std::size_t part, const Rational& eps, const Rational& K,
                            std::span<const std::uint32_t> ambient) {
  const auto r = static_cast<unsigned>(ambient.size());
  BigInt others = 1;
  for (std::size_t j = 0; j < ambient.size(); ++j)
    if (j != part) others *= ambient[j];
  return eps * Rational(others) / (Rational(pow2(r * r)) * pow(K, static_cast<unsigned>(part + 2)));
}

bool is_eps_good(const OctopusCounter& counter, std::size_t part, Index v, Index w, const Rational& eps,
                 const Rational& K, std::span<const std::uint32_t> ambient) {
  std::uint64_t legs = counter.leg_count(part, v, w);
  return Rational(BigInt(legs)) >= eps_good_threshold(part, eps, K, ambient);
}

bool is_eps_good(const PartiteHypergraph& h, std::size_t part, Index v, Index w, const Rational& eps,
                 const Rational& K, std::span<const std::uint32_t> ambient) {
  OctopusCounter counter(h);
  return is_eps_good(counter, part, v, w, eps, K, ambient);
}

bool is_good_vertex(const OctopusCounter& counter, std::size_t part, Index v, std::span<const Index> U,
                    const Rational& eps, const Rational& eps_prime, const Rational& K,
                    std::span<const std::uint32_t> ambient) {
  const Rational threshold = eps_good_threshold(part, eps, K, ambient);
  std::size_t partners = 0;
  for (auto w : U) {
    if (w == v) continue;
    if (Rational(BigInt(counter.leg_count(part, v, w))) >= threshold) ++partners;
  }
  return Rational(BigInt(partners)) >= (1 - eps_prime) * Rational(BigInt(U.size()));
}

bool is_good_vertex(const PartiteHypergraph& h, std::size_t part, Index v, std::span<const Index> U,
                    const Rational& eps, const Rational& eps_prime, const Rational& K,
                    std::span<const std::uint32_t> ambient) {
  OctopusCounter counter(h);
  return is_good_vertex(counter, part, v, U, eps, eps_prime, K, ambient);
}

}  // namespace bsg
