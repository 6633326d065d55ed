#pragma once

#include "bsgkit/hypergraph.hpp"

#include <atomic>
#include <functional>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

namespace bsg {

/// How strictly an enumerated octopus must be vertex-disjoint.
enum class Disjointness {
  /// Only w_i != v_i; every combination the leg-count product formula
  /// multiplies out.
  Relaxed,
  /// Named vertices distinct and legs pairwise vertex-disjoint; fill
  /// vertices may coincide with v_r.
  NamedOnly,
  /// NamedOnly plus no fill vertex equals v_r.
  Full,
};

/// An octopus supported on `support` = (v_1, ..., v_r): for each leg i < r-1
/// (0-based parts), legs[i] is the edge through v_i, and the same tuple with
/// slot i replaced by mates[i] is the edge through w_i. The closing edge is
/// (mates..., support.back()).
struct OctopusWitness {
  Tuple support;
  Tuple mates;
  std::vector<Tuple> legs;
};

/// Leg and octopus counting over one hypergraph. Flattenings and leg counts
/// are computed lazily and cached; all queries are safe to call
/// concurrently. The hypergraph must outlive the counter.
class OctopusCounter {
 public:
  explicit OctopusCounter(const PartiteHypergraph& graph);
  OctopusCounter(const OctopusCounter&) = delete;
  OctopusCounter& operator=(const OctopusCounter&) = delete;

  const PartiteHypergraph& graph() const noexcept { return graph_; }
  const Bipartite& flattening(std::size_t part) const;

  /// Number of i-th legs on (v, w). Throws SameVertex when v == w.
  std::uint64_t leg_count(std::size_t part, Index v, Index w) const;
  /// leg_count for v != w and the degree of v when v == w.
  std::uint64_t pair_codegree(std::size_t part, Index v, Index w) const;

  /// Sum over closing edges (w_1..w_{r-1}, v_r) with w_i != v_i of the
  /// product of leg counts.
  BigInt relaxed(std::span<const Index> support) const;

  BigInt exact(std::span<const Index> support, Disjointness mode, std::uint64_t budget = 10'000'000) const;

  /// Visits every witness allowed by `mode`; stops early if visit returns
  /// false. Throws BudgetExceeded if the relaxed count exceeds `budget`.
  void for_each_witness(std::span<const Index> support, Disjointness mode, std::uint64_t budget,
                        const std::function<bool(const OctopusWitness&)>& visit) const;

 private:
  struct PartCache {
    std::once_flag built;
    std::unique_ptr<Bipartite> flat;
    std::unique_ptr<std::atomic<std::uint64_t>[]> legs;  // symmetric, upper triangle used
  };

  void check_support(std::span<const Index> support) const;

  const PartiteHypergraph& graph_;
  std::unique_ptr<PartCache[]> cache_;
};

std::uint64_t leg_count(const PartiteHypergraph& h, std::size_t part, Index v, Index w);
BigInt octopus_count_relaxed(const PartiteHypergraph& h, std::span<const Index> support);
BigInt octopus_count_exact(const PartiteHypergraph& h, std::span<const Index> support, Disjointness mode,
                           std::uint64_t budget = 10'000'000);

/// Leg-count threshold for an eps-good pair in (0-based) `part`:
///   eps / (2^{r^2} K^{part+2}) * prod_{j != part} ambient[j].
Rational eps_good_threshold(std::size_t part, const Rational& eps, const Rational& K,
                            std::span<const std::uint32_t> ambient);

bool is_eps_good(const OctopusCounter& counter, std::size_t part, Index v, Index w, const Rational& eps,
                 const Rational& K, std::span<const std::uint32_t> ambient);
bool is_eps_good(const PartiteHypergraph& h, std::size_t part, Index v, Index w, const Rational& eps,
                 const Rational& K, std::span<const std::uint32_t> ambient);

/// v has eps-good partners w in U (w != v) numbering at least (1 - eps')|U|.
bool is_good_vertex(const OctopusCounter& counter, std::size_t part, Index v, std::span<const Index> U,
                    const Rational& eps, const Rational& eps_prime, const Rational& K,
                    std::span<const std::uint32_t> ambient);
bool is_good_vertex(const PartiteHypergraph& h, std::size_t part, Index v, std::span<const Index> U,
                    const Rational& eps, const Rational& eps_prime, const Rational& K,
                    std::span<const std::uint32_t> ambient);

}  // namespace bsg
