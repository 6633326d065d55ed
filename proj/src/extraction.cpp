#include "bsgkit/extraction.hpp"

#include "bsgkit/bounds.hpp"
#include "bsgkit/error.hpp"
#include "bsgkit/octopus.hpp"
#include "bsgkit/parallel.hpp"
#include "bsgkit/random.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace bsg {

namespace {

Rational rat(std::size_t x) { return Rational(BigInt(x)); }

/// Smallest integer count meeting `count >= threshold`, clamped at zero.
std::uint64_t integer_floor_for(const Rational& threshold) {
  if (threshold <= 0) return 0;
  return static_cast<std::uint64_t>(ceil(threshold));
}

BigInt product_except(std::span<const std::uint32_t> sizes, std::size_t skip) {
  BigInt total = 1;
  for (std::size_t j = 0; j < sizes.size(); ++j)
    if (j != skip) total *= sizes[j];
  return total;
}

BigInt product(std::span<const std::uint32_t> sizes) { return product_except(sizes, sizes.size()); }

TraceStage stage(std::string name, std::size_t part, Rational threshold, std::size_t before, std::size_t after) {
  TraceStage t;
  t.stage = std::move(name);
  t.part = part;
  t.threshold = std::move(threshold);
  t.before = before;
  t.after = after;
  return t;
}

IndexSet iota_set(std::size_t n) {
  IndexSet s(n);
  std::iota(s.begin(), s.end(), Index{0});
  return s;
}

void require_density(const PartiteHypergraph& h, const Rational& K) {
  if (Rational(BigInt(h.edge_count())) * K < Rational(h.tuple_space()))
    throw Error(Errc::DensityTooLow, "|E| = " + std::to_string(h.edge_count()) + " < prod |V_i| / K with K = " +
                                         to_string(K));
}

}  // namespace

std::string_view mode_name(Mode mode) noexcept {
  switch (mode) {
    case Mode::General: return "general";
    case Mode::Dense: return "dense";
    case Mode::AlmostAll: return "almost-all";
  }
  return "general";
}

Mode parse_mode(std::string_view text) {
  if (text == "general") return Mode::General;
  if (text == "dense") return Mode::Dense;
  if (text == "almost-all") return Mode::AlmostAll;
  throw Error(Errc::ParseError, "unknown mode '" + std::string(text) + "'");
}

// ------------------------------------------------------------------- DRC

DrcOutcome drc_extract(const Bipartite& g, const Rational& K, const Rational& eps, const DrcOptions& opts) {
  if (!(eps > 0 && eps < 1)) throw Error(Errc::ConfigInvalid, "eps must lie in (0, 1)");
  if (K <= 0) throw Error(Errc::ConfigInvalid, "K must be positive");
  const std::size_t a = g.left_size();
  const BigInt b = g.right_size();
  if (a == 0 || Rational(BigInt(g.edge_count())) * K < Rational(BigInt(a) * b))
    throw Error(Errc::DensityTooLow, "bipartite graph below density 1/K");

  DrcOutcome out;
  out.codegree_threshold = eps * Rational(b) / (2 * K * K);
  out.size_floor = rat(a) / (2 * K);
  const std::uint64_t need_codegree = integer_floor_for(out.codegree_threshold);
  const auto need_size = static_cast<std::size_t>(integer_floor_for(out.size_floor));

  // good[v][w]: codegree(v, w) clears the threshold (v = w uses the degree).
  std::vector<std::uint8_t> good(a * a);
  for (Index v = 0; v < a; ++v)
    for (Index w = v; w < a; ++w) {
      std::uint8_t ok = g.codegree(v, w) >= need_codegree;
      good[v * a + w] = good[w * a + v] = ok;
    }

  const auto& rights = g.right_vertices();
  std::vector<std::size_t> order(rights.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  if (opts.random_pivots) {
    Prng rng(*opts.random_pivots);
    shuffle(rng, order);
  } else {
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
      return rights[x].neighbors.size() > rights[y].neighbors.size();
    });
  }

  for (std::size_t pick : order) {
    const auto& pivot = rights[pick];
    if (pivot.neighbors.size() < need_size) continue;
    IndexSet U = pivot.neighbors;
    const std::size_t m = U.size();
    std::vector<std::size_t> row_bad(m, 0);
    std::size_t total_bad = 0;
    for (std::size_t x = 0; x < m; ++x)
      for (std::size_t y = 0; y < m; ++y)
        if (!good[U[x] * a + U[y]]) ++row_bad[x];
    for (auto c : row_bad) total_bad += c;
    std::vector<std::uint8_t> alive(m, 1);
    std::size_t size = m;
    std::size_t deletions = 0;

    for (;;) {
      if (Rational(BigInt(total_bad)) <= eps * rat(size) * rat(size)) {
        out.pivot = pivot.id;
        out.deletions = deletions;
        out.U.clear();
        for (std::size_t x = 0; x < m; ++x)
          if (alive[x]) out.U.push_back(U[x]);
        out.bad_pair_fraction = Rational(BigInt(total_bad), BigInt(size) * size);
        return out;
      }
      if (size - 1 < need_size) break;
      // Ordered bad pairs through x: row + column - diagonal.
      std::size_t victim = m;
      std::size_t worst = 0;
      for (std::size_t x = 0; x < m; ++x) {
        if (!alive[x]) continue;
        std::size_t diag = good[U[x] * a + U[x]] ? 0 : 1;
        std::size_t through = 2 * row_bad[x] - diag;
        if (victim == m || through > worst) {
          victim = x;
          worst = through;
        }
      }
      alive[victim] = 0;
      --size;
      ++deletions;
      total_bad -= worst;
      for (std::size_t y = 0; y < m; ++y)
        if (alive[y] && !good[U[victim] * a + U[y]]) --row_bad[y];
    }
  }
  throw Error(Errc::NoWitness, "no pivot neighbourhood meets the size and codegree conditions");
}

IterateOutcome iterate_extract(const PartiteHypergraph& h, std::size_t part, const Rational& K, const Rational& eps,
                               const DrcOptions& opts) {
  if (part >= h.arity()) throw Error(Errc::IndexOutOfRange, "part " + std::to_string(part));
  require_density(h, K);
  const BigInt z = product_except(h.part_sizes(), part);
  const Bipartite g = h.flatten(part);

  IterateOutcome out;
  out.prune_threshold = Rational(z) / (2 * K);
  out.leg_threshold = eps * Rational(z) / (2 * K * K);
  const std::uint64_t need_degree = integer_floor_for(out.prune_threshold);
  for (Index v = 0; v < g.left_size(); ++v)
    if (g.degree(v) >= need_degree) out.pruned.push_back(v);

  const Bipartite pruned = g.restrict_left(out.pruned);
  if (pruned.edge_count() == 0) throw Error(Errc::NoWitness, "pruning removed every edge");
  out.K_prime = Rational(BigInt(out.pruned.size()) * z, BigInt(pruned.edge_count()));
  out.drc = drc_extract(pruned, out.K_prime, eps, opts);
  for (auto local : out.drc.U) out.U.push_back(out.pruned[local]);

  // Conclusions, rechecked against the unpruned flattening.
  const Rational size_floor = rat(h.part_size(part)) / (4 * K);
  if (rat(out.U.size()) < size_floor)
    throw Error(Errc::NoWitness, "U smaller than |V|/(4K)");
  const std::uint64_t need_legs = integer_floor_for(out.leg_threshold);
  std::size_t good_pairs = 0;
  for (auto v : out.U)
    for (auto w : out.U)
      if (g.codegree(v, w) >= need_legs) ++good_pairs;
  const Rational n2 = rat(out.U.size()) * rat(out.U.size());
  if (rat(good_pairs) < (1 - eps) * n2) throw Error(Errc::NoWitness, "too few pairs with enough legs");
  for (auto v : out.U)
    if (g.degree(v) < need_degree) throw Error(Errc::NoWitness, "vertex below the degree floor");
  return out;
}

// ------------------------------------------------------------- pipelines

Rational octopus_constant(std::size_t r, const Rational& K) {
  const auto ru = static_cast<unsigned>(r);
  const unsigned k_exp = (ru * ru + 5 * ru - 4) / 2;
  BigInt denom = pow(BigInt(8), ru * ru * ru) * pow(BigInt(ru - 1), ru - 1);
  return 1 / (Rational(denom) * pow(K, k_exp));
}

SupportCheck verify_octopus_floor(const OctopusCounter& counter, const std::vector<IndexSet>& subsets,
                                  const Rational& threshold, const Caps& caps) {
  SupportCheck check;
  check.threshold = threshold;
  BigInt total = 1;
  for (const auto& s : subsets) total *= s.size();
  if (total == 0) {
    check.exhaustive = true;
    return check;
  }

  std::vector<Tuple> supports;
  const std::size_t r = subsets.size();
  if (total <= caps.exhaustive_supports) {
    check.exhaustive = true;
    const auto count = static_cast<std::size_t>(total);
    supports.reserve(count);
    std::vector<std::size_t> digit(r, 0);
    for (std::size_t k = 0; k < count; ++k) {
      Tuple t(r);
      for (std::size_t j = 0; j < r; ++j) t[j] = subsets[j][digit[j]];
      supports.push_back(std::move(t));
      for (std::size_t j = r; j-- > 0;) {
        if (++digit[j] < subsets[j].size()) break;
        digit[j] = 0;
      }
    }
  } else {
    Prng rng(caps.sample_seed);
    supports.reserve(caps.support_samples);
    for (std::uint64_t k = 0; k < caps.support_samples; ++k) {
      Tuple t(r);
      for (std::size_t j = 0; j < r; ++j) t[j] = subsets[j][uniform_below(rng, subsets[j].size())];
      supports.push_back(std::move(t));
    }
  }

  std::vector<BigInt> counts(supports.size());
  parallel_for(supports.size(), caps.workers, [&](std::size_t i) { counts[i] = counter.relaxed(supports[i]); });

  check.supports = supports.size();
  for (std::size_t i = 0; i < supports.size(); ++i) {
    if (i == 0 || counts[i] < check.min_count) {
      check.min_count = counts[i];
      check.argmin = supports[i];
    }
    if (Rational(counts[i]) < threshold) ++check.failures;
  }
  return check;
}

namespace {

std::size_t total_size(const std::vector<IndexSet>& subsets) {
  std::size_t n = 0;
  for (const auto& s : subsets) n += s.size();
  return n;
}

// Closing edges with w_i = v_i are not octopuses, so on small sets a support
// can fall short of the floor even though the construction guarantees it
// asymptotically. Counts are taken in the whole hypergraph, so removing a
// vertex never lowers another support's count: greedily drop the vertex on
// the most failing supports while every part keeps |A'_i| >= |A_i|/(2^(i+2)K).
// Returns true when some vertex was removed.
bool repair_supports(const OctopusCounter& counter, std::vector<IndexSet>& subsets, const Rational& floor,
                     const std::vector<std::uint32_t>& ambient, const Rational& K, const Caps& caps) {
  const std::size_t r = subsets.size();
  std::vector<Tuple> all{{}};
  for (const auto& s : subsets) {
    std::vector<Tuple> next;
    for (const auto& t : all)
      for (auto v : s) {
        Tuple u = t;
        u.push_back(v);
        next.push_back(std::move(u));
      }
    all = std::move(next);
  }
  std::vector<char> low(all.size(), 0);
  parallel_for(all.size(), caps.workers,
               [&](std::size_t i) { low[i] = Rational(counter.relaxed(all[i])) < floor ? 1 : 0; });
  std::vector<Tuple> failing;
  for (std::size_t i = 0; i < all.size(); ++i)
    if (low[i]) failing.push_back(std::move(all[i]));

  bool changed = false;
  while (!failing.empty()) {
    std::optional<std::pair<std::size_t, Index>> pick;
    std::size_t best = 0;
    for (std::size_t p = 0; p < r; ++p) {
      const Rational size_floor = rat(ambient[p]) / (Rational(pow2(static_cast<unsigned>(p + 3))) * K);
      if (rat(subsets[p].size() - 1) < size_floor) continue;
      for (auto v : subsets[p]) {
        std::size_t hits = 0;
        for (const auto& t : failing)
          if (t[p] == v) ++hits;
        if (hits > best) {
          best = hits;
          pick = {p, v};
        }
      }
    }
    if (!pick) break;
    auto& part = subsets[pick->first];
    part.erase(std::find(part.begin(), part.end(), pick->second));
    std::erase_if(failing, [&](const Tuple& t) { return t[pick->first] == pick->second; });
    changed = true;
  }
  return changed;
}

}  // namespace

ExtractionResult octopus_extract(const Instance& inst, const Rational& K, const Caps& caps, const DrcOptions& opts) {
  const std::size_t r = inst.arity();
  const PartiteHypergraph& h = inst.graph;
  const std::vector<std::uint32_t> ambient = inst.part_sizes();
  if (K < 1) throw Error(Errc::ConfigInvalid, "K must be at least 1");
  require_density(h, K);

  ExtractionResult result;
  result.mode = Mode::General;
  result.K = K;
  result.epsilon = 1 / (Rational(BigInt(r - 1) * pow2(static_cast<unsigned>(r + 3))) * K);
  if (!(result.epsilon < Rational(1, 4))) throw Error(Errc::InfeasibleEpsilon, "eps must be below 1/4");
  const Rational& eps = result.epsilon;

  OctopusCounter counter(h);
  PartiteHypergraph current = h;
  std::vector<IndexSet> origin(r);
  for (std::size_t j = 0; j < r; ++j) origin[j] = iota_set(ambient[j]);

  for (std::size_t p = 0; p + 1 < r; ++p) {
    const Rational Kp = Rational(pow2(static_cast<unsigned>(p))) * K;
    IterateOutcome it = iterate_extract(current, p, Kp, eps, opts);

    TraceStage prune = stage("prune", p, it.prune_threshold, current.part_size(p), it.pruned.size());
    prune.density = 1 / it.K_prime;
    result.trace.push_back(std::move(prune));
    TraceStage drc = stage("drc", p, it.drc.codegree_threshold, it.pruned.size(), it.U.size());
    drc.pivot = it.drc.pivot;
    drc.note = "bad pair fraction " + to_string(it.drc.bad_pair_fraction) + ", deletions " +
               std::to_string(it.drc.deletions);
    result.trace.push_back(std::move(drc));

    // Markov filter: keep vertices with at least (1 - 2 eps)|tilde| good
    // partners in tilde, goodness measured by legs in the original H.
    IndexSet tilde;
    for (auto local : it.U) tilde.push_back(origin[p][local]);
    const std::uint64_t need_legs = integer_floor_for(eps_good_threshold(p, eps, K, ambient));
    const Rational need_partners = (1 - 2 * eps) * rat(tilde.size());
    IndexSet kept_local;
    for (std::size_t x = 0; x < tilde.size(); ++x) {
      std::size_t partners = 0;
      for (auto w : tilde)
        if (counter.pair_codegree(p, tilde[x], w) >= need_legs) ++partners;
      if (rat(partners) >= need_partners) kept_local.push_back(it.U[x]);
    }
    result.trace.push_back(stage("markov", p, need_partners, tilde.size(), kept_local.size()));
    if (kept_local.empty()) throw Error(Errc::NoWitness, "Markov filter emptied part " + std::to_string(p));

    std::vector<IndexSet> keep(r);
    for (std::size_t j = 0; j < r; ++j) keep[j] = j == p ? kept_local : iota_set(current.part_size(j));
    Induced next = current.induce(keep);
    IndexSet mapped;
    for (auto local : next.origin[p]) mapped.push_back(origin[p][local]);
    origin[p] = std::move(mapped);
    current = std::move(next.graph);

    TraceStage induce =
        stage("induce", p, 1 / (Rational(pow2(static_cast<unsigned>(p + 1))) * K), 0, current.edge_count());
    induce.density = current.density();
    result.trace.push_back(std::move(induce));
  }

  const std::size_t last = r - 1;
  BigInt chosen = 1;
  for (std::size_t j = 0; j < last; ++j) chosen *= origin[j].size();
  const Rational last_threshold = Rational(chosen) / (Rational(pow2(static_cast<unsigned>(r))) * K);
  const std::uint64_t need_degree = integer_floor_for(last_threshold);
  IndexSet final_part;
  for (Index v = 0; v < current.part_size(last); ++v)
    if (current.degree(last, v) >= need_degree) final_part.push_back(origin[last][v]);
  result.trace.push_back(stage("last-degree", last, last_threshold, current.part_size(last), final_part.size()));
  if (final_part.empty()) throw Error(Errc::NoWitness, "no vertex of the last part meets the degree floor");
  origin[last] = std::move(final_part);

  result.subsets = std::move(origin);
  const Rational floor = octopus_constant(r, K) * Rational(pow(product(ambient), static_cast<unsigned>(r - 1)));
  result.octopus_check = verify_octopus_floor(counter, result.subsets, floor, caps);
  if (result.octopus_check->failures > 0 && result.octopus_check->exhaustive) {
    const std::size_t before = total_size(result.subsets);
    if (repair_supports(counter, result.subsets, floor, ambient, K, caps)) {
      result.trace.push_back(stage("repair", last, floor, before, total_size(result.subsets)));
      result.trace.back().note = "dropped vertices of supports below the octopus floor";
      result.octopus_check = verify_octopus_floor(counter, result.subsets, floor, caps);
    }
  }
  return result;
}

ExtractionResult dense_extract(const Instance& inst, const Rational& eps, std::optional<Rational> delta,
                               const Caps& caps) {
  const std::size_t r = inst.arity();
  const PartiteHypergraph& h = inst.graph;
  const std::uint32_t n = h.part_size(0);
  for (std::size_t j = 1; j < r; ++j)
    if (h.part_size(j) != n) throw Error(Errc::UnequalParts, "dense extraction needs equal part sizes");
  if (n == 0) throw Error(Errc::EmptyPart, "empty parts");
  if (!(eps > 0)) throw Error(Errc::ConfigInvalid, "eps must be positive");
  const Rational eps_cap(1, 10 * static_cast<long long>(r));
  if (eps >= eps_cap) throw Error(Errc::EpsilonTooLarge, "eps must be below 1/(10r) = " + to_string(eps_cap));

  ExtractionResult result;
  result.mode = Mode::Dense;
  result.epsilon = eps;
  const bool automatic = !delta.has_value();
  result.delta = delta.value_or(eps / (10 * static_cast<long long>(r)));
  const Rational& d = *result.delta;
  if (d < 0 || d >= 1) throw Error(Errc::ConfigInvalid, "delta must lie in [0, 1)");
  if (automatic) {
    TraceStage note = stage("delta", 0, d, 0, 0);
    note.note = "auto: eps/(10r)";
    result.trace.push_back(std::move(note));
  }

  const BigInt n_r = pow(BigInt(n), static_cast<unsigned>(r));
  if (Rational(BigInt(h.edge_count())) < (1 - d) * Rational(n_r))
    throw Error(Errc::DensityTooLow, "|E| below (1 - delta) n^r");

  const Rational degree_floor = (1 - d / eps) * Rational(pow(BigInt(n), static_cast<unsigned>(r - 1)));
  const std::uint64_t need_degree = integer_floor_for(degree_floor);
  const auto target = static_cast<std::size_t>(ceil((1 - eps) * rat(n)));
  result.subsets.resize(r);
  for (std::size_t p = 0; p < r; ++p) {
    IndexSet survivors;
    for (Index v = 0; v < n; ++v)
      if (h.degree(p, v) >= need_degree) survivors.push_back(v);
    result.trace.push_back(stage("degree-filter", p, degree_floor, n, survivors.size()));
    if (survivors.size() < target)
      throw Error(Errc::NoWitness, "only " + std::to_string(survivors.size()) + " vertices of part " +
                                       std::to_string(p) + " meet the degree floor");
    const std::size_t before = survivors.size();
    survivors.resize(target);
    result.trace.push_back(stage("trim", p, rat(target), before, survivors.size()));
    result.subsets[p] = std::move(survivors);
  }

  OctopusCounter counter(h);
  const Rational floor = Rational(pow(BigInt(n), static_cast<unsigned>(r * (r - 1))), BigInt(2));
  result.octopus_check = verify_octopus_floor(counter, result.subsets, floor, caps);
  return result;
}

BsgRun bsg_extract(const Instance& inst, const BsgParams& params, const Caps& caps, const DrcOptions& opts) {
  Rational K;
  if (params.K) {
    K = *params.K;
  } else {
    auto measured = inst.graph.measured_K();
    if (!measured) throw Error(Errc::NoEdges, "cannot measure K of an edgeless hypergraph");
    K = *measured;
  }
  const Rational c_pow_r = sumset_constant_pow_r(inst, params.C);
  const auto r = static_cast<unsigned>(inst.arity());
  const BigInt restricted = restricted_sumset(inst).size();
  if (Rational(pow(restricted, r)) > c_pow_r * Rational(inst.tuple_space()))
    throw Error(Errc::HypothesisViolated, "restricted sumset exceeds C (prod |A_i|)^(1/r) with C^r = " +
                                              to_string(c_pow_r));

  BsgRun run;
  run.result = octopus_extract(inst, K, caps, opts);
  run.result.c_pow_r = c_pow_r;
  run.report = check_bounds(run.result, inst, Mode::General, caps);
  return run;
}

BsgRun almost_all_extract(const Instance& inst, std::optional<Rational> C, const Rational& eps,
                          std::optional<Rational> delta, const Caps& caps) {
  BsgRun run;
  run.result = dense_extract(inst, eps, delta, caps);
  run.result.mode = Mode::AlmostAll;
  const Rational c_pow_r = sumset_constant_pow_r(inst, C);
  const auto r = static_cast<unsigned>(inst.arity());
  const BigInt restricted = restricted_sumset(inst).size();
  if (Rational(pow(restricted, r)) > c_pow_r * Rational(inst.tuple_space()))
    throw Error(Errc::HypothesisViolated, "restricted sumset exceeds C n with C^r = " + to_string(c_pow_r));
  run.result.c_pow_r = c_pow_r;
  run.report = check_bounds(run.result, inst, Mode::AlmostAll, caps);
  return run;
}

}  // namespace bsg
