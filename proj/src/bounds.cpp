#include "bsgkit/bounds.hpp"

#include "bsgkit/error.hpp"
#include "bsgkit/octopus.hpp"

#include <cmath>
#include <cstdio>
#include <string>

namespace bsg {

namespace {

Rational rat(std::size_t x) { return Rational(BigInt(x)); }

std::vector<ElemSet> chosen_sets(const ExtractionResult& result, const Instance& inst) {
  std::vector<ElemSet> sets;
  for (std::size_t j = 0; j < inst.arity(); ++j) sets.push_back(inst.parts[j].subset(result.subsets[j]));
  return sets;
}

BigInt chosen_product(const ExtractionResult& result) {
  BigInt total = 1;
  for (const auto& s : result.subsets) total *= s.size();
  return total;
}

void validate_subsets(const ExtractionResult& result, const Instance& inst) {
  if (result.subsets.size() != inst.arity())
    throw Error(Errc::ArityMismatch, "result has " + std::to_string(result.subsets.size()) + " subsets");
  for (std::size_t j = 0; j < inst.arity(); ++j) {
    const auto& s = result.subsets[j];
    if (s.empty()) throw Error(Errc::EmptyPart, "subset " + std::to_string(j) + " is empty");
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (s[k] >= inst.parts[j].size())
        throw Error(Errc::IndexOutOfRange, "subset " + std::to_string(j) + " index " + std::to_string(s[k]));
      if (k > 0 && s[k] <= s[k - 1])
        throw Error(Errc::ConfigInvalid, "subset " + std::to_string(j) + " is not strictly increasing");
    }
  }
}

std::string support_detail(const SupportCheck& check) {
  std::string text = check.exhaustive ? "exhaustive over " : "sampled ";
  text += std::to_string(check.supports) + " supports, " + std::to_string(check.failures) + " below";
  return text;
}

void octopus_floor_item(BoundReport& report, const ExtractionResult& result, const Instance& inst,
                        const Rational& threshold, const std::string& anchor, const Caps& caps) {
  OctopusCounter counter(inst.graph);
  SupportCheck check = verify_octopus_floor(counter, result.subsets, threshold, caps);
  report.check("octopus_floor", Rational(check.min_count), Relation::GreaterEq, threshold, anchor,
               support_detail(check));
}

}  // namespace

InstanceMeasure measure_instance(const Instance& inst) {
  auto K = inst.graph.measured_K();
  if (!K) throw Error(Errc::NoEdges, "edgeless hypergraph");
  InstanceMeasure m;
  m.K = *K;
  m.density = inst.graph.density();
  m.restricted_sumset_size = restricted_sumset(inst).size();
  m.c_pow_r = sumset_constant_pow_r(inst, std::nullopt);
  const double approx = std::pow(m.c_pow_r.convert_to<double>(), 1.0 / static_cast<double>(inst.arity()));
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", approx);
  m.c_approx = buf;
  m.full_sumset_size = iterated_sumset(inst.parts).size();
  return m;
}

Rational sumset_constant_pow_r(const Instance& inst, const std::optional<Rational>& C) {
  const auto r = static_cast<unsigned>(inst.arity());
  if (C) {
    if (*C <= 0) throw Error(Errc::ConfigInvalid, "C must be positive");
    return pow(*C, r);
  }
  return Rational(pow(BigInt(restricted_sumset(inst).size()), r), inst.tuple_space());
}

BoundReport check_bounds(const ExtractionResult& result, const Instance& inst, Mode mode, const Caps& caps) {
  if (result.mode != mode)
    throw Error(Errc::ModeMismatch, "result is " + std::string(mode_name(result.mode)) + ", check requested " +
                                        std::string(mode_name(mode)));
  validate_subsets(result, inst);
  const std::size_t r = inst.arity();
  const auto ru = static_cast<unsigned>(r);
  const BigInt ambient = inst.tuple_space();
  const Rational edges(BigInt(inst.graph.edge_count()));
  BoundReport report;

  if (mode == Mode::General) {
    if (!result.K) throw Error(Errc::ConfigInvalid, "general result without K");
    const Rational& K = *result.K;
    report.check("hypothesis.density", edges * K, Relation::GreaterEq, Rational(ambient), "K |E| >= prod |A_i|");
    if (result.c_pow_r)
      report.check("hypothesis.restricted_sumset", Rational(pow(BigInt(restricted_sumset(inst).size()), ru)),
                   Relation::LessEq, *result.c_pow_r * Rational(ambient), "|A (+)_H B|^r <= C^r prod |A_i|");
    for (std::size_t p = 0; p < r; ++p) {
      const Rational floor = rat(inst.parts[p].size()) / (Rational(pow2(static_cast<unsigned>(p + 3))) * K);
      report.check("size_floor[" + std::to_string(p) + "]", rat(result.subsets[p].size()), Relation::GreaterEq,
                   floor, "|A'_i| >= |A_i| / (2^(i+2) K)");
    }
    // Density of H restricted to the first p chosen subsets.
    for (std::size_t p = 1; p < r; ++p) {
      std::vector<IndexSet> keep(r);
      for (std::size_t j = 0; j < r; ++j) {
        if (j < p) {
          keep[j] = result.subsets[j];
        } else {
          keep[j].resize(inst.parts[j].size());
          for (std::size_t k = 0; k < keep[j].size(); ++k) keep[j][k] = static_cast<Index>(k);
        }
      }
      const Rational density = inst.graph.induce(keep).graph.density();
      report.check("chain_density[" + std::to_string(p) + "]", density, Relation::GreaterEq,
                   1 / (Rational(pow2(static_cast<unsigned>(p))) * K), "density after restricting i parts >= 1/(2^i K)");
    }
    const Rational c = octopus_constant(r, K);
    octopus_floor_item(report, result, inst, c * Rational(pow(ambient, ru - 1)),
                       "octopuses per support >= c(r,K) (prod |A_i|)^(r-1)", caps);
    if (result.c_pow_r) {
      const BigInt s = iterated_sumset(chosen_sets(result, inst)).size();
      const Rational rhs = pow(1 / c, ru) * pow(*result.c_pow_r, 2 * ru - 1) * Rational(ambient);
      report.check("sumset_bound", Rational(pow(s, ru)), Relation::LessEq, rhs,
                   "|A'_1 + ... + A'_r|^r <= (C^(2r-1) / c(r,K))^r prod |A_i|");
    }
    return report;
  }

  if (!result.delta) throw Error(Errc::ConfigInvalid, "dense result without delta");
  const Rational& d = *result.delta;
  const std::uint32_t n = inst.graph.part_size(0);
  for (std::size_t j = 1; j < r; ++j)
    if (inst.graph.part_size(j) != n) throw Error(Errc::UnequalParts, "dense check needs equal part sizes");
  const BigInt n_r = pow(BigInt(n), ru);
  report.check("hypothesis.density", edges, Relation::GreaterEq, (1 - d) * Rational(n_r), "|E| >= (1 - delta) n^r");
  const Rational target(ceil((1 - result.epsilon) * rat(n)));
  for (std::size_t p = 0; p < r; ++p)
    report.check("size_exact[" + std::to_string(p) + "]", rat(result.subsets[p].size()), Relation::Equal, target,
                 "|A'_i| = ceil((1 - eps) n)");
  octopus_floor_item(report, result, inst, Rational(pow(BigInt(n), ru * (ru - 1)), BigInt(2)),
                     "octopuses per support >= n^(r(r-1)) / 2", caps);
  if (mode == Mode::AlmostAll) {
    if (!result.c_pow_r) throw Error(Errc::ConfigInvalid, "almost-all result without C");
    report.check("hypothesis.restricted_sumset", Rational(pow(BigInt(restricted_sumset(inst).size()), ru)),
                 Relation::LessEq, *result.c_pow_r * Rational(n_r), "|A (+)_H B|^r <= C^r n^r");
    const BigInt s = iterated_sumset(chosen_sets(result, inst)).size();
    report.check("sumset_bound", Rational(pow(s, ru)), Relation::LessEq,
                 Rational(pow2(ru)) * pow(*result.c_pow_r, 2 * ru - 1) * Rational(n_r),
                 "|A'_1 + ... + A'_r|^r <= 2^r C^(r(2r-1)) n^r");
  }
  return report;
}

std::map<GroupElem, Tuple> representative_tuples(const ExtractionResult& result, const Instance& inst) {
  validate_subsets(result, inst);
  const std::size_t r = inst.arity();
  std::map<GroupElem, Tuple> reps;
  const BigInt total = chosen_product(result);
  if (total > BigInt(100'000'000)) throw Error(Errc::TooLarge, "too many tuples to enumerate");
  std::vector<std::size_t> digit(r, 0);
  Tuple t(r);
  for (std::size_t k = 0, count = static_cast<std::size_t>(total); k < count; ++k) {
    for (std::size_t j = 0; j < r; ++j) t[j] = result.subsets[j][digit[j]];
    reps.try_emplace(inst.tuple_sum(t), t);
    for (std::size_t j = r; j-- > 0;) {
      if (++digit[j] < result.subsets[j].size()) break;
      digit[j] = 0;
    }
  }
  return reps;
}

Rational measured_octopus_L(const ExtractionResult& result, const Instance& inst, const Caps& caps) {
  (void)caps;
  const auto reps = representative_tuples(result, inst);
  OctopusCounter counter(inst.graph);
  std::optional<BigInt> least;
  for (const auto& [sum, tuple] : reps) {
    BigInt c = counter.relaxed(tuple);
    if (!least || c < *least) least = c;
  }
  const auto r = static_cast<unsigned>(inst.arity());
  return Rational(least.value_or(0), pow(inst.tuple_space(), r - 1));
}

BoundReport check_representations(const ExtractionResult& result, const Instance& inst, const Rational& L,
                                  const Caps& caps) {
  validate_subsets(result, inst);
  const auto r = static_cast<unsigned>(inst.arity());
  const ElemSet s = iterated_sumset(chosen_sets(result, inst));
  const ElemSet restricted = restricted_sumset(inst);
  const RepresentationTable table(restricted, r, caps.convolution_cells);
  const BigInt ambient = inst.tuple_space();
  const Rational scale = Rational(pow(ambient, 2 * r - 2));

  std::optional<BigInt> least;
  for (const auto& target : s.elems()) {
    BigInt c = table.count(target);
    if (!least || c < *least) least = c;
  }
  BoundReport report;
  report.check("representations_per_sum", Rational(pow(least.value_or(0), r)), Relation::GreaterEq,
               pow(L, r) * scale, "min_s rep(s)^r >= L^r (prod |A_i|)^(2r-2)",
               "|S| = " + std::to_string(s.size()));
  report.check("representation_total", pow(rat(s.size()) * L, r) * scale, Relation::LessEq,
               Rational(pow(BigInt(restricted.size()), r * (2 * r - 1))),
               "(|S| L)^r (prod |A_i|)^(2r-2) <= |A (+)_H B|^(r(2r-1))");
  return report;
}

}  // namespace bsg
