#pragma once

#include "bsgkit/extraction.hpp"

#include <map>

namespace bsg {

struct InstanceMeasure {
  Rational K;  // prod |A_i| / |E|
  Rational density;
  std::size_t restricted_sumset_size = 0;
  Rational c_pow_r;  // |restricted sumset|^r / prod |A_i|
  std::string c_approx;
  std::size_t full_sumset_size = 0;  // |A_1 + ... + A_r|
};

/// Throws NoEdges for an edgeless hypergraph.
InstanceMeasure measure_instance(const Instance& inst);

/// C^r for a rational C, or measured from the instance when C is nullopt.
Rational sumset_constant_pow_r(const Instance& inst, const std::optional<Rational>& C);

/// Recomputes every inequality for `result` from its subsets and
/// parameters alone. Throws ModeMismatch when result.mode != mode.
BoundReport check_bounds(const ExtractionResult& result, const Instance& inst, Mode mode, const Caps& caps = {});

/// Lexicographically least index tuple in A'_1 x ... x A'_r for every s in
/// A'_1 + ... + A'_r.
std::map<GroupElem, Tuple> representative_tuples(const ExtractionResult& result, const Instance& inst);

/// min over representative tuples of relaxed count / (prod |A_i|)^{r-1}.
Rational measured_octopus_L(const ExtractionResult& result, const Instance& inst, const Caps& caps = {});

/// Per-sum representation floor and the aggregate counting inequality,
/// both compared through r-th powers.
BoundReport check_representations(const ExtractionResult& result, const Instance& inst, const Rational& L,
                                  const Caps& caps = {});

}  // namespace bsg
