#pragma once

#include "bsgkit/caps.hpp"
#include "bsgkit/hypergraph.hpp"
#include "bsgkit/instance.hpp"
#include "bsgkit/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bsg {

class OctopusCounter;

enum class Mode { General, Dense, AlmostAll };

std::string_view mode_name(Mode mode) noexcept;
Mode parse_mode(std::string_view text);

/// One step of a pipeline run. `threshold` is the exact value the step
/// compared against; `before`/`after` are set sizes around the step.
struct TraceStage {
  std::string stage;
  std::size_t part = 0;
  Rational threshold;
  std::size_t before = 0;
  std::size_t after = 0;
  std::optional<Rational> density;
  std::optional<std::uint64_t> pivot;
  std::string note;
};

/// Outcome of verifying a per-support octopus floor.
struct SupportCheck {
  Rational threshold;
  std::uint64_t supports = 0;  // number verified
  bool exhaustive = false;
  std::uint64_t failures = 0;
  BigInt min_count;
  Tuple argmin;
};

struct ExtractionResult {
  Mode mode = Mode::General;
  std::vector<IndexSet> subsets;  // indices into the instance parts
  Rational epsilon;
  std::optional<Rational> K;        // general mode
  std::optional<Rational> delta;    // dense modes
  std::optional<Rational> c_pow_r;  // C^r, when a sumset hypothesis applies
  std::vector<TraceStage> trace;
  std::optional<SupportCheck> octopus_check;
};

// ------------------------------------------------------ dependent random choice

struct DrcOptions {
  /// Scan pivots in a seeded random order instead of by descending degree.
  std::optional<std::uint64_t> random_pivots;
};

struct DrcOutcome {
  std::uint64_t pivot = 0;
  std::size_t deletions = 0;  // > 0 when greedy deletion repaired the neighbourhood
  IndexSet U;                 // left vertices
  Rational bad_pair_fraction;
  Rational codegree_threshold;
  Rational size_floor;
};

/// Finds U in the left side with |U| >= |A|/(2K) and at most an eps fraction
/// of ordered pairs (v, w) in U x U (v = w included) having fewer than
/// eps|B|/(2K^2) common neighbours. Both conditions are verified.
DrcOutcome drc_extract(const Bipartite& g, const Rational& K, const Rational& eps, const DrcOptions& opts = {});

struct IterateOutcome {
  IndexSet U;       // vertices of the chosen part
  IndexSet pruned;  // survivors of the degree pruning
  Rational prune_threshold;
  Rational K_prime;
  Rational leg_threshold;
  DrcOutcome drc;
};

/// Flatten on `part`, drop vertices of degree < |Z|/(2K), run DRC on the
/// rest and verify size, leg-pair and degree conclusions.
IterateOutcome iterate_extract(const PartiteHypergraph& h, std::size_t part, const Rational& K, const Rational& eps,
                               const DrcOptions& opts = {});

// --------------------------------------------------------------- pipelines

/// Per-support relaxed-count floor over the product of `subsets`: all
/// supports when the product is at most caps.exhaustive_supports, a seeded
/// uniform sample otherwise.
SupportCheck verify_octopus_floor(const OctopusCounter& counter, const std::vector<IndexSet>& subsets,
                                  const Rational& threshold, const Caps& caps);

/// 1 / (8^{r^3} (r-1)^{r-1} K^{(r^2+5r-4)/2}).
Rational octopus_constant(std::size_t r, const Rational& K);

ExtractionResult octopus_extract(const Instance& inst, const Rational& K, const Caps& caps = {},
                                 const DrcOptions& opts = {});

/// delta = nullopt selects eps / (10 r).
ExtractionResult dense_extract(const Instance& inst, const Rational& eps, std::optional<Rational> delta,
                               const Caps& caps = {});

/// nullopt parameters are measured from the instance.
struct BsgParams {
  std::optional<Rational> K;
  std::optional<Rational> C;
};

struct BsgRun {
  ExtractionResult result;
  BoundReport report;
};

BsgRun bsg_extract(const Instance& inst, const BsgParams& params, const Caps& caps = {}, const DrcOptions& opts = {});

BsgRun almost_all_extract(const Instance& inst, std::optional<Rational> C, const Rational& eps,
                          std::optional<Rational> delta, const Caps& caps = {});

}  // namespace bsg
