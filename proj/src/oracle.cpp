#include "bsgkit/oracle.hpp"

#include "bsgkit/error.hpp"

#include <string>

namespace bsg {

namespace {

/// All k-subsets of {0..n-1} in lexicographic order.
std::vector<IndexSet> combinations(std::size_t n, std::size_t k) {
  std::vector<IndexSet> out;
  IndexSet cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = static_cast<Index>(i);
  for (;;) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

struct Search {
  const Instance& inst;
  std::vector<std::vector<IndexSet>> choices;
  std::vector<IndexSet> current;
  std::optional<BestSubsets> best;

  void run(std::size_t part, const ElemSet& partial) {
    if (best && partial.size() >= best->sumset_size) return;
    if (part == choices.size()) {
      best = BestSubsets{current, partial.size()};
      return;
    }
    for (const auto& pick : choices[part]) {
      current[part] = pick;
      ElemSet chosen = inst.parts[part].subset(pick);
      run(part + 1, part == 0 ? chosen : sumset(partial, chosen));
    }
  }
};

}  // namespace

std::optional<BestSubsets> brute_force_best_subsets(const Instance& inst, const std::vector<std::size_t>& min_sizes) {
  const std::size_t r = inst.arity();
  if (min_sizes.size() != r) throw Error(Errc::ArityMismatch, "one size floor per part");
  std::size_t total = 0;
  for (const auto& p : inst.parts) total += p.size();
  if (total > 24) throw Error(Errc::TooLarge, "sum of part sizes " + std::to_string(total) + " exceeds 24");
  for (std::size_t j = 0; j < r; ++j) {
    if (min_sizes[j] == 0) throw Error(Errc::ConfigInvalid, "size floors must be positive");
    if (min_sizes[j] > inst.parts[j].size()) return std::nullopt;
  }
  // The sumset only grows with the subsets, so exact floor sizes suffice.
  Search search{inst, {}, std::vector<IndexSet>(r), std::nullopt};
  for (std::size_t j = 0; j < r; ++j) search.choices.push_back(combinations(inst.parts[j].size(), min_sizes[j]));
  search.run(0, ElemSet(inst.spec, {}));
  return search.best;
}

}  // namespace bsg
