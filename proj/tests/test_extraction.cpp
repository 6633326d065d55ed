#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bsgkit/bounds.hpp"
#include "bsgkit/error.hpp"
#include "bsgkit/extraction.hpp"
#include "bsgkit/generate.hpp"
#include "bsgkit/octopus.hpp"
#include "bsgkit/random.hpp"
#include "oracles.hpp"

#include <functional>

using namespace bsg;

namespace {

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return Errc::ParseError;
}

Instance generate(std::size_t r, std::uint32_t n, std::uint64_t seed, Family f) {
  GenConfig cfg;
  cfg.sizes.assign(r, n);
  cfg.seed = seed;
  cfg.family = std::move(f);
  return gen_instance(cfg);
}

Rational rat(std::size_t x) { return Rational(BigInt(x)); }

/// Independent recheck of the DRC conclusions using the bipartite edge list.
void check_drc(const Bipartite& g, const DrcOutcome& out, const Rational& K, const Rational& eps) {
  const std::size_t a = g.left_size();
  std::vector<std::set<std::uint64_t>> nb(a);
  for (Index v = 0; v < a; ++v)
    for (auto z : g.neighbors(v)) nb[v].insert(z);
  CHECK(rat(out.U.size()) >= rat(a) / (2 * K));
  const Rational threshold = eps * Rational(BigInt(g.right_size())) / (2 * K * K);
  std::size_t bad = 0;
  for (auto v : out.U)
    for (auto w : out.U) {
      std::size_t common = 0;
      for (auto z : nb[v]) common += nb[w].count(z);
      if (rat(common) < threshold) ++bad;
    }
  CHECK(rat(bad) <= eps * rat(out.U.size()) * rat(out.U.size()));
}

}  // namespace

TEST_CASE("drc on a complete bipartite graph keeps the whole left side") {
  auto g = PartiteHypergraph::complete({7, 5}).flatten(0);
  auto out = drc_extract(g, Rational(1), Rational(1, 3));
  CHECK(out.U.size() == 7);
  CHECK(out.bad_pair_fraction == 0);
  CHECK(out.deletions == 0);
}

TEST_CASE("drc preconditions") {
  auto sparse = build_hypergraph(2, {4, 4}, {{0, 0}, {1, 1}}).flatten(0);
  CHECK(code_of([&] { drc_extract(sparse, Rational(2), Rational(1, 4)); }) == Errc::DensityTooLow);
  auto g = PartiteHypergraph::complete({3, 3}).flatten(0);
  CHECK(code_of([&] { drc_extract(g, Rational(1), Rational(1)); }) == Errc::ConfigInvalid);
  CHECK(code_of([&] { drc_extract(g, Rational(1), Rational(0)); }) == Errc::ConfigInvalid);
}

TEST_CASE("drc on K_{6,6} minus a perfect matching") {
  std::vector<Tuple> edges;
  for (Index a = 0; a < 6; ++a)
    for (Index b = 0; b < 6; ++b)
      if (a != b) edges.push_back({a, b});
  auto g = build_hypergraph(2, {6, 6}, edges).flatten(0);
  const Rational K(6, 5), eps(1, 4);
  auto out = drc_extract(g, K, eps);
  CHECK(out.U.size() >= 3);
  check_drc(g, out, K, eps);
}

TEST_CASE("drc conclusions hold on random dense graphs") {
  Prng rng(21);
  for (int trial = 0; trial < 80; ++trial) {
    const std::uint32_t a = 2 + static_cast<std::uint32_t>(uniform_below(rng, 14));
    const std::uint32_t b = 2 + static_cast<std::uint32_t>(uniform_below(rng, 14));
    const Rational p(1 + static_cast<long long>(uniform_below(rng, 4)), 4);
    std::vector<Tuple> edges;
    for (Index x = 0; x < a; ++x)
      for (Index y = 0; y < b; ++y)
        if (bernoulli(rng, p)) edges.push_back({x, y});
    if (edges.empty()) continue;
    auto g = build_hypergraph(2, {a, b}, edges).flatten(0);
    const Rational K = Rational(BigInt(a) * b, BigInt(edges.size()));
    const Rational eps(1, 2 + static_cast<long long>(uniform_below(rng, 30)));
    auto out = drc_extract(g, K, eps);
    check_drc(g, out, K, eps);
    DrcOptions shuffled;
    shuffled.random_pivots = trial;
    check_drc(g, drc_extract(g, K, eps, shuffled), K, eps);
  }
}

TEST_CASE("iterate_extract on a complete hypergraph") {
  auto h = PartiteHypergraph::complete({5, 4, 3});
  auto out = iterate_extract(h, 0, Rational(1), Rational(1, 8));
  CHECK(out.U.size() == 5);
  CHECK(out.pruned.size() == 5);
  auto sparse = build_hypergraph(2, {4, 4}, {{0, 0}});
  CHECK(code_of([&] { iterate_extract(sparse, 0, Rational(2), Rational(1, 8)); }) == Errc::DensityTooLow);
}

TEST_CASE("iterate_extract conclusions on a planted instance") {
  const Instance inst = generate(3, 8, 4, family::Planted{});
  const auto edges = oracle::edge_set(inst.graph);
  const auto sizes = inst.part_sizes();
  const Rational K(2), eps(1, 64);
  for (std::size_t part = 0; part < 3; ++part) {
    auto out = iterate_extract(inst.graph, part, K, eps);
    const Rational z(64 / sizes[part]);
    CHECK(rat(out.U.size()) >= rat(sizes[part]) / (4 * K));
    std::size_t good = 0;
    for (auto v : out.U)
      for (auto w : out.U)
        if (rat(oracle::leg_count(edges, sizes, part, v, w)) >= eps * z / (2 * K * K)) ++good;
    CHECK(rat(good) >= (1 - eps) * rat(out.U.size()) * rat(out.U.size()));
    for (auto v : out.U) CHECK(rat(oracle::leg_count(edges, sizes, part, v, v)) >= z / (2 * K));
  }
}

TEST_CASE("octopus_extract on a complete hypergraph") {
  const Instance inst = generate(2, 8, 0, family::Complete{});
  auto res = octopus_extract(inst, Rational(1));
  CHECK(rat(res.subsets[0].size()) >= Rational(8, 8));
  CHECK(rat(res.subsets[1].size()) >= Rational(8, 16));
  REQUIRE(res.octopus_check);
  CHECK(res.octopus_check->failures == 0);
  CHECK(res.octopus_check->exhaustive);
  const Instance sparse = generate(2, 8, 1, family::RandomDensity{Rational(4)});
  CHECK(code_of([&] { octopus_extract(sparse, Rational(1)); }) == Errc::DensityTooLow);
  CHECK(code_of([&] { octopus_extract(inst, Rational(1, 2)); }) == Errc::ConfigInvalid);
}

TEST_CASE("octopus_extract on planted r=2, n=16, K=2 passes an independent recount") {
  const Instance inst = generate(2, 16, 7, family::Planted{});
  REQUIRE(*inst.graph.measured_K() <= 2);
  const Rational K(2);
  auto res = octopus_extract(inst, K);
  const auto edges = oracle::edge_set(inst.graph);
  const auto sizes = inst.part_sizes();
  for (std::size_t p = 0; p < 2; ++p)
    CHECK(rat(res.subsets[p].size()) >= rat(sizes[p]) / (Rational(pow2(static_cast<unsigned>(p + 3))) * K));
  // 1 / (8^8 * 1 * K^5) * (16 * 16).
  const Rational floor = Rational(256) / (Rational(pow(BigInt(8), 8)) * pow(K, 5));
  CHECK(floor == octopus_constant(2, K) * 256);
  for (auto a : res.subsets[0])
    for (auto b : res.subsets[1]) CHECK(Rational(oracle::relaxed(edges, sizes, {a, b})) >= floor);
}

TEST_CASE("supports left at zero octopuses by diagonal closing edges are repaired") {
  // Here the last part keeps a vertex whose only neighbour in A'_1 is the
  // support vertex itself, so the closing edge has w_1 = v_1.
  GenConfig cfg;
  cfg.sizes = {10, 4};
  cfg.seed = 1012;
  cfg.family = family::Planted{Rational(1, 2), Rational(2), Rational(2)};
  const Instance inst = gen_instance(cfg);
  const Rational K(2);
  auto res = octopus_extract(inst, K);
  REQUIRE(!res.trace.empty());
  CHECK(res.trace.back().stage == "repair");
  CHECK(res.trace.back().after < res.trace.back().before);
  REQUIRE(res.octopus_check);
  CHECK(res.octopus_check->exhaustive);
  CHECK(res.octopus_check->failures == 0);
  const auto edges = oracle::edge_set(inst.graph);
  const auto sizes = inst.part_sizes();
  const Rational floor = octopus_constant(2, K) * 40;
  for (std::size_t p = 0; p < 2; ++p)
    CHECK(rat(res.subsets[p].size()) >= rat(sizes[p]) / (Rational(pow2(static_cast<unsigned>(p + 3))) * K));
  for (auto a : res.subsets[0])
    for (auto b : res.subsets[1]) CHECK(Rational(oracle::relaxed(edges, sizes, {a, b})) >= floor);
  CHECK(check_bounds(res, inst, Mode::General).overall());
}

TEST_CASE("pipeline trace records the chain in order") {
  const Instance inst = generate(3, 8, 11, family::Planted{});
  const Rational K = *inst.graph.measured_K();
  auto res = octopus_extract(inst, K);
  std::vector<std::string> stages;
  for (const auto& t : res.trace) stages.push_back(t.stage);
  const std::vector<std::string> expected{"prune", "drc", "markov", "induce", "prune",
                                          "drc",   "markov", "induce", "last-degree"};
  CHECK(stages == expected);
  for (const auto& t : res.trace)
    if (t.stage == "induce") CHECK(*t.density >= t.threshold);
  auto again = octopus_extract(inst, K);
  CHECK(again.subsets == res.subsets);
}

TEST_CASE("dense_extract preconditions") {
  const Instance full = generate(2, 10, 0, family::Complete{});
  CHECK(code_of([&] { dense_extract(full, Rational(1, 20), std::nullopt); }) == Errc::EpsilonTooLarge);
  const Instance dense = generate(2, 10, 3, family::Dense{Rational(1, 10)});
  CHECK(code_of([&] { dense_extract(dense, Rational(1, 25), Rational(1, 500)); }) == Errc::DensityTooLow);
  GenConfig cfg;
  cfg.sizes = {10, 9};
  const Instance unequal = gen_instance(cfg);
  CHECK(code_of([&] { dense_extract(unequal, Rational(1, 25), std::nullopt); }) == Errc::UnequalParts);
}

TEST_CASE("dense_extract on complete hypergraphs trims the highest indices") {
  const Instance full = generate(2, 10, 0, family::Complete{});
  auto res = dense_extract(full, Rational(1, 25), Rational(0));
  for (const auto& s : res.subsets) CHECK(s == IndexSet{0, 1, 2, 3, 4, 5, 6, 7, 8, 9});
  auto res2 = dense_extract(full, Rational(1, 21), Rational(0));
  CHECK(res2.subsets[0].size() == 10);
  const Instance full20 = generate(2, 20, 0, family::Complete{});
  auto res3 = dense_extract(full20, Rational(1, 21), Rational(0));
  CHECK(res3.subsets[0].size() == 20);
  auto res4 = dense_extract(generate(2, 30, 0, family::Complete{}), Rational(1, 25), Rational(0));
  CHECK(res4.subsets[0].size() == 29);
  CHECK(res4.subsets[0].back() == 28);
  REQUIRE(res.octopus_check);
  CHECK(Rational(res.octopus_check->min_count) >= 50);
  auto automatic = dense_extract(full, Rational(1, 25), std::nullopt);
  CHECK(*automatic.delta == Rational(1, 500));
  CHECK(automatic.trace.front().stage == "delta");
}

TEST_CASE("dense_extract on a random near-complete hypergraph passes a recount") {
  const Rational eps(1, 25), delta = eps / 20;
  Prng rng(31);
  // Remove floor(delta n^2) = 0 edges at n = 10; use n = 30 to remove one.
  const Instance inst = generate(2, 30, 2, family::Dense{delta});
  CHECK(inst.graph.edge_count() == 899);
  auto res = dense_extract(inst, eps, delta);
  const auto edges = oracle::edge_set(inst.graph);
  const auto sizes = inst.part_sizes();
  for (const auto& s : res.subsets) CHECK(s.size() == 29);
  for (auto a : res.subsets[0])
    for (auto b : res.subsets[1]) CHECK(2 * oracle::relaxed(edges, sizes, {a, b}) >= 900);
}

TEST_CASE("bsg_extract on complete AP instances") {
  for (std::size_t r = 2; r <= 3; ++r) {
    const Instance inst = generate(r, 6, 0, family::Complete{});
    auto run = bsg_extract(inst, BsgParams{Rational(1), std::nullopt});
    const Rational C(BigInt(r * 5 + 1), BigInt(6));
    CHECK(*run.result.c_pow_r == pow(C, static_cast<unsigned>(r)));
    CHECK(run.report.overall());
  }
}

TEST_CASE("bsg_extract rejects a violated sumset hypothesis") {
  const Instance inst = generate(2, 6, 0, family::Complete{});
  CHECK(code_of([&] { bsg_extract(inst, BsgParams{Rational(1), Rational(1)}); }) == Errc::HypothesisViolated);
}

TEST_CASE("bsg_extract on planted r=2, n=16 matches a recomputation") {
  const Instance inst = generate(2, 16, 7, family::Planted{});
  const Rational K = *inst.graph.measured_K();
  REQUIRE(K <= 2);
  auto run = bsg_extract(inst, BsgParams{std::nullopt, Rational(3)});
  CHECK(run.report.overall());
  std::vector<ElemSet> chosen;
  for (std::size_t j = 0; j < 2; ++j) chosen.push_back(inst.parts[j].subset(run.result.subsets[j]));
  const auto s = iterated_sumset(chosen).size();
  const Rational c_const = 1 / (Rational(pow(BigInt(8), 8)) * pow(K, 5));
  const Rational rhs = pow(1 / c_const, 2) * pow(Rational(9), 3) * 256;
  const auto* item = run.report.find("sumset_bound");
  REQUIRE(item);
  CHECK(item->lhs == to_string(BigInt(s * s)));
  CHECK(item->rhs == to_string(rhs));
}

TEST_CASE("almost_all_extract on identical AP parts") {
  const Instance inst = generate(2, 10, 0, family::Complete{});
  auto run = almost_all_extract(inst, std::nullopt, Rational(1, 25), std::nullopt);
  for (const auto& s : run.result.subsets) CHECK(s.size() == 10);
  CHECK(run.report.overall());
  const Instance dense = generate(2, 10, 3, family::Dense{Rational(1, 10)});
  CHECK(code_of([&] { almost_all_extract(dense, std::nullopt, Rational(1, 25), Rational(1, 500)); }) ==
        Errc::DensityTooLow);
}

TEST_CASE("almost_all_extract on a planted dense instance") {
  family::Planted f;
  f.ap_fraction = Rational(1);
  f.target_C = Rational(2);
  const Instance inst = generate(2, 12, 5, f);
  auto run = almost_all_extract(inst, std::nullopt, Rational(1, 25), std::nullopt);
  CHECK(run.report.overall());
  std::vector<ElemSet> chosen;
  for (std::size_t j = 0; j < 2; ++j) chosen.push_back(inst.parts[j].subset(run.result.subsets[j]));
  const auto s = iterated_sumset(chosen).size();
  CHECK(s == 23);
  const Rational C = Rational(23, 12);
  CHECK(Rational(BigInt(s)) <= 2 * pow(C, 3) * 12);
}

TEST_CASE("restricted sumsets of induced sub-hypergraphs are contained") {
  const Instance inst = generate(3, 6, 9, family::RandomDensity{Rational(2)});
  const ElemSet whole = restricted_sumset(inst);
  auto induced = inst.graph.induce({{0, 2, 4}, {1, 2, 3, 5}, {0, 5}});
  std::vector<ElemSet> parts;
  for (std::size_t j = 0; j < 3; ++j) parts.push_back(inst.parts[j].subset(induced.origin[j]));
  const Instance sub = make_instance(inst.spec, parts, induced.graph);
  const ElemSet part = restricted_sumset(sub);
  for (const auto& e : part.elems()) CHECK(whole.contains(e));
}
