#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bsgkit/error.hpp"
#include "bsgkit/instance.hpp"
#include "bsgkit/random.hpp"
#include "bsgkit/sumsets.hpp"
#include "oracles.hpp"

#include <set>

using namespace bsg;

namespace {

ElemSet set_of(const GroupSpec& g, const std::vector<long long>& xs) {
  std::vector<GroupElem> elems;
  for (auto x : xs) elems.push_back(make_elem(g, {x}));
  return ElemSet(g, elems);
}

std::vector<long long> range(long long n) {
  std::vector<long long> v;
  for (long long i = 0; i < n; ++i) v.push_back(i);
  return v;
}

std::vector<long long> random_values(Prng& rng, std::size_t n, std::uint64_t span) {
  std::set<long long> s;
  while (s.size() < n) s.insert(static_cast<long long>(uniform_below(rng, span)));
  return {s.begin(), s.end()};
}

}  // namespace

TEST_CASE("ElemSet sorts and removes duplicates") {
  const auto z = make_group({0});
  const ElemSet a = set_of(z, {3, 1, 3, -2});
  REQUIRE(a.size() == 3);
  CHECK(a[0] == make_elem(z, {-2}));
  CHECK(a.index_of(make_elem(z, {3})) == 2);
  CHECK(a.index_of(make_elem(z, {5})) == 3);
}

TEST_CASE("sumset examples") {
  const auto z = make_group({0});
  const auto z5 = make_group({5});
  CHECK(sumset(set_of(z, {0, 1}), set_of(z, {0, 1})) == set_of(z, {0, 1, 2}));
  for (long long n = 1; n <= 12; ++n) CHECK(sumset(set_of(z, range(n)), set_of(z, range(n))) == set_of(z, range(2 * n - 1)));
  CHECK(sumset(set_of(z5, range(5)), set_of(z5, {0})).size() == 5);
  CHECK_THROWS_AS(sumset(set_of(z, {0}), set_of(z5, {0})), Error);
}

TEST_CASE("iterated sumset examples") {
  const auto z = make_group({0});
  const auto z4 = make_group({4});
  std::vector<ElemSet> three(3, set_of(z, {0, 1}));
  CHECK(iterated_sumset(three) == set_of(z, {0, 1, 2, 3}));
  std::vector<ElemSet> one{set_of(z, range(5))};
  CHECK(iterated_sumset(one) == set_of(z, range(5)));
  std::vector<ElemSet> sub(2, set_of(z4, {0, 2}));
  CHECK(iterated_sumset(sub) == set_of(z4, {0, 2}));
}

TEST_CASE("additive energy examples") {
  const auto z = make_group({0});
  CHECK(additive_energy(set_of(z, {0})) == 1);
  CHECK(additive_energy(set_of(z, {0, 1, 2})) == 19);
  CHECK(oracle::energy({0, 1, 2}) == 19);
  CHECK(additive_energy(set_of(z, range(4))) == 44);
}

TEST_CASE("energy matches quadruple enumeration") {
  Prng rng(11);
  const auto z = make_group({0});
  const auto z13 = make_group({13});
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + uniform_below(rng, 30);
    auto xs = random_values(rng, n, 4 * n);
    const ElemSet a = set_of(z, xs);
    const BigInt en = additive_energy(a);
    CHECK(en == oracle::energy(xs));
    CHECK(en >= BigInt(n) * n);
    CHECK(en <= BigInt(n) * n * n);
    auto ys = random_values(rng, std::min<std::size_t>(n, 13), 13);
    CHECK(additive_energy(set_of(z13, ys)) == oracle::energy(ys, 13));
  }
}

TEST_CASE("Sidon sets have energy 2|A|^2 - |A|") {
  const auto z = make_group({0});
  const std::vector<long long> sidon{0, 1, 3, 7, 12, 20};
  CHECK(additive_energy(set_of(z, sidon)) == 2 * 36 - 6);
  CHECK(additive_energy(set_of(z, {1, 2, 5, 11})) == 28);
  CHECK(oracle::energy({1, 2, 5, 11}) == 28);
}

TEST_CASE("doubling constant examples") {
  const auto z = make_group({0});
  const auto z5 = make_group({5});
  CHECK(doubling_constant(set_of(z, range(10))) == Rational(19, 10));
  CHECK(doubling_constant(set_of(z5, range(5))) == 1);
  CHECK(doubling_constant(set_of(z, {1, 2, 5, 11})) == Rational(10, 4));
  CHECK_THROWS_AS(doubling_constant(set_of(z, {})), Error);
  const SumStats s = sum_stats(set_of(z, range(3)));
  CHECK(s.sumset_size == 5);
  CHECK(s.energy == 19);
}

TEST_CASE("representation count examples") {
  const auto z5 = make_group({5});
  CHECK(representation_count(z5, set_of(z5, {0, 1}), make_elem(z5, {0}), 2) == 3);
  CHECK(oracle::representations({0, 1}, 5, 2, 0) == 3);
  for (long long s = 0; s < 5; ++s) CHECK(representation_count(z5, set_of(z5, range(5)), make_elem(z5, {s}), 2) == 25);
  for (unsigned r = 2; r <= 4; ++r) {
    const auto g = make_group({0, 3});
    const ElemSet id(g, {identity(g)});
    CHECK(representation_count(g, id, identity(g), r) == 1);
    CHECK(representation_count(g, id, make_elem(g, {0, 1}), r) == 0);
  }
}

TEST_CASE("representation table matches enumeration and sums to |S|^(2r-1)") {
  Prng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const long long m = 2 + static_cast<long long>(uniform_below(rng, 20));
    const unsigned r = 2 + static_cast<unsigned>(uniform_below(rng, 2));
    const std::size_t n = 1 + uniform_below(rng, std::min<long long>(m, r == 2 ? 12 : 5));
    auto xs = random_values(rng, n, m);
    const auto g = make_group({static_cast<std::uint64_t>(m)});
    const RepresentationTable table(set_of(g, xs), r, 100'000'000);
    CHECK(table.total() == pow(BigInt(n), 2 * r - 1));
    for (long long s = 0; s < m; ++s) CHECK(table.count(make_elem(g, {s})) == oracle::representations(xs, m, r, s));
  }
}

TEST_CASE("representation table over free coordinates") {
  const auto z = make_group({0});
  const ElemSet s = set_of(z, {0, 1, 3});
  const RepresentationTable table(s, 2, 1000);
  CHECK(table.total() == 27);
  CHECK(table.count(make_elem(z, {7})) == 0);
  CHECK(table.count(make_elem(z, {6})) == 1);
  CHECK(table.count(make_elem(z, {100})) == 0);
  CHECK_THROWS_AS(RepresentationTable(set_of(z, {0, 1000000}), 3, 1000), Error);
}

TEST_CASE("restricted sumset examples") {
  const auto z = make_group({0});
  const ElemSet a = set_of(z, {0, 1, 2});
  auto diag = build_hypergraph(2, {3, 3}, {{0, 0}, {1, 1}, {2, 2}});
  CHECK(restricted_sumset(make_instance(z, {a, a}, diag)) == set_of(z, {0, 2, 4}));
  auto one = build_hypergraph(2, {3, 3}, {{1, 2}});
  CHECK(restricted_sumset(make_instance(z, {a, a}, one)) == set_of(z, {3}));
  std::vector<ElemSet> parts{a, set_of(z, {0, 5}), set_of(z, {1, 7})};
  auto full = PartiteHypergraph::complete({3, 2, 2});
  CHECK(restricted_sumset(make_instance(z, parts, full)) == iterated_sumset(parts));
}

TEST_CASE("restricted sumset grows under edge insertion") {
  Prng rng(17);
  const auto z = make_group({0});
  const ElemSet a = set_of(z, {0, 1, 4, 9});
  const ElemSet b = set_of(z, {0, 2, 3});
  std::vector<std::vector<std::uint32_t>> edges;
  std::size_t last = 0;
  for (std::uint32_t i = 0; i < 4; ++i)
    for (std::uint32_t j = 0; j < 3; ++j) edges.push_back({i, j});
  shuffle(rng, edges);
  for (std::size_t k = 1; k <= edges.size(); ++k) {
    std::vector<std::vector<std::uint32_t>> prefix(edges.begin(), edges.begin() + static_cast<long>(k));
    const auto size = restricted_sumset(make_instance(z, {a, b}, build_hypergraph(2, {4, 3}, prefix))).size();
    CHECK(size >= last);
    last = size;
  }
}
