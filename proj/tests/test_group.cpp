#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bsgkit/error.hpp"
#include "bsgkit/group.hpp"
#include "bsgkit/random.hpp"

using namespace bsg;

namespace {

GroupElem e(const GroupSpec& g, std::initializer_list<long long> c) { return make_elem(g, c); }

GroupElem random_elem(const GroupSpec& g, Prng& rng) {
  std::vector<BigInt> c;
  for (auto m : g.moduli()) {
    if (m == 0)
      c.push_back(BigInt(static_cast<long long>(uniform_below(rng, 2001))) - 1000);
    else
      c.push_back(uniform_below(rng, m));
  }
  return make_elem(g, c);
}

}  // namespace

TEST_CASE("make_group validates moduli") {
  CHECK(make_group({5}).order() == 5);
  CHECK(make_group({0}).has_free_coordinate());
  CHECK(make_group({0}).order() == 0);
  CHECK_THROWS_AS(make_group({2, 2, 1}), Error);
  try {
    make_group({2, 2, 1});
  } catch (const Error& err) {
    CHECK(err.code() == Errc::InvalidModulus);
    CHECK(std::string(err.what()).find('2') != std::string::npos);
  }
  CHECK_THROWS_AS(make_group({}), Error);
}

TEST_CASE("addition examples") {
  const auto z5 = make_group({5});
  const auto z = make_group({0});
  const auto z2z = make_group({2, 0});
  CHECK(add(z5, e(z5, {3}), e(z5, {4})) == e(z5, {2}));
  CHECK(add(z, e(z, {7}), e(z, {-7})) == identity(z));
  CHECK(add(z2z, e(z2z, {1, 3}), e(z2z, {1, 4})) == e(z2z, {0, 7}));
}

TEST_CASE("negation examples") {
  const auto z5 = make_group({5});
  const auto z = make_group({0});
  const auto z2z = make_group({2, 0});
  CHECK(neg(z5, e(z5, {2})) == e(z5, {3}));
  CHECK(neg(z, e(z, {0})) == e(z, {0}));
  CHECK(neg(z2z, e(z2z, {1, -4})) == e(z2z, {1, 4}));
}

TEST_CASE("sum_tuple examples") {
  const auto z7 = make_group({7});
  const auto z5 = make_group({5});
  std::vector<GroupElem> a{e(z7, {1}), e(z7, {2}), e(z7, {3})};
  CHECK(sum_tuple(z7, a) == e(z7, {6}));
  CHECK(sum_tuple(z7, std::vector<GroupElem>{}) == identity(z7));
  std::vector<GroupElem> b{e(z5, {4}), e(z5, {4}), e(z5, {4})};
  CHECK(sum_tuple(z5, b) == e(z5, {2}));
}

TEST_CASE("make_elem canonicalizes and checks shape") {
  const auto g = make_group({6, 0});
  CHECK(e(g, {-1, -5}).coords[0] == 5);
  CHECK(e(g, {13, 2}).coords[0] == 1);
  CHECK_THROWS_AS(e(g, {1}), Error);
}

TEST_CASE("free coordinates do not wrap") {
  const auto z = make_group({0});
  GroupElem big = make_elem(z, {BigInt(1) << 80});
  GroupElem twice = add(z, big, big);
  CHECK(twice.coords[0] == (BigInt(1) << 81));
}

TEST_CASE("group laws hold on random triples") {
  const std::vector<GroupSpec> specs{make_group({5}), make_group({0}), make_group({2, 0}), make_group({3, 4, 7}),
                                     make_group({0, 0, 9})};
  Prng rng(2024);
  for (const auto& g : specs) {
    for (int k = 0; k < 10000; ++k) {
      auto a = random_elem(g, rng), b = random_elem(g, rng), c = random_elem(g, rng);
      REQUIRE(add(g, add(g, a, b), c) == add(g, a, add(g, b, c)));
      REQUIRE(add(g, a, b) == add(g, b, a));
      REQUIRE(add(g, a, identity(g)) == a);
      REQUIRE(add(g, a, neg(g, a)) == identity(g));
      REQUIRE(is_canonical(g, add(g, a, b)));
      REQUIRE(sub(g, add(g, a, b), b) == a);
    }
  }
}

TEST_CASE("element order is lexicographic") {
  const auto g = make_group({0, 5});
  CHECK(e(g, {0, 4}) < e(g, {1, 0}));
  CHECK(e(g, {-3, 2}) < e(g, {-3, 3}));
  CHECK_FALSE(e(g, {2, 2}) < e(g, {2, 2}));
}
