#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bsgkit/error.hpp"
#include "bsgkit/numeric.hpp"
#include "bsgkit/random.hpp"

using namespace bsg;

TEST_CASE("rational parsing accepts integers and fractions") {
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational("-1/3") == Rational(-1, 3));
  CHECK(to_string(Rational(10, 4)) == "5/2");
  CHECK(to_string(Rational(7)) == "7");
}

TEST_CASE("rational parsing rejects decimals and junk") {
  for (const char* bad : {"0.5", "1e3", "1/0", "", "/3", "2/", "a/b", "1/-2"}) {
    INFO(bad);
    try {
      parse_rational(bad);
      FAIL("accepted");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::ParseError);
    }
  }
}

TEST_CASE("ceil and floor are exact") {
  CHECK(ceil(Rational(7, 2)) == 4);
  CHECK(floor(Rational(7, 2)) == 3);
  CHECK(ceil(Rational(-7, 2)) == -3);
  CHECK(floor(Rational(-7, 2)) == -4);
  CHECK(ceil(Rational(4)) == 4);
  CHECK(floor(Rational(4)) == 4);
}

TEST_CASE("powers") {
  CHECK(pow(BigInt(8), 27) == pow2(81));
  CHECK(pow(Rational(2, 3), 3) == Rational(8, 27));
  CHECK(pow(BigInt(5), 0) == 1);
}

TEST_CASE("uniform_below stays in range and bernoulli respects extremes") {
  Prng rng(42);
  for (int i = 0; i < 10000; ++i) CHECK(uniform_below(rng, 7) < 7);
  for (int i = 0; i < 100; ++i) {
    CHECK(bernoulli(rng, Rational(1)));
    CHECK_FALSE(bernoulli(rng, Rational(0)));
  }
}

TEST_CASE("prng streams are reproducible") {
  Prng a(9), b(9);
  for (int i = 0; i < 100; ++i) CHECK(uniform_below(a, 1000003) == uniform_below(b, 1000003));
  std::vector<int> x{1, 2, 3, 4, 5, 6}, y = x;
  Prng c(3), d(3);
  shuffle(c, x);
  shuffle(d, y);
  CHECK(x == y);
}
