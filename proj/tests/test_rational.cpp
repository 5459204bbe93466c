#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <random>

#include "ftag/rational.hpp"

using ftag::Rational;

TEST_CASE("construction normalizes to lowest terms") {
  CHECK(Rational::make(2, 4) == Rational::make(1, 2));
  CHECK(Rational::make(2, 4).num() == 1);
  CHECK(Rational::make(2, 4).den() == 2);
  CHECK(Rational::make(3, -6) == Rational::make(-1, 2));
  CHECK(Rational::make(3, -6).num() == -1);
  CHECK(Rational::make(0, 7).num() == 0);
  CHECK(Rational::make(0, 7).den() == 1);
  CHECK(Rational::make(-5, -10) == Rational::make(1, 2));
  CHECK_THROWS_AS(Rational::make(1, 0), ftag::ZeroDenominatorError);
}

TEST_CASE("arithmetic is exact") {
  CHECK(Rational::make(1, 2) + Rational::make(1, 3) == Rational::make(5, 6));
  CHECK(Rational::make(1, 2) - Rational::make(1, 3) == Rational::make(1, 6));
  CHECK(Rational::make(2, 3) * Rational::make(3, 4) == Rational::make(1, 2));
  CHECK(Rational::make(1, 2) / Rational::make(1, 4) == Rational{2});
  CHECK_THROWS_AS(Rational{1} / Rational{0}, ftag::ZeroDenominatorError);
  CHECK(abs(Rational::make(-7, 2)) == Rational::make(7, 2));
  CHECK(abs(Rational::make(7, 2)) == Rational::make(7, 2));
  CHECK(-Rational::make(3, 5) == Rational::make(-3, 5));
}

TEST_CASE("comparison agrees with real order") {
  CHECK(Rational::make(1, 2) == Rational::make(2, 4));
  CHECK(Rational::make(1, 3) < Rational::make(1, 2));
  CHECK(Rational::make(-1, 2) < Rational::make(-1, 3));
  CHECK(Rational::make(7, 3) > Rational{2});
  CHECK((Rational::make(1, 2) <=> Rational::make(2, 4)) == std::strong_ordering::equal);
}

TEST_CASE("algebraic identities on random values") {
  std::mt19937_64 rng(20240817);
  std::uniform_int_distribution<std::int64_t> num(-1000, 1000);
  std::uniform_int_distribution<std::int64_t> den(1, 60);
  for (int iter = 0; iter < 500; ++iter) {
    const Rational a = Rational::make(num(rng), den(rng));
    const Rational b = Rational::make(num(rng), den(rng));
    const Rational c = Rational::make(num(rng), den(rng));
    CHECK(a + b == b + a);
    CHECK(a + (-a) == Rational{0});
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    const Rational sum = a + b;
    CHECK(std::gcd(sum.num() < 0 ? -sum.num() : sum.num(), sum.den()) <= 1);
    CHECK(sum.den() > 0);
  }
}

TEST_CASE("text round-trip") {
  CHECK(Rational::make(1, 2).str() == "1/2");
  CHECK(Rational::make(-6, 4).str() == "-3/2");
  CHECK(Rational{7}.str() == "7");
  CHECK(Rational{0}.str() == "0");
  CHECK(Rational::parse("5/6") == Rational::make(5, 6));
  CHECK(Rational::parse("-3") == Rational{-3});
  CHECK(Rational::parse("4/2") == Rational{2});

  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> num(-100000, 100000);
  std::uniform_int_distribution<std::int64_t> den(1, 997);
  for (int iter = 0; iter < 500; ++iter) {
    const Rational r = Rational::make(num(rng), den(rng));
    CHECK(Rational::parse(r.str()) == r);
  }
}

TEST_CASE("parse rejects malformed text") {
  CHECK_THROWS_AS(Rational::parse(""), ftag::FormatError);
  CHECK_THROWS_AS(Rational::parse("1/"), ftag::FormatError);
  CHECK_THROWS_AS(Rational::parse("/2"), ftag::FormatError);
  CHECK_THROWS_AS(Rational::parse("a/b"), ftag::FormatError);
  CHECK_THROWS_AS(Rational::parse("1.5"), ftag::FormatError);
  CHECK_THROWS_AS(Rational::parse("1/-2"), ftag::FormatError);
  CHECK_THROWS_AS(Rational::parse("1/0"), ftag::ZeroDenominatorError);
}

TEST_CASE("overflow is detected, never wrapped") {
  const std::int64_t big = std::int64_t{1} << 62;
  const Rational half_max{big};
  CHECK_THROWS_AS(half_max + half_max, ftag::OverflowError);
  CHECK_THROWS_AS(half_max * Rational{4}, ftag::OverflowError);
  CHECK_THROWS_AS(Rational{INT64_MAX} + Rational{1}, ftag::OverflowError);
  // near-limit values that stay representable must still work
  CHECK(Rational{INT64_MAX} - Rational{INT64_MAX} == Rational{0});
  CHECK(Rational{INT64_MAX} * Rational{1} == Rational{INT64_MAX});
  CHECK(Rational::make(INT64_MAX, INT64_MAX) == Rational{1});
  // comparison of extreme values never overflows
  CHECK(Rational{INT64_MAX} > Rational{INT64_MIN});
  CHECK(Rational::make(INT64_MAX, 3) > Rational::make(INT64_MIN, 7));
}
