#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "ftag/n3dm.hpp"
#include "ftag/rational.hpp"

using namespace ftag;

TEST_CASE("validation derives q and canonicalizes") {
  const auto tiny = validate_n3dm({1}, {1}, {1});
  CHECK(tiny.q == 3);

  const auto pair = validate_n3dm({2, 2}, {1, 1}, {1, 1});
  CHECK(pair.q == 4);

  CHECK_THROWS_WITH_AS(validate_n3dm({2, 1}, {2, 1}, {2, 1}),
                       doctest::Contains("not a valid N3DM instance"), ValidationError);
  CHECK_THROWS_AS(validate_n3dm({}, {}, {}), ValidationError);
  CHECK_THROWS_AS(validate_n3dm({1, 2}, {1}, {1}), ValidationError);
  CHECK_THROWS_AS(validate_n3dm({0, 3}, {1, 1}, {1, 1}), ValidationError);
  CHECK_THROWS_AS(validate_n3dm({-1, 4}, {1, 1}, {1, 1}), ValidationError);

  const auto sorted = validate_n3dm({1, 3, 2}, {4, 4, 1}, {2, 2, 2});
  CHECK(sorted.u == std::vector<std::int64_t>{3, 2, 1});
  CHECK(sorted.v == std::vector<std::int64_t>{4, 4, 1});
  CHECK(sorted.w == std::vector<std::int64_t>{2, 2, 2});
  CHECK(sorted.q == 7);
}

TEST_CASE("canonicalization is idempotent") {
  const auto once = validate_n3dm({1, 3, 2}, {4, 4, 1}, {2, 2, 2});
  const auto twice = validate_n3dm(once.u, once.v, once.w);
  CHECK(once == twice);
}

TEST_CASE("brute force finds witnesses") {
  const auto tiny = validate_n3dm({1}, {1}, {1});
  const auto m1 = brute_force_match(tiny);
  REQUIRE(m1.has_value());
  CHECK(m1->triples == std::vector<std::array<std::size_t, 3>>{{0, 0, 0}});
  CHECK(matching_satisfies(tiny, *m1));

  const auto pair = validate_n3dm({2, 2}, {1, 1}, {1, 1});
  const auto m2 = brute_force_match(pair);
  REQUIRE(m2.has_value());
  CHECK(matching_satisfies(pair, *m2));

  const auto no = validate_n3dm({3, 1}, {1, 1}, {1, 1});
  CHECK(!brute_force_match(no).has_value());

  const auto deep = validate_n3dm({4, 3, 2, 1}, {1, 2, 3, 4}, {3, 3, 3, 3});
  CHECK(deep.q == 8);
  const auto m4 = brute_force_match(deep);
  REQUIRE(m4.has_value());
  CHECK(matching_satisfies(deep, *m4));

  const auto blocked = validate_n3dm({5, 3, 2, 2}, {1, 1, 1, 1}, {4, 4, 4, 4});
  CHECK(blocked.q == 8);
  CHECK(!brute_force_match(blocked).has_value());
}

TEST_CASE("cap refusal") {
  std::vector<std::int64_t> ones(11, 1);
  const auto big = validate_n3dm(ones, ones, ones);
  CHECK_THROWS_AS(brute_force_match(big), CapExceededError);
  CHECK_NOTHROW(brute_force_match(big, 11));
}

TEST_CASE("matching_satisfies rejects broken witnesses") {
  const auto pair = validate_n3dm({2, 2}, {1, 1}, {1, 1});
  Matching wrong;
  wrong.triples = {{0, 0, 0}, {1, 0, 1}};  // j not a permutation
  CHECK(!matching_satisfies(pair, wrong));
  Matching bad_sum;
  bad_sum.triples = {{0, 0, 1}, {1, 1, 0}};
  CHECK(matching_satisfies(pair, bad_sum));  // symmetric values: still sums to q
  Matching short_list;
  short_list.triples = {{0, 0, 0}};
  CHECK(!matching_satisfies(pair, short_list));
}

TEST_CASE("shift_w examples") {
  const auto pair = validate_n3dm({2, 2}, {1, 1}, {1, 1});
  CHECK(shift_w(pair, 0) == pair);

  const auto shifted = shift_w(pair, 1);
  CHECK(shifted.w == std::vector<std::int64_t>{2, 2});
  CHECK(shifted.q == 5);
  CHECK(shifted.u == pair.u);

  const auto no = validate_n3dm({3, 1}, {1, 1}, {1, 1});
  const auto no_shifted = shift_w(no, 1);
  CHECK(no_shifted.q == 5);
  CHECK(!brute_force_match(no_shifted).has_value());

  CHECK_THROWS_AS(shift_w(pair, -1), ValidationError);
  CHECK_THROWS_AS(shift_w(pair, INT64_MAX), OverflowError);
}

TEST_CASE("shifting preserves the answer") {
  std::mt19937_64 rng(1234);
  std::uniform_int_distribution<std::int64_t> value(1, 4);
  std::uniform_int_distribution<std::size_t> size(1, 3);
  int checked = 0;
  for (int iter = 0; iter < 400 && checked < 120; ++iter) {
    const std::size_t n = size(rng);
    std::vector<std::int64_t> u(n), v(n), w(n);
    for (auto* list : {&u, &v, &w})
      for (auto& x : *list) x = value(rng);
    std::int64_t total = 0;
    for (auto* list : {&u, &v, &w})
      for (auto x : *list) total += x;
    if (total % static_cast<std::int64_t>(n) != 0) continue;
    ++checked;
    const auto inst = validate_n3dm(u, v, w);
    const bool base = brute_force_match(inst).has_value();
    for (std::int64_t k = 0; k <= 5; ++k) {
      const auto moved = shift_w(inst, k);
      CHECK(brute_force_match(moved).has_value() == base);
    }
  }
  CHECK(checked >= 100);
}
