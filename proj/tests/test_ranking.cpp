#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "combinadics/binomial.hpp"
#include "combinadics/combination.hpp"
#include "combinadics/errors.hpp"
#include "oracles.hpp"

using combinadics::binomial;
using combinadics::ColexStream;
using combinadics::Combination;
using combinadics::enumerate;
using combinadics::Error;
using combinadics::ErrorKind;
using combinadics::from_bitstring;
using combinadics::Natural;
using combinadics::Rank;
using combinadics::rank;
using combinadics::split_range;
using combinadics::to_bitstring;
using combinadics::unrank;

namespace {

Combination comb(std::initializer_list<unsigned long long> elements) {
  std::vector<Natural> v;
  for (auto e : elements) v.emplace_back(e);
  return Combination::from_elements(std::move(v));
}

Combination from_tuple(const std::vector<unsigned long>& elements) {
  std::vector<Natural> v;
  for (auto e : elements) v.emplace_back(e);
  return Combination::from_elements(std::move(v));
}

}  // namespace

TEST_CASE("combination validation and text form") {
  CHECK(comb({0, 3, 4}).str() == "0,3,4");
  CHECK(Combination::parse("0,3,4").str() == "0,3,4");
  CHECK_THROWS_AS(Combination::from_elements({}), Error);
  CHECK_THROWS_AS(Combination::parse("3,3"), Error);
  CHECK_THROWS_AS(Combination::parse("4,1"), Error);
  try {
    Combination::parse("4,1");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotStrictlyIncreasing);
  }
}

TEST_CASE("combination <-> combinadic is plain reversal") {
  Combination c = comb({0, 3, 4});
  CHECK(c.to_combinadic().str() == "4,3,0");
  CHECK(Combination::from_combinadic(c.to_combinadic()) == c);
}

TEST_CASE("rank") {
  CHECK(rank(comb({0, 1, 2})).is_zero());
  CHECK(rank(comb({1, 2, 3})) == Natural(3));
  CHECK(rank(comb({2, 3})) == Natural(5));
}

TEST_CASE("unrank") {
  CHECK(unrank(0, 3) == comb({0, 1, 2}));
  CHECK(unrank(7, 3) == comb({0, 3, 4}));
  CHECK(unrank(5, 2) == comb({2, 3}));
  CHECK_THROWS_AS(unrank(5, 0), Error);
}

TEST_CASE("rank 9 of size 3 is {2,3,4}, confirmed against the listing oracle") {
  CHECK(unrank(9, 3) == comb({2, 3, 4}));
  CHECK(rank(comb({2, 3, 4})) == Natural(9));
  CHECK(unrank(10, 3) == comb({0, 1, 5}));

  auto listing = oracles::colex_subsets(6, 3);
  REQUIRE(listing.size() > 10);
  CHECK(from_tuple(listing[9]) == comb({2, 3, 4}));
  CHECK(from_tuple(listing[10]) == comb({0, 1, 5}));
}

TEST_CASE("enumerate") {
  auto four = enumerate(2, 0, 4);
  REQUIRE(four.size() == 4);
  CHECK(four[0] == comb({0, 1}));
  CHECK(four[1] == comb({0, 2}));
  CHECK(four[2] == comb({1, 2}));
  CHECK(four[3] == comb({0, 3}));

  auto singles = enumerate(1, 5, 2);
  REQUIRE(singles.size() == 2);
  CHECK(singles[0] == comb({5}));
  CHECK(singles[1] == comb({6}));

  auto one = enumerate(3, 9, 1);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == comb({2, 3, 4}));

  CHECK(enumerate(3, 0, 0).empty());
  CHECK_THROWS_AS(enumerate(0, 0, 4), Error);
}

TEST_CASE("enumerate equals unranking every position") {
  for (std::size_t r = 1; r <= 4; ++r) {
    for (unsigned long start : {0ul, 137ul, 9999ul}) {
      auto streamed = enumerate(r, Natural(start), 1000);
      for (std::size_t k = 0; k < streamed.size(); ++k) {
        if (streamed[k] != unrank(Natural(start + k), r)) {
          CAPTURE(r);
          CAPTURE(start);
          CAPTURE(k);
          REQUIRE(streamed[k] == unrank(Natural(start + k), r));
        }
      }
    }
  }
}

TEST_CASE("split_range") {
  using Interval = std::pair<Rank, Rank>;
  auto halves = split_range(3, 0, 10, 2);
  CHECK(halves == std::vector<Interval>{{0, 5}, {5, 10}});

  auto thirds = split_range(3, 0, 10, 3);
  CHECK(thirds == std::vector<Interval>{{0, 4}, {4, 7}, {7, 10}});

  auto empty = split_range(2, 5, 5, 4);
  CHECK(empty == std::vector<Interval>(4, {5, 5}));

  CHECK_THROWS_AS(split_range(3, 7, 3, 2), Error);
  CHECK_THROWS_AS(split_range(3, 0, 10, 0), Error);
  CHECK_THROWS_AS(split_range(0, 0, 10, 2), Error);
  try {
    split_range(3, 7, 3, 2);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidRange);
  }
}

TEST_CASE("split_range covers exactly, and parts enumerate to the whole") {
  struct Case {
    unsigned long start, end;
    std::size_t parts;
  };
  for (const Case& c : {Case{0, 100, 7}, Case{13, 14, 3}, Case{5, 305, 4}, Case{0, 9, 9}}) {
    auto intervals = split_range(3, c.start, c.end, c.parts);
    REQUIRE(intervals.size() == c.parts);
    CHECK(intervals.front().first == Natural(c.start));
    CHECK(intervals.back().second == Natural(c.end));

    Natural largest, smallest;
    bool first_sized = true;
    std::vector<Combination> stitched;
    for (std::size_t p = 0; p < intervals.size(); ++p) {
      if (p > 0) CHECK(intervals[p].first == intervals[p - 1].second);  // contiguous
      CHECK(intervals[p].first <= intervals[p].second);
      Natural size = intervals[p].second - intervals[p].first;
      if (first_sized) {
        largest = smallest = size;
        first_sized = false;
      } else {
        if (size > largest) largest = size;
        if (size < smallest) smallest = size;
      }
      for (auto& item : enumerate(3, intervals[p].first, size.to_ulong())) {
        stitched.push_back(std::move(item));
      }
    }
    CHECK(largest - smallest <= Natural(1));

    auto whole = enumerate(3, Natural(c.start), c.end - c.start);
    CHECK(stitched == whole);
  }
}

TEST_CASE("bitstring rendering") {
  CHECK(to_bitstring(comb({0, 1, 2}), 5) == "00111");
  CHECK(to_bitstring(comb({2, 3}), 4) == "1100");
  CHECK_THROWS_AS(to_bitstring(comb({4}), 3), Error);
  try {
    to_bitstring(comb({4}), 3);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ElementOutOfUniverse);
  }
}

TEST_CASE("bitstring parsing") {
  CHECK(from_bitstring("00111") == comb({0, 1, 2}));
  CHECK(from_bitstring("1100") == comb({2, 3}));
  CHECK_THROWS_AS(from_bitstring("0000"), Error);
  CHECK_THROWS_AS(from_bitstring("01a1"), Error);
  CHECK_THROWS_AS(from_bitstring(""), Error);
  try {
    from_bitstring("0000");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::EmptyCombination);
  }
}

TEST_CASE("bitstring round-trip over whole small universes") {
  for (unsigned long n = 1; n <= 12; ++n) {
    for (std::size_t r = 1; r <= n; ++r) {
      for (const auto& subset : oracles::colex_subsets(n, r)) {
        Combination c = from_tuple(subset);
        CHECK(from_bitstring(to_bitstring(c, n)) == c);
      }
    }
  }
}

TEST_CASE("unrank then rank is the identity on an initial segment") {
  for (std::size_t r = 1; r <= 4; ++r) {
    for (unsigned long x = 0; x <= 20000; ++x) {
      if (rank(unrank(Natural(x), r)) != Natural(x)) {
        CAPTURE(r);
        CAPTURE(x);
        REQUIRE(rank(unrank(Natural(x), r)) == Natural(x));
      }
    }
  }
}

TEST_CASE("rank then unrank is the identity on whole small universes") {
  for (unsigned long n = 1; n <= 12; ++n) {
    for (std::size_t r = 1; r <= n; ++r) {
      for (const auto& subset : oracles::colex_subsets(n, r)) {
        Combination c = from_tuple(subset);
        CHECK(unrank(rank(c), r) == c);
      }
    }
  }
}

TEST_CASE("rank order matches the sort-based colex oracle") {
  for (unsigned long n = 1; n <= 10; ++n) {
    for (std::size_t r = 1; r <= n; ++r) {
      auto listing = oracles::colex_subsets(n, r);
      for (std::size_t k = 0; k < listing.size(); ++k) {
        CHECK(rank(from_tuple(listing[k])) == Natural(k));
      }
    }
  }
}

TEST_CASE("rank/unrank round-trips random wide ranks") {
  std::mt19937_64 rng(424242);
  for (int trial = 0; trial < 48; ++trial) {
    const unsigned bits = 40 + (static_cast<unsigned>(trial) * 11) % 200;
    const Rank x = oracles::random_natural(rng, bits);
    for (std::size_t r : {std::size_t{2}, std::size_t{7}, std::size_t{12}}) {
      CHECK(rank(unrank(x, r)) == x);
    }
  }
}

TEST_CASE("huge combination round-trips exactly") {
  std::vector<Natural> elements;
  for (unsigned long e = 950; e < 1000; ++e) elements.emplace_back(e);
  Combination top = Combination::from_elements(std::move(elements));

  Rank x = rank(top);
  CHECK(x == binomial(1000, 50) - 1);
  const std::string rendered = x.str();
  CHECK(rendered ==
        "94604610175852178460637222777280449187296940016686540647935693213432526971981"
        "15263279");

  Combination back = unrank(Natural::parse(rendered), 50);
  CHECK(back == top);
  CHECK(rank(back).str() == rendered);
}
