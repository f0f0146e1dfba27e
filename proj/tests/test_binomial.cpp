#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "combinadics/binomial.hpp"
#include "combinadics/errors.hpp"
#include "combinadics/natural.hpp"
#include "oracles.hpp"

using combinadics::binomial;
using combinadics::gap_lhs_rhs;
using combinadics::Error;
using combinadics::ErrorKind;
using combinadics::hockey_stick_lhs_rhs;
using combinadics::Natural;
using combinadics::pascal_lhs_rhs;

TEST_CASE("natural parse/render round-trip is exact") {
  CHECK(Natural::parse("0").str() == "0");
  CHECK(Natural::parse("42").str() == "42");
  const std::string big = "123456789012345678901234567890123456789";
  CHECK(Natural::parse(big).str() == big);
  CHECK(Natural::parse("007").str() == "7");  // rendering is canonical

  CHECK_THROWS_AS(Natural::parse(""), Error);
  CHECK_THROWS_AS(Natural::parse("-1"), Error);
  CHECK_THROWS_AS(Natural::parse("+2"), Error);
  CHECK_THROWS_AS(Natural::parse("1 2"), Error);
  CHECK_THROWS_AS(Natural::parse("0x10"), Error);
}

TEST_CASE("natural arithmetic and ordering") {
  Natural a = 100, b = 42;
  CHECK((a + b).str() == "142");
  CHECK((a - b).str() == "58");
  CHECK((a * b).str() == "4200");
  CHECK(a > b);
  CHECK(b < a);
  CHECK(a == Natural(100));
  CHECK(Natural().is_zero());
  CHECK(!a.is_zero());
  ++a;
  CHECK(a.str() == "101");
  --a;
  CHECK(a.str() == "100");

  CHECK(Natural(77).fits_ulong());
  CHECK(Natural(77).to_ulong() == 77ul);
  Natural oversized = Natural::parse("99999999999999999999999999999999");
  CHECK(!oversized.fits_ulong());
  CHECK_THROWS_AS(oversized.to_ulong(), Error);
}

TEST_CASE("binomial: extended definition") {
  CHECK(binomial(0, 0) == Natural(1));
  CHECK(binomial(2, 3) == Natural(0));  // n < r branch
  CHECK(binomial(5, 2) == Natural(10));
  CHECK(binomial(10, 0) == Natural(1));
  CHECK(binomial(10, 10) == Natural(1));
  CHECK(binomial(0, 5) == Natural(0));
}

TEST_CASE("binomial: values beyond machine words") {
  CHECK(binomial(50, 25).str() == "126410606437752");
  CHECK(binomial(64, 32).str() == "1832624140942590534");
  CHECK(binomial(100, 50).str() == "100891344545564193334812497256");
  // 2^300-scale arguments, small r
  Natural huge = Natural::parse("1000000000000000000000000000000");
  CHECK(binomial(huge, 1) == huge);
  CHECK(binomial(huge, 2).str() ==
        "499999999999999999999999999999500000000000000000000000000000");
}

TEST_CASE("binomial agrees with the Pascal-table oracle") {
  oracles::PascalTable table(50);
  for (std::size_t n = 0; n <= 50; ++n) {
    for (std::size_t r = 0; r <= n + 2; ++r) {
      CAPTURE(n);
      CAPTURE(r);
      CHECK(binomial(Natural(n), Natural(r)) == table.at(n, r));
    }
  }
}

TEST_CASE("binomial symmetry") {
  for (std::size_t n = 0; n <= 40; ++n) {
    for (std::size_t r = 0; r <= n; ++r) {
      CHECK(binomial(Natural(n), Natural(r)) == binomial(Natural(n), Natural(n - r)));
    }
  }
}

TEST_CASE("pascal recurrence pairs") {
  auto p = pascal_lhs_rhs(1, 1);
  CHECK(p.first == Natural(2));
  CHECK(p.second == Natural(2));

  p = pascal_lhs_rhs(4, 2);
  CHECK(p.first == Natural(10));
  CHECK(p.second == Natural(10));

  p = pascal_lhs_rhs(0, 1);
  CHECK(p.first == Natural(1));
  CHECK(p.second == Natural(1));

  CHECK_THROWS_WITH_AS(pascal_lhs_rhs(5, 0), doctest::Contains("r >= 1"), Error);
}

TEST_CASE("pascal recurrence holds exactly on a grid") {
  for (std::size_t n = 0; n <= 32; ++n) {
    for (std::size_t r = 1; r <= 32; ++r) {
      auto [lhs, rhs] = pascal_lhs_rhs(Natural(n), Natural(r));
      CAPTURE(n);
      CAPTURE(r);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("hockey-stick pairs") {
  auto h = hockey_stick_lhs_rhs(4, 2);
  CHECK(h.first == Natural(10));  // 1 + 3 + 6
  CHECK(h.second == Natural(10));

  h = hockey_stick_lhs_rhs(3, 0);
  CHECK(h.first == Natural(1));
  CHECK(h.second == Natural(1));

  h = hockey_stick_lhs_rhs(5, 5);
  CHECK(h.first == Natural(6));  // six all-ones terms
  CHECK(h.second == Natural(6));

  CHECK_THROWS_AS(hockey_stick_lhs_rhs(2, 3), Error);  // needs n >= r
}

TEST_CASE("hockey-stick holds exactly on a grid") {
  for (std::size_t n = 0; n <= 32; ++n) {
    for (std::size_t r = 0; r <= n; ++r) {
      auto [lhs, rhs] = hockey_stick_lhs_rhs(Natural(n), Natural(r));
      CAPTURE(n);
      CAPTURE(r);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("gap pairs differ by exactly one") {
  auto g = gap_lhs_rhs(1, 2);
  CHECK(g.first == Natural(3));
  CHECK(g.second == Natural(2));

  g = gap_lhs_rhs(0, 3);
  CHECK(g.first == Natural(1));
  CHECK(g.second == Natural(0));  // the zero representation's sum

  g = gap_lhs_rhs(2, 2);
  CHECK(g.first == Natural(6));
  CHECK(g.second == Natural(5));

  CHECK_THROWS_AS(gap_lhs_rhs(4, 0), Error);

  for (std::size_t n = 0; n <= 16; ++n) {
    for (std::size_t r = 1; r <= 16; ++r) {
      auto [lhs, rhs] = gap_lhs_rhs(Natural(n), Natural(r));
      CAPTURE(n);
      CAPTURE(r);
      CHECK(lhs == rhs + 1);
    }
  }
}

TEST_CASE("binomial is strictly increasing in n once n >= r") {
  for (std::size_t r = 1; r <= 8; ++r) {
    for (std::size_t n = r; n < 32; ++n) {
      CHECK(binomial(Natural(n), Natural(r)) < binomial(Natural(n + 1), Natural(r)));
    }
  }
}
