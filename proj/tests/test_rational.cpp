#include <doctest.h>

#include <random>
#include <stdexcept>

#include "listupdate/rational.hpp"

using namespace listupdate;

TEST_CASE("Rational normalises sign and common factors") {
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(-3, 6).den() == 2);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("Rational arithmetic and ordering") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(2, 3) / Rational(4, 9) == Rational(3, 2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(0));
  CHECK(abs(Rational(-7, 3)) == Rational(7, 3));
  // comparisons stay exact beyond 64-bit cross products
  const std::int64_t big = std::int64_t{1} << 52;
  CHECK(Rational(big + 1, big) < Rational(big, big - 1));
}

TEST_CASE("from_decimal parses exactly") {
  CHECK(Rational::from_decimal("2.0285") == Rational(20285, 10000));
  CHECK(Rational::from_decimal("4") == Rational(4));
  CHECK(Rational::from_decimal("-0.5") == Rational(-1, 2));
  CHECK_THROWS_AS(Rational::from_decimal(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_decimal("1.2.3"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_decimal("."), std::invalid_argument);
}

TEST_CASE("fixed rendering rounds half away from zero") {
  CHECK(to_fixed(Rational(20, 7), 3) == "2.857");
  CHECK(to_fixed(Rational(1, 8), 2) == "0.13");
  CHECK(to_fixed(Rational(-1, 8), 2) == "-0.13");
  CHECK(to_fixed(Rational(2), 3) == "2.000");
  CHECK(to_fixed(Rational(1, 3), 0) == "0");
  CHECK(to_fixed(Rational(1, 1000), 2) == "0.00");
  CHECK(round_to_places(Rational(4000, 1004), 2) == Rational(398, 100));
  CHECK_THROWS_AS(to_fixed(Rational(1), 19), std::out_of_range);
}

TEST_CASE("significant rendering") {
  CHECK(to_significant(Rational(20, 7), 6) == "2.85714");
  CHECK(to_significant(Rational(2), 6) == "2");
  CHECK(to_significant(Rational(8, 5), 6) == "1.6");
  CHECK(to_significant(Rational(0), 6) == "0");
  CHECK(to_significant(Rational(1, 3000), 3) == "0.000333");
  CHECK(to_significant(Rational(99999995, 10000000), 6) == "10");
  CHECK(to_significant(Rational(123456789), 6) == "123456789");
}

TEST_CASE("fixed rendering agrees with long division on random values") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 2000; ++i) {
    const auto num = static_cast<std::int64_t>(rng() % 1'000'000);
    const auto den = static_cast<std::int64_t>(1 + rng() % 9999);
    const std::string text = to_fixed(Rational(num, den), 4);
    // re-parse and check it is the nearest 4-decimal value
    const Rational back = Rational::from_decimal(text);
    CHECK(abs(back - Rational(num, den)) <= Rational(1, 20000));
  }
}
