#include "doctest.h"

#include <stdexcept>

#include "dpcolor/rational.hpp"

using dpcolor::Rat;
using dpcolor::rat;
using dpcolor::to_decimal;
using dpcolor::to_decimal_trunc;
using dpcolor::to_fraction;

TEST_CASE("rational arithmetic is exact and normalized") {
  CHECK(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
  CHECK(Rat(4, 8) == Rat(1, 2));
  CHECK(Rat(2, -4) == Rat(-1, 2));
  CHECK(rat(7) == Rat(7, 1));
  CHECK(Rat(25, 6) * Rat(6) == Rat(25));
}

TEST_CASE("to_fraction") {
  CHECK(to_fraction(Rat(25, 6)) == "25/6");
  CHECK(to_fraction(Rat(5)) == "5");
  CHECK(to_fraction(Rat(-1, 2)) == "-1/2");
  CHECK(to_fraction(Rat(4, 8)) == "1/2");
  CHECK(to_fraction(Rat(0)) == "0");
}

TEST_CASE("to_decimal rounds half to even") {
  CHECK(to_decimal(Rat(1, 8), 2) == "0.12");
  CHECK(to_decimal(Rat(3, 8), 2) == "0.38");
  CHECK(to_decimal(Rat(1, 8), 3) == "0.125");
  CHECK(to_decimal(Rat(1, 2), 0) == "0");
  CHECK(to_decimal(Rat(3, 2), 0) == "2");
  CHECK(to_decimal(Rat(-3, 2), 0) == "-2");
}

TEST_CASE("to_decimal fixed width and signs") {
  CHECK(to_decimal(Rat(25, 6), 4) == "4.1667");
  CHECK(to_decimal(Rat(-25, 6), 4) == "-4.1667");
  CHECK(to_decimal(Rat(18371, 2578), 4) == "7.1261");
  CHECK(to_decimal(Rat(5), 2) == "5.00");
  CHECK(to_decimal(Rat(0), 4) == "0.0000");
  // truncation toward zero never produces a bare "-0"
  CHECK(to_decimal(Rat(-1, 3), 0) == "0");
  CHECK_THROWS_AS(to_decimal(Rat(1, 3), -1), std::invalid_argument);
}

TEST_CASE("to_decimal_trunc truncates toward zero") {
  CHECK(to_decimal_trunc(Rat(25, 6), 4) == "4.1666");
  CHECK(to_decimal_trunc(Rat(57, 7), 4) == "8.1428");
  CHECK(to_decimal_trunc(Rat(-25, 6), 4) == "-4.1666");
  CHECK(to_decimal_trunc(Rat(1, 2), 0) == "0");
  CHECK(to_decimal_trunc(Rat(9999, 10000), 3) == "0.999");
  CHECK(to_decimal_trunc(Rat(141, 10), 4) == "14.1000");
}
