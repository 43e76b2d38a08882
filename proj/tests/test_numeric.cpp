#include <doctest.h>

#include "finfish/numeric.hpp"

using namespace finfish;

TEST_CASE("binomial basics") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(3, 1) == 3);
  CHECK(binomial(6, 2) == 15);
  CHECK(binomial(30, 10) == 30045015);
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(64, 32) == Int("1832624140942590534"));
}

TEST_CASE("factorial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(20) == Int("2432902008176640000"));
}

TEST_CASE("exact_div") {
  CHECK(exact_div(Int(84), Int(12)) == 7);
  CHECK_THROWS_AS(exact_div(Int(85), Int(12)), ExactnessError);
  CHECK_THROWS_AS(exact_div(Int(1), Int(0)), ExactnessError);
}
