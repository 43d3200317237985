#include <doctest.h>

#include "solenoid/errors.hpp"
#include "solenoid/lattice.hpp"
#include "solenoid/rng.hpp"

using namespace solenoid;

TEST_CASE("mu_dot on distinguished points") {
  CHECK(mu_dot(LatticePoint::zero(2)).is_zero());
  CHECK(mu_dot(LatticePoint{1, 0}) == Scalar::mu(2, 0));
  CHECK(mu_dot(LatticePoint{2, -3}) ==
        Scalar::mu(2, 0) * Scalar(2) - Scalar::mu(2, 1) * Scalar(3));
}

TEST_CASE("mu_dot is additive and formally generic") {
  Rng rng(3);
  for (int i = 0; i < 50; ++i) {
    const LatticePoint a = rng.point(3, 10);
    const LatticePoint b = rng.point(3, 10);
    CHECK(mu_dot(a + b) == mu_dot(a) + mu_dot(b));
  }
  for (int i = 0; i < 50; ++i) {
    const LatticePoint r = rng.nonzero_point(3, 10);
    CHECK_FALSE(mu_dot(r).is_zero());  // mu.r = 0 only at r = 0
  }
  CHECK(mu_dot(LatticePoint::zero(3)).is_zero());
}

TEST_CASE("lex order") {
  CHECK(lex_compare(LatticePoint{0, 1}, LatticePoint{1, 0}) == -1);
  CHECK(lex_compare(LatticePoint{1, 1}, LatticePoint{1, 1}) == 0);
  CHECK(lex_compare(LatticePoint{1, -5}, LatticePoint{0, 100}) == 1);

  Rng rng(9);
  for (int i = 0; i < 50; ++i) {
    const LatticePoint a = rng.point(2, 4), b = rng.point(2, 4), c = rng.point(2, 4);
    CHECK(lex_compare(a, b) == -lex_compare(b, a));
    if (lex_compare(a, b) < 0 && lex_compare(b, c) < 0) CHECK(lex_compare(a, c) < 0);
    CHECK((lex_compare(a, b) == 0) == (a == b));
  }
}

TEST_CASE("serialization") {
  CHECK(LatticePoint({2, -3}).str() == "2,-3");
  CHECK(LatticePoint::parse("2,-3") == LatticePoint{2, -3});
  CHECK(LatticePoint::parse("7", 1) == LatticePoint{7});
  CHECK_THROWS_AS(LatticePoint::parse("1,x"), ParseError);
  CHECK_THROWS_AS(LatticePoint::parse("1,2", 3), ParseError);
}

TEST_CASE("box enumeration") {
  CHECK(box_points(1, 2).size() == 5);
  CHECK(box_points(2, 3).size() == 49);
  CHECK(grid_points(2, 0, 2).size() == 9);
}
