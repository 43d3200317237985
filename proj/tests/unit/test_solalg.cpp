#include <doctest.h>

#include "solenoid/rng.hpp"
#include "solenoid/solalg.hpp"

using namespace solenoid;

TEST_CASE("bracket on basis elements") {
  SUBCASE("self bracket vanishes") {
    const AlgebraElement x = vector_field(LatticePoint{1, -2});
    CHECK(bracket(x, x).is_zero());
  }
  SUBCASE("two directions") {
    // [t^(1,0) d, t^(0,1) d] = (m2 - m1) t^(1,1) d
    const AlgebraElement result =
        bracket(vector_field(LatticePoint{1, 0}), vector_field(LatticePoint{0, 1}));
    AlgebraElement expected(2);
    expected.add(LatticePoint{1, 1}, Scalar::mu(2, 1) - Scalar::mu(2, 0));
    CHECK(result == expected);
  }
  SUBCASE("rank one recovers the classical relation") {
    // [e_1, e_2] = m1 e_3 under e_k = t^k d
    const AlgebraElement result = bracket(vector_field(LatticePoint{1}), vector_field(LatticePoint{2}));
    AlgebraElement expected(1);
    expected.add(LatticePoint{3}, Scalar::mu(1, 0));
    CHECK(result == expected);
  }
}

TEST_CASE("function algebra acts by exponent shifts") {
  const int n = 2;
  const AlgebraElement x = vector_field(LatticePoint{0, 1});
  CHECK(a_action(torus_unit(n), x) == x);

  AlgebraElement shifted(n);
  shifted.add(LatticePoint{3, 1}, Scalar(1));
  CHECK(a_action(torus_monomial(LatticePoint{3, 0}), x) == shifted);

  TorusFunction f(n);
  f.add(LatticePoint{1, 0}, Scalar(1));
  f.add(LatticePoint{0, -1}, Scalar(1));
  AlgebraElement sum(n);
  sum.add(LatticePoint{1, 1}, Scalar(1));
  sum.add(LatticePoint{0, 0}, Scalar(1));
  CHECK(a_action(f, x) == sum);
}

TEST_CASE("derivation action") {
  const int n = 2;
  SUBCASE("constants are killed") {
    Rng rng(2);
    const AlgebraElement x = rng.algebra_element(n, 2);
    CHECK(derivation_action(x, torus_unit(n)).is_zero());
  }
  SUBCASE("monomial rule") {
    // (t^s d) t^m = mu.m t^{m+s}
    const LatticePoint s{1, 1}, m{2, -1};
    TorusFunction expected(n);
    expected.add(m + s, mu_dot(m));
    CHECK(derivation_action(vector_field(s), torus_monomial(m)) == expected);
  }
  SUBCASE("degree zero fixes exponents") {
    const LatticePoint m{2, -1};
    TorusFunction expected(n);
    expected.add(m, mu_dot(m));
    CHECK(derivation_action(d_mu_field(n), torus_monomial(m)) == expected);
  }
}

TEST_CASE("Lie algebra laws on random elements") {
  for (int n = 1; n <= 3; ++n) {
    Rng rng(static_cast<std::uint64_t>(100 + n));
    for (int i = 0; i < 30; ++i) {
      const AlgebraElement x = rng.algebra_element(n, 2);
      const AlgebraElement y = rng.algebra_element(n, 2);
      const AlgebraElement z = rng.algebra_element(n, 2);
      CHECK((bracket(x, y) + bracket(y, x)).is_zero());
      CHECK((bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y)))
                .is_zero());
    }
  }
}

TEST_CASE("Leibniz compatibility of the A-action") {
  Rng rng(41);
  for (int i = 0; i < 30; ++i) {
    const AlgebraElement x = rng.algebra_element(2, 2);
    const TorusFunction f = rng.torus_function(2, 2);
    const AlgebraElement y = rng.algebra_element(2, 2);
    CHECK(bracket(x, a_action(f, y)) ==
          a_action(derivation_action(x, f), y) + a_action(f, bracket(x, y)));
  }
}
