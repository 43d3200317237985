#include <doctest.h>

#include <algorithm>

#include "solenoid/errors.hpp"
#include "solenoid/modules.hpp"
#include "solenoid/rng.hpp"
#include "solenoid/suites.hpp"

using namespace solenoid;

TEST_CASE("tensor action formula") {
  const int n = 2;
  const ModuleParams generic = ModuleParams::tensor(n);

  SUBCASE("degree zero acts by the weight") {
    const LatticePoint zero = LatticePoint::zero(n);
    const ModuleVector image = tensor_act(zero, basis_vector(zero), generic);
    CHECK(image == basis_vector(zero, Scalar::beta(n)));
  }
  SUBCASE("general coefficient") {
    const LatticePoint k{1, -1}, m{0, 2};
    const ModuleVector image = tensor_act(k, basis_vector(m), generic);
    const Scalar expected = Scalar::beta(n) + mu_dot(m) + Scalar::alpha(n) * mu_dot(k);
    CHECK(image == basis_vector(m + k, expected));
  }
  SUBCASE("integral zero-weight vector is killed at alpha = 0") {
    const ModuleParams t00 = ModuleParams::tensor(n, Rational(0), BetaMode::Integral);
    const ModuleVector image = tensor_act(LatticePoint{1, 1}, basis_vector(LatticePoint::zero(n)), t00);
    CHECK(image.is_zero());
  }
}

TEST_CASE("enveloping algebra action") {
  const int n = 1;
  const ModuleParams params = ModuleParams::tensor(n);
  const LatticePoint k{2}, s{-1}, p{1};

  SUBCASE("unit acts as identity") {
    const ModuleVector v = basis_vector(p);
    CHECK(uea_act(UEAElement::unit(n), v, params) == v);
  }
  SUBCASE("two-step word") {
    // (E_k E_s) v_p = e_k (e_s v_p): weights compose left to right.
    const UEAElement word = uea_mul(UEAElement::generator(k), UEAElement::generator(s));
    const Scalar w = Scalar::beta(n) + mu_dot(p);
    const Scalar expected =
        (w + Scalar::alpha(n) * mu_dot(s)) * (w + mu_dot(s) + Scalar::alpha(n) * mu_dot(k));
    CHECK(uea_act(word, basis_vector(p), params) == basis_vector(p + s + k, expected));
  }
  SUBCASE("representation property") {
    Rng rng(31);
    for (int i = 0; i < 20; ++i) {
      const UEAElement a = pbw_normalize(n, rng.word(n, 2, 2));
      const UEAElement b = pbw_normalize(n, rng.word(n, 2, 2));
      const ModuleVector v = rng.module_vector(n, 2);
      CHECK(uea_act(uea_mul(a, b), v, params) == uea_act(a, uea_act(b, v, params), params));
    }
  }
  SUBCASE("module axiom against the bracket") {
    Rng rng(37);
    for (int i = 0; i < 20; ++i) {
      const LatticePoint a = rng.point(n, 2), b = rng.point(n, 2);
      const ModuleVector v = rng.module_vector(n, 2);
      const ModuleVector lhs =
          tensor_act(a, tensor_act(b, v, params), params) - tensor_act(b, tensor_act(a, v, params), params);
      CHECK(lhs == mu_dot(b - a) * tensor_act(a + b, v, params));
    }
  }
  SUBCASE("weight grading") {
    Rng rng(43);
    for (int i = 0; i < 20; ++i) {
      const LatticePoint a = rng.point(n, 2);
      const LatticePoint m = rng.point(n, 3);
      const ModuleVector image = tensor_act(a, basis_vector(m), params);
      for (const auto& [offset, c] : image.terms()) CHECK(offset == m + a);
    }
  }
}

TEST_CASE("annihilation order search") {
  const int n = 2;
  const ModuleParams generic = ModuleParams::tensor(n);
  const LatticePoint h{1, 0}, k{0, 1}, s{1, 1};

  SUBCASE("generic tensor modules need order three") {
    const auto found = min_annihilation_order(h, k, s, generic, 5);
    REQUIRE(found.has_value());
    CHECK(*found == 3);
    CHECK(predicted_annihilation_order(h, k, s, generic) == 3);
  }
  SUBCASE("order two does not annihilate") {
    CHECK_FALSE(annihilates_module(differentiator(2, h, k, s), generic));
  }
  SUBCASE("random triples agree with the difference oracle") {
    Rng rng(53);
    for (int i = 0; i < 10; ++i) {
      const LatticePoint hh = rng.nonzero_point(n, 2);
      const LatticePoint kk = rng.point(n, 2);
      const LatticePoint ss = rng.point(n, 2);
      const auto found = min_annihilation_order(hh, kk, ss, generic, 5);
      REQUIRE(found.has_value());
      CHECK(*found == predicted_annihilation_order(hh, kk, ss, generic));
    }
  }
  SUBCASE("special parameter points drop to order two") {
    const ModuleParams t0 = ModuleParams::tensor(n, Rational(0));
    const auto found = min_annihilation_order(h, k, s, t0, 5);
    REQUIRE(found.has_value());
    CHECK(*found == 2);
  }
  SUBCASE("trivial module is annihilated at order zero") {
    const auto found = min_annihilation_order(h, k, s, ModuleParams::trivial(n), 5);
    REQUIRE(found.has_value());
    CHECK(*found == 0);
  }
  SUBCASE("function quotient") {
    const auto found = min_annihilation_order(h, k, s, ModuleParams::function_quotient(n), 5);
    REQUIRE(found.has_value());
    CHECK(*found == 2);
  }
  SUBCASE("zero step is rejected") {
    CHECK_THROWS_AS(min_annihilation_order(LatticePoint::zero(n), k, s, generic, 5), ConfigError);
  }
  SUBCASE("NotFound when the cap is too small") {
    CHECK_FALSE(min_annihilation_order(h, k, s, generic, 2).has_value());
  }
}

TEST_CASE("theta intertwiner") {
  const int n = 2;
  SUBCASE("integral kernel") {
    const ModuleParams domain = ModuleParams::tensor(n, Rational(0), BetaMode::Integral);
    CHECK(theta_map(basis_vector(LatticePoint::zero(n)), domain).is_zero());
  }
  SUBCASE("scales by the weight") {
    const ModuleParams domain = ModuleParams::tensor(n, Rational(0));
    const LatticePoint s{1, 2};
    CHECK(theta_map(basis_vector(s), domain) == basis_vector(s, Scalar::beta(n) + mu_dot(s)));
  }
  SUBCASE("intertwines the actions") {
    const ModuleParams domain = ModuleParams::tensor(n, Rational(0));
    const ModuleParams codomain = ModuleParams::tensor(n, Rational(1));
    Rng rng(61);
    for (int i = 0; i < 20; ++i) {
      const LatticePoint k = rng.point(n, 2), s = rng.point(n, 2);
      const ModuleVector v = basis_vector(s);
      const ModuleVector lhs = theta_map(tensor_act(k, v, domain), domain);
      const ModuleVector rhs = tensor_act(k, theta_map(v, domain), codomain);
      CHECK(lhs == rhs);
      // Both routes give (s)(s + k) v'_{s+k} written in weights.
      const Scalar w = Scalar::beta(n) + mu_dot(s);
      CHECK(lhs == basis_vector(s + k, w * (w + mu_dot(k))));
    }
  }
  SUBCASE("only defined on the alpha = 0 family") {
    CHECK_THROWS_AS(theta_map(basis_vector(LatticePoint::zero(n)), ModuleParams::tensor(n)),
                    ConfigError);
  }
}

TEST_CASE("window structure") {
  const int n = 2;
  const int K = 2;

  SUBCASE("generic parameters give a fully cyclic window") {
    const auto report = window_structure(ModuleParams::tensor(n), K);
    CHECK(report.fully_cyclic);
    CHECK(report.cyclic_offsets.size() == report.window.size());
    CHECK(report.invariant_subsets.empty());
  }
  SUBCASE("constants line at the origin") {
    const auto report = window_structure(ModuleParams::tensor(n, Rational(0), BetaMode::Integral), K);
    CHECK_FALSE(report.fully_cyclic);
    REQUIRE(report.invariant_subsets.size() == 1);
    REQUIRE(report.invariant_subsets[0].size() == 1);
    CHECK(report.invariant_subsets[0][0].is_zero());
    // Every other vector reaches the full window.
    CHECK(report.cyclic_offsets.size() == report.window.size() - 1);
  }
  SUBCASE("codimension one at alpha = 1") {
    const auto report = window_structure(ModuleParams::tensor(n, Rational(1), BetaMode::Integral), K);
    CHECK_FALSE(report.fully_cyclic);
    REQUIRE(report.invariant_subsets.size() == 1);
    CHECK(report.invariant_subsets[0].size() == report.window.size() - 1);
    const auto& subset = report.invariant_subsets[0];
    CHECK(std::none_of(subset.begin(), subset.end(),
                       [](const LatticePoint& p) { return p.is_zero(); }));
  }
  SUBCASE("window radius below two is refused") {
    CHECK_THROWS_AS(window_structure(ModuleParams::tensor(n), 1), ConfigError);
  }
  SUBCASE("the function quotient is fully cyclic in its window") {
    const auto report = window_structure(ModuleParams::function_quotient(n), K);
    CHECK(report.fully_cyclic);
    CHECK(report.window.size() == box_points(n, K).size() - 1);  // offset 0 is collapsed
  }
  SUBCASE("the theta image matches the invariant window subspace") {
    // theta(v_m) vanishes exactly at m = 0 on the integral coset, so its
    // image offsets coincide with the one proper invariant subset the
    // window scan finds inside T(1,0).
    const ModuleParams domain = ModuleParams::tensor(n, Rational(0), BetaMode::Integral);
    const auto report = window_structure(ModuleParams::tensor(n, Rational(1), BetaMode::Integral), K);
    REQUIRE(report.invariant_subsets.size() == 1);
    std::vector<LatticePoint> image;
    for (const auto& m : report.window) {
      if (!theta_map(basis_vector(m), domain).is_zero()) image.push_back(m);
    }
    CHECK(image == report.invariant_subsets[0]);
  }
}
