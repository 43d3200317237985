#include <doctest.h>

#include <sstream>

#include "solenoid/awmod.hpp"
#include "solenoid/errors.hpp"
#include "solenoid/rng.hpp"

using namespace solenoid;

namespace {

AWElement random_element(Rng& rng, const AWModule& mod) {
  AWElement v(mod.n(), mod.dim());
  VectorS u(mod.dim());
  for (int i = 0; i < mod.dim(); ++i) u(i) = Scalar(rng.rational());
  v.add(rng.point(mod.n(), 2), u);
  return v;
}

}  // namespace

TEST_CASE("sample jet data validates") {
  for (int n = 1; n <= 3; ++n) {
    CHECK_NOTHROW(JetRep::scalar_family(n).validate());
    CHECK_NOTHROW(JetRep::nilpotent_pair(n).validate());
    CHECK_NOTHROW(JetRep::jordan_triple(n).validate());
  }
}

TEST_CASE("bracket-violating jet data is refused") {
  const int n = 2;
  JetRep broken(n, 2, 1);
  MatrixS e11 = zero_matrix(2, 2);
  e11(0, 0) = Scalar(1);
  MatrixS nil = zero_matrix(2, 2);
  nil(0, 1) = Scalar(1);
  broken.set(LatticePoint::unit(n, 0), e11);
  broken.set(LatticePoint::unit(n, 1), nil);
  CHECK_THROWS_AS(broken.validate(), InvalidRep);
  CHECK_THROWS_AS(AWModule(broken, BetaMode::Generic), InvalidRep);
}

TEST_CASE("jet data bounds are enforced") {
  JetRep rep(2, 2, 1);
  CHECK_THROWS_AS(rep.set(LatticePoint::zero(2), zero_matrix(2, 2)), InvalidRep);
  CHECK_THROWS_AS(rep.set(LatticePoint{1, 1}, identity_matrix(2)), InvalidRep);
  CHECK_THROWS_AS(rep.set(LatticePoint{1, 0}, identity_matrix(3)), InvalidRep);
}

TEST_CASE("fiber operator of the scalar family") {
  const int n = 2;
  const AWModule mod = aw_construct(JetRep::scalar_family(n), BetaMode::Generic);

  SUBCASE("constant term") {
    const MatrixS d0 = extract_d(mod, LatticePoint::zero(n));
    CHECK(matrices_equal(d0, Scalar::beta(n) * identity_matrix(1)));
  }
  SUBCASE("linear dependence on s") {
    const LatticePoint s{2, -1};
    const MatrixS d = extract_d(mod, s);
    CHECK(d(0, 0) == Scalar::beta(n) + Scalar::alpha(n) * mu_dot(s));
  }
  SUBCASE("matches the tensor-module coefficient everywhere") {
    const ModuleParams params = ModuleParams::tensor(n);
    for (const auto& s : box_points(n, 2)) {
      for (const auto& m : box_points(n, 2)) {
        const AWElement image = mod.act(s, mod.basis(m, 0));
        REQUIRE(image.terms().size() == 1);
        const Scalar aw_coefficient = image.terms().begin()->second(0);
        const ModuleVector tensor_image = tensor_act(s, basis_vector(m), params);
        CHECK(aw_coefficient == tensor_image.coefficient(m + s));
      }
    }
  }
}

TEST_CASE("zero jet data yields the alpha = 0 family") {
  const int n = 2;
  const AWModule mod = aw_construct(JetRep(n, 1, 0), BetaMode::Generic);
  const ModuleParams params = ModuleParams::tensor(n, Rational(0));
  for (const auto& s : box_points(n, 2)) {
    CHECK(extract_d(mod, s)(0, 0) == Scalar::beta(n));
    for (const auto& m : box_points(n, 1)) {
      const AWElement image = mod.act(s, mod.basis(m, 0));
      Scalar coefficient(0);
      for (const auto& [offset, u] : image.terms()) coefficient = u(0);
      CHECK(coefficient == tensor_act(s, basis_vector(m), params).coefficient(m + s));
    }
  }
}

TEST_CASE("fiber operator of the nilpotent pair") {
  const int n = 2;
  const AWModule mod = aw_construct(JetRep::nilpotent_pair(n), BetaMode::Generic);
  const LatticePoint s{1, 1};
  const MatrixS d = extract_d(mod, s);
  MatrixS expected = (Scalar::beta(n) + Scalar::alpha(n) * mu_dot(s)) * identity_matrix(2);
  expected(0, 1) += mu_dot(s);
  CHECK(matrices_equal(d, expected));
}

TEST_CASE("deformation bracket identity") {
  const int n = 2;
  SUBCASE("scalar fibers commute and the right side telescopes") {
    const AWModule mod = aw_construct(JetRep::scalar_family(n), BetaMode::Generic);
    CHECK(verify_deform(mod, LatticePoint{1, 0}, LatticePoint{1, 0}));
    CHECK(verify_deform(mod, LatticePoint{2, -1}, LatticePoint{0, 1}));
  }
  SUBCASE("matrix fibers") {
    const AWModule mod = aw_construct(JetRep::jordan_triple(n), BetaMode::Generic);
    Rng rng(83);
    for (int i = 0; i < 10; ++i) {
      CHECK(verify_deform(mod, rng.point(n, 3), rng.point(n, 3)));
    }
  }
}

TEST_CASE("compatibility and module axiom") {
  const int n = 2;
  Rng rng(89);
  for (const auto maker : {&JetRep::scalar_family, &JetRep::nilpotent_pair, &JetRep::jordan_triple}) {
    const AWModule mod = aw_construct(maker(n), BetaMode::Generic);
    for (int i = 0; i < 10; ++i) {
      CHECK(verify_compatibility(mod, rng.point(n, 2), rng.point(n, 2), random_element(rng, mod)));
      CHECK(verify_module_axiom(mod, rng.point(n, 2), rng.point(n, 2), random_element(rng, mod)));
    }
  }
}

TEST_CASE("polynomial fit") {
  const int n = 2;

  SUBCASE("constant samples") {
    const auto sampler = [&](const LatticePoint&) -> MatrixS {
      return Scalar::beta(n) * identity_matrix(2);
    };
    const OperatorPolynomial op = fit_polynomial(sampler, n, 2, 2, 0);
    CHECK(op.coefficients().size() == 1);
    CHECK(matrices_equal(op.coefficient(LatticePoint::zero(n)),
                         Scalar::beta(n) * identity_matrix(2)));
  }
  SUBCASE("round trip through the constructed module") {
    for (const auto maker : {&JetRep::scalar_family, &JetRep::nilpotent_pair, &JetRep::jordan_triple}) {
      const JetRep rep = maker(n);
      const AWModule mod = aw_construct(rep, BetaMode::Generic);
      const auto sampler = [&](const LatticePoint& s) { return extract_d(mod, s); };
      const OperatorPolynomial op = fit_polynomial(sampler, n, rep.dim(), 2, rep.degree_bound());
      CHECK(matrices_equal(op.coefficient(LatticePoint::zero(n)),
                           mod.beta() * identity_matrix(rep.dim())));
      for (const auto& [k, value] : rep.entries()) {
        CHECK(matrices_equal(op.partial(k), value));
      }
      CHECK(op.coefficients().size() == rep.entries().size() + 1);
      CHECK(verify_jet_brackets(op));
    }
  }
  SUBCASE("negative control raises the mismatch") {
    const auto plant = [&](const LatticePoint& s) {
      MatrixS m(1, 1);
      m(0, 0) = mu_dot(s) * mu_dot(s);
      return m;
    };
    CHECK_THROWS_AS(fit_polynomial(plant, n, 1, 2, 1), FitMismatch);
    CHECK_NOTHROW(fit_polynomial(plant, n, 1, 2, 2));  // quadratic cap fits the plant
  }
  SUBCASE("box must exceed the degree cap") {
    const auto sampler = [&](const LatticePoint&) { return identity_matrix(1); };
    CHECK_THROWS_AS(fit_polynomial(sampler, n, 1, 1, 3), ConfigError);
  }
}

TEST_CASE("partial-operator bracket table") {
  const int n = 2;
  SUBCASE("scalar coefficients telescope to zero") {
    OperatorPolynomial op(n, 1);
    MatrixS one = identity_matrix(1);
    op.set_coefficient(LatticePoint::zero(n), Scalar::beta(n) * one);
    op.set_coefficient(LatticePoint{1, 0}, Scalar::mu(n, 0) * one);
    op.set_coefficient(LatticePoint{0, 1}, Scalar::mu(n, 1) * one);
    CHECK(verify_jet_brackets(op));
  }
  SUBCASE("violations are caught") {
    OperatorPolynomial op(n, 2);
    MatrixS e11 = zero_matrix(2, 2);
    e11(0, 0) = Scalar(1);
    MatrixS nil = zero_matrix(2, 2);
    nil(0, 1) = Scalar(1);
    op.set_coefficient(LatticePoint{1, 0}, e11);
    op.set_coefficient(LatticePoint{0, 1}, nil);
    CHECK_FALSE(verify_jet_brackets(op));
  }
}

TEST_CASE("jet commutant ranks") {
  SUBCASE("one direction, bound three") {
    const auto rep = commutant_check(1, 3);
    CHECK(rep.truncation_dim == 3);
    CHECK(rep.codimension == 1);
    CHECK(rep.degree_zero_matches_hyperplane);
    CHECK(rep.degree_zero_rank == 0);
  }
  SUBCASE("two directions, bound three") {
    const auto rep = commutant_check(2, 3);
    CHECK(rep.truncation_dim == 9);
    CHECK(rep.codimension == 1);
    CHECK(rep.degree_zero_matches_hyperplane);
    CHECK(rep.degree_zero_rank == 1);
  }
  SUBCASE("three directions, bound two") {
    const auto rep = commutant_check(3, 2);
    CHECK(rep.truncation_dim == 9);
    CHECK(rep.codimension == 1);
    CHECK(rep.degree_zero_matches_hyperplane);
    CHECK(rep.degree_zero_rank == 2);
  }
  SUBCASE("bound below two is refused") {
    CHECK_THROWS_AS(commutant_check(2, 1), ConfigError);
  }
}

TEST_CASE("jet data file round trip") {
  std::stringstream file;
  file << "# self-extension of the scalar family\n"
       << "n 2\n"
       << "dim 2\n"
       << "degree_bound 1\n"
       << "rho 1,0\n"
       << "a*m1 m1\n"
       << "0 a*m1\n"
       << "rho 0,1\n"
       << "a*m2 m2\n"
       << "0 a*m2\n"
       << "end\n";
  const JetRep rep = JetRep::load(file);
  CHECK(rep.n() == 2);
  CHECK(rep.dim() == 2);
  CHECK(rep.degree_bound() == 1);
  CHECK_NOTHROW(rep.validate());
  const JetRep expected = JetRep::nilpotent_pair(2);
  for (const auto& [k, value] : expected.entries()) {
    CHECK(matrices_equal(rep.rho(k), value));
  }

  std::stringstream bad;
  bad << "n 2\ndim 2\ndegree_bound 1\nrho 1,0\na*m1 m1\n";
  CHECK_THROWS_AS(JetRep::load(bad), ParseError);
}
