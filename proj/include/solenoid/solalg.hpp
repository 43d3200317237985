#pragma once

// The solenoidal Lie algebra W_mu = A d_mu together with the torus
// function algebra A: bracket, A-module structure and the derivation
// action of vector fields on functions.

#include "solenoid/combination.hpp"

namespace solenoid {

// t^r d_mu with an optional coefficient.
inline AlgebraElement vector_field(const LatticePoint& r, const Scalar& c = Scalar(1)) {
  return AlgebraElement::monomial(r, c);
}

// The distinguished degree-zero element d_mu.
inline AlgebraElement d_mu_field(int n) { return vector_field(LatticePoint::zero(n)); }

inline TorusFunction torus_monomial(const LatticePoint& r, const Scalar& c = Scalar(1)) {
  return TorusFunction::monomial(r, c);
}

inline TorusFunction torus_unit(int n) { return torus_monomial(LatticePoint::zero(n)); }

// [t^r d_mu, t^s d_mu] = mu.(s - r) t^{r+s} d_mu, extended bilinearly.
AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y);

// f * (g d_mu) = (f g) d_mu.
AlgebraElement a_action(const TorusFunction& f, const AlgebraElement& x);

// (t^s d_mu) t^m = mu.m t^{m+s}, extended bilinearly.
TorusFunction derivation_action(const AlgebraElement& x, const TorusFunction& f);

}  // namespace solenoid
