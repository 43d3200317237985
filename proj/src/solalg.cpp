#include "solenoid/solalg.hpp"

namespace solenoid {

AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y) {
  AlgebraElement out(x.context());
  for (const auto& [r, cr] : x.terms()) {
    for (const auto& [s, cs] : y.terms()) {
      out.add(r + s, cr * cs * mu_dot(s - r));
    }
  }
  return out;
}

AlgebraElement a_action(const TorusFunction& f, const AlgebraElement& x) {
  AlgebraElement out(x.context());
  for (const auto& [m, cf] : f.terms()) {
    for (const auto& [s, cx] : x.terms()) {
      out.add(m + s, cf * cx);
    }
  }
  return out;
}

TorusFunction derivation_action(const AlgebraElement& x, const TorusFunction& f) {
  TorusFunction out(f.context());
  for (const auto& [s, cx] : x.terms()) {
    for (const auto& [m, cf] : f.terms()) {
      out.add(m + s, cx * cf * mu_dot(m));
    }
  }
  return out;
}

}  // namespace solenoid
