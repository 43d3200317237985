#pragma once

// The A-cover of a cuspidal module M: the span of the functionals
// psi(x, u): A -> M, f |-> (f x) u, inside the coinduced module
// Hom(A, M), together with the projection pi(phi) = phi(1) and exact
// weight-space rank computation on evaluation windows.

#include <utility>
#include <vector>

#include "solenoid/modules.hpp"
#include "solenoid/solalg.hpp"

namespace solenoid {

// psi(t^x d_mu, u) with a homogeneous module vector u (single offset).
struct CoverGenerator {
  LatticePoint x;
  ModuleVector u;
};

// A weight-homogeneous combination of cover generators.  Equality of
// cover elements is functional and is decided on evaluation windows.
class CoverElement {
 public:
  explicit CoverElement(int n) : n_(n) {}

  static CoverElement generator(const LatticePoint& x, const ModuleVector& u,
                                const Scalar& c = Scalar(1));

  int context() const { return n_; }
  const std::vector<std::pair<Scalar, CoverGenerator>>& parts() const { return parts_; }
  bool has_parts() const { return !parts_.empty(); }

  void add(const Scalar& c, CoverGenerator g);
  CoverElement& operator+=(const CoverElement& rhs);

 private:
  int n_;
  std::vector<std::pair<Scalar, CoverGenerator>> parts_;
};

// psi(x, u)(f) = (f x) u.
ModuleVector psi_eval(const CoverGenerator& g, const TorusFunction& f, const ModuleParams& M);

ModuleVector eval(const CoverElement& e, const TorusFunction& f, const ModuleParams& M);

// pi(e) = e(1).
ModuleVector pi_project(const CoverElement& e, const ModuleParams& M);

// y psi(x, u) = psi([y, x], u) + psi(x, y u) for y = c t^p d_mu.
CoverElement cover_act(const LatticePoint& p, const Scalar& c, const CoverElement& e,
                       const ModuleParams& M);

// t^g psi(x, u) = psi(t^g x, u).
CoverElement cover_a_act(const LatticePoint& g, const CoverElement& e);

// The coinduced-module route (y phi)(f) = y(phi(f)) - phi(y f), evaluated
// at f; agreement with cover_act is a tested invariant.
ModuleVector coinduced_act_eval(const LatticePoint& p, const Scalar& c, const CoverElement& e,
                                const TorusFunction& f, const ModuleParams& M);

// Rank of the evaluation matrix of the generators psi(e_{lambda-w}, v_w),
// w in [-K, K]^n, on monomials t^f, f in [-K', K']^n.  The rank must not
// change when K' grows by 1; retries up to eval_window_cap and throws
// RankUnstable past it.
int weight_space_rank(const ModuleParams& M, const LatticePoint& lambda, int gen_window,
                      int eval_window, int eval_window_cap);

struct PiSurjectivityReport {
  std::vector<LatticePoint> window_weights;
  std::vector<LatticePoint> missed;  // weights whose space is not reached
  bool surjective_everywhere() const { return missed.empty(); }
};

// For every window weight, checks that {pi(psi(e_k, v_w))} spans the
// target weight space.
PiSurjectivityReport pi_surjectivity_report(const ModuleParams& M, int window);

}  // namespace solenoid
