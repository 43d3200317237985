#include "solenoid/cover.hpp"

#include <algorithm>

#include "solenoid/errors.hpp"
#include "solenoid/linalg.hpp"

namespace solenoid {

CoverElement CoverElement::generator(const LatticePoint& x, const ModuleVector& u, const Scalar& c) {
  CoverElement e(x.dim());
  e.add(c, CoverGenerator{x, u});
  return e;
}

void CoverElement::add(const Scalar& c, CoverGenerator g) {
  if (c.is_zero() || g.u.is_zero()) return;
  parts_.emplace_back(c, std::move(g));
}

CoverElement& CoverElement::operator+=(const CoverElement& rhs) {
  for (const auto& [c, g] : rhs.parts_) add(c, g);
  return *this;
}

ModuleVector psi_eval(const CoverGenerator& g, const TorusFunction& f, const ModuleParams& M) {
  const AlgebraElement fx = a_action(f, vector_field(g.x));
  return algebra_act(fx, g.u, M);
}

ModuleVector eval(const CoverElement& e, const TorusFunction& f, const ModuleParams& M) {
  ModuleVector out(e.context());
  for (const auto& [c, g] : e.parts()) out += c * psi_eval(g, f, M);
  return out;
}

ModuleVector pi_project(const CoverElement& e, const ModuleParams& M) {
  return eval(e, torus_unit(e.context()), M);
}

CoverElement cover_act(const LatticePoint& p, const Scalar& c, const CoverElement& e,
                       const ModuleParams& M) {
  CoverElement out(e.context());
  for (const auto& [w, g] : e.parts()) {
    // [y, x] = c mu.(x - p) t^{p+x} d_mu.
    out.add(w * c * mu_dot(g.x - p), CoverGenerator{p + g.x, g.u});
    const ModuleVector yu = c * tensor_act(p, g.u, M);
    out.add(w, CoverGenerator{g.x, yu});
  }
  return out;
}

CoverElement cover_a_act(const LatticePoint& g, const CoverElement& e) {
  CoverElement out(e.context());
  for (const auto& [c, gen] : e.parts()) out.add(c, CoverGenerator{g + gen.x, gen.u});
  return out;
}

ModuleVector coinduced_act_eval(const LatticePoint& p, const Scalar& c, const CoverElement& e,
                                const TorusFunction& f, const ModuleParams& M) {
  const AlgebraElement y = vector_field(p, c);
  const ModuleVector first = algebra_act(y, eval(e, f, M), M);
  const ModuleVector second = eval(e, derivation_action(y, f), M);
  return first - second;
}

int weight_space_rank(const ModuleParams& M, const LatticePoint& lambda, int gen_window,
                      int eval_window, int eval_window_cap) {
  const int n = M.n();
  std::vector<CoverGenerator> gens;
  for (const auto& w : box_points(n, gen_window)) {
    if (!M.valid_offset(w)) continue;
    gens.push_back(CoverGenerator{lambda - w, basis_vector(w)});
  }

  const auto rank_at = [&](int radius) {
    const auto points = box_points(n, radius);
    MatrixS m = zero_matrix(static_cast<int>(gens.size()), static_cast<int>(points.size()));
    for (size_t row = 0; row < gens.size(); ++row) {
      for (size_t col = 0; col < points.size(); ++col) {
        const ModuleVector value = psi_eval(gens[row], torus_monomial(points[col]), M);
        m(static_cast<int>(row), static_cast<int>(col)) = value.coefficient(lambda + points[col]);
      }
    }
    return rank_fraction_free(m);
  };

  for (int radius = eval_window; radius <= eval_window_cap; ++radius) {
    const int here = rank_at(radius);
    if (rank_at(radius + 1) == here) return here;
  }
  throw RankUnstable("weight-space rank did not stabilize up to evaluation window " +
                     std::to_string(eval_window_cap));
}

PiSurjectivityReport pi_surjectivity_report(const ModuleParams& M, int window) {
  const int n = M.n();
  PiSurjectivityReport report;
  for (const auto& lambda : box_points(n, window)) {
    if (!M.valid_offset(lambda)) continue;
    report.window_weights.push_back(lambda);
    bool reached = false;
    for (const auto& w : box_points(n, window)) {
      if (!M.valid_offset(w)) continue;
      const ModuleVector image = tensor_act(lambda - w, basis_vector(w), M);
      if (!image.coefficient(lambda).is_zero()) {
        reached = true;
        break;
      }
    }
    if (!reached) report.missed.push_back(lambda);
  }
  return report;
}

}  // namespace solenoid
