#pragma once

// Cuspidal weight modules over W_mu at desk scale: the tensor family
// T(alpha, beta), the quotient of T(0,0) by its constants line, and the
// trivial module.  Offsets m in Z^n index the basis vector of weight
// beta + mu.m on the module's coset.

#include <optional>
#include <string>
#include <vector>

#include "solenoid/combination.hpp"
#include "solenoid/uea.hpp"

namespace solenoid {

enum class BetaMode {
  Generic,   // beta stays a free indeterminate: the coset misses Gamma_mu
  Integral,  // beta = 0: the coset is Gamma_mu itself
};

enum class ModuleKind {
  Tensor,            // T(alpha, beta)
  FunctionQuotient,  // T(0,0) / (constants line)
  Trivial,           // the 1-dimensional module with zero action
};

class ModuleParams {
 public:
  // T(alpha, beta); alpha symbolic when unbound. Intermediate integral
  // beta values are handled by re-indexing offsets, never by binding b.
  static ModuleParams tensor(int n, std::optional<Rational> alpha = std::nullopt,
                             BetaMode beta_mode = BetaMode::Generic);
  static ModuleParams function_quotient(int n);
  static ModuleParams trivial(int n);

  int n() const { return n_; }
  ModuleKind kind() const { return kind_; }
  const Scalar& alpha() const { return alpha_; }
  const Scalar& beta() const { return beta_; }
  BetaMode beta_mode() const { return beta_mode_; }

  Scalar weight(const LatticePoint& m) const { return beta_ + mu_dot(m); }
  bool valid_offset(const LatticePoint& m) const;
  std::string describe() const;

 private:
  ModuleParams(int n, ModuleKind kind, Scalar alpha, Scalar beta, BetaMode beta_mode)
      : n_(n), kind_(kind), alpha_(std::move(alpha)), beta_(std::move(beta)), beta_mode_(beta_mode) {}

  int n_;
  ModuleKind kind_;
  Scalar alpha_;
  Scalar beta_;
  BetaMode beta_mode_;
};

ModuleVector basis_vector(const LatticePoint& offset, const Scalar& c = Scalar(1));

// e_k v at offset m contributes (beta + mu.m + alpha mu.k) at offset m + k.
ModuleVector tensor_act(const LatticePoint& k, const ModuleVector& v, const ModuleParams& params);

// Linear extension of tensor_act over a vector field.
ModuleVector algebra_act(const AlgebraElement& x, const ModuleVector& v, const ModuleParams& params);

// PBW words act right-to-left through tensor_act.
ModuleVector uea_act(const UEAElement& u, const ModuleVector& v, const ModuleParams& params);

// True when u annihilates the whole module, decided symbolically (probe
// offsets cover a grid large enough for the quadratic offset dependence
// of the action coefficients).
bool annihilates_module(const UEAElement& u, const ModuleParams& params);

// Least m <= m_max with Omega^(m,h)_{k,s} acting as zero, if any.
std::optional<int> min_annihilation_order(const LatticePoint& h, const LatticePoint& k,
                                          const LatticePoint& s, const ModuleParams& params,
                                          int m_max);

// The intertwiner T(0, beta) -> T(1, beta): coefficient at offset m is
// multiplied by the weight beta + mu.m.
ModuleVector theta_map(const ModuleVector& v, const ModuleParams& domain);

struct WindowStructureReport {
  bool fully_cyclic = false;
  std::vector<LatticePoint> window;                           // offsets scanned
  std::vector<LatticePoint> cyclic_offsets;                   // reach the whole window
  std::vector<std::vector<LatticePoint>> invariant_subsets;   // proper closed reach-sets
};

// One-step generator reachability closed transitively inside the box
// [-K, K]^n.  Reports window-scale evidence, not a simplicity proof.
WindowStructureReport window_structure(const ModuleParams& params, int window_radius);

}  // namespace solenoid
