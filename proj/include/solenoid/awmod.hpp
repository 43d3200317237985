#pragma once

// AW-modules out of jet data: a finite-dimensional family of matrices
// rho(x^k d_mu) determines the action of every t^s d_mu on A (x) U
// through the fiber operator D(s) = beta Id + sum_k s^k/k! rho(x^k d_mu).
// This header also houses the D(s) polynomial fit, the bracket table of
// the partial operators, and the truncated jet-commutant rank check.

#include <functional>
#include <iosfwd>
#include <map>
#include <string>

#include "solenoid/linalg.hpp"
#include "solenoid/modules.hpp"
#include "solenoid/solalg.hpp"

namespace solenoid {

// Matrices rho(x^k d_mu) for multi-indices 1 <= |k| <= degree_bound;
// zero beyond the bound.
class JetRep {
 public:
  JetRep(int n, int dim, int degree_bound) : n_(n), dim_(dim), degree_bound_(degree_bound) {}

  int n() const { return n_; }
  int dim() const { return dim_; }
  int degree_bound() const { return degree_bound_; }
  const std::map<LatticePoint, MatrixS>& entries() const { return rho_; }

  void set(const LatticePoint& k, MatrixS value);
  MatrixS rho(const LatticePoint& k) const;  // zero matrix when absent

  // Checks the bracket relations on all stored generators (rho beyond
  // the degree bound taken as zero); throws InvalidRep on failure.
  void validate() const;

  static JetRep scalar_family(int n);   // dim 1: x_i d_mu -> a*m_i
  static JetRep nilpotent_pair(int n);  // dim 2: a*m_i*Id + m_i*N
  static JetRep jordan_triple(int n);   // dim 3: a*m_i*Id + m_i*N

  // Structured text format: "n", "dim", "degree_bound" headers, then one
  // "rho <multi-index>" block per generator with dim x dim entries.
  static JetRep load(std::istream& in);
  static JetRep load_file(const std::string& path);

 private:
  int n_;
  int dim_;
  int degree_bound_;
  std::map<LatticePoint, MatrixS> rho_;
};

// An element sum_m t^m (x) u_m of A (x) U.
class AWElement {
 public:
  AWElement(int n, int dim) : n_(n), dim_(dim) {}

  int context() const { return n_; }
  int dim() const { return dim_; }
  const std::map<LatticePoint, VectorS>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const LatticePoint& m, const VectorS& u);

  AWElement operator-() const;
  AWElement& operator+=(const AWElement& rhs);
  AWElement& operator-=(const AWElement& rhs);
  friend AWElement operator+(AWElement lhs, const AWElement& rhs) { return lhs += rhs; }
  friend AWElement operator-(AWElement lhs, const AWElement& rhs) { return lhs -= rhs; }
  friend AWElement operator*(const Scalar& c, const AWElement& x);
  friend bool operator==(const AWElement& lhs, const AWElement& rhs) {
    return lhs.terms_ == rhs.terms_;
  }
  friend bool operator!=(const AWElement& lhs, const AWElement& rhs) { return !(lhs == rhs); }

 private:
  int n_;
  int dim_;
  std::map<LatticePoint, VectorS> terms_;
};

// The AW-module A (x) U attached to validated jet data:
//   (t^s d_mu)(t^m (x) u) = t^{m+s} (x) (mu.m Id + D(s)) u.
class AWModule {
 public:
  AWModule(JetRep rep, BetaMode beta_mode);  // validates the rep

  int n() const { return rep_.n(); }
  int dim() const { return rep_.dim(); }
  const JetRep& rep() const { return rep_; }
  const Scalar& beta() const { return beta_; }

  AWElement basis(const LatticePoint& m, int fiber) const;
  MatrixS d_matrix(const LatticePoint& s) const;

  AWElement act(const LatticePoint& s, const AWElement& v) const;
  AWElement act(const AlgebraElement& x, const AWElement& v) const;
  AWElement a_act(const TorusFunction& f, const AWElement& v) const;

 private:
  JetRep rep_;
  Scalar beta_;
};

inline AWModule aw_construct(JetRep rep, BetaMode beta_mode) {
  return AWModule(std::move(rep), beta_mode);
}

// Reads off D(s) by acting on t^0 (x) U and stripping t^s.
MatrixS extract_d(const AWModule& mod, const LatticePoint& s);

// [D(s), D(m)] = mu.m (D(m+s) - D(m)) - mu.s (D(m+s) - D(s)), exactly.
bool verify_deform(const AWModule& mod, const LatticePoint& s, const LatticePoint& m);

// Leibniz compatibility x(fv) = (xf)v + f(xv) for x = t^s d_mu, f = t^g.
bool verify_compatibility(const AWModule& mod, const LatticePoint& s, const LatticePoint& g,
                          const AWElement& v);

// x(yv) - y(xv) = [x,y]v for x = t^s d_mu, y = t^m d_mu.
bool verify_module_axiom(const AWModule& mod, const LatticePoint& s, const LatticePoint& m,
                         const AWElement& v);

// An End(U)-valued polynomial D(s) = sum_k s^k/k! partial^k D, stored by
// monomial coefficient (partial^k D = k! coefficient(k)).
class OperatorPolynomial {
 public:
  OperatorPolynomial(int n, int dim) : n_(n), dim_(dim) {}

  int n() const { return n_; }
  int dim() const { return dim_; }
  const std::map<LatticePoint, MatrixS>& coefficients() const { return coeffs_; }

  void set_coefficient(const LatticePoint& k, MatrixS value);
  MatrixS coefficient(const LatticePoint& k) const;  // zero matrix when absent
  MatrixS partial(const LatticePoint& k) const;
  MatrixS eval(const LatticePoint& s) const;

 private:
  int n_;
  int dim_;
  std::map<LatticePoint, MatrixS> coeffs_;
};

// Interpolates samples on the box [-K, K]^n by the unique polynomial of
// degree <= degree_cap in each variable (iterated univariate Lagrange on
// integer nodes), then re-checks every point of the enlarged box
// [-K-2, K+2]^n; throws FitMismatch if the samples are not polynomial of
// the assumed degree.
OperatorPolynomial fit_polynomial(const std::function<MatrixS(const LatticePoint&)>& sample,
                                  int n, int dim, int box_radius, int degree_cap);

// Checks the bracket table of the partial operators:
//   [p^k D, p^r D] = sum_i mu_i (r_i - k_i) p^{k+r-e_i} D   (k, r != 0)
// and zero whenever k = 0 or r = 0.
bool verify_jet_brackets(const OperatorPolynomial& op);

struct CommutantReport {
  int truncation_dim = 0;
  int commutant_rank = 0;
  int codimension = 0;
  bool degree_zero_in_hyperplane = false;  // every degree-0 bracket satisfies sum mu_i c_i = 0
  int degree_zero_rank = 0;
  bool degree_zero_matches_hyperplane = false;
};

// Rank of the bracket span inside the truncation of the positive jet
// algebra at multi-index total degree <= degree_bound.
CommutantReport commutant_check(int n, int degree_bound);

}  // namespace solenoid
