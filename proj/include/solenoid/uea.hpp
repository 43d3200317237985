#pragma once

// The universal enveloping algebra U(W_mu) in PBW normal form.  Basis
// words are lex-sorted sequences of lattice points; straightening swaps
// out-of-order adjacent generators through
//   E_a E_b = E_b E_a + mu.(b - a) E_{a+b}       (a > b in lex order),
// which is the enveloping-algebra image of the solenoidal bracket.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "solenoid/lattice.hpp"

namespace solenoid {

// A PBW monomial: non-decreasing under the lex generator order.
using Word = std::vector<LatticePoint>;

struct WordLess {
  bool operator()(const Word& x, const Word& y) const {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  }
};

class UEAElement {
 public:
  using TermMap = std::map<Word, Scalar, WordLess>;

  UEAElement() = default;
  explicit UEAElement(int n) : n_(n) {}

  static UEAElement unit(int n);
  static UEAElement generator(const LatticePoint& p, const Scalar& c = Scalar(1));

  int context() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  Scalar coefficient(const Word& w) const;

  void add(const Word& sorted_word, const Scalar& c);

  UEAElement operator-() const;
  UEAElement& operator+=(const UEAElement& rhs);
  UEAElement& operator-=(const UEAElement& rhs);
  friend UEAElement operator+(UEAElement lhs, const UEAElement& rhs) { return lhs += rhs; }
  friend UEAElement operator-(UEAElement lhs, const UEAElement& rhs) { return lhs -= rhs; }
  friend UEAElement operator*(const Scalar& c, const UEAElement& x);
  friend bool operator==(const UEAElement& lhs, const UEAElement& rhs) {
    return lhs.terms_ == rhs.terms_;
  }
  friend bool operator!=(const UEAElement& lhs, const UEAElement& rhs) { return !(lhs == rhs); }

  std::string str() const;

 private:
  int n_ = 0;
  TermMap terms_;
};

// Straightens an arbitrary generator word into the PBW basis.
UEAElement pbw_normalize(int n, const Word& word);

UEAElement uea_mul(const UEAElement& a, const UEAElement& b);

// {X, Y} = XY + YX.
UEAElement anticommutator(const UEAElement& a, const UEAElement& b);

// The order-m differentiator: sum_i (-1)^i C(m, i) E_{k-ih} E_{s+ih}.
UEAElement differentiator(int m, const LatticePoint& h, const LatticePoint& k, const LatticePoint& s);

struct OmegaIdentityReport {
  bool equal = false;
  UEAElement lhs;
  UEAElement rhs;
  size_t lhs_terms = 0;
  size_t rhs_terms = 0;
};

// Expands both sides of the four-fold differentiator product identity
//   sum_{i,j} (-1)^{i+j} C(r,i) C(r,j)
//       ({Omega^(r,h)_{k-ih, s-jh}, Omega^(r,h)_{q+ih, p+jh}}
//      - {Omega^(r,h)_{k-ih, q-jh}, Omega^(r,h)_{s+ih, p+jh}})
//   = mu.(q-s) mu.(p-k+2rh) Omega^(4r,h)_{k+p+2rh, s+q-2rh}
// in PBW normal form and compares them.  Requires r >= 2.
OmegaIdentityReport verify_omega_identity(int r, const LatticePoint& k, const LatticePoint& s,
                                          const LatticePoint& p, const LatticePoint& q,
                                          const LatticePoint& h);

}  // namespace solenoid
