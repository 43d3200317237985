#pragma once

// Elements of the coefficient field Q(m1..mn, a, b) as reduced fractions
// of sparse polynomials.  The representation is canonical: numerator and
// denominator are coprime and the denominator is integer-primitive with a
// positive leading coefficient, so equality is representation identity
// and zero-testing is decidable.

#include <map>
#include <string>
#include <string_view>

#include "solenoid/polynomial.hpp"

namespace solenoid {

class Scalar {
 public:
  Scalar() : num_(), den_(Polynomial::constant(0, 1)) {}
  Scalar(int value) : Scalar(Rational(value)) {}  // NOLINT: implicit by design
  Scalar(const Rational& value)                   // NOLINT: implicit by design
      : num_(Polynomial::constant(0, value)), den_(Polynomial::constant(0, 1)) {}
  explicit Scalar(const Polynomial& p) : num_(p), den_(Polynomial::constant(p.context(), 1)) {}

  static Scalar fraction(const Polynomial& num, const Polynomial& den);
  static Scalar mu(int n, int i) { return Scalar(Polynomial::mu(n, i)); }
  static Scalar alpha(int n) { return Scalar(Polynomial::alpha(n)); }
  static Scalar beta(int n) { return Scalar(Polynomial::beta(n)); }

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  int context() const { return num_.context(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);  // throws DivisionByZero

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }
  friend bool operator==(const Scalar& lhs, const Scalar& rhs) {
    return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
  }
  friend bool operator!=(const Scalar& lhs, const Scalar& rhs) { return !(lhs == rhs); }

  // Substitution homomorphism; unbound indeterminates stay symbolic.
  // Throws SpecializationPole when the denominator vanishes.
  Scalar specialized(const std::map<int, Rational>& bindings) const;

  std::string str() const;

 private:
  void canonicalize();
  void normalize_scale();

  Polynomial num_;
  Polynomial den_;
};

// Parses the canonical syntax: rationals, identifiers m1..mn / a / b,
// binary + - * /, unary -, ^ with a non-negative integer exponent, and
// parentheses.  Context n fixes which m_i are admissible.
Scalar parse_scalar(std::string_view text, int n);

}  // namespace solenoid
