#pragma once

// Sparse multivariate polynomials over Q in the indeterminates
// m1..mn, a, b.  A polynomial carries its context n (the number of
// direction components m_i); exponent vectors have length n + 2 with
// slot n holding the exponent of a and slot n + 1 the exponent of b.
//
// Terms are kept under a graded-lex order with the largest term first,
// so begin() is the leading term.  Constants are context-agnostic: they
// promote silently to whatever context the other operand lives in.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace solenoid {

using Rational = mpq_class;

Rational parse_rational(const std::string& text);
std::string rational_str(const Rational& q);
Rational binomial(int m, int i);

using Exponents = std::vector<std::int32_t>;

// Variable slots within a context-n exponent vector.
inline int mu_index(int /*n*/, int i) { return i; }
inline int alpha_index(int n) { return n; }
inline int beta_index(int n) { return n + 1; }

struct GradedLexGreater {
  bool operator()(const Exponents& x, const Exponents& y) const;
};

class Polynomial {
 public:
  using TermMap = std::map<Exponents, Rational, GradedLexGreater>;

  Polynomial() = default;  // the zero polynomial, constant context

  static Polynomial zero(int n);
  static Polynomial constant(int n, const Rational& value);
  static Polynomial variable(int n, int index);
  static Polynomial mu(int n, int i) { return variable(n, mu_index(n, i)); }
  static Polynomial alpha(int n) { return variable(n, alpha_index(n)); }
  static Polynomial beta(int n) { return variable(n, beta_index(n)); }
  static Polynomial from_terms(int n, TermMap terms);

  int context() const { return n_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  Rational constant_value() const;  // requires is_constant()

  int total_degree() const;  // -1 for the zero polynomial
  int degree_in(int var) const;

  Polynomial in_context(int n) const;
  Polynomial scaled(const Rational& c) const;
  Polynomial substituted(const std::map<int, Rational>& bindings) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  friend bool operator==(const Polynomial& lhs, const Polynomial& rhs);
  friend bool operator!=(const Polynomial& lhs, const Polynomial& rhs) { return !(lhs == rhs); }

  // Quotient when den divides exactly, std::nullopt otherwise.
  static std::optional<Polynomial> divide_exact(const Polynomial& num, const Polynomial& den);

  // Unit-normalized gcd: integer coefficients, unit content, positive
  // leading coefficient.  gcd(0, 0) = 0.
  static Polynomial gcd(const Polynomial& x, const Polynomial& y);

  // The integer-primitive associate: integer coefficients, unit content,
  // positive leading coefficient.  *this == *factor * result.
  Polynomial integer_primitive(Rational* factor = nullptr) const;

  std::string str() const;

 private:
  static int unify_context(const Polynomial& a, const Polynomial& b);

  int n_ = 0;
  TermMap terms_;
};

std::string variable_name(int n, int index);

}  // namespace solenoid
