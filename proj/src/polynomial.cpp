#include "solenoid/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "solenoid/errors.hpp"

namespace solenoid {

Rational parse_rational(const std::string& text) {
  try {
    Rational q(text);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw ParseError("not a rational number: '" + text + "'");
  }
}

std::string rational_str(const Rational& q) { return q.get_str(); }

Rational binomial(int m, int i) {
  if (i < 0 || i > m) return Rational(0);
  mpz_class value;
  mpz_bin_uiui(value.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(i));
  return Rational(value);
}

bool GradedLexGreater::operator()(const Exponents& x, const Exponents& y) const {
  const long dx = std::accumulate(x.begin(), x.end(), 0L);
  const long dy = std::accumulate(y.begin(), y.end(), 0L);
  if (dx != dy) return dx > dy;
  return x > y;
}

Polynomial Polynomial::zero(int n) {
  Polynomial p;
  p.n_ = n;
  return p;
}

Polynomial Polynomial::constant(int n, const Rational& value) {
  Polynomial p;
  p.n_ = n;
  if (value != 0) p.terms_.emplace(Exponents(static_cast<size_t>(n) + 2, 0), value);
  return p;
}

Polynomial Polynomial::variable(int n, int index) {
  if (index < 0 || index >= n + 2) throw std::logic_error("variable index out of range");
  Polynomial p;
  p.n_ = n;
  Exponents e(static_cast<size_t>(n) + 2, 0);
  e[static_cast<size_t>(index)] = 1;
  p.terms_.emplace(std::move(e), Rational(1));
  return p;
}

Polynomial Polynomial::from_terms(int n, TermMap terms) {
  Polynomial p;
  p.n_ = n;
  p.terms_ = std::move(terms);
  for (auto it = p.terms_.begin(); it != p.terms_.end();) {
    it = (it->second == 0) ? p.terms_.erase(it) : std::next(it);
  }
  return p;
}

bool Polynomial::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const Exponents& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](std::int32_t v) { return v == 0; });
}

bool Polynomial::is_one() const { return is_constant() && constant_value() == 1; }

Rational Polynomial::constant_value() const {
  if (terms_.empty()) return Rational(0);
  return terms_.begin()->second;
}

int Polynomial::total_degree() const {
  if (terms_.empty()) return -1;
  const Exponents& e = terms_.begin()->first;  // graded order: leading term has max degree
  return static_cast<int>(std::accumulate(e.begin(), e.end(), 0L));
}

int Polynomial::degree_in(int var) const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[static_cast<size_t>(var)]));
  return terms_.empty() ? 0 : d;
}

int Polynomial::unify_context(const Polynomial& a, const Polynomial& b) {
  if (a.n_ == b.n_) return a.n_;
  if (a.is_constant() && b.is_constant()) return std::max(a.n_, b.n_);
  if (a.is_constant()) return b.n_;
  if (b.is_constant()) return a.n_;
  throw std::logic_error("polynomial context mismatch");
}

Polynomial Polynomial::in_context(int n) const {
  if (n_ == n) return *this;
  if (!is_constant()) throw std::logic_error("cannot re-context a non-constant polynomial");
  return constant(n, constant_value());
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c == 0) return zero(n_);
  Polynomial r = *this;
  for (auto& [e, v] : r.terms_) v *= c;
  return r;
}

Polynomial Polynomial::substituted(const std::map<int, Rational>& bindings) const {
  Polynomial r = zero(n_);
  for (const auto& [e, c] : terms_) {
    Rational coeff = c;
    Exponents reduced = e;
    for (const auto& [var, value] : bindings) {
      const auto slot = static_cast<size_t>(var);
      if (slot >= e.size()) throw std::logic_error("binding index out of range");
      for (std::int32_t k = 0; k < e[slot]; ++k) coeff *= value;
      reduced[slot] = 0;
    }
    if (coeff == 0) continue;
    auto [it, inserted] = r.terms_.emplace(std::move(reduced), coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) r.terms_.erase(it);
    }
  }
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [e, v] : r.terms_) v = -v;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  const int n = unify_context(*this, rhs);
  *this = in_context(n);
  const Polynomial other = rhs.in_context(n);
  for (const auto& [e, c] : other.terms_) {
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) { return *this += -rhs; }

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  const int n = Polynomial::unify_context(lhs, rhs);
  const Polynomial a = lhs.in_context(n);
  const Polynomial b = rhs.in_context(n);
  Polynomial r = Polynomial::zero(n);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e(ea.size());
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      const Rational c = ca * cb;
      auto [it, inserted] = r.terms_.emplace(std::move(e), c);
      if (!inserted) {
        it->second += c;
        if (it->second == 0) r.terms_.erase(it);
      }
    }
  }
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

bool operator==(const Polynomial& lhs, const Polynomial& rhs) {
  if (lhs.n_ == rhs.n_) return lhs.terms_ == rhs.terms_;
  if (lhs.is_constant() && rhs.is_constant()) return lhs.constant_value() == rhs.constant_value();
  return false;  // different contexts, at least one non-constant
}

namespace {

bool monomial_divides(const Exponents& d, const Exponents& x) {
  for (size_t i = 0; i < d.size(); ++i) {
    if (d[i] > x[i]) return false;
  }
  return true;
}

Polynomial times_monomial(const Polynomial& p, const Exponents& e, const Rational& c) {
  Polynomial::TermMap out;
  for (const auto& [pe, pc] : p.terms()) {
    Exponents sum(pe.size());
    for (size_t i = 0; i < sum.size(); ++i) sum[i] = pe[i] + e[i];
    out.emplace(std::move(sum), pc * c);
  }
  return Polynomial::from_terms(p.context(), std::move(out));
}

// --- gcd machinery over Z[m1..mn, a, b] -------------------------------
//
// Classic content / primitive-part recursion with a primitive pseudo-
// remainder sequence.  All helpers below require integer coefficients.

int main_variable(const Polynomial& a, const Polynomial& b) {
  const int vars = a.context() + 2;
  for (int v = vars - 1; v >= 0; --v) {
    if (a.degree_in(v) > 0 || b.degree_in(v) > 0) return v;
  }
  return -1;
}

// Univariate view in v: degree -> coefficient polynomial (v-slot zeroed).
std::map<int, Polynomial> coefficients_in(const Polynomial& p, int v) {
  std::map<int, Polynomial::TermMap> groups;
  for (const auto& [e, c] : p.terms()) {
    Exponents stripped = e;
    const int d = stripped[static_cast<size_t>(v)];
    stripped[static_cast<size_t>(v)] = 0;
    groups[d].emplace(std::move(stripped), c);
  }
  std::map<int, Polynomial> out;
  for (auto& [d, tm] : groups) out.emplace(d, Polynomial::from_terms(p.context(), std::move(tm)));
  return out;
}

Polynomial sign_normalized(const Polynomial& p) {
  if (p.is_zero()) return p;
  return (p.terms().begin()->second < 0) ? -p : p;
}

Polynomial gcd_integer(const Polynomial& A, const Polynomial& B);

Polynomial content_in(const Polynomial& p, int v) {
  Polynomial g = Polynomial::zero(p.context());
  for (const auto& [d, coeff] : coefficients_in(p, v)) g = gcd_integer(g, coeff);
  return g;
}

Polynomial pseudo_remainder(const Polynomial& P, const Polynomial& Q, int v) {
  const auto qc = coefficients_in(Q, v);
  const int dq = qc.rbegin()->first;
  if (dq == 0) return Polynomial::zero(P.context());
  const Polynomial lq = qc.rbegin()->second;
  Polynomial r = P;
  while (!r.is_zero()) {
    const auto rc = coefficients_in(r, v);
    const int dr = rc.rbegin()->first;
    if (dr < dq) break;
    const Polynomial lr = rc.rbegin()->second;
    Exponents shift(static_cast<size_t>(P.context()) + 2, 0);
    shift[static_cast<size_t>(v)] = dr - dq;
    r = lq * r - times_monomial(lr * Q, shift, Rational(1));
  }
  return r;
}

Polynomial gcd_integer(const Polynomial& A, const Polynomial& B) {
  if (A.is_zero()) return sign_normalized(B);
  if (B.is_zero()) return sign_normalized(A);
  const int v = main_variable(A, B);
  if (v < 0) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), A.constant_value().get_num_mpz_t(), B.constant_value().get_num_mpz_t());
    return Polynomial::constant(A.context(), Rational(g));
  }
  if (A.degree_in(v) == 0) return gcd_integer(A, content_in(B, v));
  if (B.degree_in(v) == 0) return gcd_integer(content_in(A, v), B);

  const Polynomial cont_a = content_in(A, v);
  const Polynomial cont_b = content_in(B, v);
  Polynomial P = *Polynomial::divide_exact(A, cont_a);
  Polynomial Q = *Polynomial::divide_exact(B, cont_b);
  const Polynomial c = gcd_integer(cont_a, cont_b);

  if (P.degree_in(v) < Q.degree_in(v)) std::swap(P, Q);
  while (!Q.is_zero()) {
    const Polynomial R = pseudo_remainder(P, Q, v);
    P = Q;
    Q = R.is_zero() ? R : *Polynomial::divide_exact(R, content_in(R, v));
  }
  return sign_normalized(c * P);
}

}  // namespace

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) return std::nullopt;
  const int n = unify_context(num, den);
  const Polynomial d = den.in_context(n);
  Polynomial r = num.in_context(n);
  Polynomial q = zero(n);
  const auto& lt_den = *d.terms_.begin();
  while (!r.is_zero()) {
    const auto& lt_r = *r.terms_.begin();
    if (!monomial_divides(lt_den.first, lt_r.first)) return std::nullopt;
    Exponents e(lt_r.first.size());
    for (size_t i = 0; i < e.size(); ++i) e[i] = lt_r.first[i] - lt_den.first[i];
    const Rational c = lt_r.second / lt_den.second;
    r -= times_monomial(d, e, c);
    auto [it, inserted] = q.terms_.emplace(std::move(e), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) q.terms_.erase(it);
    }
  }
  return q;
}

Polynomial Polynomial::integer_primitive(Rational* factor) const {
  if (is_zero()) {
    if (factor) *factor = 1;
    return *this;
  }
  mpz_class den_lcm(1);
  for (const auto& [e, c] : terms_) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  mpz_class num_gcd(0);
  for (const auto& [e, c] : terms_) {
    mpz_class scaled_num = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled_num.get_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);  // multiply by this to reach the primitive associate
  scale.canonicalize();
  if (terms_.begin()->second * scale < 0) scale = -scale;
  if (factor) *factor = 1 / scale;
  return scaled(scale);
}

Polynomial Polynomial::gcd(const Polynomial& x, const Polynomial& y) {
  if (x.is_zero() && y.is_zero()) return zero(unify_context(x, y));
  if (x.is_zero()) return y.integer_primitive();
  if (y.is_zero()) return x.integer_primitive();
  const Polynomial g = gcd_integer(x.integer_primitive(), y.integer_primitive());
  return g.integer_primitive();
}

std::string variable_name(int n, int index) {
  if (index < n) return "m" + std::to_string(index + 1);
  if (index == n) return "a";
  if (index == n + 1) return "b";
  throw std::logic_error("variable index out of range");
}

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    std::string vars;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += variable_name(n_, static_cast<int>(i));
      if (e[i] > 1) vars += "^" + std::to_string(e[i]);
    }
    if (first) {
      if (negative) out << "-";
      first = false;
    } else {
      out << (negative ? " - " : " + ");
    }
    if (vars.empty()) {
      out << rational_str(mag);
    } else if (mag == 1) {
      out << vars;
    } else {
      out << rational_str(mag) << "*" << vars;
    }
  }
  return out.str();
}

}  // namespace solenoid
