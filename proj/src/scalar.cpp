#include "solenoid/scalar.hpp"

#include <cctype>
#include <utility>

#include "solenoid/errors.hpp"

namespace solenoid {

Scalar Scalar::fraction(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw DivisionByZero();
  Scalar s;
  s.num_ = num;
  s.den_ = den;
  s.canonicalize();
  return s;
}

void Scalar::canonicalize() {
  if (num_.is_zero()) {
    const int n = std::max(num_.context(), den_.context());
    num_ = Polynomial::zero(n);
    den_ = Polynomial::constant(n, 1);
    return;
  }
  const Polynomial g = Polynomial::gcd(num_, den_);
  if (!g.is_one()) {
    num_ = *Polynomial::divide_exact(num_, g);
    den_ = *Polynomial::divide_exact(den_, g);
  }
  normalize_scale();
}

// Fixes the unit: the denominator becomes integer-primitive with a
// positive leading coefficient.  Requires num/den already coprime.
void Scalar::normalize_scale() {
  if (num_.is_zero()) {
    const int n = std::max(num_.context(), den_.context());
    num_ = Polynomial::zero(n);
    den_ = Polynomial::constant(n, 1);
    return;
  }
  Rational removed;
  den_ = den_.integer_primitive(&removed);
  num_ = num_.scaled(1 / removed);
  if (num_.context() != den_.context()) {
    const int n = std::max(num_.context(), den_.context());
    num_ = num_.in_context(n);
    den_ = den_.in_context(n);
  }
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = -r.num_;
  return r;
}

// The sum and product keep gcd arguments no larger than the operands:
// with both inputs reduced, gcd(ad + cb, bd) = gcd over the common part
// of the denominators only, and cross-cancellation reduces the product
// outright.  The final scaling pass restores the canonical unit.

Scalar& Scalar::operator+=(const Scalar& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  if (den_.is_one() && rhs.den_.is_one()) {
    num_ += rhs.num_;
    if (num_.is_zero()) return *this = Scalar(0);
    if (num_.context() != den_.context()) den_ = Polynomial::constant(num_.context(), 1);
    return *this;
  }
  const Polynomial g0 = Polynomial::gcd(den_, rhs.den_);
  if (g0.is_one()) {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ = den_ * rhs.den_;
  } else {
    const Polynomial db = *Polynomial::divide_exact(den_, g0);
    const Polynomial dd = *Polynomial::divide_exact(rhs.den_, g0);
    const Polynomial t = num_ * dd + rhs.num_ * db;
    const Polynomial g1 = Polynomial::gcd(t, g0);
    if (g1.is_one()) {
      num_ = t;
      den_ = db * rhs.den_;
    } else {
      num_ = *Polynomial::divide_exact(t, g1);
      den_ = db * *Polynomial::divide_exact(rhs.den_, g1);
    }
  }
  normalize_scale();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar& Scalar::operator*=(const Scalar& rhs) {
  if (is_zero() || rhs.is_zero()) return *this = Scalar(0);
  if (den_.is_one() && rhs.den_.is_one()) {
    num_ *= rhs.num_;
    if (num_.context() != den_.context()) den_ = Polynomial::constant(num_.context(), 1);
    return *this;
  }
  const Polynomial g1 = Polynomial::gcd(num_, rhs.den_);
  const Polynomial g2 = Polynomial::gcd(rhs.num_, den_);
  num_ = *Polynomial::divide_exact(num_, g1) * *Polynomial::divide_exact(rhs.num_, g2);
  den_ = *Polynomial::divide_exact(den_, g2) * *Polynomial::divide_exact(rhs.den_, g1);
  normalize_scale();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  if (rhs.is_zero()) throw DivisionByZero();
  Scalar inverse;
  inverse.num_ = rhs.den_;
  inverse.den_ = rhs.num_;
  inverse.normalize_scale();
  return *this *= inverse;
}

Scalar Scalar::specialized(const std::map<int, Rational>& bindings) const {
  const Polynomial num = num_.substituted(bindings);
  const Polynomial den = den_.substituted(bindings);
  if (den.is_zero()) {
    throw SpecializationPole("denominator " + den_.str() + " vanishes under the given bindings");
  }
  return fraction(num, den);
}

std::string Scalar::str() const {
  if (den_.is_one()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

// --- parser ------------------------------------------------------------

namespace {

class ScalarParser {
 public:
  ScalarParser(std::string_view text, int n) : text_(text), n_(n) {}

  Scalar parse() {
    Scalar value = expression();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return value;
  }

 private:
  Scalar expression() {
    Scalar value = term();
    while (true) {
      skip_ws();
      if (consume('+')) {
        value += term();
      } else if (consume('-')) {
        value -= term();
      } else {
        return value;
      }
    }
  }

  Scalar term() {
    Scalar value = factor();
    while (true) {
      skip_ws();
      if (consume('*')) {
        value *= factor();
      } else if (consume('/')) {
        value /= factor();
      } else {
        return value;
      }
    }
  }

  Scalar factor() {
    skip_ws();
    bool negate = false;
    while (consume('-')) {
      negate = !negate;
      skip_ws();
    }
    Scalar value = atom();
    skip_ws();
    if (consume('^')) {
      skip_ws();
      const long e = integer();
      if (e < 0) fail("negative exponent");
      Scalar p(1);
      for (long i = 0; i < e; ++i) p *= value;
      value = p;
    }
    return negate ? -value : value;
  }

  Scalar atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Scalar value = expression();
      skip_ws();
      if (!consume(')')) fail("expected ')'");
      return value;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Scalar(Rational(integer()));
    if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
    fail(std::string("unexpected character '") + c + "'");
  }

  Scalar identifier() {
    const size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])))) {
      ++pos_;
    }
    const std::string name(text_.substr(start, pos_ - start));
    if (name == "a") return Scalar::alpha(n_);
    if (name == "b") return Scalar::beta(n_);
    if (name.size() >= 2 && name[0] == 'm') {
      int idx = 0;
      for (size_t i = 1; i < name.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(name[i]))) fail("unknown identifier '" + name + "'");
        idx = idx * 10 + (name[i] - '0');
      }
      if (idx < 1 || idx > n_) fail("m" + std::to_string(idx) + " out of range for n=" + std::to_string(n_));
      return Scalar::mu(n_, idx - 1);
    }
    fail("unknown identifier '" + name + "'");
  }

  long integer() {
    skip_ws();
    const size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected integer");
    return std::stol(std::string(text_.substr(start, pos_ - start)));
  }

  bool consume(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& why) {
    throw ParseError("scalar syntax error at offset " + std::to_string(pos_) + ": " + why);
  }

  std::string_view text_;
  int n_;
  size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(std::string_view text, int n) { return ScalarParser(text, n).parse(); }

}  // namespace solenoid
