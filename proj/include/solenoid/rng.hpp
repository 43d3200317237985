#pragma once

// Seeded random generators for property tests and suites.  All draws go
// through one mt19937_64 stream and avoid distribution classes, so a
// given seed replays the same values on every platform.

#include <cstdint>
#include <random>

#include "solenoid/combination.hpp"
#include "solenoid/uea.hpp"

namespace solenoid {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  Rational rational(int max_abs_num = 5, int max_den = 3) {
    Rational q(static_cast<long>(uniform(-max_abs_num, max_abs_num)),
               static_cast<long>(uniform(1, max_den)));
    q.canonicalize();
    return q;
  }

  Rational nonzero_rational(int max_abs_num = 5, int max_den = 3) {
    while (true) {
      Rational q = rational(max_abs_num, max_den);
      if (q != 0) return q;
    }
  }

  LatticePoint point(int n, int radius) {
    std::vector<std::int64_t> c(static_cast<size_t>(n));
    for (auto& v : c) v = uniform(-radius, radius);
    return LatticePoint(std::move(c));
  }

  LatticePoint nonzero_point(int n, int radius) {
    while (true) {
      LatticePoint p = point(n, radius);
      if (!p.is_zero()) return p;
    }
  }

  // Terms of small total degree, matching the degree profile of the
  // coefficient expressions that actually arise.
  Polynomial polynomial(int n, int max_terms = 3, int max_degree = 2) {
    Polynomial p = Polynomial::zero(n);
    const std::int64_t terms = uniform(1, max_terms);
    for (std::int64_t t = 0; t < terms; ++t) {
      Exponents e(static_cast<size_t>(n) + 2, 0);
      const std::int64_t degree = uniform(0, max_degree);
      for (std::int64_t d = 0; d < degree; ++d) {
        ++e[static_cast<size_t>(uniform(0, n + 1))];
      }
      Polynomial::TermMap tm;
      tm.emplace(std::move(e), nonzero_rational());
      p += Polynomial::from_terms(n, std::move(tm));
    }
    return p;
  }

  Polynomial nonzero_polynomial(int n, int max_terms = 3, int max_degree = 2) {
    while (true) {
      Polynomial p = polynomial(n, max_terms, max_degree);
      if (!p.is_zero()) return p;
    }
  }

  Scalar scalar(int n, int max_terms = 3, int max_degree = 2) {
    return Scalar::fraction(polynomial(n, max_terms, max_degree),
                            nonzero_polynomial(n, max_terms, max_degree));
  }

  Scalar nonzero_scalar(int n, int max_terms = 3, int max_degree = 2) {
    while (true) {
      Scalar s = scalar(n, max_terms, max_degree);
      if (!s.is_zero()) return s;
    }
  }

  template <class Combination>
  Combination combination(int n, int radius, int max_terms) {
    Combination out(n);
    const std::int64_t terms = uniform(1, max_terms);
    for (std::int64_t t = 0; t < terms; ++t) {
      out.add(point(n, radius), Scalar(nonzero_rational()));
    }
    return out;
  }

  AlgebraElement algebra_element(int n, int radius, int max_terms = 3) {
    return combination<AlgebraElement>(n, radius, max_terms);
  }

  TorusFunction torus_function(int n, int radius, int max_terms = 3) {
    return combination<TorusFunction>(n, radius, max_terms);
  }

  ModuleVector module_vector(int n, int radius, int max_terms = 3) {
    return combination<ModuleVector>(n, radius, max_terms);
  }

  Word word(int n, int radius, int length) {
    Word w;
    for (int i = 0; i < length; ++i) w.push_back(point(n, radius));
    return w;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace solenoid
