#pragma once

// Finite Scalar-weighted combinations of lattice-indexed basis symbols.
// The tag keeps torus functions, vector fields and module vectors from
// mixing accidentally; they share the same sparse-map mechanics.

#include <map>
#include <string>

#include "solenoid/lattice.hpp"

namespace solenoid {

template <class Tag>
class SparseCombination {
 public:
  using TermMap = std::map<LatticePoint, Scalar>;

  SparseCombination() = default;
  explicit SparseCombination(int n) : n_(n) {}

  static SparseCombination monomial(const LatticePoint& p, const Scalar& c = Scalar(1)) {
    SparseCombination r(p.dim());
    r.add(p, c);
    return r;
  }

  int context() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  Scalar coefficient(const LatticePoint& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  void add(const LatticePoint& p, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(p, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  SparseCombination operator-() const {
    SparseCombination r = *this;
    for (auto& [p, c] : r.terms_) c = -c;
    return r;
  }

  SparseCombination& operator+=(const SparseCombination& rhs) {
    for (const auto& [p, c] : rhs.terms_) add(p, c);
    return *this;
  }
  SparseCombination& operator-=(const SparseCombination& rhs) { return *this += -rhs; }

  friend SparseCombination operator+(SparseCombination lhs, const SparseCombination& rhs) {
    return lhs += rhs;
  }
  friend SparseCombination operator-(SparseCombination lhs, const SparseCombination& rhs) {
    return lhs -= rhs;
  }
  friend SparseCombination operator*(const Scalar& c, const SparseCombination& x) {
    SparseCombination r(x.n_);
    for (const auto& [p, v] : x.terms_) r.add(p, c * v);
    return r;
  }

  friend bool operator==(const SparseCombination& lhs, const SparseCombination& rhs) {
    return lhs.terms_ == rhs.terms_;
  }
  friend bool operator!=(const SparseCombination& lhs, const SparseCombination& rhs) {
    return !(lhs == rhs);
  }

  // "c1 * sym[p1] + ..." with a caller-chosen basis symbol.
  std::string str(const std::string& symbol) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [p, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += "(" + c.str() + ")*" + symbol + "[" + p.str() + "]";
    }
    return out;
  }

 private:
  int n_ = 0;
  TermMap terms_;
};

struct TorusTag;
struct VectorFieldTag;
struct ModuleTag;

// Elements of the Laurent-polynomial algebra A: sums of c * t^r.
using TorusFunction = SparseCombination<TorusTag>;
// Elements of the solenoidal algebra: sums of c * t^r d_mu.
using AlgebraElement = SparseCombination<VectorFieldTag>;
// Weight-module vectors: sums of c * v at lattice offsets.
using ModuleVector = SparseCombination<ModuleTag>;

}  // namespace solenoid
