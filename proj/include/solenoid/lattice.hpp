#pragma once

// Z^n index arithmetic.  Lattice points index the root spaces of the
// solenoidal algebra through the linear form mu_dot; lex_compare is the
// generator order used by the PBW engine.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "solenoid/scalar.hpp"

namespace solenoid {

class LatticePoint {
 public:
  LatticePoint() = default;
  explicit LatticePoint(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {}
  LatticePoint(std::initializer_list<std::int64_t> coords) : coords_(coords) {}

  static LatticePoint zero(int n) { return LatticePoint(std::vector<std::int64_t>(static_cast<size_t>(n), 0)); }
  static LatticePoint unit(int n, int i);

  int dim() const { return static_cast<int>(coords_.size()); }
  std::int64_t operator[](int i) const { return coords_[static_cast<size_t>(i)]; }
  const std::vector<std::int64_t>& coords() const { return coords_; }
  bool is_zero() const;

  LatticePoint operator-() const;
  LatticePoint& operator+=(const LatticePoint& rhs);
  LatticePoint& operator-=(const LatticePoint& rhs);
  friend LatticePoint operator+(LatticePoint lhs, const LatticePoint& rhs) { return lhs += rhs; }
  friend LatticePoint operator-(LatticePoint lhs, const LatticePoint& rhs) { return lhs -= rhs; }
  friend LatticePoint operator*(std::int64_t c, const LatticePoint& p);

  friend bool operator==(const LatticePoint& lhs, const LatticePoint& rhs) = default;
  friend std::strong_ordering operator<=>(const LatticePoint& lhs, const LatticePoint& rhs) {
    return lhs.coords_ <=> rhs.coords_;  // lexicographic
  }

  std::string str() const;                                        // "2,-3"
  static LatticePoint parse(std::string_view text, int expected_dim = -1);

 private:
  std::vector<std::int64_t> coords_;
};

// -1 / 0 / +1 under the lexicographic generator order.
int lex_compare(const LatticePoint& a, const LatticePoint& b);

// The linear form m |-> m1*mu1 + ... + mn*mun as an exact Scalar.
Scalar mu_dot(const LatticePoint& m);

// All points of [-K, K]^n in lexicographic order.
std::vector<LatticePoint> box_points(int n, int radius);

// All points of the product grid [lo, hi]^n in lexicographic order.
std::vector<LatticePoint> grid_points(int n, std::int64_t lo, std::int64_t hi);

}  // namespace solenoid
