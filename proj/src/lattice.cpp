#include "solenoid/lattice.hpp"

#include <algorithm>
#include <stdexcept>

#include "solenoid/errors.hpp"

namespace solenoid {

LatticePoint LatticePoint::unit(int n, int i) {
  if (i < 0 || i >= n) throw std::logic_error("unit vector index out of range");
  std::vector<std::int64_t> c(static_cast<size_t>(n), 0);
  c[static_cast<size_t>(i)] = 1;
  return LatticePoint(std::move(c));
}

bool LatticePoint::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](std::int64_t v) { return v == 0; });
}

LatticePoint LatticePoint::operator-() const {
  LatticePoint r = *this;
  for (auto& v : r.coords_) v = -v;
  return r;
}

LatticePoint& LatticePoint::operator+=(const LatticePoint& rhs) {
  if (dim() != rhs.dim()) throw std::logic_error("lattice dimension mismatch");
  for (size_t i = 0; i < coords_.size(); ++i) coords_[i] += rhs.coords_[i];
  return *this;
}

LatticePoint& LatticePoint::operator-=(const LatticePoint& rhs) { return *this += -rhs; }

LatticePoint operator*(std::int64_t c, const LatticePoint& p) {
  LatticePoint r = p;
  for (auto& v : r.coords_) v *= c;
  return r;
}

std::string LatticePoint::str() const {
  std::string out;
  for (size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(coords_[i]);
  }
  return out;
}

LatticePoint LatticePoint::parse(std::string_view text, int expected_dim) {
  std::vector<std::int64_t> coords;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    const std::string_view piece = text.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
    try {
      size_t used = 0;
      coords.push_back(std::stoll(std::string(piece), &used));
      if (used != piece.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw ParseError("bad lattice point component '" + std::string(piece) + "'");
    }
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (expected_dim >= 0 && static_cast<int>(coords.size()) != expected_dim) {
    throw ParseError("lattice point '" + std::string(text) + "' has dimension " +
                     std::to_string(coords.size()) + ", expected " + std::to_string(expected_dim));
  }
  return LatticePoint(std::move(coords));
}

int lex_compare(const LatticePoint& a, const LatticePoint& b) {
  const auto order = a <=> b;
  if (order < 0) return -1;
  if (order > 0) return 1;
  return 0;
}

Scalar mu_dot(const LatticePoint& m) {
  const int n = m.dim();
  Polynomial p = Polynomial::zero(n);
  for (int i = 0; i < n; ++i) {
    if (m[i] != 0) p += Polynomial::mu(n, i).scaled(Rational(static_cast<long>(m[i])));
  }
  return Scalar(p);
}

std::vector<LatticePoint> box_points(int n, int radius) {
  return grid_points(n, -static_cast<std::int64_t>(radius), static_cast<std::int64_t>(radius));
}

std::vector<LatticePoint> grid_points(int n, std::int64_t lo, std::int64_t hi) {
  std::vector<LatticePoint> out;
  std::vector<std::int64_t> current(static_cast<size_t>(n), lo);
  while (true) {
    out.emplace_back(current);
    int axis = n - 1;
    while (axis >= 0 && current[static_cast<size_t>(axis)] == hi) {
      current[static_cast<size_t>(axis)] = lo;
      --axis;
    }
    if (axis < 0) break;
    ++current[static_cast<size_t>(axis)];
  }
  return out;
}

}  // namespace solenoid
