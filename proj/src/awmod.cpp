#include "solenoid/awmod.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "solenoid/errors.hpp"

namespace solenoid {

namespace {

std::int64_t multi_index_total(const LatticePoint& k) {
  std::int64_t total = 0;
  for (int i = 0; i < k.dim(); ++i) total += k[i];
  return total;
}

Rational integer_power(std::int64_t base, std::int64_t exp) {
  Rational r(1);
  for (std::int64_t i = 0; i < exp; ++i) r *= Rational(static_cast<long>(base));
  return r;
}

Rational factorial(std::int64_t k) {
  Rational r(1);
  for (std::int64_t i = 2; i <= k; ++i) r *= Rational(static_cast<long>(i));
  return r;
}

// s^k / k! for a lattice point s and a multi-index k.
Rational monomial_weight(const LatticePoint& s, const LatticePoint& k) {
  Rational r(1);
  for (int i = 0; i < k.dim(); ++i) {
    r *= integer_power(s[i], k[i]) / factorial(k[i]);
  }
  return r;
}

MatrixS nilpotent_block(int d) {
  MatrixS m = zero_matrix(d, d);
  for (int i = 0; i + 1 < d; ++i) m(i, i + 1) = Scalar(1);
  return m;
}

JetRep degree_one_family(int n, int dim, bool with_nilpotent) {
  JetRep rep(n, dim, 1);
  const MatrixS id = identity_matrix(dim);
  const MatrixS nil = nilpotent_block(dim);
  for (int i = 0; i < n; ++i) {
    const Scalar mi = Scalar::mu(n, i);
    MatrixS value = (Scalar::alpha(n) * mi) * id;
    if (with_nilpotent) value += mi * nil;
    rep.set(LatticePoint::unit(n, i), value);
  }
  return rep;
}

}  // namespace

void JetRep::set(const LatticePoint& k, MatrixS value) {
  if (k.dim() != n_) throw InvalidRep("multi-index dimension mismatch");
  const std::int64_t total = multi_index_total(k);
  if (total < 1 || total > degree_bound_) {
    throw InvalidRep("multi-index " + k.str() + " outside 1 <= |k| <= " +
                     std::to_string(degree_bound_));
  }
  for (int i = 0; i < n_; ++i) {
    if (k[i] < 0) throw InvalidRep("multi-index " + k.str() + " has a negative entry");
  }
  if (value.rows() != dim_ || value.cols() != dim_) {
    throw InvalidRep("matrix for " + k.str() + " is not " + std::to_string(dim_) + "x" +
                     std::to_string(dim_));
  }
  if (matrix_is_zero(value)) {
    rho_.erase(k);
  } else {
    rho_[k] = std::move(value);
  }
}

MatrixS JetRep::rho(const LatticePoint& k) const {
  auto it = rho_.find(k);
  return it == rho_.end() ? zero_matrix(dim_, dim_) : it->second;
}

void JetRep::validate() const {
  for (const auto& [k, rk] : rho_) {
    for (const auto& [r, rr] : rho_) {
      const MatrixS lhs = rk * rr - rr * rk;
      MatrixS rhs = zero_matrix(dim_, dim_);
      for (int i = 0; i < n_; ++i) {
        const std::int64_t delta = r[i] - k[i];
        if (delta == 0) continue;
        const LatticePoint idx = k + r - LatticePoint::unit(n_, i);
        rhs += (Scalar::mu(n_, i) * Scalar(Rational(static_cast<long>(delta)))) * rho(idx);
      }
      if (!matrices_equal(lhs, rhs)) {
        throw InvalidRep("bracket relation fails for generators " + k.str() + " and " + r.str());
      }
    }
  }
}

JetRep JetRep::scalar_family(int n) { return degree_one_family(n, 1, false); }
JetRep JetRep::nilpotent_pair(int n) { return degree_one_family(n, 2, true); }
JetRep JetRep::jordan_triple(int n) { return degree_one_family(n, 3, true); }

JetRep JetRep::load(std::istream& in) {
  int n = -1, dim = -1, bound = -1;
  std::map<LatticePoint, std::vector<std::string>> blocks;
  LatticePoint current;
  bool in_block = false;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream words(line);
    std::string head;
    words >> head;
    if (head == "n" || head == "dim" || head == "degree_bound") {
      int value = -1;
      if (!(words >> value)) {
        throw ParseError("jet rep file line " + std::to_string(lineno) + ": malformed header");
      }
      (head == "n" ? n : head == "dim" ? dim : bound) = value;
    } else if (head == "end") {
      break;
    } else if (head == "rho") {
      if (n < 1 || dim < 1 || bound < 0) {
        throw ParseError("jet rep file: rho block before n/dim/degree_bound headers");
      }
      std::string idx;
      if (!(words >> idx)) {
        throw ParseError("jet rep file line " + std::to_string(lineno) + ": rho needs a multi-index");
      }
      current = LatticePoint::parse(idx, n);
      blocks[current];
      in_block = true;
    } else if (in_block) {
      std::string entry = head;
      auto& rows = blocks[current];
      do {
        rows.push_back(entry);
      } while (words >> entry);
    } else {
      throw ParseError("jet rep file line " + std::to_string(lineno) + ": unexpected '" + head + "'");
    }
  }
  if (n < 1 || dim < 1 || bound < 0) throw ParseError("jet rep file: missing n/dim/degree_bound");
  JetRep rep(n, dim, bound);
  for (const auto& [k, entries] : blocks) {
    if (entries.size() != static_cast<size_t>(dim) * static_cast<size_t>(dim)) {
      throw ParseError("jet rep block " + k.str() + " has " + std::to_string(entries.size()) +
                       " entries, expected " + std::to_string(dim * dim));
    }
    MatrixS m(dim, dim);
    for (int i = 0; i < dim; ++i) {
      for (int j = 0; j < dim; ++j) {
        m(i, j) = parse_scalar(entries[static_cast<size_t>(i * dim + j)], n);
      }
    }
    rep.set(k, std::move(m));
  }
  return rep;
}

JetRep JetRep::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open jet rep file '" + path + "'");
  return load(in);
}

void AWElement::add(const LatticePoint& m, const VectorS& u) {
  if (vector_is_zero(u)) return;
  auto [it, inserted] = terms_.emplace(m, u);
  if (!inserted) {
    it->second += u;
    if (vector_is_zero(it->second)) terms_.erase(it);
  }
}

AWElement AWElement::operator-() const {
  AWElement r(n_, dim_);
  for (const auto& [m, u] : terms_) r.terms_.emplace(m, -u);
  return r;
}

AWElement& AWElement::operator+=(const AWElement& rhs) {
  for (const auto& [m, u] : rhs.terms_) add(m, u);
  return *this;
}

AWElement& AWElement::operator-=(const AWElement& rhs) { return *this += -rhs; }

AWElement operator*(const Scalar& c, const AWElement& x) {
  AWElement r(x.n_, x.dim_);
  if (c.is_zero()) return r;
  for (const auto& [m, u] : x.terms_) r.add(m, c * u);
  return r;
}

AWModule::AWModule(JetRep rep, BetaMode beta_mode)
    : rep_(std::move(rep)),
      beta_(beta_mode == BetaMode::Generic ? Scalar::beta(rep_.n()) : Scalar(0)) {
  rep_.validate();
}

AWElement AWModule::basis(const LatticePoint& m, int fiber) const {
  AWElement e(n(), dim());
  VectorS u = zero_vector(dim());
  u(fiber) = Scalar(1);
  e.add(m, u);
  return e;
}

MatrixS AWModule::d_matrix(const LatticePoint& s) const {
  MatrixS d = beta_ * identity_matrix(dim());
  for (const auto& [k, value] : rep_.entries()) {
    const Rational w = monomial_weight(s, k);
    if (w != 0) d += Scalar(w) * value;
  }
  return d;
}

AWElement AWModule::act(const LatticePoint& s, const AWElement& v) const {
  const MatrixS d = d_matrix(s);
  AWElement out(n(), dim());
  for (const auto& [m, u] : v.terms()) {
    out.add(m + s, mu_dot(m) * u + d * u);
  }
  return out;
}

AWElement AWModule::act(const AlgebraElement& x, const AWElement& v) const {
  AWElement out(n(), dim());
  for (const auto& [s, c] : x.terms()) out += c * act(s, v);
  return out;
}

AWElement AWModule::a_act(const TorusFunction& f, const AWElement& v) const {
  AWElement out(n(), dim());
  for (const auto& [g, c] : f.terms()) {
    for (const auto& [m, u] : v.terms()) out.add(g + m, c * u);
  }
  return out;
}

MatrixS extract_d(const AWModule& mod, const LatticePoint& s) {
  MatrixS d(mod.dim(), mod.dim());
  for (int j = 0; j < mod.dim(); ++j) {
    const AWElement image = mod.act(s, mod.basis(LatticePoint::zero(mod.n()), j));
    VectorS column = zero_vector(mod.dim());
    for (const auto& [m, u] : image.terms()) {
      if (m == s) column = u;
    }
    for (int i = 0; i < mod.dim(); ++i) d(i, j) = column(i);
  }
  return d;
}

bool verify_deform(const AWModule& mod, const LatticePoint& s, const LatticePoint& m) {
  const MatrixS ds = extract_d(mod, s);
  const MatrixS dm = extract_d(mod, m);
  const MatrixS dsm = extract_d(mod, s + m);
  const MatrixS lhs = ds * dm - dm * ds;
  const MatrixS rhs = mu_dot(m) * (dsm - dm) - mu_dot(s) * (dsm - ds);
  return matrices_equal(lhs, rhs);
}

bool verify_compatibility(const AWModule& mod, const LatticePoint& s, const LatticePoint& g,
                          const AWElement& v) {
  const AlgebraElement x = vector_field(s);
  const TorusFunction f = torus_monomial(g);
  const AWElement lhs = mod.act(s, mod.a_act(f, v));
  const TorusFunction xf = derivation_action(x, f);
  const AWElement rhs = mod.a_act(xf, v) + mod.a_act(f, mod.act(s, v));
  return lhs == rhs;
}

bool verify_module_axiom(const AWModule& mod, const LatticePoint& s, const LatticePoint& m,
                         const AWElement& v) {
  const AWElement lhs = mod.act(s, mod.act(m, v)) - mod.act(m, mod.act(s, v));
  const AWElement rhs = mod.act(bracket(vector_field(s), vector_field(m)), v);
  return lhs == rhs;
}

void OperatorPolynomial::set_coefficient(const LatticePoint& k, MatrixS value) {
  if (matrix_is_zero(value)) {
    coeffs_.erase(k);
  } else {
    coeffs_[k] = std::move(value);
  }
}

MatrixS OperatorPolynomial::coefficient(const LatticePoint& k) const {
  auto it = coeffs_.find(k);
  return it == coeffs_.end() ? zero_matrix(dim_, dim_) : it->second;
}

MatrixS OperatorPolynomial::partial(const LatticePoint& k) const {
  Rational kf(1);
  for (int i = 0; i < k.dim(); ++i) kf *= factorial(k[i]);
  return Scalar(kf) * coefficient(k);
}

MatrixS OperatorPolynomial::eval(const LatticePoint& s) const {
  MatrixS out = zero_matrix(dim_, dim_);
  for (const auto& [k, value] : coeffs_) {
    Rational w(1);
    for (int i = 0; i < k.dim(); ++i) w *= integer_power(s[i], k[i]);
    if (w != 0) out += Scalar(w) * value;
  }
  return out;
}

namespace {

// Inverse Vandermonde on the given integer nodes, exact.
std::vector<std::vector<Rational>> inverse_vandermonde(const std::vector<std::int64_t>& nodes) {
  const size_t d = nodes.size();
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(2 * d, Rational(0)));
  for (size_t i = 0; i < d; ++i) {
    for (size_t j = 0; j < d; ++j) m[i][j] = integer_power(nodes[i], static_cast<std::int64_t>(j));
    m[i][d + i] = 1;
  }
  for (size_t col = 0; col < d; ++col) {
    size_t pivot = col;
    while (pivot < d && m[pivot][col] == 0) ++pivot;
    std::swap(m[col], m[pivot]);
    const Rational lead = m[col][col];
    for (auto& value : m[col]) value /= lead;
    for (size_t r = 0; r < d; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const Rational factor = m[r][col];
      for (size_t c = 0; c < 2 * d; ++c) m[r][c] -= factor * m[col][c];
    }
  }
  std::vector<std::vector<Rational>> inv(d, std::vector<Rational>(d));
  for (size_t i = 0; i < d; ++i) {
    for (size_t j = 0; j < d; ++j) inv[i][j] = m[i][d + j];
  }
  return inv;
}

}  // namespace

OperatorPolynomial fit_polynomial(const std::function<MatrixS(const LatticePoint&)>& sample,
                                  int n, int dim, int box_radius, int degree_cap) {
  if (degree_cap < 0 || 2 * box_radius + 1 <= degree_cap) {
    throw ConfigError("fit box side must exceed the degree cap");
  }
  std::vector<std::int64_t> nodes;
  for (int j = 0; j <= degree_cap; ++j) nodes.push_back(-box_radius + j);
  const auto weights = inverse_vandermonde(nodes);  // coeff_j = sum_t W[j][t] value(node_t)

  // Grid data keyed by mixed tuples: processed axes hold exponents,
  // pending axes hold node positions.
  std::map<std::vector<std::int64_t>, MatrixS> data;
  {
    std::vector<std::int64_t> tuple(static_cast<size_t>(n), 0);
    const std::function<void(int)> fill = [&](int axis) {
      if (axis == n) {
        data.emplace(tuple, sample(LatticePoint(tuple)));
        return;
      }
      for (const auto node : nodes) {
        tuple[static_cast<size_t>(axis)] = node;
        fill(axis + 1);
      }
    };
    fill(0);
  }

  for (int axis = 0; axis < n; ++axis) {
    std::map<std::vector<std::int64_t>, MatrixS> next;
    std::map<std::vector<std::int64_t>, std::vector<MatrixS>> grouped;
    for (const auto& [tuple, value] : data) {
      std::vector<std::int64_t> key = tuple;
      key[static_cast<size_t>(axis)] = 0;
      auto [it, inserted] = grouped.emplace(key, std::vector<MatrixS>{});
      if (inserted) it->second.resize(nodes.size(), zero_matrix(dim, dim));
      const auto slot = std::find(nodes.begin(), nodes.end(), tuple[static_cast<size_t>(axis)]);
      it->second[static_cast<size_t>(slot - nodes.begin())] = value;
    }
    for (const auto& [key, values] : grouped) {
      for (size_t j = 0; j < nodes.size(); ++j) {
        MatrixS coeff = zero_matrix(dim, dim);
        for (size_t t = 0; t < nodes.size(); ++t) {
          if (weights[j][t] != 0) coeff += Scalar(weights[j][t]) * values[t];
        }
        std::vector<std::int64_t> out_key = key;
        out_key[static_cast<size_t>(axis)] = static_cast<std::int64_t>(j);
        next.emplace(std::move(out_key), std::move(coeff));
      }
    }
    data = std::move(next);
  }

  OperatorPolynomial op(n, dim);
  for (const auto& [tuple, value] : data) op.set_coefficient(LatticePoint(tuple), value);

  for (const auto& s : box_points(n, box_radius + 2)) {
    if (!matrices_equal(op.eval(s), sample(s))) {
      throw FitMismatch("fitted polynomial disagrees with the samples at s = " + s.str());
    }
  }
  return op;
}

bool verify_jet_brackets(const OperatorPolynomial& op) {
  const int n = op.n();
  for (const auto& [k, ck] : op.coefficients()) {
    for (const auto& [r, cr] : op.coefficients()) {
      const MatrixS pk = op.partial(k);
      const MatrixS pr = op.partial(r);
      const MatrixS lhs = pk * pr - pr * pk;
      MatrixS rhs = zero_matrix(op.dim(), op.dim());
      if (!k.is_zero() && !r.is_zero()) {
        for (int i = 0; i < n; ++i) {
          const std::int64_t delta = r[i] - k[i];
          if (delta == 0) continue;
          rhs += (Scalar::mu(n, i) * Scalar(Rational(static_cast<long>(delta)))) *
                 op.partial(k + r - LatticePoint::unit(n, i));
        }
      }
      if (!matrices_equal(lhs, rhs)) return false;
    }
  }
  return true;
}

CommutantReport commutant_check(int n, int degree_bound) {
  if (degree_bound < 2) throw ConfigError("commutant check requires degree bound >= 2");

  // Basis of the truncation: multi-indices with 1 <= |k| <= degree_bound.
  std::vector<LatticePoint> basis;
  for (int total = 1; total <= degree_bound; ++total) {
    for (const auto& k : grid_points(n, 0, total)) {
      if (multi_index_total(k) == total) basis.push_back(k);
    }
  }
  std::map<LatticePoint, size_t> index;
  for (size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);

  const auto bracket_row = [&](const LatticePoint& k, const LatticePoint& r) {
    std::vector<Polynomial> row(basis.size(), Polynomial::zero(n));
    for (int i = 0; i < n; ++i) {
      const std::int64_t delta = r[i] - k[i];
      if (delta == 0) continue;
      const LatticePoint target = k + r - LatticePoint::unit(n, i);
      auto it = index.find(target);
      if (it == index.end()) continue;  // truncated away
      row[it->second] += Polynomial::mu(n, i).scaled(Rational(static_cast<long>(delta)));
    }
    return row;
  };

  CommutantReport report;
  report.truncation_dim = static_cast<int>(basis.size());

  // Basis slots holding the degree-0 generators x_j d_mu, with the
  // coordinate j each slot carries.
  std::vector<std::pair<size_t, int>> degree_one_slots;
  for (size_t i = 0; i < basis.size(); ++i) {
    if (multi_index_total(basis[i]) != 1) continue;
    for (int j = 0; j < n; ++j) {
      if (basis[i][j] == 1) degree_one_slots.emplace_back(i, j);
    }
  }

  std::vector<std::vector<Polynomial>> rows;
  std::vector<std::vector<Polynomial>> degree_zero_rows;
  report.degree_zero_in_hyperplane = true;
  for (size_t a = 0; a < basis.size(); ++a) {
    for (size_t b = a + 1; b < basis.size(); ++b) {
      auto row = bracket_row(basis[a], basis[b]);
      if (multi_index_total(basis[a]) == 1 && multi_index_total(basis[b]) == 1) {
        std::vector<Polynomial> head;
        Polynomial pairing = Polynomial::zero(n);
        for (const auto& [slot, coord] : degree_one_slots) {
          head.push_back(row[slot]);
          pairing += Polynomial::mu(n, coord) * row[slot];
        }
        if (!pairing.is_zero()) report.degree_zero_in_hyperplane = false;
        degree_zero_rows.push_back(std::move(head));
      }
      rows.push_back(std::move(row));
    }
  }

  report.commutant_rank = rank_fraction_free(std::move(rows));
  report.codimension = report.truncation_dim - report.commutant_rank;
  report.degree_zero_rank =
      degree_zero_rows.empty() ? 0 : rank_fraction_free(std::move(degree_zero_rows));
  report.degree_zero_matches_hyperplane =
      report.degree_zero_in_hyperplane && report.degree_zero_rank == n - 1;
  return report;
}

}  // namespace solenoid
