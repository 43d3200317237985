#include "solenoid/modules.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "solenoid/errors.hpp"

namespace solenoid {

ModuleParams ModuleParams::tensor(int n, std::optional<Rational> alpha, BetaMode beta_mode) {
  const Scalar a = alpha ? Scalar(*alpha) : Scalar::alpha(n);
  const Scalar b = (beta_mode == BetaMode::Generic) ? Scalar::beta(n) : Scalar(0);
  return ModuleParams(n, ModuleKind::Tensor, a, b, beta_mode);
}

ModuleParams ModuleParams::function_quotient(int n) {
  return ModuleParams(n, ModuleKind::FunctionQuotient, Scalar(0), Scalar(0), BetaMode::Integral);
}

ModuleParams ModuleParams::trivial(int n) {
  return ModuleParams(n, ModuleKind::Trivial, Scalar(0), Scalar(0), BetaMode::Integral);
}

bool ModuleParams::valid_offset(const LatticePoint& m) const {
  switch (kind_) {
    case ModuleKind::Tensor:
      return true;
    case ModuleKind::FunctionQuotient:
      return !m.is_zero();
    case ModuleKind::Trivial:
      return m.is_zero();
  }
  return false;
}

std::string ModuleParams::describe() const {
  switch (kind_) {
    case ModuleKind::FunctionQuotient:
      return "Tbar(0,0)";
    case ModuleKind::Trivial:
      return "trivial";
    case ModuleKind::Tensor:
      break;
  }
  const std::string a = alpha_.str();
  const std::string b = (beta_mode_ == BetaMode::Generic) ? "b" : "0";
  return "T(" + a + "," + b + ")";
}

ModuleVector basis_vector(const LatticePoint& offset, const Scalar& c) {
  return ModuleVector::monomial(offset, c);
}

ModuleVector tensor_act(const LatticePoint& k, const ModuleVector& v, const ModuleParams& params) {
  ModuleVector out(params.n());
  switch (params.kind()) {
    case ModuleKind::Trivial:
      return out;
    case ModuleKind::Tensor:
      for (const auto& [m, c] : v.terms()) {
        out.add(m + k, c * (params.weight(m) + params.alpha() * mu_dot(k)));
      }
      return out;
    case ModuleKind::FunctionQuotient:
      for (const auto& [m, c] : v.terms()) {
        const LatticePoint target = m + k;
        if (target.is_zero()) continue;  // lands on the collapsed constants line
        out.add(target, c * mu_dot(m));
      }
      return out;
  }
  return out;
}

ModuleVector algebra_act(const AlgebraElement& x, const ModuleVector& v, const ModuleParams& params) {
  ModuleVector out(params.n());
  for (const auto& [k, c] : x.terms()) out += c * tensor_act(k, v, params);
  return out;
}

ModuleVector uea_act(const UEAElement& u, const ModuleVector& v, const ModuleParams& params) {
  ModuleVector out(params.n());
  for (const auto& [word, c] : u.terms()) {
    ModuleVector acc = v;
    for (auto it = word.rbegin(); it != word.rend(); ++it) acc = tensor_act(*it, acc, params);
    out += c * acc;
  }
  return out;
}

namespace {

// Probe offsets whose vanishing certifies vanishing at every offset.
// A word of length L acts with a coefficient of degree <= L in each
// offset coordinate, so a product grid with L+1 points per coordinate
// decides vanishing.  The quotient module needs the grid kept away from
// offset 0 and from the offsets whose image lands on the collapsed line.
std::vector<LatticePoint> annihilation_probe_grid(const UEAElement& u, const ModuleParams& params) {
  const int n = params.n();
  std::int64_t max_len = 0;
  for (const auto& [word, c] : u.terms()) {
    max_len = std::max(max_len, static_cast<std::int64_t>(word.size()));
  }
  switch (params.kind()) {
    case ModuleKind::Trivial:
      return {LatticePoint::zero(n)};
    case ModuleKind::Tensor:
      return grid_points(n, 0, max_len);
    case ModuleKind::FunctionQuotient: {
      std::set<LatticePoint> dropped;
      for (const auto& [word, c] : u.terms()) {
        LatticePoint total = LatticePoint::zero(n);
        for (const auto& p : word) total += p;
        dropped.insert(-total);
      }
      for (std::int64_t base = 1;; base += max_len + 1) {
        const auto grid = grid_points(n, base, base + max_len);
        const bool clean = std::none_of(grid.begin(), grid.end(), [&](const LatticePoint& p) {
          return dropped.count(p) > 0;
        });
        if (clean) return grid;
      }
    }
  }
  return {};
}

}  // namespace

bool annihilates_module(const UEAElement& u, const ModuleParams& params) {
  for (const auto& p : annihilation_probe_grid(u, params)) {
    if (!uea_act(u, basis_vector(p), params).is_zero()) return false;
  }
  return true;
}

std::optional<int> min_annihilation_order(const LatticePoint& h, const LatticePoint& k,
                                          const LatticePoint& s, const ModuleParams& params,
                                          int m_max) {
  if (h.is_zero()) {
    throw ConfigError("annihilation-order search requires a nonzero step h");
  }
  for (int m = 0; m <= m_max; ++m) {
    if (annihilates_module(differentiator(m, h, k, s), params)) return m;
  }
  return std::nullopt;
}

ModuleVector theta_map(const ModuleVector& v, const ModuleParams& domain) {
  if (domain.kind() != ModuleKind::Tensor || !domain.alpha().is_zero()) {
    throw ConfigError("theta is defined on T(0, beta)");
  }
  ModuleVector out(domain.n());
  for (const auto& [m, c] : v.terms()) out.add(m, c * domain.weight(m));
  return out;
}

WindowStructureReport window_structure(const ModuleParams& params, int window_radius) {
  if (window_radius < 2) throw ConfigError("window radius must be at least 2");
  const int n = params.n();

  std::vector<LatticePoint> window;
  for (const auto& m : box_points(n, window_radius)) {
    if (params.valid_offset(m)) window.push_back(m);
  }
  std::map<LatticePoint, size_t> index;
  for (size_t i = 0; i < window.size(); ++i) index.emplace(window[i], i);

  const auto generators = box_points(n, window_radius);
  std::vector<std::vector<size_t>> edges(window.size());
  for (size_t i = 0; i < window.size(); ++i) {
    const ModuleVector v = basis_vector(window[i]);
    for (const auto& k : generators) {
      if (k.is_zero()) continue;
      auto target = index.find(window[i] + k);
      if (target == index.end()) continue;
      if (!tensor_act(k, v, params).is_zero()) edges[i].push_back(target->second);
    }
  }

  WindowStructureReport report;
  report.window = window;
  std::set<std::vector<LatticePoint>> proper;
  report.fully_cyclic = true;
  for (size_t start = 0; start < window.size(); ++start) {
    std::vector<bool> seen(window.size(), false);
    std::vector<size_t> stack{start};
    seen[start] = true;
    size_t count = 0;
    while (!stack.empty()) {
      const size_t at = stack.back();
      stack.pop_back();
      ++count;
      for (size_t next : edges[at]) {
        if (!seen[next]) {
          seen[next] = true;
          stack.push_back(next);
        }
      }
    }
    if (count == window.size()) {
      report.cyclic_offsets.push_back(window[start]);
    } else {
      report.fully_cyclic = false;
      std::vector<LatticePoint> closure;
      for (size_t i = 0; i < window.size(); ++i) {
        if (seen[i]) closure.push_back(window[i]);
      }
      proper.insert(std::move(closure));
    }
  }
  report.invariant_subsets.assign(proper.begin(), proper.end());
  return report;
}

}  // namespace solenoid
