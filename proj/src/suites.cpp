#include "solenoid/suites.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "solenoid/awmod.hpp"
#include "solenoid/cover.hpp"
#include "solenoid/errors.hpp"
#include "solenoid/modules.hpp"
#include "solenoid/rng.hpp"
#include "solenoid/solalg.hpp"
#include "solenoid/uea.hpp"

namespace solenoid {

namespace {

const std::vector<std::string> kSuiteNames = {
    "jacobi",     "omega",         "annihilation", "tensor-structure",
    "aw-calculus", "jet-commutant", "cover-rank",   "all",
};

std::string points_str(const std::vector<LatticePoint>& pts, size_t limit = 8) {
  std::string out = "{";
  for (size_t i = 0; i < pts.size() && i < limit; ++i) {
    if (i) out += "; ";
    out += pts[i].str();
  }
  if (pts.size() > limit) out += "; ...";
  return out + "}";
}

nlohmann::json base_inputs(const RunConfig& config) {
  nlohmann::json j;
  j["n"] = config.n;
  j["seed"] = config.seed;
  return j;
}

void push(Report& report, std::string name, nlohmann::json inputs, bool pass,
          std::string witness) {
  report.append(Check{std::move(name), std::move(inputs), pass, std::move(witness)});
}

ModuleParams configured_tensor(const RunConfig& config) {
  const BetaMode mode = config.beta ? BetaMode::Integral : BetaMode::Generic;
  return ModuleParams::tensor(config.n, config.alpha, mode);
}

// --- jacobi --------------------------------------------------------------

void suite_jacobi(const RunConfig& config, Report& report) {
  Rng rng(config.seed);
  const int n = config.n;
  const int count = 40;

  int anti_ok = 0;
  std::string anti_witness;
  for (int i = 0; i < count; ++i) {
    const AlgebraElement x = rng.algebra_element(n, 2);
    const AlgebraElement y = rng.algebra_element(n, 2);
    if ((bracket(x, y) + bracket(y, x)).is_zero()) {
      ++anti_ok;
    } else if (anti_witness.empty()) {
      anti_witness = "x = " + x.str("e") + ", y = " + y.str("e");
    }
  }
  push(report, "jacobi/001_antisymmetry", base_inputs(config), anti_ok == count,
       anti_ok == count ? std::to_string(count) + "/" + std::to_string(count) + " pairs exact"
                        : anti_witness);

  int jac_ok = 0;
  std::string jac_witness;
  for (int i = 0; i < count; ++i) {
    const AlgebraElement x = rng.algebra_element(n, 2);
    const AlgebraElement y = rng.algebra_element(n, 2);
    const AlgebraElement z = rng.algebra_element(n, 2);
    const AlgebraElement sum =
        bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y));
    if (sum.is_zero()) {
      ++jac_ok;
    } else if (jac_witness.empty()) {
      jac_witness = "x = " + x.str("e") + ", y = " + y.str("e") + ", z = " + z.str("e");
    }
  }
  push(report, "jacobi/002_jacobi_identity", base_inputs(config), jac_ok == count,
       jac_ok == count ? std::to_string(count) + "/" + std::to_string(count) + " triples exact"
                       : jac_witness);

  int leib_ok = 0;
  std::string leib_witness;
  for (int i = 0; i < count; ++i) {
    const AlgebraElement x = rng.algebra_element(n, 2);
    const TorusFunction f = rng.torus_function(n, 2);
    const AlgebraElement y = rng.algebra_element(n, 2);
    const AlgebraElement lhs = bracket(x, a_action(f, y));
    const AlgebraElement rhs = a_action(derivation_action(x, f), y) + a_action(f, bracket(x, y));
    if (lhs == rhs) {
      ++leib_ok;
    } else if (leib_witness.empty()) {
      leib_witness = "x = " + x.str("e") + ", f = " + f.str("t");
    }
  }
  push(report, "jacobi/003_leibniz_compatibility", base_inputs(config), leib_ok == count,
       leib_ok == count ? std::to_string(count) + "/" + std::to_string(count) + " triples exact"
                        : leib_witness);
}

// --- omega ---------------------------------------------------------------

void suite_omega(const RunConfig& config, Report& report) {
  Rng rng(config.seed);
  const int n = config.n;
  const int r = config.omega_order;

  {
    nlohmann::json inputs = base_inputs(config);
    inputs["r"] = r;
    const LatticePoint z = LatticePoint::zero(n);
    const auto rep = verify_omega_identity(r, rng.point(n, 2), rng.point(n, 2), rng.point(n, 2),
                                           rng.point(n, 2), z);
    push(report, "omega/001_degenerate_step", std::move(inputs),
         rep.equal && rep.lhs_terms == 0 && rep.rhs_terms == 0,
         "h = 0 collapses both sides to 0");
  }

  {
    const int count = n == 1 ? 12 : 6;
    nlohmann::json inputs = base_inputs(config);
    inputs["r"] = r;
    inputs["count"] = count;
    int ok = 0;
    size_t max_terms = 0;
    std::string witness;
    for (int i = 0; i < count; ++i) {
      const LatticePoint k = rng.point(n, 2), s = rng.point(n, 2), p = rng.point(n, 2),
                         q = rng.point(n, 2), h = rng.nonzero_point(n, 2);
      const auto rep = verify_omega_identity(r, k, s, p, q, h);
      max_terms = std::max(max_terms, rep.lhs_terms);
      if (rep.equal) {
        ++ok;
      } else if (witness.empty()) {
        witness = "(k,s,p,q,h) = (" + k.str() + ")(" + s.str() + ")(" + p.str() + ")(" + q.str() +
                  ")(" + h.str() + ")";
      }
    }
    push(report, "omega/002_random_instances", std::move(inputs), ok == count,
         ok == count ? std::to_string(count) + "/" + std::to_string(count) +
                           " instances, max lhs terms " + std::to_string(max_terms)
                     : witness);
  }

  if (config.omega_tuple) {
    const auto& t = *config.omega_tuple;
    nlohmann::json inputs = base_inputs(config);
    inputs["r"] = r;
    inputs["k"] = t.k.str();
    inputs["s"] = t.s.str();
    inputs["p"] = t.p.str();
    inputs["q"] = t.q.str();
    inputs["h"] = t.h.str();
    const auto rep = verify_omega_identity(r, t.k, t.s, t.p, t.q, t.h);
    const Scalar factor =
        mu_dot(t.q - t.s) * mu_dot(t.p - t.k + static_cast<std::int64_t>(2 * r) * t.h);
    push(report, "omega/003_explicit_tuple", std::move(inputs), rep.equal,
         "lhs terms " + std::to_string(rep.lhs_terms) + ", rhs terms " +
             std::to_string(rep.rhs_terms) + ", scalar factor " + factor.str());
  }
}

// --- annihilation ----------------------------------------------------------

void suite_annihilation(const RunConfig& config, Report& report) {
  Rng rng(config.seed);
  const int n = config.n;
  const ModuleParams params = configured_tensor(config);
  const int count = 8;

  int ok = 0;
  int observed = -1;
  std::string witness;
  std::vector<std::array<LatticePoint, 3>> tuples;
  for (int i = 0; i < count; ++i) {
    tuples.push_back({rng.nonzero_point(n, 2), rng.point(n, 2), rng.point(n, 2)});
  }
  for (const auto& [h, k, s] : tuples) {
    const auto found = min_annihilation_order(h, k, s, params, 6);
    const int oracle = predicted_annihilation_order(h, k, s, params);
    if (found && *found == oracle) {
      observed = *found;
      ++ok;
    } else if (witness.empty()) {
      witness = "h = " + h.str() + ", k = " + k.str() + ", s = " + s.str() + ": search " +
                (found ? std::to_string(*found) : std::string("none")) + " vs oracle " +
                std::to_string(oracle);
    }
  }
  {
    nlohmann::json inputs = base_inputs(config);
    inputs["module"] = params.describe();
    inputs["count"] = count;
    push(report, "annihilation/001_order_matches_difference_oracle", std::move(inputs),
         ok == count,
         ok == count ? "order " + std::to_string(observed) + " on " + std::to_string(count) +
                           "/" + std::to_string(count) + " samples"
                     : witness);
  }

  {
    bool all_nonzero = true;
    std::string wit;
    for (const auto& [h, k, s] : tuples) {
      const int oracle = predicted_annihilation_order(h, k, s, params);
      if (oracle == 0) continue;
      if (annihilates_module(differentiator(oracle - 1, h, k, s), params)) {
        all_nonzero = false;
        if (wit.empty()) wit = "order " + std::to_string(oracle - 1) + " already annihilates at h = " + h.str();
      }
    }
    nlohmann::json inputs = base_inputs(config);
    inputs["module"] = params.describe();
    push(report, "annihilation/002_search_not_premature", std::move(inputs), all_nonzero,
         all_nonzero ? "no sub-threshold differentiator annihilates" : wit);
  }

  {
    const ModuleParams trivial = ModuleParams::trivial(n);
    const auto found = min_annihilation_order(LatticePoint::unit(n, 0), LatticePoint::zero(n),
                                              LatticePoint::zero(n), trivial, 6);
    nlohmann::json inputs = base_inputs(config);
    inputs["module"] = trivial.describe();
    push(report, "annihilation/003_trivial_module", std::move(inputs), found && *found == 0,
         found ? "order " + std::to_string(*found) : "no order found");
  }

  {
    bool rejected = false;
    try {
      min_annihilation_order(LatticePoint::zero(n), LatticePoint::zero(n), LatticePoint::zero(n),
                             params, 3);
    } catch (const ConfigError&) {
      rejected = true;
    }
    push(report, "annihilation/004_rejects_zero_step", base_inputs(config), rejected,
         rejected ? "h = 0 rejected" : "h = 0 accepted");
  }
}

// --- tensor-structure -------------------------------------------------------

void suite_tensor_structure(const RunConfig& config, Report& report) {
  Rng rng(config.seed);
  const int n = config.n;
  const int window = config.window;

  {
    const auto rep = window_structure(ModuleParams::tensor(n), window);
    nlohmann::json inputs = base_inputs(config);
    inputs["module"] = "T(a,b)";
    inputs["window"] = window;
    push(report, "tensor/001_window_generic", std::move(inputs), rep.fully_cyclic,
         rep.fully_cyclic ? "every window vector generates the full window"
                          : "invariant subsets: " + std::to_string(rep.invariant_subsets.size()));
  }

  {
    const auto rep = window_structure(ModuleParams::tensor(n, Rational(0), BetaMode::Integral),
                                      window);
    const bool pass = !rep.fully_cyclic && rep.invariant_subsets.size() == 1 &&
                      rep.invariant_subsets[0].size() == 1 &&
                      rep.invariant_subsets[0][0].is_zero();
    nlohmann::json inputs = base_inputs(config);
    inputs["module"] = "T(0,0)";
    inputs["window"] = window;
    push(report, "tensor/002_window_constants_line", std::move(inputs), pass,
         pass ? "only invariant subset is the constants line {0}"
              : "unexpected invariant structure");
  }

  {
    const auto rep = window_structure(ModuleParams::tensor(n, Rational(1), BetaMode::Integral),
                                      window);
    const size_t window_size = rep.window.size();
    const bool pass = !rep.fully_cyclic && rep.invariant_subsets.size() == 1 &&
                      rep.invariant_subsets[0].size() == window_size - 1 &&
                      std::none_of(rep.invariant_subsets[0].begin(), rep.invariant_subsets[0].end(),
                                   [](const LatticePoint& p) { return p.is_zero(); });
    nlohmann::json inputs = base_inputs(config);
    inputs["module"] = "T(1,0)";
    inputs["window"] = window;
    push(report, "tensor/003_window_codimension_one", std::move(inputs), pass,
         pass ? "invariant subset misses exactly the offset 0" : "unexpected invariant structure");
  }

  if (config.alpha || config.beta) {
    const ModuleParams params = configured_tensor(config);
    const auto rep = window_structure(params, window);
    const bool special = config.alpha && (*config.alpha == 0 || *config.alpha == 1) &&
                         config.beta;
    const bool pass = special ? !rep.fully_cyclic : rep.fully_cyclic;
    nlohmann::json inputs = base_inputs(config);
    inputs["module"] = params.describe();
    inputs["window"] = window;
    push(report, "tensor/004_window_configured", std::move(inputs), pass,
         std::string(rep.fully_cyclic ? "fully cyclic" : "reducible in window") +
             (pass ? "" : " (unexpected)"));
  }

  {
    const ModuleParams domain = ModuleParams::tensor(n, Rational(0));
    const ModuleParams codomain = ModuleParams::tensor(n, Rational(1));
    const int count = 20;
    int ok = 0;
    std::string witness;
    for (int i = 0; i < count; ++i) {
      const LatticePoint k = rng.point(n, 2);
      const LatticePoint s = rng.point(n, 2);
      const ModuleVector v = basis_vector(s);
      const ModuleVector lhs = theta_map(tensor_act(k, v, domain), domain);
      const ModuleVector rhs = tensor_act(k, theta_map(v, domain), codomain);
      if (lhs == rhs) {
        ++ok;
      } else if (witness.empty()) {
        witness = "k = " + k.str() + ", s = " + s.str();
      }
    }
    nlohmann::json inputs = base_inputs(config);
    inputs["count"] = count;
    push(report, "tensor/005_theta_intertwines", std::move(inputs), ok == count,
         ok == count ? std::to_string(count) + "/" + std::to_string(count) + " samples exact"
                     : witness);
  }

  {
    const ModuleParams domain = ModuleParams::tensor(n, Rational(0), BetaMode::Integral);
    const ModuleVector image = theta_map(basis_vector(LatticePoint::zero(n)), domain);
    push(report, "tensor/006_theta_integral_kernel", base_inputs(config), image.is_zero(),
         image.is_zero() ? "theta(v_0) = 0 on the integral coset" : "theta(v_0) != 0");
  }

  {
    const ModuleParams params = ModuleParams::tensor(n);
    const int count = 20;
    int ok = 0;
    std::string witness;
    for (int i = 0; i < count; ++i) {
      const LatticePoint k = rng.point(n, 2);
      const LatticePoint m = rng.point(n, 2);
      const ModuleVector v = rng.module_vector(n, 2);
      const ModuleVector lhs =
          tensor_act(k, tensor_act(m, v, params), params) - tensor_act(m, tensor_act(k, v, params), params);
      const ModuleVector rhs = mu_dot(m - k) * tensor_act(k + m, v, params);
      if (lhs == rhs) {
        ++ok;
      } else if (witness.empty()) {
        witness = "k = " + k.str() + ", m = " + m.str();
      }
    }
    nlohmann::json inputs = base_inputs(config);
    inputs["count"] = count;
    push(report, "tensor/007_module_axiom", std::move(inputs), ok == count,
         ok == count ? std::to_string(count) + "/" + std::to_string(count) + " samples exact"
                     : witness);
  }
}

// --- aw-calculus -------------------------------------------------------------

void suite_aw_calculus(const RunConfig& config, Report& report) {
  const int n = config.n;
  const BetaMode mode = config.beta ? BetaMode::Integral : BetaMode::Generic;

  std::vector<std::pair<std::string, JetRep>> reps;
  reps.emplace_back("d1_scalar", JetRep::scalar_family(n));
  reps.emplace_back("d2_nilpotent", JetRep::nilpotent_pair(n));
  reps.emplace_back("d3_jordan", JetRep::jordan_triple(n));
  if (config.jetrep_path) {
    JetRep loaded = JetRep::load_file(*config.jetrep_path);
    if (loaded.n() != n) {
      throw ConfigError("jet rep file has n = " + std::to_string(loaded.n()) +
                        " but the run is configured with n = " + std::to_string(n));
    }
    reps.emplace_back("file", std::move(loaded));
  }

  for (const auto& [name, rep] : reps) {
    Rng rng(config.seed);
    nlohmann::json inputs = base_inputs(config);
    inputs["rep"] = name;
    inputs["dim"] = rep.dim();

    std::optional<AWModule> mod;
    try {
      mod.emplace(rep, mode);
    } catch (const InvalidRep& e) {
      push(report, "aw/" + name + "/1_validate", inputs, false, e.what());
      continue;
    }
    push(report, "aw/" + name + "/1_validate", inputs, true, "bracket relations hold");

    const auto random_element = [&](Rng& r) {
      AWElement v(n, mod->dim());
      const int terms = static_cast<int>(r.uniform(1, 2));
      for (int t = 0; t < terms; ++t) {
        VectorS u(mod->dim());
        for (int i = 0; i < mod->dim(); ++i) u(i) = Scalar(r.rational());
        v.add(r.point(n, 2), u);
      }
      return v;
    };

    {
      const int count = 20;
      int ok = 0;
      for (int i = 0; i < count; ++i) {
        if (verify_compatibility(*mod, rng.point(n, 2), rng.point(n, 2), random_element(rng))) ++ok;
      }
      push(report, "aw/" + name + "/2_compatibility", inputs, ok == count,
           std::to_string(ok) + "/" + std::to_string(count) + " Leibniz instances");
    }

    {
      const int count = 20;
      int ok = 0;
      for (int i = 0; i < count; ++i) {
        if (verify_module_axiom(*mod, rng.point(n, 2), rng.point(n, 2), random_element(rng))) ++ok;
      }
      push(report, "aw/" + name + "/3_module_axiom", inputs, ok == count,
           std::to_string(ok) + "/" + std::to_string(count) + " bracket instances");
    }

    {
      const int radius = n <= 2 ? 2 : 1;
      const auto pts = box_points(n, radius);
      bool all = true;
      std::string wit;
      for (const auto& s : pts) {
        for (const auto& m : pts) {
          if (!verify_deform(*mod, s, m)) {
            all = false;
            if (wit.empty()) wit = "s = " + s.str() + ", m = " + m.str();
          }
        }
      }
      push(report, "aw/" + name + "/4_deformation_bracket", inputs, all,
           all ? std::to_string(pts.size() * pts.size()) + " pairs exact" : wit);
    }

    {
      const int cap = rep.degree_bound();
      const auto sampler = [&](const LatticePoint& s) { return extract_d(*mod, s); };
      bool pass = true;
      std::string wit = "recovered rho and the constant term exactly";
      try {
        const OperatorPolynomial op = fit_polynomial(sampler, n, mod->dim(), cap + 1, cap);
        if (!matrices_equal(op.coefficient(LatticePoint::zero(n)),
                            mod->beta() * identity_matrix(mod->dim()))) {
          pass = false;
          wit = "constant term is not beta*Id";
        }
        for (const auto& [k, value] : rep.entries()) {
          if (!matrices_equal(op.partial(k), value)) {
            pass = false;
            wit = "partial at " + k.str() + " does not match rho";
          }
        }
        for (const auto& [k, value] : op.coefficients()) {
          if (!k.is_zero() && rep.entries().find(k) == rep.entries().end()) {
            pass = false;
            wit = "extra coefficient at " + k.str();
          }
        }
        if (pass && !verify_jet_brackets(op)) {
          pass = false;
          wit = "partial-operator bracket table fails";
        }
        push(report, "aw/" + name + "/5_fit_roundtrip", inputs, pass, wit);
      } catch (const FitMismatch& e) {
        push(report, "aw/" + name + "/5_fit_roundtrip", inputs, false, e.what());
      }
    }
  }

  {
    // Negative control: quadratic samples under a linear cap must be refused.
    bool rejected = false;
    const auto plant = [n](const LatticePoint& s) {
      const Scalar value = mu_dot(s) * mu_dot(s);
      MatrixS m(1, 1);
      m(0, 0) = value;
      return m;
    };
    try {
      fit_polynomial(plant, n, 1, 2, 1);
    } catch (const FitMismatch&) {
      rejected = true;
    }
    push(report, "aw/negative_control_fit", base_inputs(config), rejected,
         rejected ? "quadratic plant with linear cap raises the mismatch" : "mismatch not raised");
  }

  {
    bool rejected = false;
    JetRep broken(n, 2, 1);
    MatrixS e11 = zero_matrix(2, 2);
    e11(0, 0) = Scalar(1);
    MatrixS nil = zero_matrix(2, 2);
    nil(0, 1) = Scalar(1);
    broken.set(LatticePoint::unit(n, 0), e11);
    if (n > 1) {
      broken.set(LatticePoint::unit(n, 1), nil);
    } else {
      // With one direction, make the self-bracket relation fail instead:
      // rho(x^2 d_mu) nonzero while [rho(x d_mu), rho(x d_mu)] = 0 needs
      // a contradiction through the mixed bracket below.
      JetRep bad(n, 2, 2);
      bad.set(LatticePoint::unit(n, 0), e11);
      bad.set(LatticePoint({2}), nil);
      broken = bad;
    }
    try {
      broken.validate();
    } catch (const InvalidRep&) {
      rejected = true;
    }
    push(report, "aw/invalid_rep_rejected", base_inputs(config), rejected,
         rejected ? "bracket-violating data refused" : "bracket-violating data accepted");
  }
}

// --- jet-commutant -------------------------------------------------------------

void suite_jet_commutant(const RunConfig& config, Report& report) {
  const int n = config.n;
  const int p = n <= 2 ? 3 : 2;
  const auto rep = commutant_check(n, p);

  nlohmann::json inputs = base_inputs(config);
  inputs["degree_bound"] = p;
  inputs["truncation_dim"] = rep.truncation_dim;
  push(report, "commutant/001_codimension_one", inputs, rep.codimension == 1,
       "rank " + std::to_string(rep.commutant_rank) + " in dimension " +
           std::to_string(rep.truncation_dim) + ", codimension " +
           std::to_string(rep.codimension));
  push(report, "commutant/002_degree_zero_hyperplane", inputs, rep.degree_zero_matches_hyperplane,
       "degree-0 rank " + std::to_string(rep.degree_zero_rank) + ", hyperplane membership " +
           (rep.degree_zero_in_hyperplane ? "holds" : "fails"));
}

// --- cover-rank -------------------------------------------------------------

void suite_cover_rank(const RunConfig& config, Report& report) {
  Rng rng(config.seed);
  const int n = config.n;
  const int K = 1;
  const int Kp = config.eval_window;
  const int cap = Kp + 4;

  const auto rank_check = [&](const std::string& name, const ModuleParams& params, int expected) {
    std::vector<LatticePoint> lambdas = {LatticePoint::zero(n), LatticePoint::unit(n, 0),
                                         rng.point(n, 2)};
    bool pass = true;
    std::string wit;
    for (const auto& lambda : lambdas) {
      try {
        const int rank = weight_space_rank(params, lambda, K, Kp, cap);
        if (rank != expected) {
          pass = false;
          if (wit.empty()) {
            wit = "rank " + std::to_string(rank) + " at weight offset " + lambda.str() +
                  ", expected " + std::to_string(expected);
          }
        }
      } catch (const RankUnstable& e) {
        pass = false;
        if (wit.empty()) wit = e.what();
      }
    }
    nlohmann::json inputs = base_inputs(config);
    inputs["module"] = params.describe();
    inputs["gen_window"] = K;
    inputs["eval_window"] = Kp;
    push(report, name, std::move(inputs), pass,
         pass ? "rank " + std::to_string(expected) + " at " + points_str(lambdas) : wit);
  };

  const ModuleParams generic = configured_tensor(config);
  const bool alpha_special = config.alpha && (*config.alpha == 0 || *config.alpha == 1);
  rank_check("cover/001_rank_configured", generic, alpha_special ? 1 : 2);
  rank_check("cover/002_rank_alpha_zero", ModuleParams::tensor(n, Rational(0)), 1);
  rank_check("cover/003_rank_trivial", ModuleParams::trivial(n), 0);

  {
    const int count = 20;
    int ok = 0;
    std::string wit;
    for (int i = 0; i < count; ++i) {
      const LatticePoint p = rng.point(n, 2);
      const Scalar c = Scalar(rng.nonzero_rational());
      const CoverElement e =
          CoverElement::generator(rng.point(n, 2), basis_vector(rng.point(n, 2)), Scalar(rng.nonzero_rational()));
      const ModuleVector lhs = pi_project(cover_act(p, c, e, generic), generic);
      const ModuleVector rhs = c * tensor_act(p, pi_project(e, generic), generic);
      if (lhs == rhs) {
        ++ok;
      } else if (wit.empty()) {
        wit = "y exponent " + p.str();
      }
    }
    nlohmann::json inputs = base_inputs(config);
    inputs["count"] = count;
    inputs["module"] = generic.describe();
    push(report, "cover/004_pi_equivariance", std::move(inputs), ok == count,
         ok == count ? std::to_string(count) + "/" + std::to_string(count) + " samples exact" : wit);
  }

  {
    const int count = 20;
    int ok = 0;
    std::string wit;
    const auto window = box_points(n, Kp);
    for (int i = 0; i < count; ++i) {
      const LatticePoint p = rng.point(n, 2);
      const Scalar c = Scalar(rng.nonzero_rational());
      const CoverElement e =
          CoverElement::generator(rng.point(n, 2), basis_vector(rng.point(n, 2)), Scalar(rng.nonzero_rational()));
      const CoverElement acted = cover_act(p, c, e, generic);
      bool agree = true;
      for (const auto& f : window) {
        const TorusFunction tf = torus_monomial(f);
        if (eval(acted, tf, generic) != coinduced_act_eval(p, c, e, tf, generic)) {
          agree = false;
          break;
        }
      }
      if (agree) {
        ++ok;
      } else if (wit.empty()) {
        wit = "y exponent " + p.str();
      }
    }
    nlohmann::json inputs = base_inputs(config);
    inputs["count"] = count;
    push(report, "cover/005_two_route_agreement", std::move(inputs), ok == count,
         ok == count ? std::to_string(count) + "/" + std::to_string(count) +
                           " samples agree on the evaluation window"
                     : wit);
  }

  {
    const int count = 10;
    int ok = 0;
    std::string wit;
    const auto window = box_points(n, Kp);
    for (int i = 0; i < count; ++i) {
      const LatticePoint p = rng.point(n, 2);
      const Scalar c = Scalar(rng.nonzero_rational());
      const LatticePoint g = rng.point(n, 2);
      const CoverElement e =
          CoverElement::generator(rng.point(n, 2), basis_vector(rng.point(n, 2)));
      // y(g phi) = (y g) phi + g (y phi), all three as functionals.
      const CoverElement lhs = cover_act(p, c, cover_a_act(g, e), generic);
      CoverElement rhs = cover_a_act(g, cover_act(p, c, e, generic));
      CoverElement yg_phi = cover_a_act(p + g, e);
      const Scalar yg = c * mu_dot(g);
      bool agree = true;
      for (const auto& f : window) {
        const TorusFunction tf = torus_monomial(f);
        const ModuleVector left = eval(lhs, tf, generic);
        const ModuleVector right = yg * eval(yg_phi, tf, generic) + eval(rhs, tf, generic);
        if (left != right) {
          agree = false;
          break;
        }
      }
      if (agree) {
        ++ok;
      } else if (wit.empty()) {
        wit = "g = " + g.str() + ", y exponent " + p.str();
      }
    }
    nlohmann::json inputs = base_inputs(config);
    inputs["count"] = count;
    push(report, "cover/006_a_compatibility", std::move(inputs), ok == count,
         ok == count ? std::to_string(count) + "/" + std::to_string(count) + " samples exact" : wit);
  }

  {
    const auto rep = pi_surjectivity_report(ModuleParams::tensor(n), config.window);
    push(report, "cover/007_surjectivity_generic", base_inputs(config),
         rep.surjective_everywhere(),
         rep.surjective_everywhere()
             ? "pi spans every window weight space"
             : "missed weights " + points_str(rep.missed));
  }

  {
    const auto rep =
        pi_surjectivity_report(ModuleParams::tensor(n, Rational(1), BetaMode::Integral), config.window);
    const bool pass = rep.missed.size() == 1 && rep.missed[0].is_zero();
    push(report, "cover/008_surjectivity_alpha1_integral", base_inputs(config), pass,
         pass ? "exactly the weight 0 is missed" : "missed weights " + points_str(rep.missed));
  }

  {
    const auto rep = pi_surjectivity_report(ModuleParams::trivial(n), config.window);
    const bool pass = rep.missed.size() == 1 && rep.missed[0].is_zero();
    push(report, "cover/009_surjectivity_trivial", base_inputs(config), pass,
         pass ? "the image is empty" : "unexpected image");
  }

  {
    // Order-3 differentiator combinations of generators evaluate to zero:
    // the annihilation relations reappear as evaluation dependencies.
    const int count = 6;
    int ok = 0;
    std::string wit;
    const auto window = box_points(n, Kp);
    for (int i = 0; i < count; ++i) {
      const LatticePoint h = rng.nonzero_point(n, 1);
      const LatticePoint k = rng.point(n, 1);
      const LatticePoint s = rng.point(n, 1);
      const ModuleVector u = basis_vector(rng.point(n, 1));
      CoverElement combo(n);
      for (int t = 0; t <= 3; ++t) {
        const Rational c = (t % 2 == 0) ? binomial(3, t) : -binomial(3, t);
        const auto th = static_cast<std::int64_t>(t) * h;
        combo.add(Scalar(c), CoverGenerator{k - th, tensor_act(s + th, u, generic)});
      }
      bool zero = true;
      for (const auto& f : window) {
        if (!eval(combo, torus_monomial(f), generic).is_zero()) {
          zero = false;
          break;
        }
      }
      if (zero) {
        ++ok;
      } else if (wit.empty()) {
        wit = "h = " + h.str() + ", k = " + k.str() + ", s = " + s.str();
      }
    }
    nlohmann::json inputs = base_inputs(config);
    inputs["count"] = count;
    push(report, "cover/010_differentiator_relations", std::move(inputs), ok == count,
         ok == count ? std::to_string(count) + "/" + std::to_string(count) +
                           " combinations evaluate to zero"
                     : wit);
  }

  {
    bool raised = false;
    try {
      weight_space_rank(ModuleParams::tensor(n), LatticePoint::zero(n), 1, 0, 0);
    } catch (const RankUnstable&) {
      raised = true;
    }
    push(report, "cover/011_rank_window_cap", base_inputs(config), raised,
         raised ? "non-stabilization past the cap is reported" : "cap violation not reported");
  }
}

}  // namespace

int predicted_annihilation_order(const LatticePoint& h, const LatticePoint& k,
                                 const LatticePoint& s, const ModuleParams& params) {
  const int n = params.n();
  int order = 0;
  for (const auto& p : grid_points(n, 0, 2)) {
    if (!params.valid_offset(p)) continue;
    std::vector<Scalar> samples;
    for (std::int64_t i = 0; i <= 5; ++i) {
      const ModuleVector image = tensor_act(
          k - i * h, tensor_act(s + i * h, basis_vector(p), params), params);
      Scalar value(0);
      for (const auto& [offset, c] : image.terms()) value = c;
      samples.push_back(value);
    }
    int steps = 0;
    auto seq = samples;
    const auto all_zero = [](const std::vector<Scalar>& v) {
      return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return x.is_zero(); });
    };
    while (!all_zero(seq)) {
      std::vector<Scalar> next;
      for (size_t i = 0; i + 1 < seq.size(); ++i) next.push_back(seq[i + 1] - seq[i]);
      seq = std::move(next);
      ++steps;
    }
    order = std::max(order, steps);
  }
  return order;
}

void RunConfig::validate() const {
  if (n < 1) throw ConfigError("n must be at least 1");
  if (window < 2) throw ConfigError("window must be at least 2");
  if (eval_window < 1) throw ConfigError("eval window must be at least 1");
  if (omega_order < 2) throw ConfigError("omega order r must be at least 2");
  if (std::find(kSuiteNames.begin(), kSuiteNames.end(), suite) == kSuiteNames.end()) {
    throw ConfigError("unknown suite '" + suite + "'");
  }
  if (beta && *beta != 0) {
    throw ConfigError("beta may only be bound to 0 (the integral coset); other cosets are "
                      "re-indexings of the generic one");
  }
  if (omega_tuple) {
    const auto check_dim = [&](const LatticePoint& p, const char* what) {
      if (p.dim() != n) {
        throw ConfigError(std::string("omega tuple point ") + what + " must have dimension " +
                          std::to_string(n));
      }
    };
    check_dim(omega_tuple->k, "k");
    check_dim(omega_tuple->s, "s");
    check_dim(omega_tuple->p, "p");
    check_dim(omega_tuple->q, "q");
    check_dim(omega_tuple->h, "h");
  }
}

nlohmann::json RunConfig::to_json() const {
  nlohmann::json j;
  j["n"] = n;
  j["seed"] = seed;
  j["window"] = window;
  j["eval_window"] = eval_window;
  j["r"] = omega_order;
  j["suite"] = suite;
  j["alpha"] = alpha ? rational_str(*alpha) : "symbolic";
  j["beta"] = beta ? rational_str(*beta) : "symbolic";
  if (jetrep_path) j["jetrep"] = *jetrep_path;
  if (omega_tuple) {
    j["omega_tuple"] = {{"k", omega_tuple->k.str()},
                        {"s", omega_tuple->s.str()},
                        {"p", omega_tuple->p.str()},
                        {"q", omega_tuple->q.str()},
                        {"h", omega_tuple->h.str()}};
  }
  return j;
}

const std::vector<std::string>& suite_names() { return kSuiteNames; }

Report run_suite(const RunConfig& config) {
  config.validate();
  Report report;
  report.suite = config.suite;
  report.config = config.to_json();

  const std::map<std::string, std::function<void(const RunConfig&, Report&)>> suites = {
      {"jacobi", suite_jacobi},
      {"omega", suite_omega},
      {"annihilation", suite_annihilation},
      {"tensor-structure", suite_tensor_structure},
      {"aw-calculus", suite_aw_calculus},
      {"jet-commutant", suite_jet_commutant},
      {"cover-rank", suite_cover_rank},
  };

  if (config.suite == "all") {
    for (const auto& name : kSuiteNames) {
      if (name == "all") continue;
      suites.at(name)(config, report);
    }
  } else {
    suites.at(config.suite)(config, report);
  }
  return report;
}

}  // namespace solenoid
