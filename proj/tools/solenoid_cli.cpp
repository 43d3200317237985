// Command-line front end: configure the lattice rank, windows and
// parameter bindings, run a verification suite, and emit the canonical
// JSON report.  Exit codes: 0 all checks pass, 1 at least one check
// fails, 2 usage or configuration error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "solenoid/errors.hpp"
#include "solenoid/suites.hpp"

namespace {

std::string suite_list() {
  std::string out;
  for (const auto& name : solenoid::suite_names()) {
    if (!out.empty()) out += ", ";
    out += name;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"solenoid: exact verification engine for solenoidal Lie algebras"};

  solenoid::RunConfig config;
  std::string alpha_text, beta_text, out_path;
  std::string k_text, s_text, p_text, q_text, h_text;
  std::string jetrep_path;

  app.add_option("--n", config.n, "number of direction components (>= 1)")
      ->capture_default_str();
  app.add_option("--seed", config.seed, "seed for all randomized checks")->capture_default_str();
  app.add_option("--window", config.window, "structural window radius K (>= 2)")
      ->capture_default_str();
  app.add_option("--eval-window", config.eval_window, "evaluation window radius K' (>= 1)")
      ->capture_default_str();
  app.add_option("--suite", config.suite, "suite to run: " + suite_list())
      ->capture_default_str();
  app.add_option("--r", config.omega_order, "differentiator identity order r (>= 2)")
      ->capture_default_str();
  app.add_option("--alpha", alpha_text, "bind the tensor parameter alpha to a rational");
  app.add_option("--beta", beta_text, "bind the coset parameter beta (only 0 is meaningful)");
  app.add_option("--jetrep", jetrep_path, "load an extra jet-data file into the aw-calculus suite");
  app.add_option("--k", k_text, "explicit lattice point k, comma-separated (omega suite)");
  app.add_option("--s", s_text, "explicit lattice point s (omega suite)");
  app.add_option("--p", p_text, "explicit lattice point p (omega suite)");
  app.add_option("--q", q_text, "explicit lattice point q (omega suite)");
  app.add_option("--step", h_text, "explicit lattice point h, the differentiator step (omega suite)");
  app.add_option("--out", out_path, "also write the report to this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (!alpha_text.empty()) config.alpha = solenoid::parse_rational(alpha_text);
    if (!beta_text.empty()) config.beta = solenoid::parse_rational(beta_text);
    if (!jetrep_path.empty()) config.jetrep_path = jetrep_path;

    const bool any_point =
        !k_text.empty() || !s_text.empty() || !p_text.empty() || !q_text.empty() || !h_text.empty();
    if (any_point) {
      if (k_text.empty() || s_text.empty() || p_text.empty() || q_text.empty() || h_text.empty()) {
        throw solenoid::ConfigError("an explicit omega tuple needs all of --k --s --p --q --step");
      }
      config.omega_tuple = solenoid::OmegaTuple{
          solenoid::LatticePoint::parse(k_text, config.n),
          solenoid::LatticePoint::parse(s_text, config.n),
          solenoid::LatticePoint::parse(p_text, config.n),
          solenoid::LatticePoint::parse(q_text, config.n),
          solenoid::LatticePoint::parse(h_text, config.n),
      };
    }
    config.validate();

    const auto started = std::chrono::steady_clock::now();
    const solenoid::Report report = solenoid::run_suite(config);
    const auto elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started);

    const std::string document = report.dump();
    std::cout << document;
    if (!out_path.empty()) {
      std::ofstream out(out_path, std::ios::binary);
      if (!out) throw solenoid::ConfigError("cannot write report to '" + out_path + "'");
      out << document;
    }

    if (const solenoid::Check* failed = report.first_failure()) {
      std::cerr << "suite " << config.suite << ": FAIL at check '" << failed->name
                << "' with inputs " << failed->inputs.dump() << " (" << failed->witness << "); "
                << report.checks.size() << " checks in " << elapsed.count() << " ms\n";
      return 1;
    }
    std::cerr << "suite " << config.suite << ": " << report.checks.size() << " checks pass in "
              << elapsed.count() << " ms\n";
    return 0;
  } catch (const solenoid::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const solenoid::ParseError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const solenoid::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
