// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 dmsec contributors

#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "dmsec/config.hpp"
#include "dmsec/experiment.hpp"

namespace {

constexpr int kExitConfigError = 1;
constexpr int kExitRuntimeError = 2;
constexpr int kExitNonConvergence = 3;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "dmsec: secrecy-rate optimization sweeps for a directional-modulation "
      "transmitter (alternating-optimization scheme plus null-space-projection "
      "baseline)"};

  std::string spec_path = "configs/default.cfg";
  std::string out_dir;
  std::string scheme;
  std::string stop_rule;
  bool oracle = false;
  bool strict = false;
  bool validate_only = false;

  app.add_option("--spec", spec_path, "Experiment config file")
      ->capture_default_str();
  app.add_option("--out", out_dir, "Output directory (overrides the config)");
  app.add_option("--scheme", scheme, "Scheme to run: ais|nsp|both")
      ->check(CLI::IsMember({"ais", "nsp", "both"}));
  app.add_option("--stop-rule", stop_rule,
                 "Outer-loop stopping rule: abs (rate increment) or frac "
                 "(fractional increase)")
      ->check(CLI::IsMember({"abs", "frac"}));
  app.add_flag("--oracle", oracle,
               "Enable slow brute-force cross-checks of every AIS solution");
  app.add_flag("--strict", strict,
               "Exit with status 3 if any grid cell fails to converge");
  app.add_flag("--validate-only", validate_only,
               "Validate the config file and exit");

  CLI11_PARSE(app, argc, argv);

  dmsec::ConfigResult cfg = dmsec::load_experiment_spec(spec_path);
  for (const std::string& w : cfg.warnings) std::cerr << "warning: " << w << "\n";
  if (!cfg.ok()) {
    for (const std::string& e : cfg.errors)
      std::cerr << "config error: " << e << "\n";
    return kExitConfigError;
  }
  if (validate_only) {
    std::cout << "config ok: " << spec_path << "\n";
    return 0;
  }

  if (!out_dir.empty()) cfg.spec.out_dir = out_dir;
  if (scheme == "ais") cfg.spec.scheme = dmsec::Scheme::ais;
  if (scheme == "nsp") cfg.spec.scheme = dmsec::Scheme::nsp;
  if (scheme == "both") cfg.spec.scheme = dmsec::Scheme::both;
  if (stop_rule == "abs") cfg.spec.base.tol.ais_fractional_stop = false;
  if (stop_rule == "frac") cfg.spec.base.tol.ais_fractional_stop = true;
  cfg.spec.oracle_checks = oracle;
  cfg.spec.strict = strict;

  try {
    const dmsec::ExperimentSummary summary =
        dmsec::run_experiment(cfg.spec, &std::cout);
    if (summary.oracle_failures > 0) {
      std::cerr << "oracle cross-checks failed on " << summary.oracle_failures
                << " check(s)\n";
      return kExitRuntimeError;
    }
    if (strict && summary.non_converged > 0) {
      std::cerr << summary.non_converged
                << " grid cell(s) did not converge (--strict)\n";
      return kExitNonConvergence;
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitRuntimeError;
  }
  return 0;
}
