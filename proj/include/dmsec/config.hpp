// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 dmsec contributors

#pragma once

#include <string>
#include <vector>

#include "dmsec/channel.hpp"

namespace dmsec {

enum class Scheme { ais, nsp, both };

const char* scheme_name(Scheme s);

/// A full experiment: which scheme(s) to run over which (N, SNR) grid, plus
/// the fixed system parameters shared by every grid cell.
struct ExperimentSpec {
  Scheme scheme = Scheme::both;
  std::vector<int> n_list;
  std::vector<double> snr_db_list;
  SystemConfig base;  // n_antennas / snr_db overridden per grid cell
  std::string out_dir = "results";
  long seed = 1;  // used only by the optional oracle cross-checks
  bool oracle_checks = false;
  bool strict = false;

  SystemConfig config_for(int n, double snr_db) const;
};

struct ConfigResult {
  ExperimentSpec spec;
  std::vector<std::string> errors;    // "line N: field 'x': message"
  std::vector<std::string> warnings;  // accepted but suspicious
  bool ok() const { return errors.empty(); }
};

/// Parses and validates an experiment config file (INI-style key/value with
/// [section] nesting). All violations are collected and reported together.
ConfigResult load_experiment_spec(const std::string& path);

/// Same, from an in-memory string (used by tests).
ConfigResult parse_experiment_spec(const std::string& text);

}  // namespace dmsec
