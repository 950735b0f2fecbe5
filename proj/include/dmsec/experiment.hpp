// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 dmsec contributors

#pragma once

#include <iosfwd>
#include <string>

#include "dmsec/config.hpp"

namespace dmsec {

struct ExperimentSummary {
  int grid_cells = 0;
  int non_converged = 0;
  int oracle_failures = 0;
  std::string trace_csv_path;
  std::string sweep_csv_path;
};

/// Runs the configured sweep and writes two CSV artifacts into out_dir:
///
///   trace.csv — n,snr_db,iteration,secrecy_rate_bits,beta
///               (AIS convergence trace, one row per outer iteration)
///   sweep.csv — scheme,n,snr_db,secrecy_rate_bits,beta_star,iterations,converged
///               (final operating point per scheme and grid cell)
///
/// Rows are sorted by (scheme, n, snr_db, iteration); floats carry 12
/// significant digits; files are written atomically (temp then rename) and
/// are byte-identical across repeated runs of the same spec. Reported rates
/// are clamped at zero. `log`, when non-null, receives progress and oracle
/// diagnostics.
ExperimentSummary run_experiment(const ExperimentSpec& spec, std::ostream* log = nullptr);

}  // namespace dmsec
