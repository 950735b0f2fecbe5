// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 dmsec contributors

#include "dmsec/experiment.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <random>
#include <stdexcept>

#include "dmsec/ais.hpp"
#include "dmsec/beamforming.hpp"
#include "dmsec/nsp.hpp"
#include "dmsec/power_allocation.hpp"
#include "dmsec/secrecy.hpp"

namespace dmsec {

namespace {

std::string fmt12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

void write_atomically(const std::filesystem::path& path, const std::string& content) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + tmp.string() + "'");
    out << content;
    if (!out) throw std::runtime_error("write failed for '" + tmp.string() + "'");
  }
  std::filesystem::rename(tmp, path);
}

/// Brute-force spot checks of one AIS solution: the beamformer must beat
/// random probes and the power split must beat a uniform grid.
int oracle_check_cell(const ChannelPair& cp, const SystemConfig& cfg,
                      const SolutionState& s, std::mt19937_64& rng,
                      std::ostream* log) {
  int failures = 0;
  std::normal_distribution<double> gauss(0.0, 1.0);
  const std::size_t n = s.v_b.size();

  double best_probe = -1e300;
  SolutionState probe = s;
  for (int trial = 0; trial < 10000; ++trial) {
    CVec u(n);
    for (Complex& x : u) x = Complex(gauss(rng), gauss(rng));
    probe.v_b = normalized(std::move(u));
    best_probe = std::max(best_probe, secrecy_rate_unclamped(cp, probe, cfg));
  }
  probe.v_b = s.v_b;
  const double own = secrecy_rate_unclamped(cp, probe, cfg);
  if (own < best_probe - 1e-6) ++failures;

  const PAQuadratic q = pa_coefficients(cp, s.v_b, s.v_an, cfg);
  double best_grid = 0.0;
  for (int g = 0; g <= 1000; ++g)
    best_grid = std::max(best_grid, pa_phi(q, static_cast<double>(g) / 1000.0));
  const double own_phi = pa_phi(q, s.beta);
  if (own_phi < best_grid - 1e-9) ++failures;

  if (log)
    *log << "[oracle] n=" << cfg.n_antennas << " snr=" << cfg.snr_db
         << "dB: vb margin " << fmt12(own - best_probe) << ", pa margin "
         << fmt12(own_phi - best_grid) << (failures ? " FAIL" : " ok") << "\n";
  return failures;
}

}  // namespace

ExperimentSummary run_experiment(const ExperimentSpec& spec, std::ostream* log) {
  if (spec.n_list.empty() || spec.snr_db_list.empty())
    throw std::invalid_argument("run_experiment: empty sweep axes");

  std::string trace_csv = "n,snr_db,iteration,secrecy_rate_bits,beta\n";
  std::string sweep_csv =
      "scheme,n,snr_db,secrecy_rate_bits,beta_star,iterations,converged\n";

  ExperimentSummary summary;
  std::mt19937_64 oracle_rng(static_cast<unsigned long long>(spec.seed));

  const bool run_ais_scheme = spec.scheme != Scheme::nsp;
  const bool run_nsp_scheme = spec.scheme != Scheme::ais;

  if (run_ais_scheme) {
    for (int n : spec.n_list) {
      for (double snr : spec.snr_db_list) {
        const SystemConfig cfg = spec.config_for(n, snr);
        const auto [state, trace] = run_ais(cfg);
        ++summary.grid_cells;
        if (!trace.converged) ++summary.non_converged;
        for (const IterationRecord& rec : trace.records) {
          trace_csv += std::to_string(n) + "," + fmt12(snr) + "," +
                       std::to_string(rec.iteration) + "," +
                       fmt12(std::max(0.0, rec.rate_after_beta)) + "," +
                       fmt12(rec.beta) + "\n";
        }
        sweep_csv += std::string("ais,") + std::to_string(n) + "," + fmt12(snr) +
                     "," + fmt12(state.secrecy_rate_bits) + "," + fmt12(state.beta) +
                     "," + std::to_string(trace.iterations_used) + "," +
                     (trace.converged ? "true" : "false") + "\n";
        if (spec.oracle_checks)
          summary.oracle_failures +=
              oracle_check_cell(build_channels(cfg), cfg, state, oracle_rng, log);
      }
    }
  }
  if (run_nsp_scheme) {
    for (int n : spec.n_list) {
      for (double snr : spec.snr_db_list) {
        const SystemConfig cfg = spec.config_for(n, snr);
        const NspResult nsp = nsp_solution(cfg);
        ++summary.grid_cells;
        sweep_csv += std::string("nsp,") + std::to_string(n) + "," + fmt12(snr) +
                     "," + fmt12(nsp.state.secrecy_rate_bits) + "," +
                     fmt12(nsp.state.beta) + ",1,true\n";
      }
    }
  }

  const std::filesystem::path out_dir(spec.out_dir);
  std::filesystem::create_directories(out_dir);
  const std::filesystem::path trace_path = out_dir / "trace.csv";
  const std::filesystem::path sweep_path = out_dir / "sweep.csv";
  write_atomically(trace_path, trace_csv);
  write_atomically(sweep_path, sweep_csv);
  summary.trace_csv_path = trace_path.string();
  summary.sweep_csv_path = sweep_path.string();

  if (log)
    *log << "wrote " << summary.trace_csv_path << " and " << summary.sweep_csv_path
         << " (" << summary.grid_cells << " grid cells, " << summary.non_converged
         << " non-converged)\n";
  return summary;
}

}  // namespace dmsec
