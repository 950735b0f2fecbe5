// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 dmsec contributors

#pragma once

#include <string>
#include <vector>

#include "dmsec/linalg.hpp"

namespace dmsec {

struct SolverTolerances {
  double power_iter_tol = 1e-10;
  int power_iter_max_iter = 10000;
  double gpi_tol = 1e-8;
  int gpi_max_iter = 500;
  double ais_tol = 1e-3;
  int ais_max_outer_iter = 50;
  // Stopping rule for the outer loop: absolute rate increment by default,
  // fractional increase when set.
  bool ais_fractional_stop = false;
};

/// Transmitter geometry and power budget. Angles are measured from the array
/// axis (broadside at 90°); transmit SNR is P_s/σ², so the noise power is
/// derived as σ² = P_s·10^(-snr_db/10).
struct SystemConfig {
  int n_antennas = 64;
  double theta_b_deg = 45.0;
  double theta_e_deg = 30.0;
  double element_spacing_over_lambda = 0.5;
  double total_power_dbm = 70.0;
  double snr_db = 15.0;
  SolverTolerances tol;

  double total_power_watts() const;
  double snr_linear() const;
  /// σ²/P_s — the only power quantity the rate math depends on. All rates
  /// and optimizers use this ratio, which makes results independent of the
  /// absolute power scale bit for bit.
  double snr_inverse() const;
  double noise_power_watts() const;

  /// Returns every invariant violation (empty when valid).
  std::vector<std::string> violations() const;
  /// Throws std::invalid_argument listing all violations.
  void ensure_valid() const;
};

struct ChannelPair {
  CVec h_b;  // channel to the legitimate receiver
  CVec h_e;  // channel to the eavesdropper
};

/// Unit-norm ULA steering vector: entry n is (1/√N)·exp(j·2π·(d/λ)·n·cosθ).
CVec steering_vector(int n_antennas, double theta_deg, double spacing_over_lambda);

ChannelPair build_channels(const SystemConfig& cfg);

}  // namespace dmsec
