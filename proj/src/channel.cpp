// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 dmsec contributors

#include "dmsec/channel.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace dmsec {

double SystemConfig::total_power_watts() const {
  return std::pow(10.0, (total_power_dbm - 30.0) / 10.0);
}

double SystemConfig::snr_linear() const { return std::pow(10.0, snr_db / 10.0); }

double SystemConfig::snr_inverse() const { return std::pow(10.0, -snr_db / 10.0); }

double SystemConfig::noise_power_watts() const {
  return total_power_watts() * snr_inverse();
}

std::vector<std::string> SystemConfig::violations() const {
  std::vector<std::string> v;
  auto bad = [&](const std::string& msg) { v.push_back(msg); };
  if (n_antennas < 1) bad("n_antennas must be >= 1");
  if (!(element_spacing_over_lambda > 0.0))
    bad("element_spacing_over_lambda must be > 0");
  if (!(theta_b_deg > 0.0 && theta_b_deg < 180.0))
    bad("theta_b_deg must lie in (0, 180)");
  if (!(theta_e_deg > 0.0 && theta_e_deg < 180.0))
    bad("theta_e_deg must lie in (0, 180)");
  if (!std::isfinite(total_power_dbm)) bad("total_power_dbm must be finite");
  if (!std::isfinite(snr_db)) bad("snr_db must be finite");
  if (!(noise_power_watts() > 0.0)) bad("derived noise power must be > 0");
  if (!(tol.power_iter_tol > 0.0)) bad("power_iter_tol must be > 0");
  if (tol.power_iter_max_iter < 1) bad("power_iter_max_iter must be >= 1");
  if (!(tol.gpi_tol > 0.0)) bad("gpi_tol must be > 0");
  if (tol.gpi_max_iter < 1) bad("gpi_max_iter must be >= 1");
  if (!(tol.ais_tol > 0.0)) bad("ais_tol must be > 0");
  if (tol.ais_max_outer_iter < 1) bad("ais_max_outer_iter must be >= 1");
  return v;
}

void SystemConfig::ensure_valid() const {
  const auto v = violations();
  if (v.empty()) return;
  std::ostringstream os;
  os << "invalid SystemConfig:";
  for (const auto& msg : v) os << " [" << msg << "]";
  throw std::invalid_argument(os.str());
}

CVec steering_vector(int n_antennas, double theta_deg, double spacing_over_lambda) {
  if (n_antennas < 1)
    throw std::invalid_argument("steering_vector: n_antennas must be >= 1");
  const double cos_theta = std::cos(theta_deg * std::numbers::pi / 180.0);
  const double step = 2.0 * std::numbers::pi * spacing_over_lambda * cos_theta;
  const double amp = 1.0 / std::sqrt(static_cast<double>(n_antennas));
  CVec h(static_cast<std::size_t>(n_antennas));
  for (int n = 0; n < n_antennas; ++n)
    h[static_cast<std::size_t>(n)] = std::polar(amp, step * n);
  return h;
}

ChannelPair build_channels(const SystemConfig& cfg) {
  cfg.ensure_valid();
  return ChannelPair{
      steering_vector(cfg.n_antennas, cfg.theta_b_deg, cfg.element_spacing_over_lambda),
      steering_vector(cfg.n_antennas, cfg.theta_e_deg, cfg.element_spacing_over_lambda)};
}

}  // namespace dmsec
