// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 dmsec contributors

#include "dmsec/config.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

namespace dmsec {

const char* scheme_name(Scheme s) {
  switch (s) {
    case Scheme::ais: return "ais";
    case Scheme::nsp: return "nsp";
    case Scheme::both: return "both";
  }
  return "?";
}

SystemConfig ExperimentSpec::config_for(int n, double snr_db) const {
  SystemConfig cfg = base;
  cfg.n_antennas = n;
  cfg.snr_db = snr_db;
  return cfg;
}

namespace {

struct Entry {
  std::string value;
  int line = 0;
  bool used = false;
};

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) {
      if (!cur.empty()) {
        out.push_back(cur);
        cur.clear();
      }
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

class SpecBuilder {
 public:
  explicit SpecBuilder(ConfigResult& result) : r_(result) {}

  void add_entry(const std::string& key, const std::string& value, int line) {
    if (entries_.count(key)) {
      err(line, key, "duplicate key");
      return;
    }
    entries_[key] = Entry{value, line, false};
  }

  void err(int line, const std::string& field, const std::string& msg) {
    std::ostringstream os;
    if (line > 0) os << "line " << line << ": ";
    os << "field '" << field << "': " << msg;
    r_.errors.push_back(os.str());
  }

  void parse_error(int line, const std::string& msg) {
    std::ostringstream os;
    os << "line " << line << ": " << msg;
    r_.errors.push_back(os.str());
  }

  const Entry* find(const std::string& key) {
    auto it = entries_.find(key);
    if (it == entries_.end()) return nullptr;
    it->second.used = true;
    return &it->second;
  }

  bool get_double(const std::string& key, double& out) {
    const Entry* e = find(key);
    if (!e) return false;
    if (!to_double(e->value, out)) err(e->line, key, "not a number: '" + e->value + "'");
    return true;
  }

  bool get_int(const std::string& key, int& out) {
    const Entry* e = find(key);
    if (!e) return false;
    double d;
    if (!to_double(e->value, d) || d != static_cast<int>(d))
      err(e->line, key, "not an integer: '" + e->value + "'");
    else
      out = static_cast<int>(d);
    return true;
  }

  bool get_double_list(const std::string& key, std::vector<double>& out) {
    const Entry* e = find(key);
    if (!e) return false;
    std::vector<double> vals;
    for (const std::string& tok : split_list(e->value)) {
      double d;
      if (!to_double(tok, d)) {
        err(e->line, key, "not a number: '" + tok + "'");
        return true;
      }
      vals.push_back(d);
    }
    if (vals.empty())
      err(e->line, key, "empty list");
    else
      out = std::move(vals);
    return true;
  }

  bool get_int_list(const std::string& key, std::vector<int>& out) {
    const Entry* e = find(key);
    if (!e) return false;
    std::vector<int> vals;
    for (const std::string& tok : split_list(e->value)) {
      double d;
      if (!to_double(tok, d) || d != static_cast<int>(d)) {
        err(e->line, key, "not an integer: '" + tok + "'");
        return true;
      }
      vals.push_back(static_cast<int>(d));
    }
    if (vals.empty())
      err(e->line, key, "empty list");
    else
      out = std::move(vals);
    return true;
  }

  bool get_string(const std::string& key, std::string& out) {
    const Entry* e = find(key);
    if (!e) return false;
    out = e->value;
    return true;
  }

  void require(const std::string& key) {
    if (!entries_.count(key)) r_.errors.push_back("missing required field '" + key + "'");
  }

  void flag_unknown_keys() {
    for (const auto& [key, e] : entries_)
      if (!e.used) err(e.line, key, "unknown field");
  }

 private:
  static bool to_double(const std::string& s, double& out) {
    const char* begin = s.c_str();
    char* end = nullptr;
    out = std::strtod(begin, &end);
    return end == begin + s.size() && !s.empty();
  }

  ConfigResult& r_;
  std::map<std::string, Entry> entries_;
};

}  // namespace

ConfigResult parse_experiment_spec(const std::string& text) {
  ConfigResult result;
  SpecBuilder b(result);

  std::istringstream in(text);
  std::string raw;
  std::string section;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') {
        b.parse_error(line_no, "unterminated section header: '" + line + "'");
        continue;
      }
      section = trim(line.substr(1, line.size() - 2));
      if (section != "system" && section != "tolerances")
        b.parse_error(line_no, "unknown section '[" + section + "]'");
      continue;
    }
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      b.parse_error(line_no, "expected 'key = value', got '" + line + "'");
      continue;
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) {
      b.parse_error(line_no, "empty key");
      continue;
    }
    b.add_entry(section.empty() ? key : section + "." + key, value, line_no);
  }

  ExperimentSpec& spec = result.spec;

  b.require("system.n_antennas");
  b.require("system.snr_db");

  std::string scheme;
  if (b.get_string("scheme", scheme)) {
    if (scheme == "ais")
      spec.scheme = Scheme::ais;
    else if (scheme == "nsp")
      spec.scheme = Scheme::nsp;
    else if (scheme == "both")
      spec.scheme = Scheme::both;
    else
      b.err(0, "scheme", "expected ais|nsp|both, got '" + scheme + "'");
  }
  b.get_string("out_dir", spec.out_dir);
  {
    int seed;
    if (b.get_int("seed", seed)) spec.seed = seed;
  }
  std::string stop_rule;
  if (b.get_string("stop_rule", stop_rule)) {
    if (stop_rule == "abs")
      spec.base.tol.ais_fractional_stop = false;
    else if (stop_rule == "frac")
      spec.base.tol.ais_fractional_stop = true;
    else
      b.err(0, "stop_rule", "expected abs|frac, got '" + stop_rule + "'");
  }

  b.get_int_list("system.n_antennas", spec.n_list);
  b.get_double_list("system.snr_db", spec.snr_db_list);
  b.get_double("system.theta_b_deg", spec.base.theta_b_deg);
  b.get_double("system.theta_e_deg", spec.base.theta_e_deg);
  b.get_double("system.element_spacing_over_lambda",
               spec.base.element_spacing_over_lambda);
  b.get_double("system.total_power_dbm", spec.base.total_power_dbm);

  b.get_double("tolerances.power_iter_tol", spec.base.tol.power_iter_tol);
  b.get_int("tolerances.power_iter_max_iter", spec.base.tol.power_iter_max_iter);
  b.get_double("tolerances.gpi_tol", spec.base.tol.gpi_tol);
  b.get_int("tolerances.gpi_max_iter", spec.base.tol.gpi_max_iter);
  b.get_double("tolerances.ais_tol", spec.base.tol.ais_tol);
  b.get_int("tolerances.ais_max_outer_iter", spec.base.tol.ais_max_outer_iter);

  b.flag_unknown_keys();

  // Invariant checks on the assembled spec (only once parsing held up).
  if (result.errors.empty()) {
    for (int n : spec.n_list)
      if (n < 1) b.err(0, "n_antennas", "every antenna count must be >= 1");
    SystemConfig probe = spec.base;
    if (!spec.n_list.empty()) probe.n_antennas = spec.n_list.front();
    if (!spec.snr_db_list.empty()) probe.snr_db = spec.snr_db_list.front();
    for (const std::string& v : probe.violations()) b.err(0, "system", v);
    if (spec.base.theta_b_deg == spec.base.theta_e_deg)
      result.warnings.push_back(
          "zero-secrecy geometry: theta_b_deg equals theta_e_deg");
  }
  return result;
}

ConfigResult load_experiment_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    ConfigResult r;
    r.errors.push_back("cannot open config file '" + path + "'");
    return r;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_experiment_spec(buf.str());
}

}  // namespace dmsec
