// Copyright 2026 The dualsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "dualsim/serialize.hpp"

namespace dualsim {

enum class Command { Dualize, Chsh, SignReport, Sample, Sweep };
enum class SettingsKind { Canonical, Optimal, Explicit };
enum class OutputFormat { Csv, Json };

// Angles are accepted and stored in degrees; radians are used internally.
// Order: theta_a, phi_a, theta_a', phi_a', theta_b, phi_b, theta_b', phi_b'.
struct SettingsChoice {
  SettingsKind kind = SettingsKind::Canonical;
  std::array<double, 8> angles_deg{};
};

struct RunConfig {
  Command command = Command::Dualize;

  double alpha_re = 1.0 / 1.4142135623730951;
  double alpha_im = 0.0;
  double beta_re = 1.0 / 1.4142135623730951;
  double beta_im = 0.0;
  Statistics statistics = Statistics::Boson;

  SettingsChoice settings;
  VariableId form = VariableId::B;  // bipartite reading used by `chsh`
  bool nip = false;                 // `dualize --nip`

  std::uint64_t shots = 100000;
  std::uint64_t seed = 1;
  double efficiency = 1.0;

  std::vector<double> gammas;
  double phi_env = 0.0;
  RoutingConvention routing = RoutingConvention::caption();

  OutputFormat format = OutputFormat::Json;
  std::string output = "-";  // "-" means stdout

  Complex alpha() const { return Complex{alpha_re, alpha_im}; }
  Complex beta() const { return Complex{beta_re, beta_im}; }
};

const char* to_string(Command c);
Command command_from_string(const std::string& s);

Json to_json(const RunConfig& config);
RunConfig run_config_from_json(const Json& j);

// "0:1:0.25" (inclusive range) or "0,0.5,1" (explicit list).
std::vector<double> parse_gamma_list(const std::string& text);

// Renders the command's output artifact (CSV or JSON text).
std::string render_output(const RunConfig& config);

// Renders and writes to config.output ("-" = stdout). Throws DomainError
// on domain failures; the CLI maps codes to exit codes.
void run(const RunConfig& config);

}  // namespace dualsim
