// Copyright 2026 The dualsim Authors
// SPDX-License-Identifier: Apache-2.0

// Command-line front end: builds two-term entangled states, reports their
// dual bipartite readings, evaluates CHSH expectations, runs the sampled
// coincidence protocol, and sweeps the decoherence transition.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "dualsim/run_config.hpp"

namespace {

using namespace dualsim;

SettingsChoice parse_settings_choice(const std::string& text) {
  SettingsChoice choice;
  if (text == "canonical") {
    choice.kind = SettingsKind::Canonical;
    return choice;
  }
  if (text == "optimal") {
    choice.kind = SettingsKind::Optimal;
    return choice;
  }
  choice.kind = SettingsKind::Explicit;
  std::stringstream ss(text);
  std::string tok;
  std::size_t i = 0;
  while (std::getline(ss, tok, ',')) {
    if (i >= 8) throw BadConfigError("settings need exactly 8 angles");
    try {
      choice.angles_deg[i++] = std::stod(tok);
    } catch (const std::exception&) {
      throw BadConfigError("cannot parse angle '" + tok + "'");
    }
  }
  if (i != 8)
    throw BadConfigError(
        "settings must be 'canonical', 'optimal', or 8 comma-separated "
        "angles in degrees");
  return choice;
}

void apply_named_state(const std::string& name, RunConfig& cfg) {
  const double inv_sqrt2 = 1.0 / 1.4142135623730951;
  if (name == "bell") {
    cfg.alpha_re = inv_sqrt2;
    cfg.alpha_im = 0.0;
    cfg.beta_re = inv_sqrt2;
    cfg.beta_im = 0.0;
  } else if (name == "product") {
    cfg.alpha_re = 1.0;
    cfg.alpha_im = 0.0;
    cfg.beta_re = 0.0;
    cfg.beta_im = 0.0;
  } else {
    throw BadConfigError("unknown named state '" + name +
                         "' (expected 'bell' or 'product')");
  }
}

struct CliOptions {
  std::string state_name;
  std::string stats = "boson";
  std::string settings;
  std::string form = "b";
  std::string routing = "caption";
  std::string gammas;
  std::string times;
  double tau = 0.0;
  std::string format = "json";
};

void add_state_options(CLI::App* cmd, RunConfig& cfg, CliOptions& opts) {
  cmd->add_option("--alpha", cfg.alpha_re, "Real part of alpha");
  cmd->add_option("--alpha-im", cfg.alpha_im, "Imaginary part of alpha");
  cmd->add_option("--beta", cfg.beta_re, "Real part of beta");
  cmd->add_option("--beta-im", cfg.beta_im, "Imaginary part of beta");
  cmd->add_option("--state", opts.state_name,
                  "Named state: 'bell' (alpha = beta) or 'product'");
  cmd->add_option("--stats", opts.stats, "Statistics: 'boson' or 'fermion'")
      ->check(CLI::IsMember({"boson", "fermion"}));
}

void add_output_options(CLI::App* cmd, RunConfig& cfg, CliOptions& opts) {
  cmd->add_option("--format", opts.format, "Output format: 'csv' or 'json'")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--output,-o", cfg.output,
                  "Output path ('-' for stdout)");
}

int run_cli(int argc, char** argv) {
  CLI::App app{
      "dualsim: dual bipartite readings of two-particle entangled states,\n"
      "CHSH tests on both readings, the sampled optical protocol, and the\n"
      "decoherence-driven quantum-to-classical transition"};
  app.require_subcommand(0, 1);

  std::string config_path;
  app.add_option("--config", config_path,
                 "Load a JSON run configuration and execute it");

  RunConfig cfg;
  CliOptions opts;

  CLI::App* dualize = app.add_subcommand(
      "dualize", "Report both bipartite readings of a two-term state");
  add_state_options(dualize, cfg, opts);
  dualize->add_flag("--nip", cfg.nip,
                    "Use the two-species analogue; the B-labeled reading is "
                    "rejected unless the state is a product");
  add_output_options(dualize, cfg, opts);

  CLI::App* chsh = app.add_subcommand(
      "chsh", "CHSH expectation or optimum on one bipartite reading");
  add_state_options(chsh, cfg, opts);
  chsh->add_option("--form", opts.form, "Reading: 'a' or 'b'")
      ->check(CLI::IsMember({"a", "b", "A", "B"}));
  chsh->add_option("--settings", opts.settings,
                   "'canonical', 'optimal', or 8 angles in degrees");
  add_output_options(chsh, cfg, opts);

  CLI::App* sign = app.add_subcommand(
      "sign-report",
      "Signed CHSH expectation on both readings; exposes the fermionic "
      "sign flip");
  add_state_options(sign, cfg, opts);
  sign->add_option("--settings", opts.settings,
                   "'canonical' or 8 angles in degrees (coherence plane)");
  add_output_options(sign, cfg, opts);

  CLI::App* sample = app.add_subcommand(
      "sample",
      "Route the pair through the polarizing beam splitter and sample "
      "coincidences");
  add_state_options(sample, cfg, opts);
  sample->add_option("--settings", opts.settings,
                     "'canonical', 'optimal', or 8 angles in degrees");
  sample->add_option("--shots", cfg.shots, "Shots per settings pair");
  sample->add_option("--seed", cfg.seed, "Sampling seed");
  sample->add_option("--efficiency", cfg.efficiency,
                     "Detector efficiency in [0, 1]");
  sample->add_option("--routing", opts.routing,
                     "'caption' (V toward Charlie) or 'main-text' (H toward "
                     "Charlie)")
      ->check(CLI::IsMember({"caption", "main-text"}));
  add_output_options(sample, cfg, opts);

  CLI::App* sweep = app.add_subcommand(
      "sweep", "Decoherence sweep of both readings over the overlap gamma");
  add_state_options(sweep, cfg, opts);
  sweep->add_option("--gammas", opts.gammas,
                    "Overlap magnitudes: 'start:end:step' or a comma list");
  sweep->add_option("--times", opts.times,
                    "Hold times; mapped to gamma = exp(-t / tau)");
  sweep->add_option("--tau", opts.tau, "Coherence time for --times");
  sweep->add_option("--phi-env", cfg.phi_env,
                    "Phase of the environment overlap (radians)");
  sweep->add_option("--settings", opts.settings, "'canonical' or 'optimal'");
  add_output_options(sweep, cfg, opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "{\"error\":\"config_error\",\"message\":\""
              << e.get_name() << "\"}" << std::endl;
    return 2;
  }

  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) throw BadConfigError("cannot read config '" + config_path + "'");
    Json parsed;
    try {
      parsed = Json::parse(in);
    } catch (const Json::exception& e) {
      throw BadConfigError(std::string("invalid config JSON: ") + e.what());
    }
    run(run_config_from_json(parsed));
    return 0;
  }

  if (app.get_subcommands().empty()) {
    std::cerr << app.help();
    return 2;
  }
  CLI::App* active = app.get_subcommands().front();

  if (active == dualize) cfg.command = Command::Dualize;
  else if (active == chsh) cfg.command = Command::Chsh;
  else if (active == sign) cfg.command = Command::SignReport;
  else if (active == sample) cfg.command = Command::Sample;
  else cfg.command = Command::Sweep;

  if (!opts.state_name.empty()) apply_named_state(opts.state_name, cfg);
  cfg.statistics = statistics_from_string(opts.stats);
  if (!opts.settings.empty()) cfg.settings = parse_settings_choice(opts.settings);
  cfg.form = (opts.form == "a" || opts.form == "A") ? VariableId::A
                                                    : VariableId::B;
  cfg.routing = opts.routing == "caption" ? RoutingConvention::caption()
                                          : RoutingConvention::main_text();
  cfg.format = opts.format == "csv" ? OutputFormat::Csv : OutputFormat::Json;

  if (cfg.command == Command::Sweep) {
    if (!opts.gammas.empty() && !opts.times.empty())
      throw BadConfigError("--gammas and --times are mutually exclusive");
    if (!opts.times.empty()) {
      if (opts.tau <= 0.0)
        throw BadConfigError("--times requires a positive --tau");
      for (double t : parse_gamma_list(opts.times))
        cfg.gammas.push_back(std::exp(-t / opts.tau));
    } else {
      cfg.gammas = parse_gamma_list(opts.gammas.empty() ? "0:1:0.1"
                                                        : opts.gammas);
    }
  }

  run(cfg);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_cli(argc, argv);
  } catch (const dualsim::DomainError& e) {
    std::cerr << "{\"error\":\"" << e.code_name() << "\",\"message\":\""
              << e.what() << "\"}" << std::endl;
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "{\"error\":\"internal\",\"message\":\"" << e.what()
              << "\"}" << std::endl;
    return 1;
  }
}
