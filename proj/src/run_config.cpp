// Copyright 2026 The dualsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "dualsim/run_config.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

namespace dualsim {

namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;

BellSettings explicit_settings(const std::array<double, 8>& deg) {
  auto s = [&](int i) {
    return PseudoSpinSetting{deg[i] * kDegToRad, deg[i + 1] * kDegToRad};
  };
  return BellSettings{s(0), s(2), s(4), s(6)};
}

std::string csv_row(std::initializer_list<double> values) {
  std::string out;
  bool first = true;
  for (double v : values) {
    if (!first) out += ',';
    out += format_double(v);
    first = false;
  }
  out += '\n';
  return out;
}

std::string render_dualize(const RunConfig& config) {
  if (config.nip) {
    TwoSpeciesState nip =
        TwoSpeciesState::epr_analogue(config.alpha(), config.beta());
    LabeledBipartiteState form = attempt_relabel_by_b_nip(nip);
    if (config.format == OutputFormat::Csv) {
      std::string out = "form,c1_re,c1_im,c2_re,c2_im,concurrence\n";
      out += "nip_b";
      out += ',';
      out += csv_row({form.c1().real(), form.c1().imag(), form.c2().real(),
                      form.c2().imag(), concurrence(form)});
      return out;
    }
    return to_json(form).dump(2) + "\n";
  }
  TwoParticleState state = build_epr_state(VariableSpec(), config.alpha(),
                                           config.beta(), config.statistics);
  LabeledBipartiteState a_form = relabel_by_a(state);
  LabeledBipartiteState b_form = relabel_by_b(state);
  if (config.format == OutputFormat::Csv) {
    std::string out = "form,c1_re,c1_im,c2_re,c2_im,concurrence\n";
    out += "a," + csv_row({a_form.c1().real(), a_form.c1().imag(),
                           a_form.c2().real(), a_form.c2().imag(),
                           concurrence(a_form)});
    out += "b," + csv_row({b_form.c1().real(), b_form.c1().imag(),
                           b_form.c2().real(), b_form.c2().imag(),
                           concurrence(b_form)});
    return out;
  }
  Json out{{"input_state", to_json(state)},
           {"a_form", to_json(a_form)},
           {"b_form", to_json(b_form)},
           {"concurrence_a", concurrence(a_form)},
           {"concurrence_b", concurrence(b_form)}};
  return out.dump(2) + "\n";
}

std::string render_chsh(const RunConfig& config) {
  TwoParticleState state = build_epr_state(VariableSpec(), config.alpha(),
                                           config.beta(), config.statistics);
  LabeledBipartiteState form = config.form == VariableId::A
                                   ? relabel_by_a(state)
                                   : relabel_by_b(state);
  if (config.settings.kind == SettingsKind::Optimal) {
    ChshOptimum optimum = chsh_optimal(form);
    if (config.format == OutputFormat::Csv) {
      return "max_abs_s,criterion_value\n" +
             csv_row({optimum.max_abs_s, optimum.criterion_value});
    }
    return to_json(optimum).dump(2) + "\n";
  }
  BellSettings settings = config.settings.kind == SettingsKind::Canonical
                              ? BellSettings::canonical()
                              : explicit_settings(config.settings.angles_deg);
  ChshResult result = bell_expectation(form, settings);
  if (config.format == OutputFormat::Csv) {
    return "e_ab,e_ab_prime,e_a_prime_b,e_a_prime_b_prime,s\n" +
           csv_row({result.e_ab, result.e_ab_prime, result.e_a_prime_b,
                    result.e_a_prime_b_prime, result.s});
  }
  return to_json(result).dump(2) + "\n";
}

std::string render_sign_report(const RunConfig& config) {
  TwoParticleState state = build_epr_state(VariableSpec(), config.alpha(),
                                           config.beta(), config.statistics);
  if (config.settings.kind == SettingsKind::Optimal)
    throw BadConfigError("sign-report requires canonical or explicit settings");
  BellSettings settings = config.settings.kind == SettingsKind::Canonical
                              ? BellSettings::canonical()
                              : explicit_settings(config.settings.angles_deg);
  SignDifferenceReport report = sign_difference_report(state, settings);
  if (config.format == OutputFormat::Csv) {
    std::string out = "s_a_form,s_b_form,ratio_sign\n";
    out += format_double(report.a_form.s);
    out += ',';
    out += format_double(report.b_form.s);
    out += ',';
    out += std::to_string(report.ratio_sign);
    out += '\n';
    return out;
  }
  return to_json(report).dump(2) + "\n";
}

std::string render_sample(const RunConfig& config) {
  TwoParticleState state =
      build_epr_state(VariableSpec::photonic(), config.alpha(), config.beta(),
                      config.statistics);
  LabeledBipartiteState routed = route_through_pbs(state, config.routing);
  BellSettings settings;
  switch (config.settings.kind) {
    case SettingsKind::Canonical:
      settings = BellSettings::canonical();
      break;
    case SettingsKind::Optimal:
      settings = chsh_optimal(routed).settings;
      break;
    case SettingsKind::Explicit:
      settings = explicit_settings(config.settings.angles_deg);
      break;
  }
  CoincidenceRecord record = sample_coincidences(
      routed, settings, config.shots, config.seed, config.efficiency);
  if (config.format == OutputFormat::Csv) return to_csv(record);
  ChshEstimate estimate = estimate_chsh(record);
  Json out{{"record", to_json(record)}, {"estimate", to_json(estimate)}};
  return out.dump(2) + "\n";
}

std::string render_sweep(const RunConfig& config) {
  TwoParticleState state = build_epr_state(VariableSpec(), config.alpha(),
                                           config.beta(), config.statistics);
  SettingsMode mode;
  switch (config.settings.kind) {
    case SettingsKind::Canonical:
      mode = SettingsMode::FixedCanonical;
      break;
    case SettingsKind::Optimal:
      mode = SettingsMode::Optimal;
      break;
    default:
      throw BadConfigError("sweep supports canonical or optimal settings");
  }
  std::vector<double> gammas = config.gammas;
  if (gammas.empty())
    throw BadConfigError("sweep requires a nonempty gamma list");
  std::vector<SweepRow> rows =
      sweep_transition(state, gammas, mode, config.phi_env);
  if (config.format == OutputFormat::Csv) return to_csv(rows, mode);
  return to_json(rows, mode).dump(2) + "\n";
}

}  // namespace

const char* to_string(Command c) {
  switch (c) {
    case Command::Dualize: return "dualize";
    case Command::Chsh: return "chsh";
    case Command::SignReport: return "sign-report";
    case Command::Sample: return "sample";
    case Command::Sweep: return "sweep";
  }
  return "?";
}

Command command_from_string(const std::string& s) {
  if (s == "dualize") return Command::Dualize;
  if (s == "chsh") return Command::Chsh;
  if (s == "sign-report") return Command::SignReport;
  if (s == "sample") return Command::Sample;
  if (s == "sweep") return Command::Sweep;
  throw BadConfigError("unknown command '" + s + "'");
}

Json to_json(const RunConfig& config) {
  Json settings{{"kind", config.settings.kind == SettingsKind::Canonical
                             ? "canonical"
                             : config.settings.kind == SettingsKind::Optimal
                                   ? "optimal"
                                   : "explicit"}};
  if (config.settings.kind == SettingsKind::Explicit)
    settings["angles_deg"] = config.settings.angles_deg;
  return Json{{"command", to_string(config.command)},
              {"alpha_re", config.alpha_re},
              {"alpha_im", config.alpha_im},
              {"beta_re", config.beta_re},
              {"beta_im", config.beta_im},
              {"statistics", to_string(config.statistics)},
              {"settings", settings},
              {"form", to_string(config.form)},
              {"nip", config.nip},
              {"shots", config.shots},
              {"seed", config.seed},
              {"efficiency", config.efficiency},
              {"gammas", config.gammas},
              {"phi_env", config.phi_env},
              {"routing", config.routing.charlie_receives == Polarization::V
                              ? "caption"
                              : "main-text"},
              {"format", config.format == OutputFormat::Csv ? "csv" : "json"},
              {"output", config.output}};
}

RunConfig run_config_from_json(const Json& j) {
  try {
    RunConfig config;
    config.command = command_from_string(j.at("command").get<std::string>());
    config.alpha_re = j.value("alpha_re", config.alpha_re);
    config.alpha_im = j.value("alpha_im", config.alpha_im);
    config.beta_re = j.value("beta_re", config.beta_re);
    config.beta_im = j.value("beta_im", config.beta_im);
    if (j.contains("statistics"))
      config.statistics =
          statistics_from_string(j.at("statistics").get<std::string>());
    if (j.contains("settings")) {
      const Json& s = j.at("settings");
      std::string kind = s.at("kind").get<std::string>();
      if (kind == "canonical") {
        config.settings.kind = SettingsKind::Canonical;
      } else if (kind == "optimal") {
        config.settings.kind = SettingsKind::Optimal;
      } else if (kind == "explicit") {
        config.settings.kind = SettingsKind::Explicit;
        auto angles = s.at("angles_deg").get<std::vector<double>>();
        if (angles.size() != 8)
          throw BadConfigError("explicit settings need 8 angles");
        std::copy(angles.begin(), angles.end(),
                  config.settings.angles_deg.begin());
      } else {
        throw BadConfigError("unknown settings kind '" + kind + "'");
      }
    }
    if (j.contains("form")) {
      std::string f = j.at("form").get<std::string>();
      if (f == "A" || f == "a") config.form = VariableId::A;
      else if (f == "B" || f == "b") config.form = VariableId::B;
      else throw BadConfigError("unknown form '" + f + "'");
    }
    config.nip = j.value("nip", false);
    config.shots = j.value("shots", config.shots);
    config.seed = j.value("seed", config.seed);
    config.efficiency = j.value("efficiency", 1.0);
    if (j.contains("gammas"))
      config.gammas = j.at("gammas").get<std::vector<double>>();
    config.phi_env = j.value("phi_env", 0.0);
    if (j.contains("routing")) {
      std::string r = j.at("routing").get<std::string>();
      if (r == "caption") config.routing = RoutingConvention::caption();
      else if (r == "main-text") config.routing = RoutingConvention::main_text();
      else throw BadConfigError("unknown routing convention '" + r + "'");
    }
    if (j.contains("format")) {
      std::string f = j.at("format").get<std::string>();
      if (f == "csv") config.format = OutputFormat::Csv;
      else if (f == "json") config.format = OutputFormat::Json;
      else throw BadConfigError("unknown output format '" + f + "'");
    }
    config.output = j.value("output", std::string("-"));
    return config;
  } catch (const Json::exception& e) {
    throw BadConfigError(std::string("malformed config: ") + e.what());
  }
}

std::vector<double> parse_gamma_list(const std::string& text) {
  std::vector<double> values;
  auto parse_num = [](const std::string& tok) {
    std::size_t pos = 0;
    double v;
    try {
      v = std::stod(tok, &pos);
    } catch (const std::exception&) {
      throw BadConfigError("cannot parse number '" + tok + "'");
    }
    if (pos != tok.size())
      throw BadConfigError("cannot parse number '" + tok + "'");
    return v;
  };
  if (text.find(':') != std::string::npos) {
    std::stringstream ss(text);
    std::string tok;
    std::vector<double> parts;
    while (std::getline(ss, tok, ':')) parts.push_back(parse_num(tok));
    if (parts.size() != 3)
      throw BadConfigError("range must be start:end:step");
    double start = parts[0], end = parts[1], step = parts[2];
    if (step <= 0.0) throw BadConfigError("range step must be positive");
    for (int i = 0;; ++i) {
      double v = start + i * step;
      if (v > end + 1e-12) break;
      values.push_back(std::min(v, end));
    }
    return values;
  }
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) values.push_back(parse_num(tok));
  if (values.empty()) throw BadConfigError("empty gamma list");
  return values;
}

std::string render_output(const RunConfig& config) {
  switch (config.command) {
    case Command::Dualize: return render_dualize(config);
    case Command::Chsh: return render_chsh(config);
    case Command::SignReport: return render_sign_report(config);
    case Command::Sample: return render_sample(config);
    case Command::Sweep: return render_sweep(config);
  }
  throw BadConfigError("unknown command");
}

void run(const RunConfig& config) {
  std::string payload = render_output(config);
  if (config.output == "-") {
    std::cout << payload;
    return;
  }
  std::ofstream out(config.output, std::ios::binary);
  if (!out)
    throw BadConfigError("cannot open output file '" + config.output + "'");
  out << payload;
}

}  // namespace dualsim
