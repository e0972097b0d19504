// Copyright 2026 The dualsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "dualsim/serialize.hpp"

#include <cstdio>

namespace dualsim {

std::string format_double(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

namespace {

Json complex_json(const Complex& z) {
  return Json{{"re", z.real()}, {"im", z.imag()}};
}

}  // namespace

Json to_json(const VariableSpec& spec) {
  return Json{{"name_a", spec.name_a},
              {"name_b", spec.name_b},
              {"eigenlabels_a", spec.eigenlabels_a},
              {"eigenlabels_b", spec.eigenlabels_b}};
}

Json to_json(const TwoParticleState& state) {
  Json amplitudes = Json::array();
  const auto& basis = TwoParticleState::basis(state.statistics());
  const auto& amps = state.amplitudes();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    amplitudes.push_back(
        Json{{"modes",
              Json::array({Json::array({basis[i].lo.a_index, basis[i].lo.b_index}),
                           Json::array({basis[i].hi.a_index, basis[i].hi.b_index})})},
             {"re", amps[i].real()},
             {"im", amps[i].imag()}});
  }
  return Json{{"statistics", to_string(state.statistics())},
              {"variable_spec", to_json(state.variable_spec())},
              {"amplitudes", amplitudes}};
}

Json to_json(const LabeledBipartiteState& state) {
  return Json{{"label_variable", to_string(state.label_variable())},
              {"entangled_variable", to_string(state.entangled_variable())},
              {"c1", complex_json(state.c1())},
              {"c2", complex_json(state.c2())}};
}

Json to_json(const PseudoSpinSetting& setting) {
  return Json{{"theta", setting.theta}, {"phi", setting.phi}};
}

Json to_json(const BellSettings& settings) {
  return Json{{"a", to_json(settings.a)},
              {"a_prime", to_json(settings.a_prime)},
              {"b", to_json(settings.b)},
              {"b_prime", to_json(settings.b_prime)}};
}

Json to_json(const ChshResult& result) {
  return Json{{"correlators",
               Json{{"e_ab", result.e_ab},
                    {"e_ab_prime", result.e_ab_prime},
                    {"e_a_prime_b", result.e_a_prime_b},
                    {"e_a_prime_b_prime", result.e_a_prime_b_prime}}},
              {"s", result.s},
              {"settings", to_json(result.settings)}};
}

Json to_json(const ChshOptimum& optimum) {
  return Json{{"max_abs_s", optimum.max_abs_s},
              {"criterion_value", optimum.criterion_value},
              {"settings", to_json(optimum.settings)}};
}

Json to_json(const SignDifferenceReport& report) {
  return Json{{"s_a_form", report.a_form.s},
              {"s_b_form", report.b_form.s},
              {"ratio_sign", report.ratio_sign},
              {"a_form", to_json(report.a_form)},
              {"b_form", to_json(report.b_form)}};
}

Json to_json(const CoincidenceRecord& record) {
  Json pairs = Json::array();
  for (unsigned k = 0; k < 4; ++k) {
    const PairCounts& c = record.pairs[k];
    Json counts{{"pp", c.pp}, {"pm", c.pm}, {"mp", c.mp}, {"mm", c.mm}};
    if (record.efficiency < 1.0) counts["no_click"] = c.no_click;
    pairs.push_back(
        Json{{"settings_pair", kSettingsPairNames[k]}, {"counts", counts}});
  }
  Json out{{"shots", record.shots},
           {"seed", record.seed},
           {"settings", to_json(record.settings)},
           {"pairs", pairs}};
  if (record.efficiency < 1.0) out["efficiency"] = record.efficiency;
  return out;
}

Json to_json(const ChshEstimate& estimate) {
  return Json{{"s_hat", estimate.s_hat},
              {"standard_error", estimate.standard_error},
              {"correlators",
               Json{{"e_ab", estimate.correlators[0]},
                    {"e_ab_prime", estimate.correlators[1]},
                    {"e_a_prime_b", estimate.correlators[2]},
                    {"e_a_prime_b_prime", estimate.correlators[3]}}}};
}

Json to_json(const std::vector<SweepRow>& rows, SettingsMode mode) {
  Json arr = Json::array();
  for (const SweepRow& row : rows)
    arr.push_back(Json{{"gamma", row.gamma},
                       {"s_spin", row.s_spin},
                       {"s_momentum", row.s_momentum},
                       {"settings_mode", to_string(mode)}});
  return Json{{"rows", arr}};
}

std::string to_csv(const CoincidenceRecord& record) {
  std::string out = "settings_pair,outcome,count,shots,seed\n";
  const std::array<const char*, 5> outcome_names = {"++", "+-", "-+", "--",
                                                    "no_click"};
  for (unsigned k = 0; k < 4; ++k) {
    const PairCounts& c = record.pairs[k];
    std::array<std::uint64_t, 5> counts = {c.pp, c.pm, c.mp, c.mm, c.no_click};
    unsigned rows = record.efficiency < 1.0 ? 5 : 4;
    for (unsigned o = 0; o < rows; ++o) {
      out += kSettingsPairNames[k];
      out += ',';
      out += outcome_names[o];
      out += ',';
      out += std::to_string(counts[o]);
      out += ',';
      out += std::to_string(record.shots);
      out += ',';
      out += std::to_string(record.seed);
      out += '\n';
    }
  }
  return out;
}

std::string to_csv(const std::vector<SweepRow>& rows, SettingsMode mode) {
  std::string out = "gamma,s_spin,s_momentum,settings_mode\n";
  for (const SweepRow& row : rows) {
    out += format_double(row.gamma);
    out += ',';
    out += format_double(row.s_spin);
    out += ',';
    out += format_double(row.s_momentum);
    out += ',';
    out += to_string(mode);
    out += '\n';
  }
  return out;
}

}  // namespace dualsim
