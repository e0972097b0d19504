// Copyright 2026 The dualsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "dualsim/decoherence.hpp"
#include "dualsim/optics.hpp"

namespace dualsim {

// Insertion-ordered JSON keeps output layouts stable.
using Json = nlohmann::ordered_json;

Json to_json(const VariableSpec& spec);
Json to_json(const TwoParticleState& state);
Json to_json(const LabeledBipartiteState& state);
Json to_json(const PseudoSpinSetting& setting);
Json to_json(const BellSettings& settings);
Json to_json(const ChshResult& result);
Json to_json(const ChshOptimum& optimum);
Json to_json(const SignDifferenceReport& report);
Json to_json(const CoincidenceRecord& record);
Json to_json(const ChshEstimate& estimate);
Json to_json(const std::vector<SweepRow>& rows, SettingsMode mode);

// CSV renderings; numbers use round-trip precision for reproducibility.
std::string to_csv(const CoincidenceRecord& record);
std::string to_csv(const std::vector<SweepRow>& rows, SettingsMode mode);

std::string format_double(double value);

}  // namespace dualsim
