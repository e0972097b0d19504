// Copyright 2026 The dualsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "dualsim/errors.hpp"

namespace dualsim {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroState: return "zero_state";
    case ErrorCode::ExclusionViolation: return "exclusion_violation";
    case ErrorCode::StatisticsMismatch: return "statistics_mismatch";
    case ErrorCode::NotEprForm: return "not_epr_form";
    case ErrorCode::SpeciesSuperpositionForbidden:
      return "species_superposition_forbidden";
    case ErrorCode::SettingsNotInPlane: return "settings_not_in_plane";
    case ErrorCode::InsufficientShots: return "insufficient_shots";
    case ErrorCode::ConfigError: return "config_error";
    case ErrorCode::InvalidArgument: return "invalid_argument";
  }
  return "unknown";
}

}  // namespace dualsim
