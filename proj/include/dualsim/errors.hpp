// Copyright 2026 The dualsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace dualsim {

// Every failure mode of the library maps to one of these codes. The CLI
// turns them into distinct process exit codes (see DomainError::exit_code).
enum class ErrorCode {
  ZeroState,
  ExclusionViolation,
  StatisticsMismatch,
  NotEprForm,
  SpeciesSuperpositionForbidden,
  SettingsNotInPlane,
  InsufficientShots,
  ConfigError,
  InvalidArgument,
};

const char* error_code_name(ErrorCode code);

class DomainError : public std::runtime_error {
 public:
  DomainError(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }
  const char* code_name() const { return error_code_name(code_); }

  // Stable, documented exit codes starting at 3 (0 = ok, 1 = unexpected
  // failure, 2 = command-line/config parse error).
  int exit_code() const { return 3 + static_cast<int>(code_); }

 private:
  ErrorCode code_;
};

struct ZeroStateError : DomainError {
  explicit ZeroStateError(const std::string& m)
      : DomainError(ErrorCode::ZeroState, m) {}
};

struct ExclusionViolationError : DomainError {
  explicit ExclusionViolationError(const std::string& m)
      : DomainError(ErrorCode::ExclusionViolation, m) {}
};

struct StatisticsMismatchError : DomainError {
  explicit StatisticsMismatchError(const std::string& m)
      : DomainError(ErrorCode::StatisticsMismatch, m) {}
};

struct NotEprFormError : DomainError {
  explicit NotEprFormError(const std::string& m)
      : DomainError(ErrorCode::NotEprForm, m) {}
};

struct SpeciesSuperpositionForbiddenError : DomainError {
  explicit SpeciesSuperpositionForbiddenError(const std::string& m)
      : DomainError(ErrorCode::SpeciesSuperpositionForbidden, m) {}
};

struct SettingsNotInPlaneError : DomainError {
  explicit SettingsNotInPlaneError(const std::string& m)
      : DomainError(ErrorCode::SettingsNotInPlane, m) {}
};

struct InsufficientShotsError : DomainError {
  explicit InsufficientShotsError(const std::string& m)
      : DomainError(ErrorCode::InsufficientShots, m) {}
};

struct BadConfigError : DomainError {
  explicit BadConfigError(const std::string& m)
      : DomainError(ErrorCode::ConfigError, m) {}
};

struct InvalidArgumentError : DomainError {
  explicit InvalidArgumentError(const std::string& m)
      : DomainError(ErrorCode::InvalidArgument, m) {}
};

}  // namespace dualsim
