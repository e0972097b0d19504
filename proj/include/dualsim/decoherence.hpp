// Copyright 2026 The dualsim Authors
// SPDX-License-Identifier: Apache-2.0

// Quantum-to-classical transition of the dual entanglement: residual
// degrees of freedom in the two traps evolve into states chi_1, chi_2 whose
// overlap gamma e^{i phi} controls how distinguishable the particles have
// become. Tracing them out leaves the trap-labeled (spin-entangled) reading
// untouched and multiplies the coherence of the spin-labeled
// (momentum-entangled) reading by gamma^2.

#pragma once

#include <vector>

#include "dualsim/bell.hpp"

namespace dualsim {

// <chi_1 | chi_2> = gamma * exp(i phi_env). Only the overlap matters; the
// environments are embedded in two dimensions to make the partial trace an
// explicit computation.
struct EnvironmentOverlap {
  double gamma = 1.0;
  double phi_env = 0.0;

  EnvironmentOverlap(double gamma_in, double phi_env_in = 0.0);

  Complex overlap() const;
};

enum class DualForm { ALabeled, BLabeled };

// 4x4 state over the two-qubit basis of a bipartite reading. Hermitian,
// unit trace, positive semidefinite (checked on construction).
class ReducedDensityMatrix {
 public:
  ReducedDensityMatrix(Eigen::Matrix4cd rho, VariableId label_variable);

  static ReducedDensityMatrix pure(const LabeledBipartiteState& state);

  const Eigen::Matrix4cd& matrix() const { return rho_; }
  VariableId label_variable() const { return label_; }
  VariableId entangled_variable() const { return other(label_); }

  // Off-diagonal element between the two superposition terms, <01|rho|10>.
  Complex coherence() const { return rho_(1, 2); }

 private:
  Eigen::Matrix4cd rho_;
  VariableId label_;
};

// Attaches the per-trap environment states to the requested bipartite
// reading of a two-term state and traces them out. The trap-labeled form
// is returned pure (the environment factor is common to both terms); the
// spin-labeled form keeps its diagonal and has its term coherence
// multiplied by |<chi_1|chi_2>|^2 = gamma^2.
ReducedDensityMatrix dephase_dual_form(const TwoParticleState& s,
                                       const EnvironmentOverlap& env,
                                       DualForm form);

// Trace expectations with the same CHSH convention as the pure-state path.
ChshResult chsh_from_dm(const ReducedDensityMatrix& rho,
                        const BellSettings& settings);
ChshOptimum chsh_optimal(const ReducedDensityMatrix& rho);

enum class SettingsMode { FixedCanonical, Optimal };

const char* to_string(SettingsMode m);

struct SweepRow {
  double gamma = 1.0;
  double s_spin = 0.0;      // trap-labeled reading, unaffected by gamma
  double s_momentum = 0.0;  // spin-labeled reading, suppressed toward 2
};

// One row per gamma. FixedCanonical reports the signed CHSH expectation at
// the canonical settings; Optimal reports max |S| over settings.
std::vector<SweepRow> sweep_transition(const TwoParticleState& s,
                                       const std::vector<double>& gammas,
                                       SettingsMode mode,
                                       double phi_env = 0.0);

}  // namespace dualsim
