// Copyright 2026 The dualsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "dualsim/decoherence.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace dualsim {

EnvironmentOverlap::EnvironmentOverlap(double gamma_in, double phi_env_in)
    : gamma(gamma_in), phi_env(phi_env_in) {
  if (gamma < 0.0 || gamma > 1.0)
    throw InvalidArgumentError("environment overlap magnitude outside [0, 1]");
}

Complex EnvironmentOverlap::overlap() const {
  return gamma * std::exp(Complex(0, phi_env));
}

ReducedDensityMatrix::ReducedDensityMatrix(Eigen::Matrix4cd rho,
                                           VariableId label_variable)
    : rho_(std::move(rho)), label_(label_variable) {
  if ((rho_ - rho_.adjoint()).cwiseAbs().maxCoeff() > kTol)
    throw InvalidArgumentError("density matrix is not Hermitian");
  if (std::abs(rho_.trace() - Complex{1.0, 0.0}) > kTol)
    throw InvalidArgumentError("density matrix trace differs from 1");
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(rho_,
                                                     Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-10)
    throw InvalidArgumentError("density matrix has a negative eigenvalue");
}

ReducedDensityMatrix ReducedDensityMatrix::pure(
    const LabeledBipartiteState& state) {
  Eigen::Vector4cd psi = two_qubit_vector(state);
  return ReducedDensityMatrix(psi * psi.adjoint(), state.label_variable());
}

ReducedDensityMatrix dephase_dual_form(const TwoParticleState& s,
                                       const EnvironmentOverlap& env,
                                       DualForm form) {
  LabeledBipartiteState reading =
      form == DualForm::ALabeled ? relabel_by_a(s) : relabel_by_b(s);

  // Two-dimensional environment embedding with the prescribed overlap.
  Eigen::Vector2cd chi1, chi2;
  chi1 << Complex{1.0, 0.0}, Complex{0.0, 0.0};
  chi2 << env.overlap(), std::sqrt(1.0 - env.gamma * env.gamma);

  // Each superposition term ties one environment state to each tensor slot:
  // the environment follows the trap (the A-eigenvalue). In the A-labeled
  // reading the trap is the slot itself, so both terms carry chi1 (x) chi2;
  // in the B-labeled reading term 1 carries chi1 (x) chi2 and term 2, where
  // the traps sit in the opposite slots, carries chi2 (x) chi1.
  const std::array<Eigen::Vector2cd, 2> term1_env = {chi1, chi2};
  const std::array<Eigen::Vector2cd, 2> term2_env =
      form == DualForm::ALabeled ? std::array<Eigen::Vector2cd, 2>{chi1, chi2}
                                 : std::array<Eigen::Vector2cd, 2>{chi2, chi1};

  // Full vector over (system qubit pair) (x) (environment pair), then trace
  // out the environment indices.
  Eigen::Matrix<Complex, 4, 4> full = Eigen::Matrix<Complex, 4, 4>::Zero();
  for (int e1 = 0; e1 < 2; ++e1)
    for (int e2 = 0; e2 < 2; ++e2) {
      full(1, 2 * e1 + e2) += reading.c1() * term1_env[0](e1) * term1_env[1](e2);
      full(2, 2 * e1 + e2) += reading.c2() * term2_env[0](e1) * term2_env[1](e2);
    }
  Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int e = 0; e < 4; ++e) rho(i, j) += full(i, e) * std::conj(full(j, e));
  return ReducedDensityMatrix(rho, reading.label_variable());
}

ChshResult chsh_from_dm(const ReducedDensityMatrix& rho,
                        const BellSettings& settings) {
  return bell_expectation(rho.matrix(), settings);
}

ChshOptimum chsh_optimal(const ReducedDensityMatrix& rho) {
  return chsh_optimal(rho.matrix());
}

const char* to_string(SettingsMode m) {
  return m == SettingsMode::FixedCanonical ? "fixed-canonical" : "optimal";
}

std::vector<SweepRow> sweep_transition(const TwoParticleState& s,
                                       const std::vector<double>& gammas,
                                       SettingsMode mode, double phi_env) {
  std::vector<SweepRow> rows;
  rows.reserve(gammas.size());
  const BellSettings canonical = BellSettings::canonical();
  for (double gamma : gammas) {
    EnvironmentOverlap env(gamma, phi_env);
    ReducedDensityMatrix spin = dephase_dual_form(s, env, DualForm::ALabeled);
    ReducedDensityMatrix momentum =
        dephase_dual_form(s, env, DualForm::BLabeled);
    SweepRow row;
    row.gamma = gamma;
    if (mode == SettingsMode::FixedCanonical) {
      row.s_spin = chsh_from_dm(spin, canonical).s;
      row.s_momentum = chsh_from_dm(momentum, canonical).s;
    } else {
      row.s_spin = chsh_optimal(spin).max_abs_s;
      row.s_momentum = chsh_optimal(momentum).max_abs_s;
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace dualsim
