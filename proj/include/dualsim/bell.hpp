// Copyright 2026 The dualsim Authors
// SPDX-License-Identifier: Apache-2.0

// Pseudo-spin observables on the dichotomic entangled variable of a
// bipartite form, two-party correlators, the signed CHSH combination, and
// its optimum over measurement settings.
//
// Two-qubit convention, fixed once for the whole library: term 1 of a
// LabeledBipartiteState maps to |01>, term 2 to |10>, with the first qubit
// belonging to label value 1. Directions n = (sin t cos p, sin t sin p,
// cos t) act through n . (sigma_x, sigma_y, sigma_z).

#pragma once

#include <Eigen/Dense>
#include <array>

#include "dualsim/dual_rewrite.hpp"

namespace dualsim {

struct PseudoSpinSetting {
  double theta = 0.0;  // polar angle, radians
  double phi = 0.0;    // azimuthal angle, radians

  std::array<double, 3> direction() const;
};

struct BellSettings {
  PseudoSpinSetting a, a_prime, b, b_prime;

  // All polar angles pi/2 (coherence plane); azimuths 0, pi/2, pi/4, -pi/4.
  static BellSettings canonical();

  bool in_plane(double tol = kTol) const;
};

struct ChshResult {
  double e_ab = 0.0;
  double e_ab_prime = 0.0;
  double e_a_prime_b = 0.0;
  double e_a_prime_b_prime = 0.0;
  // Signed combination E(a,b) + E(a,b') + E(a',b) - E(a',b'); no modulus.
  double s = 0.0;
  BellSettings settings;
};

// n . sigma for a measurement direction.
Eigen::Matrix2cd pauli_direction(const PseudoSpinSetting& setting);

// Column vector (0, c1, c2, 0) in the basis |00>, |01>, |10>, |11>.
Eigen::Vector4cd two_qubit_vector(const LabeledBipartiteState& state);

// <(n_a . sigma) x (n_b . sigma)>. Density-matrix overload shared with the
// decoherence module; the pure-state overload wraps it.
double correlator(const Eigen::Matrix4cd& rho, const PseudoSpinSetting& sa,
                  const PseudoSpinSetting& sb);
double correlator(const LabeledBipartiteState& state,
                  const PseudoSpinSetting& sa, const PseudoSpinSetting& sb);

ChshResult bell_expectation(const Eigen::Matrix4cd& rho,
                            const BellSettings& settings);
ChshResult bell_expectation(const LabeledBipartiteState& state,
                            const BellSettings& settings);

// T_ij = <sigma_i x sigma_j>, i, j in {x, y, z}.
Eigen::Matrix3d correlation_matrix(const Eigen::Matrix4cd& rho);
Eigen::Matrix3d correlation_matrix(const LabeledBipartiteState& state);

struct ChshOptimum {
  // Optimum found by settings search (grid at 1 degree plus Nelder-Mead
  // refinement); this is the returned max |S|.
  double max_abs_s = 0.0;
  // Independent check: 2 sqrt(s1^2 + s2^2) from the two largest singular
  // values of the correlation matrix. Agrees with max_abs_s within 1e-6.
  double criterion_value = 0.0;
  BellSettings settings;
};

ChshOptimum chsh_optimal(const Eigen::Matrix4cd& rho);
ChshOptimum chsh_optimal(const LabeledBipartiteState& state);

struct SignDifferenceReport {
  ChshResult a_form;  // labeled by A, entangled in B
  ChshResult b_form;  // labeled by B, entangled in A
  int ratio_sign;     // sign of s_b / s_a: +1 bosons, -1 fermions
};

// Evaluates the signed CHSH expectation on both bipartite readings of an
// equal-amplitude two-term state, with the same settings applied to each.
// Settings must lie in the coherence plane (all theta = pi/2); outside it
// the two readings are not related by a plain sign flip.
SignDifferenceReport sign_difference_report(const TwoParticleState& s,
                                            const BellSettings& settings);

}  // namespace dualsim
