// Copyright 2026 The dualsim Authors
// SPDX-License-Identifier: Apache-2.0

// Linear-optics realization of the dual momentum entanglement: a polarizing
// beam splitter routes the H/V components of a polarization-entangled pair
// to two parties, each party measures the momentum pseudo-spin with a
// tunable beam splitter and two detectors, and coincidences are counted.

#pragma once

#include <array>
#include <cstdint>

#include "dualsim/bell.hpp"

namespace dualsim {

enum class Polarization { H, V };
enum class TransverseDirection { PlusY, MinusY };

const char* to_string(Polarization p);
const char* to_string(TransverseDirection d);

// Which polarization the PBS deflects where. Charlie sits on the +y side,
// Diana on the -y side, so charlie_receives is tied to v_direction.
struct RoutingConvention {
  TransverseDirection v_direction;
  Polarization charlie_receives;

  TransverseDirection h_direction() const {
    return v_direction == TransverseDirection::PlusY
               ? TransverseDirection::MinusY
               : TransverseDirection::PlusY;
  }

  // Figure-caption convention: V deflected toward +y, into Charlie's arm.
  static RoutingConvention caption() {
    return {TransverseDirection::PlusY, Polarization::V};
  }
  // Main-text convention: the H-labeled particle reaches Charlie.
  static RoutingConvention main_text() {
    return {TransverseDirection::MinusY, Polarization::H};
  }
};

// Routes the polarization-labeled reading into party slots, Charlie first.
// Exactly one particle reaches each party for two-term-family inputs.
LabeledBipartiteState route_through_pbs(const TwoParticleState& s,
                                        const RoutingConvention& conv);

// Probability that both particles leave the PBS into the same arm, i.e.
// the weight on configurations whose particles share the B-eigenvalue.
double same_party_probability(const TwoParticleState& s);

// Beam splitter with tunable reflectivity and relative phase. Its transfer
// matrix U maps the measurement of n . sigma onto plain which-detector
// readout: U^dag sigma_z U = n . sigma.
struct BeamSplitterElement {
  double reflectivity;  // in [0, 1]
  double phase;         // radians

  Eigen::Matrix2cd transfer_matrix() const;
};

// reflectivity = cos^2(theta/2), phase = phi.
BeamSplitterElement setting_to_beamsplitter(const PseudoSpinSetting& s);

struct PairCounts {
  std::uint64_t pp = 0;
  std::uint64_t pm = 0;
  std::uint64_t mp = 0;
  std::uint64_t mm = 0;
  std::uint64_t no_click = 0;  // only populated when efficiency < 1

  std::uint64_t detected() const { return pp + pm + mp + mm; }
};

// Finite-shot outcome counts for the four CHSH settings pairs, in the
// fixed order (a,b), (a,b'), (a',b), (a',b').
struct CoincidenceRecord {
  std::array<PairCounts, 4> pairs;
  std::uint64_t shots = 0;  // per settings pair
  std::uint64_t seed = 0;
  double efficiency = 1.0;
  BellSettings settings;
};

inline constexpr std::array<const char*, 4> kSettingsPairNames = {
    "ab", "ab_prime", "a_prime_b", "a_prime_b_prime"};

// Draws `shots` outcome pairs per settings pair from the exact Born-rule
// joint distribution. Deterministic: settings pair k consumes substream k
// of a xoshiro256** generator seeded with `seed` (see rng.hpp); shots are
// drawn sequentially. With efficiency < 1 each shot draws the outcome and
// then one click test per party; a missed click on either side records
// no_click instead.
CoincidenceRecord sample_coincidences(const LabeledBipartiteState& state,
                                      const BellSettings& settings,
                                      std::uint64_t shots, std::uint64_t seed,
                                      double efficiency = 1.0);

struct ChshEstimate {
  double s_hat = 0.0;
  double standard_error = 0.0;
  std::array<double, 4> correlators{};
};

// Correlators from counts, binomial error propagation. Throws
// InsufficientShotsError when any pair has fewer than 2 usable shots.
ChshEstimate estimate_chsh(const CoincidenceRecord& record);

}  // namespace dualsim
