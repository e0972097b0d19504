// Copyright 2026 The dualsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "dualsim/optics.hpp"

#include <cmath>

#include "dualsim/rng.hpp"

namespace dualsim {

const char* to_string(Polarization p) {
  return p == Polarization::H ? "H" : "V";
}

const char* to_string(TransverseDirection d) {
  return d == TransverseDirection::PlusY ? "+y" : "-y";
}

LabeledBipartiteState route_through_pbs(const TwoParticleState& s,
                                        const RoutingConvention& conv) {
  LabeledBipartiteState by_polarization = relabel_by_b(s);
  // Slot 1 of the B-labeled form is the B1 (= H) particle. Reorder slots so
  // that Charlie comes first.
  if (conv.charlie_receives == Polarization::H) return by_polarization;
  return by_polarization.swapped_labels();
}

double same_party_probability(const TwoParticleState& s) {
  const auto& basis = TwoParticleState::basis(s.statistics());
  const auto& amps = s.amplitudes();
  double p = 0.0;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (basis[i].lo.b_index == basis[i].hi.b_index) p += std::norm(amps[i]);
  return p;
}

Eigen::Matrix2cd BeamSplitterElement::transfer_matrix() const {
  double r = std::sqrt(reflectivity);
  double t = std::sqrt(1.0 - reflectivity);
  Eigen::Matrix2cd u;
  u << r, t * std::exp(Complex(0, -phase)), -t * std::exp(Complex(0, phase)),
      r;
  return u;
}

BeamSplitterElement setting_to_beamsplitter(const PseudoSpinSetting& s) {
  double c = std::cos(s.theta / 2.0);
  return BeamSplitterElement{c * c, s.phi};
}

namespace {

// Born-rule joint distribution over (+,+), (+,-), (-,+), (-,-).
std::array<double, 4> joint_distribution(const Eigen::Vector4cd& psi,
                                         const PseudoSpinSetting& sa,
                                         const PseudoSpinSetting& sb) {
  Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
  Eigen::Matrix2cd pa = 0.5 * (id + pauli_direction(sa));
  Eigen::Matrix2cd pb = 0.5 * (id + pauli_direction(sb));
  Eigen::Matrix2cd ma = id - pa;
  Eigen::Matrix2cd mb = id - pb;
  auto prob = [&](const Eigen::Matrix2cd& qa, const Eigen::Matrix2cd& qb) {
    Eigen::Vector4cd projected;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        Complex acc{0, 0};
        for (int k = 0; k < 2; ++k)
          for (int l = 0; l < 2; ++l)
            acc += qa(i, k) * qb(j, l) * psi(2 * k + l);
        projected(2 * i + j) = acc;
      }
    return projected.squaredNorm();
  };
  return {prob(pa, pb), prob(pa, mb), prob(ma, pb), prob(ma, mb)};
}

}  // namespace

CoincidenceRecord sample_coincidences(const LabeledBipartiteState& state,
                                      const BellSettings& settings,
                                      std::uint64_t shots, std::uint64_t seed,
                                      double efficiency) {
  if (shots < 1) throw InvalidArgumentError("shots must be at least 1");
  if (efficiency < 0.0 || efficiency > 1.0)
    throw InvalidArgumentError("efficiency must lie in [0, 1]");

  CoincidenceRecord record;
  record.shots = shots;
  record.seed = seed;
  record.efficiency = efficiency;
  record.settings = settings;

  Eigen::Vector4cd psi = two_qubit_vector(state);
  const std::array<std::pair<PseudoSpinSetting, PseudoSpinSetting>, 4>
      pair_settings = {{{settings.a, settings.b},
                        {settings.a, settings.b_prime},
                        {settings.a_prime, settings.b},
                        {settings.a_prime, settings.b_prime}}};

  for (unsigned k = 0; k < 4; ++k) {
    auto dist = joint_distribution(psi, pair_settings[k].first,
                                   pair_settings[k].second);
    double c1 = dist[0];
    double c2 = c1 + dist[1];
    double c3 = c2 + dist[2];
    Xoshiro256StarStar gen = Xoshiro256StarStar::substream(seed, k);
    PairCounts& counts = record.pairs[k];
    for (std::uint64_t shot = 0; shot < shots; ++shot) {
      double u = gen.uniform01();
      int cell = u < c1 ? 0 : u < c2 ? 1 : u < c3 ? 2 : 3;
      if (efficiency < 1.0) {
        bool click_a = gen.uniform01() < efficiency;
        bool click_b = gen.uniform01() < efficiency;
        if (!click_a || !click_b) {
          ++counts.no_click;
          continue;
        }
      }
      switch (cell) {
        case 0: ++counts.pp; break;
        case 1: ++counts.pm; break;
        case 2: ++counts.mp; break;
        default: ++counts.mm; break;
      }
    }
  }
  return record;
}

ChshEstimate estimate_chsh(const CoincidenceRecord& record) {
  if (record.shots < 2)
    throw InsufficientShotsError("need at least 2 shots per settings pair");
  ChshEstimate est;
  double variance = 0.0;
  for (unsigned k = 0; k < 4; ++k) {
    const PairCounts& c = record.pairs[k];
    std::uint64_t n = c.detected();
    if (n < 2)
      throw InsufficientShotsError(
          std::string("fewer than 2 detected coincidences for pair ") +
          kSettingsPairNames[k]);
    double e = (static_cast<double>(c.pp) + static_cast<double>(c.mm) -
                static_cast<double>(c.pm) - static_cast<double>(c.mp)) /
               static_cast<double>(n);
    est.correlators[k] = e;
    variance += (1.0 - e * e) / static_cast<double>(n);
  }
  est.s_hat = est.correlators[0] + est.correlators[1] + est.correlators[2] -
              est.correlators[3];
  est.standard_error = std::sqrt(variance);
  return est;
}

}  // namespace dualsim
