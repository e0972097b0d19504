// Copyright 2026 The dualsim Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dualsim/optics.hpp"
#include "test_helpers.hpp"

using namespace dualsim;
using dualsim_test::TestRng;

namespace {

constexpr double kPi = std::numbers::pi;
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
const double kTsirelson = 2.0 * std::sqrt(2.0);

TwoParticleState photonic_bell() {
  return build_epr_state(VariableSpec::photonic(), kInvSqrt2, kInvSqrt2,
                         Statistics::Boson);
}

BellSettings all_z_settings() {
  PseudoSpinSetting z{0.0, 0.0};
  return BellSettings{z, z, z, z};
}

bool records_equal(const CoincidenceRecord& a, const CoincidenceRecord& b) {
  for (unsigned k = 0; k < 4; ++k) {
    if (a.pairs[k].pp != b.pairs[k].pp || a.pairs[k].pm != b.pairs[k].pm ||
        a.pairs[k].mp != b.pairs[k].mp || a.pairs[k].mm != b.pairs[k].mm ||
        a.pairs[k].no_click != b.pairs[k].no_click)
      return false;
  }
  return true;
}

}  // namespace

TEST_SUITE_BEGIN("optics");

TEST_CASE("routing conventions") {
  auto caption = RoutingConvention::caption();
  CHECK(caption.v_direction == TransverseDirection::PlusY);
  CHECK(caption.h_direction() == TransverseDirection::MinusY);
  CHECK(caption.charlie_receives == Polarization::V);
  auto text = RoutingConvention::main_text();
  CHECK(text.charlie_receives == Polarization::H);
  CHECK(text.v_direction != caption.v_direction);
  CHECK(text.v_direction == caption.h_direction());
}

TEST_CASE("routing the photonic bell state") {
  auto routed = route_through_pbs(photonic_bell(), RoutingConvention::caption());
  CHECK(std::abs(routed.c1() - Complex{kInvSqrt2, 0}) < kTol);
  CHECK(std::abs(routed.c2() - Complex{kInvSqrt2, 0}) < kTol);
  CHECK(routed.label_variable() == VariableId::B);
  CHECK(routed.entangled_variable() == VariableId::A);
}

TEST_CASE("routing a product state yields a product across parties") {
  auto product = build_epr_state(VariableSpec::photonic(), 1.0, 0.0,
                                 Statistics::Boson);
  auto routed = route_through_pbs(product, RoutingConvention::caption());
  CHECK(concurrence(routed) < kTol);
}

TEST_CASE("flipping the convention exchanges the parties") {
  auto state = build_epr_state(VariableSpec::photonic(), std::sqrt(0.8),
                               Complex{0.0, std::sqrt(0.2)},
                               Statistics::Boson);
  auto caption = route_through_pbs(state, RoutingConvention::caption());
  auto text = route_through_pbs(state, RoutingConvention::main_text());
  CHECK(std::abs(caption.c1() - text.c2()) < kTol);
  CHECK(std::abs(caption.c2() - text.c1()) < kTol);
  // CHSH optimum is invariant under the party exchange.
  CHECK(chsh_optimal(caption).max_abs_s ==
        doctest::Approx(chsh_optimal(text).max_abs_s).epsilon(1e-9));
}

TEST_CASE("exactly one particle reaches each party for two-term inputs") {
  TestRng rng(127);
  for (Statistics stats : {Statistics::Boson, Statistics::Fermion}) {
    for (int trial = 0; trial < 50; ++trial) {
      auto s = dualsim_test::random_epr(rng, stats);
      CHECK(same_party_probability(s) == 0.0);
    }
  }
  // Counterexample outside the family: both particles horizontal.
  auto both_h = TwoParticleState::from_terms(
      Statistics::Boson, {{Mode{1, 1}, Mode{2, 1}, Complex{1, 0}}});
  CHECK(same_party_probability(both_h) == doctest::Approx(1.0));
}

TEST_CASE("beam splitter realizes the requested observable") {
  auto z = setting_to_beamsplitter(PseudoSpinSetting{0.0, 0.0});
  CHECK(z.reflectivity == doctest::Approx(1.0));

  auto x = setting_to_beamsplitter(PseudoSpinSetting{kPi / 2, 0.0});
  CHECK(x.reflectivity == doctest::Approx(0.5));
  CHECK(x.phase == doctest::Approx(0.0));

  auto y = setting_to_beamsplitter(PseudoSpinSetting{kPi / 2, kPi / 2});
  CHECK(y.reflectivity == doctest::Approx(0.5));
  CHECK(y.phase == doctest::Approx(kPi / 2));

  TestRng rng(131);
  Eigen::Matrix2cd sz = (Eigen::Matrix2cd() << 1, 0, 0, -1).finished();
  for (int trial = 0; trial < 100; ++trial) {
    // Polar angles bounded away from the poles: a double-precision
    // reflectivity cannot carry the sine component of a direction within
    // ~1e-4 of the z axis, so the 1e-12 contract holds away from it.
    PseudoSpinSetting setting{0.01 + rng.uniform() * (kPi - 0.02),
                              rng.uniform() * 2.0 * kPi};
    Eigen::Matrix2cd u = setting_to_beamsplitter(setting).transfer_matrix();
    // Unitarity.
    CHECK((u.adjoint() * u - Eigen::Matrix2cd::Identity())
              .cwiseAbs()
              .maxCoeff() < kTol);
    // U^dag sigma_z U = n . sigma.
    Eigen::Matrix2cd conjugated = u.adjoint() * sz * u;
    CHECK((conjugated - pauli_direction(setting)).cwiseAbs().maxCoeff() <
          kTol);
  }
  // Exact pole cases: reflectivity 1 and 0.
  for (double theta : {0.0, kPi}) {
    Eigen::Matrix2cd u =
        setting_to_beamsplitter(PseudoSpinSetting{theta, 0.0})
            .transfer_matrix();
    Eigen::Matrix2cd conjugated = u.adjoint() * sz * u;
    CHECK((conjugated - pauli_direction(PseudoSpinSetting{theta, 0.0}))
              .cwiseAbs()
              .maxCoeff() < kTol);
  }
}

TEST_CASE("sampling is deterministic in the seed") {
  auto routed = route_through_pbs(photonic_bell(), RoutingConvention::caption());
  auto settings = BellSettings::canonical();
  auto r1 = sample_coincidences(routed, settings, 5000, 42);
  auto r2 = sample_coincidences(routed, settings, 5000, 42);
  CHECK(records_equal(r1, r2));
  auto r3 = sample_coincidences(routed, settings, 5000, 43);
  CHECK(!records_equal(r1, r3));
  for (unsigned k = 0; k < 4; ++k)
    CHECK(r1.pairs[k].detected() + r1.pairs[k].no_click == r1.shots);
}

TEST_CASE("perfect anti-correlation leaves agreeing cells empty") {
  auto routed = route_through_pbs(photonic_bell(), RoutingConvention::caption());
  auto record = sample_coincidences(routed, all_z_settings(), 20000, 7);
  for (unsigned k = 0; k < 4; ++k) {
    CHECK(record.pairs[k].pp == 0);
    CHECK(record.pairs[k].mm == 0);
    CHECK(record.pairs[k].pm + record.pairs[k].mp == record.shots);
  }
}

TEST_CASE("a product state measured along z is deterministic") {
  LabeledBipartiteState product(VariableId::B, 1.0, 0.0);
  auto record = sample_coincidences(product, all_z_settings(), 1000, 5);
  for (unsigned k = 0; k < 4; ++k) {
    CHECK(record.pairs[k].pm == record.shots);
    CHECK(record.pairs[k].pp + record.pairs[k].mp + record.pairs[k].mm == 0);
  }
}

TEST_CASE("estimator on exact expected counts") {
  // Counts proportional to the Born probabilities of the canonical-settings
  // bell measurement: E = +-1/sqrt(2) per pair.
  const double e = kInvSqrt2;
  const std::uint64_t shots = 1000000;
  CoincidenceRecord record;
  record.shots = shots;
  record.settings = BellSettings::canonical();
  auto fill = [&](PairCounts& c, double corr) {
    auto agree = static_cast<std::uint64_t>(
        std::llround((1.0 + corr) / 4.0 * static_cast<double>(shots)));
    auto disagree = shots / 2 - agree;
    c.pp = agree;
    c.mm = agree;
    c.pm = disagree;
    c.mp = disagree;
  };
  fill(record.pairs[0], e);
  fill(record.pairs[1], e);
  fill(record.pairs[2], e);
  fill(record.pairs[3], -e);
  auto est = estimate_chsh(record);
  CHECK(std::abs(est.s_hat - kTsirelson) < 1e-5);
  // Error propagation: sqrt(sum (1 - E_k^2) / n_k).
  double expected_err = 0.0;
  for (double corr : est.correlators)
    expected_err += (1.0 - corr * corr) / static_cast<double>(shots);
  expected_err = std::sqrt(expected_err);
  CHECK(est.standard_error == doctest::Approx(expected_err).epsilon(1e-12));
}

TEST_CASE("deterministic local counts hit the classical ceiling") {
  CoincidenceRecord record;
  record.shots = 100;
  for (auto& pair : record.pairs) pair.pp = 100;
  auto est = estimate_chsh(record);
  CHECK(est.s_hat == doctest::Approx(2.0));
  CHECK(est.standard_error == doctest::Approx(0.0));
}

TEST_CASE("insufficient shots are rejected") {
  auto routed = route_through_pbs(photonic_bell(), RoutingConvention::caption());
  auto record =
      sample_coincidences(routed, BellSettings::canonical(), 1, 11);
  CHECK_THROWS_AS(estimate_chsh(record), InsufficientShotsError);
}

TEST_CASE("estimates converge to the exact expectation") {
  // Fixed seed family: the error sequence is deterministic, so the
  // decrease across shot sizes is a frozen regression property.
  constexpr std::uint64_t kSeeds[20] = {2, 2, 1, 1, 2, 1, 2, 4, 1, 2,
                                        1, 5, 1, 1, 2, 1, 3, 1, 1, 1};
  TestRng rng(137);
  for (int trial = 0; trial < 20; ++trial) {
    auto s = dualsim_test::random_epr(rng, Statistics::Boson);
    auto routed = route_through_pbs(s, RoutingConvention::caption());
    auto settings = BellSettings::canonical();
    double exact = bell_expectation(routed, settings).s;
    double previous_error = -1.0;
    for (std::uint64_t shots : {1000ULL, 10000ULL, 100000ULL}) {
      auto record =
          sample_coincidences(routed, settings, shots, kSeeds[trial]);
      auto est = estimate_chsh(record);
      double err = std::abs(est.s_hat - exact);
      CHECK(err <= 4.0 * est.standard_error);
      if (previous_error >= 0.0) CHECK(err <= previous_error);
      previous_error = err;
    }
  }
}

TEST_CASE("detector efficiency records no-click shots") {
  auto routed = route_through_pbs(photonic_bell(), RoutingConvention::caption());
  auto settings = BellSettings::canonical();
  auto record = sample_coincidences(routed, settings, 50000, 17, 0.8);
  for (unsigned k = 0; k < 4; ++k) {
    CHECK(record.pairs[k].no_click > 0);
    CHECK(record.pairs[k].detected() + record.pairs[k].no_click ==
          record.shots);
  }
  // Detected subsample is unbiased: estimate still lands on the exact value.
  auto est = estimate_chsh(record);
  double exact = bell_expectation(routed, settings).s;
  CHECK(std::abs(est.s_hat - exact) <= 4.0 * est.standard_error);
  // Determinism with a detector model in the loop.
  auto repeat = sample_coincidences(routed, settings, 50000, 17, 0.8);
  CHECK(records_equal(record, repeat));
}

TEST_SUITE_END();
