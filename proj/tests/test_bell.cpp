// Copyright 2026 The dualsim Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "test_helpers.hpp"

using namespace dualsim;
using dualsim_test::TestRng;

namespace {

constexpr double kPi = std::numbers::pi;
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
const double kTsirelson = 2.0 * std::sqrt(2.0);

// For settings in the coherence plane the four correlators reduce to
// cosines of azimuth differences (for c1 = c2 = 1/sqrt(2)).
double plane_chsh_oracle(const BellSettings& st) {
  return std::cos(st.a.phi - st.b.phi) + std::cos(st.a.phi - st.b_prime.phi) +
         std::cos(st.a_prime.phi - st.b.phi) -
         std::cos(st.a_prime.phi - st.b_prime.phi);
}

}  // namespace

TEST_SUITE_BEGIN("bell");

TEST_CASE("canonical settings lie in the coherence plane") {
  auto st = BellSettings::canonical();
  CHECK(st.in_plane());
  CHECK(st.a.phi == doctest::Approx(0.0));
  CHECK(st.a_prime.phi == doctest::Approx(kPi / 2));
  CHECK(st.b.phi == doctest::Approx(kPi / 4));
  CHECK(st.b_prime.phi == doctest::Approx(-kPi / 4));
}

TEST_CASE("correlators of the maximally entangled state") {
  LabeledBipartiteState bell(VariableId::B, kInvSqrt2, kInvSqrt2);
  PseudoSpinSetting z{0.0, 0.0};
  PseudoSpinSetting x{kPi / 2, 0.0};
  PseudoSpinSetting y{kPi / 2, kPi / 2};
  CHECK(correlator(bell, z, z) == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(correlator(bell, x, x) == doctest::Approx(+1.0).epsilon(1e-12));
  CHECK(correlator(bell, y, y) == doctest::Approx(+1.0).epsilon(1e-12));
}

TEST_CASE("correlation matrix of the two bell-type states") {
  Eigen::Matrix3d t =
      correlation_matrix(LabeledBipartiteState(VariableId::B, kInvSqrt2,
                                               kInvSqrt2));
  Eigen::Matrix3d expected = Eigen::Vector3d(1.0, 1.0, -1.0).asDiagonal();
  CHECK((t - expected).cwiseAbs().maxCoeff() < kTol);

  Eigen::Matrix3d tm =
      correlation_matrix(LabeledBipartiteState(VariableId::B, kInvSqrt2,
                                               -kInvSqrt2));
  Eigen::Matrix3d expected_m = Eigen::Vector3d(-1.0, -1.0, -1.0).asDiagonal();
  CHECK((tm - expected_m).cwiseAbs().maxCoeff() < kTol);
}

TEST_CASE("product state correlators factorize") {
  LabeledBipartiteState product(VariableId::B, 1.0, 0.0);
  TestRng rng(91);
  for (int trial = 0; trial < 50; ++trial) {
    auto sa = dualsim_test::random_setting(rng);
    auto sb = dualsim_test::random_setting(rng);
    double expected = std::cos(sa.theta) * (-std::cos(sb.theta));
    CHECK(correlator(product, sa, sb) ==
          doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("bell expectation at canonical settings") {
  auto st = BellSettings::canonical();
  LabeledBipartiteState plus(VariableId::B, kInvSqrt2, kInvSqrt2);
  double oracle = plane_chsh_oracle(st);
  CHECK(oracle == doctest::Approx(kTsirelson).epsilon(1e-12));
  CHECK(bell_expectation(plus, st).s ==
        doctest::Approx(oracle).epsilon(1e-12));

  LabeledBipartiteState minus(VariableId::B, kInvSqrt2, -kInvSqrt2);
  CHECK(bell_expectation(minus, st).s ==
        doctest::Approx(-oracle).epsilon(1e-12));

  LabeledBipartiteState product(VariableId::B, 1.0, 0.0);
  CHECK(std::abs(bell_expectation(product, st).s) < kTol);
}

TEST_CASE("correlators stay within physical bounds") {
  TestRng rng(97);
  for (int trial = 0; trial < 100; ++trial) {
    auto [c1, c2] = dualsim_test::random_amplitude_pair(rng);
    LabeledBipartiteState state(VariableId::A, c1, c2);
    auto st = dualsim_test::random_settings(rng);
    auto r = bell_expectation(state, st);
    for (double e : {r.e_ab, r.e_ab_prime, r.e_a_prime_b, r.e_a_prime_b_prime})
      CHECK(std::abs(e) <= 1.0 + kTol);
    CHECK(std::abs(r.s) <= 4.0 + kTol);
  }
}

TEST_CASE("optimum for the maximally entangled state") {
  auto opt = chsh_optimal(LabeledBipartiteState(VariableId::B, kInvSqrt2,
                                                kInvSqrt2));
  CHECK(std::abs(opt.max_abs_s - kTsirelson) < 1e-9);
  CHECK(std::abs(opt.criterion_value - kTsirelson) < 1e-9);
  // Returned settings attain the optimum through the plain correlator path.
  auto check = bell_expectation(
      LabeledBipartiteState(VariableId::B, kInvSqrt2, kInvSqrt2),
      opt.settings);
  CHECK(check.s == doctest::Approx(opt.max_abs_s).epsilon(1e-9));
}

TEST_CASE("optimum for product states is the local bound") {
  for (auto amps : {std::pair<Complex, Complex>{1.0, 0.0},
                    std::pair<Complex, Complex>{0.0, 1.0}}) {
    auto opt = chsh_optimal(
        LabeledBipartiteState(VariableId::B, amps.first, amps.second));
    CHECK(std::abs(opt.max_abs_s - 2.0) < 1e-6);
    CHECK(std::abs(opt.criterion_value - 2.0) < 1e-6);
  }
}

TEST_CASE("optimum of a partially entangled state") {
  auto opt = chsh_optimal(LabeledBipartiteState(
      VariableId::B, std::sqrt(0.8), std::sqrt(0.2)));
  // Correlation matrix singular values are (1, 2|c1 c2|, 2|c1 c2|).
  double expected = 2.0 * std::sqrt(1.0 + 4.0 * 0.8 * 0.2);
  CHECK(std::abs(opt.max_abs_s - expected) < 1e-6);
  CHECK(std::abs(opt.criterion_value - expected) < 1e-9);
}

TEST_CASE("tsirelson bound over random states") {
  TestRng rng(101);
  for (int trial = 0; trial < 500; ++trial) {
    auto [c1, c2] = dualsim_test::random_amplitude_pair(rng);
    auto opt = chsh_optimal(LabeledBipartiteState(VariableId::B, c1, c2));
    CHECK(opt.max_abs_s <= kTsirelson + 1e-9);
  }
}

TEST_CASE("search and singular-value routes agree") {
  TestRng rng(103);
  for (int trial = 0; trial < 100; ++trial) {
    auto [c1, c2] = dualsim_test::random_amplitude_pair(rng);
    auto opt = chsh_optimal(LabeledBipartiteState(VariableId::B, c1, c2));
    CHECK(std::abs(opt.max_abs_s - opt.criterion_value) <= 1e-6);
    // The analytic value for this state family.
    double conc = 2.0 * std::abs(c1 * c2) / (std::norm(c1) + std::norm(c2));
    double expected = 2.0 * std::sqrt(1.0 + conc * conc);
    CHECK(opt.criterion_value == doctest::Approx(expected).epsilon(1e-9));
  }
}

TEST_CASE("in-plane correlators of the two readings are opposite for fermions") {
  TestRng rng(107);
  for (int trial = 0; trial < 100; ++trial) {
    auto [alpha, beta] = dualsim_test::random_amplitude_pair(rng);
    Complex mean = 0.5 * (alpha + beta);
    if (std::abs(mean) < 1e-3) {
      --trial;
      continue;
    }
    auto s = build_epr_state(VariableSpec(), mean, mean, Statistics::Fermion);
    auto st = dualsim_test::random_plane_settings(rng);
    auto ra = bell_expectation(relabel_by_a(s), st);
    auto rb = bell_expectation(relabel_by_b(s), st);
    CHECK(ra.e_ab == doctest::Approx(-rb.e_ab).epsilon(1e-12));
    CHECK(ra.e_ab_prime == doctest::Approx(-rb.e_ab_prime).epsilon(1e-12));
    CHECK(ra.e_a_prime_b == doctest::Approx(-rb.e_a_prime_b).epsilon(1e-12));
    CHECK(ra.e_a_prime_b_prime ==
          doctest::Approx(-rb.e_a_prime_b_prime).epsilon(1e-12));
    CHECK(ra.s == doctest::Approx(-rb.s).epsilon(1e-12));
  }
}

TEST_CASE("the two readings coincide for bosons at any settings") {
  TestRng rng(109);
  for (int trial = 0; trial < 100; ++trial) {
    auto s = dualsim_test::random_epr(rng, Statistics::Boson);
    auto st = dualsim_test::random_settings(rng);
    auto ra = bell_expectation(relabel_by_a(s), st);
    auto rb = bell_expectation(relabel_by_b(s), st);
    CHECK(ra.e_ab == doctest::Approx(rb.e_ab).epsilon(1e-12));
    CHECK(ra.e_ab_prime == doctest::Approx(rb.e_ab_prime).epsilon(1e-12));
    CHECK(ra.e_a_prime_b == doctest::Approx(rb.e_a_prime_b).epsilon(1e-12));
    CHECK(ra.e_a_prime_b_prime ==
          doctest::Approx(rb.e_a_prime_b_prime).epsilon(1e-12));
  }
}

TEST_CASE("common azimuthal rotation of all settings preserves S") {
  // The |01>, |10> coherence depends only on azimuth differences, so
  // rotating every setting by the same angle about z is a symmetry.
  LabeledBipartiteState bell(VariableId::B, kInvSqrt2, kInvSqrt2);
  TestRng rng(113);
  for (int trial = 0; trial < 50; ++trial) {
    auto st = dualsim_test::random_settings(rng);
    double delta = rng.uniform() * 2.0 * kPi;
    BellSettings rotated = st;
    for (PseudoSpinSetting* s :
         {&rotated.a, &rotated.a_prime, &rotated.b, &rotated.b_prime})
      s->phi += delta;
    CHECK(bell_expectation(bell, st).s ==
          doctest::Approx(bell_expectation(bell, rotated).s).epsilon(1e-12));
  }
}

TEST_CASE("sign difference report") {
  auto settings = BellSettings::canonical();
  auto boson =
      build_epr_state(VariableSpec(), kInvSqrt2, kInvSqrt2, Statistics::Boson);
  auto rb = sign_difference_report(boson, settings);
  CHECK(std::abs(rb.a_form.s - kTsirelson) < 1e-9);
  CHECK(std::abs(rb.b_form.s - kTsirelson) < 1e-9);
  CHECK(rb.ratio_sign == +1);

  auto fermion = build_epr_state(VariableSpec(), kInvSqrt2, kInvSqrt2,
                                 Statistics::Fermion);
  auto rf = sign_difference_report(fermion, settings);
  CHECK(std::abs(rf.a_form.s - kTsirelson) < 1e-9);
  CHECK(std::abs(rf.b_form.s + kTsirelson) < 1e-9);
  CHECK(rf.ratio_sign == -1);
}

TEST_CASE("sign difference report guards") {
  auto fermion = build_epr_state(VariableSpec(), kInvSqrt2, kInvSqrt2,
                                 Statistics::Fermion);
  BellSettings tilted = BellSettings::canonical();
  tilted.a.theta = 0.0;
  CHECK_THROWS_AS(sign_difference_report(fermion, tilted),
                  SettingsNotInPlaneError);

  auto unequal =
      build_epr_state(VariableSpec(), 0.9, 0.1, Statistics::Fermion);
  CHECK_THROWS_AS(sign_difference_report(unequal, BellSettings::canonical()),
                  InvalidArgumentError);
}

TEST_SUITE_END();
