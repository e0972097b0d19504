// Copyright 2026 The dualsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "dualsim/fock.hpp"

#include <cmath>
#include <tuple>

namespace dualsim {

const char* to_string(Statistics s) {
  return s == Statistics::Boson ? "boson" : "fermion";
}

Statistics statistics_from_string(const std::string& s) {
  if (s == "boson") return Statistics::Boson;
  if (s == "fermion") return Statistics::Fermion;
  throw BadConfigError("unknown statistics '" + s +
                       "' (expected 'boson' or 'fermion')");
}

void VariableSpec::validate() const {
  if (name_a == name_b)
    throw InvalidArgumentError("variable names must be distinct");
  if (eigenlabels_a[0] == eigenlabels_a[1])
    throw InvalidArgumentError("eigenlabels of variable '" + name_a +
                               "' must be distinct");
  if (eigenlabels_b[0] == eigenlabels_b[1])
    throw InvalidArgumentError("eigenlabels of variable '" + name_b +
                               "' must be distinct");
}

VariableSpec VariableSpec::photonic() {
  return VariableSpec{"momentum", "polarization", {"-k", "k"}, {"H", "V"}};
}

Mode Mode::from_index(int idx) {
  if (idx < 0 || idx > 3)
    throw InvalidArgumentError("mode index out of range");
  return Mode{idx / 2 + 1, idx % 2 + 1};
}

std::string to_string(const Mode& m) {
  return "(A" + std::to_string(m.a_index) + ",B" + std::to_string(m.b_index) +
         ")";
}

NormalOrdered apply_pair_normal_ordered(Mode m1, Mode m2, Statistics stats) {
  if (!m1.valid() || !m2.valid())
    throw InvalidArgumentError("mode indices must be 1 or 2");
  if (stats == Statistics::Fermion && m1 == m2)
    throw ExclusionViolationError("fermionic pair occupies mode " +
                                  to_string(m1) + " twice");
  if (m2 < m1) {
    int sign = stats == Statistics::Fermion ? -1 : +1;
    return NormalOrdered{PairConfig{m2, m1}, sign};
  }
  return NormalOrdered{PairConfig{m1, m2}, +1};
}

namespace {

std::vector<PairConfig> make_basis(Statistics stats) {
  std::vector<PairConfig> basis;
  for (int i = 0; i < 4; ++i) {
    for (int j = i; j < 4; ++j) {
      if (stats == Statistics::Fermion && i == j) continue;
      basis.push_back(PairConfig{Mode::from_index(i), Mode::from_index(j)});
    }
  }
  return basis;
}

double squared_norm(const std::vector<Complex>& amps) {
  double n2 = 0.0;
  for (const Complex& a : amps) n2 += std::norm(a);
  return n2;
}

}  // namespace

const std::vector<PairConfig>& TwoParticleState::basis(Statistics stats) {
  static const std::vector<PairConfig> boson = make_basis(Statistics::Boson);
  static const std::vector<PairConfig> fermion =
      make_basis(Statistics::Fermion);
  return stats == Statistics::Boson ? boson : fermion;
}

std::optional<int> TwoParticleState::basis_index(Statistics stats,
                                                 const PairConfig& config) {
  const auto& b = basis(stats);
  for (std::size_t i = 0; i < b.size(); ++i)
    if (b[i] == config) return static_cast<int>(i);
  return std::nullopt;
}

TwoParticleState::TwoParticleState(Statistics stats,
                                   std::vector<Complex> amplitudes,
                                   VariableSpec spec)
    : stats_(stats), amps_(std::move(amplitudes)), spec_(std::move(spec)) {
  spec_.validate();
  if (amps_.size() != basis(stats_).size())
    throw InvalidArgumentError("amplitude vector has wrong dimension");
  double n2 = squared_norm(amps_);
  if (n2 <= 0.0) throw ZeroStateError("all amplitudes vanish");
  double inv = 1.0 / std::sqrt(n2);
  for (Complex& a : amps_) a *= inv;
}

TwoParticleState TwoParticleState::from_terms(
    Statistics stats, const std::vector<std::tuple<Mode, Mode, Complex>>& terms,
    VariableSpec spec) {
  std::vector<Complex> amps(basis(stats).size(), Complex{0.0, 0.0});
  for (const auto& [m1, m2, amp] : terms) {
    NormalOrdered ordered = apply_pair_normal_ordered(m1, m2, stats);
    amps[*basis_index(stats, ordered.config)] +=
        static_cast<double>(ordered.sign) * amp;
  }
  return TwoParticleState(stats, std::move(amps), std::move(spec));
}

Complex TwoParticleState::amplitude(const PairConfig& config) const {
  auto idx = basis_index(stats_, config);
  if (!idx) return Complex{0.0, 0.0};
  return amps_[*idx];
}

TwoParticleState build_epr_state(const VariableSpec& spec, Complex alpha,
                                 Complex beta, Statistics stats) {
  if (std::norm(alpha) + std::norm(beta) <= 0.0)
    throw ZeroStateError("alpha and beta are both zero");
  return TwoParticleState::from_terms(
      stats,
      {{Mode{1, 1}, Mode{2, 2}, alpha}, {Mode{1, 2}, Mode{2, 1}, beta}}, spec);
}

Complex inner_product(const TwoParticleState& s1, const TwoParticleState& s2) {
  if (s1.statistics() != s2.statistics())
    throw StatisticsMismatchError(
        "inner product between states of different statistics");
  Complex acc{0.0, 0.0};
  const auto& a1 = s1.amplitudes();
  const auto& a2 = s2.amplitudes();
  for (std::size_t i = 0; i < a1.size(); ++i) acc += std::conj(a1[i]) * a2[i];
  return acc;
}

FirstQuantizedState::FirstQuantizedState(Statistics stats,
                                         std::array<Complex, 16> amps)
    : stats_(stats), amps_(amps) {}

FirstQuantizedState FirstQuantizedState::swap_pseudo_labels() const {
  std::array<Complex, 16> swapped;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) swapped[4 * i + j] = amps_[4 * j + i];
  return FirstQuantizedState(stats_, swapped);
}

FirstQuantizedState to_first_quantized(const TwoParticleState& s) {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  std::array<Complex, 16> amps{};
  const auto& basis = TwoParticleState::basis(s.statistics());
  const auto& state_amps = s.amplitudes();
  const double sign = exchange_sign(s.statistics());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const Mode& m = basis[k].lo;
    const Mode& mp = basis[k].hi;
    if (m == mp) {
      amps[4 * m.index() + mp.index()] += state_amps[k];
    } else {
      amps[4 * m.index() + mp.index()] += state_amps[k] * inv_sqrt2;
      amps[4 * mp.index() + m.index()] += state_amps[k] * sign * inv_sqrt2;
    }
  }
  return FirstQuantizedState(s.statistics(), amps);
}

Complex inner_product(const FirstQuantizedState& s1,
                      const FirstQuantizedState& s2) {
  if (s1.statistics() != s2.statistics())
    throw StatisticsMismatchError(
        "inner product between states of different statistics");
  Complex acc{0.0, 0.0};
  for (int i = 0; i < 16; ++i)
    acc += std::conj(s1.amplitudes()[i]) * s2.amplitudes()[i];
  return acc;
}

}  // namespace dualsim
