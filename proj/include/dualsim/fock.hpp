// Copyright 2026 The dualsim Authors
// SPDX-License-Identifier: Apache-2.0

// Exact two-particle Fock sector over four modes |A_i, B_j>, i,j in {1,2},
// for identical bosons or fermions. Configurations are stored in a fixed
// canonical order (nondecreasing lexicographic by (a_index, b_index)); all
// exchange signs in the rest of the library are defined relative to it.

#pragma once

#include <array>
#include <compare>
#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dualsim/errors.hpp"

namespace dualsim {

using Complex = std::complex<double>;

inline constexpr double kTol = 1e-12;

enum class Statistics { Boson, Fermion };

inline int exchange_sign(Statistics s) {
  return s == Statistics::Boson ? +1 : -1;
}

const char* to_string(Statistics s);
Statistics statistics_from_string(const std::string& s);

// Names the two commuting dichotomic variables and their eigenvalues.
// Purely descriptive; carried along for labeling and serialization.
struct VariableSpec {
  std::string name_a = "A";
  std::string name_b = "B";
  std::array<std::string, 2> eigenlabels_a = {"A1", "A2"};
  std::array<std::string, 2> eigenlabels_b = {"B1", "B2"};

  void validate() const;  // names distinct, eigenlabels within each distinct

  // Momentum {-k, k} labeling, polarization {H, V} entangled.
  static VariableSpec photonic();
};

// Single-particle basis state |A_i, B_j>. Four modes in total, ordered
// lexicographically by (a_index, b_index).
struct Mode {
  int a_index = 1;  // 1 or 2
  int b_index = 1;  // 1 or 2

  int index() const { return 2 * (a_index - 1) + (b_index - 1); }
  static Mode from_index(int idx);
  bool valid() const {
    return (a_index == 1 || a_index == 2) && (b_index == 1 || b_index == 2);
  }

  auto operator<=>(const Mode&) const = default;
};

std::string to_string(const Mode& m);

// Unordered two-particle occupation, stored with modes in canonical
// (nondecreasing) order. Equal modes are legal for bosons only.
struct PairConfig {
  Mode lo;
  Mode hi;

  auto operator<=>(const PairConfig&) const = default;
};

struct NormalOrdered {
  PairConfig config;
  int sign;  // -1 exactly when a fermionic swap was performed
};

// Reorders a creation-operator pair into canonical order, tracking the
// exchange sign. Throws ExclusionViolationError for equal fermionic modes.
NormalOrdered apply_pair_normal_ordered(Mode m1, Mode m2, Statistics stats);

// Normalized state of the two-particle sector. Amplitudes are dense over
// the canonical basis: 10 configurations for bosons, 6 for fermions.
class TwoParticleState {
 public:
  TwoParticleState(Statistics stats, std::vector<Complex> amplitudes,
                   VariableSpec spec = VariableSpec());

  static const std::vector<PairConfig>& basis(Statistics stats);
  static std::optional<int> basis_index(Statistics stats,
                                        const PairConfig& config);

  // Builds a state from (mode, mode, amplitude) terms in any operator
  // order; each term is normal-ordered and its sign absorbed.
  static TwoParticleState from_terms(
      Statistics stats,
      const std::vector<std::tuple<Mode, Mode, Complex>>& terms,
      VariableSpec spec = VariableSpec());

  Statistics statistics() const { return stats_; }
  const VariableSpec& variable_spec() const { return spec_; }
  const std::vector<Complex>& amplitudes() const { return amps_; }
  Complex amplitude(const PairConfig& config) const;

 private:
  Statistics stats_;
  std::vector<Complex> amps_;
  VariableSpec spec_;
};

// alpha on {|A1,B1>, |A2,B2>}, beta on {|A1,B2>, |A2,B1>}, normalized.
TwoParticleState build_epr_state(const VariableSpec& spec, Complex alpha,
                                 Complex beta, Statistics stats);

// Conjugate-linear in the first argument. Throws StatisticsMismatchError.
Complex inner_product(const TwoParticleState& s1, const TwoParticleState& s2);

// The same state written over ordered pseudo-particle pairs: 16 amplitudes
// indexed by 4 * (mode of pseudo-particle 1) + (mode of pseudo-particle 2).
// (Anti)symmetric under pseudo-label swap according to the statistics.
class FirstQuantizedState {
 public:
  FirstQuantizedState(Statistics stats, std::array<Complex, 16> amps);

  Statistics statistics() const { return stats_; }
  const std::array<Complex, 16>& amplitudes() const { return amps_; }
  Complex amplitude(const Mode& first, const Mode& second) const {
    return amps_[4 * first.index() + second.index()];
  }

  FirstQuantizedState swap_pseudo_labels() const;

 private:
  Statistics stats_;
  std::array<Complex, 16> amps_;
};

// {m, m'} -> (|m>|m'> +- |m'>|m>)/sqrt(2); equal-mode bosonic
// configurations map to |m>|m> with weight 1.
FirstQuantizedState to_first_quantized(const TwoParticleState& s);

Complex inner_product(const FirstQuantizedState& s1,
                      const FirstQuantizedState& s2);

}  // namespace dualsim
