// Copyright 2026 The dualsim Authors
// SPDX-License-Identifier: Apache-2.0

// Rewrites a two-term entangled state of identical particles in either of
// its two bipartite readings: labeled by variable A and entangled in B, or
// labeled by B and entangled in A. The second reading picks up the exchange
// sign of the statistics. For distinct species the B-labeled reading does
// not exist and is rejected.

#pragma once

#include <array>

#include "dualsim/fock.hpp"

namespace dualsim {

enum class VariableId { A, B };

inline VariableId other(VariableId v) {
  return v == VariableId::A ? VariableId::B : VariableId::A;
}

const char* to_string(VariableId v);

// Two-term bipartite form  c1 |x1>_{L1} |x2>_{L2} + c2 |x2>_{L1} |x1>_{L2},
// where L1, L2 are the eigenvalues of the label variable and x1, x2 those
// of the entangled variable. Normalized; amplitudes are stored exactly as
// written (global phases and signs are physical relative to this order).
class LabeledBipartiteState {
 public:
  LabeledBipartiteState(VariableId label_variable, Complex c1, Complex c2);

  VariableId label_variable() const { return label_; }
  VariableId entangled_variable() const { return other(label_); }
  Complex c1() const { return c1_; }
  Complex c2() const { return c2_; }

  // The same state written with the two label slots exchanged (slot 2
  // first). Slot order is presentation; for fermions the rewritten form
  // differs by a global exchange sign, which is dropped here.
  LabeledBipartiteState swapped_labels() const {
    return LabeledBipartiteState(label_, c2_, c1_);
  }

 private:
  VariableId label_;
  Complex c1_, c2_;
};

// 2 |c1 c2|; both bipartite readings of one state must agree on it.
double concurrence(const LabeledBipartiteState& s);

// A-labeled reading (labels A1, A2; entangled in B). No sign arises: the
// stored canonical order already lists A1 before A2 in both terms.
// Throws NotEprFormError if the state has support outside the two
// two-term-family configurations.
LabeledBipartiteState relabel_by_a(const TwoParticleState& s);

// B-labeled reading (labels B1, B2; entangled in A). Bringing the second
// term into B-canonical operator order exchanges the two creation
// operators, so c2 = +beta for bosons and -beta for fermions.
LabeledBipartiteState relabel_by_b(const TwoParticleState& s);

// Inverse of the relabelings: rebuilds the second-quantized state.
TwoParticleState reconstruct(const LabeledBipartiteState& form,
                             Statistics stats,
                             VariableSpec spec = VariableSpec());

// relabel + reconstruct; the result equals the input up to global phase.
TwoParticleState round_trip(const TwoParticleState& s, VariableId via);

// Two distinguishable species ("c" and "d"), one particle each, over the
// same four modes. Amplitudes indexed by 4 * c_mode + d_mode. The species
// assignment is fixed per tensor slot.
class TwoSpeciesState {
 public:
  explicit TwoSpeciesState(std::array<Complex, 16> amplitudes);

  // alpha on (c:|A1,B1>, d:|A2,B2>), beta on (c:|A1,B2>, d:|A2,B1>).
  static TwoSpeciesState epr_analogue(Complex alpha, Complex beta);

  Complex amplitude(const Mode& c_mode, const Mode& d_mode) const {
    return amps_[4 * c_mode.index() + d_mode.index()];
  }
  const std::array<Complex, 16>& amplitudes() const { return amps_; }

 private:
  std::array<Complex, 16> amps_;
};

// Attempts the B-labeled reading for the two-species analogue. Succeeds
// only in the product cases (alpha = 0 or beta = 0); otherwise a label
// slot would have to superpose the two species attributes, which is
// forbidden, and SpeciesSuperpositionForbiddenError is thrown.
LabeledBipartiteState attempt_relabel_by_b_nip(const TwoSpeciesState& s);

}  // namespace dualsim
