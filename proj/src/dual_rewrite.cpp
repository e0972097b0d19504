// Copyright 2026 The dualsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "dualsim/dual_rewrite.hpp"

#include <cmath>

namespace dualsim {

namespace {

const PairConfig kAlphaConfig{Mode{1, 1}, Mode{2, 2}};
const PairConfig kBetaConfig{Mode{1, 2}, Mode{2, 1}};

// Extracts (alpha, beta) from a state supported on the two-term family,
// rejecting anything else.
std::pair<Complex, Complex> epr_amplitudes(const TwoParticleState& s) {
  const auto& basis = TwoParticleState::basis(s.statistics());
  const auto& amps = s.amplitudes();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i] == kAlphaConfig || basis[i] == kBetaConfig) continue;
    if (std::abs(amps[i]) > kTol)
      throw NotEprFormError("state has support on configuration {" +
                            to_string(basis[i].lo) + "," +
                            to_string(basis[i].hi) + "}");
  }
  return {s.amplitude(kAlphaConfig), s.amplitude(kBetaConfig)};
}

}  // namespace

const char* to_string(VariableId v) { return v == VariableId::A ? "A" : "B"; }

LabeledBipartiteState::LabeledBipartiteState(VariableId label_variable,
                                             Complex c1, Complex c2)
    : label_(label_variable), c1_(c1), c2_(c2) {
  double n2 = std::norm(c1_) + std::norm(c2_);
  if (n2 <= 0.0) throw ZeroStateError("both term amplitudes vanish");
  double inv = 1.0 / std::sqrt(n2);
  c1_ *= inv;
  c2_ *= inv;
}

double concurrence(const LabeledBipartiteState& s) {
  return 2.0 * std::abs(s.c1() * s.c2());
}

LabeledBipartiteState relabel_by_a(const TwoParticleState& s) {
  auto [alpha, beta] = epr_amplitudes(s);
  return LabeledBipartiteState(VariableId::A, alpha, beta);
}

LabeledBipartiteState relabel_by_b(const TwoParticleState& s) {
  auto [alpha, beta] = epr_amplitudes(s);
  // B-canonical order sorts each operator pair by (b_index, a_index), which
  // is ordinary normal ordering after transposing the mode indices. The
  // alpha pair (|A1,B1>, |A2,B2>) is already B-ordered; the beta pair
  // (|A1,B2>, |A2,B1>) needs one exchange.
  auto b_order_sign = [&](const PairConfig& cfg) {
    auto transpose = [](const Mode& m) { return Mode{m.b_index, m.a_index}; };
    return apply_pair_normal_ordered(transpose(cfg.lo), transpose(cfg.hi),
                                     s.statistics())
        .sign;
  };
  double alpha_sign = b_order_sign(kAlphaConfig);
  double beta_sign = b_order_sign(kBetaConfig);
  return LabeledBipartiteState(VariableId::B, alpha_sign * alpha,
                               beta_sign * beta);
}

TwoParticleState reconstruct(const LabeledBipartiteState& form,
                             Statistics stats, VariableSpec spec) {
  if (form.label_variable() == VariableId::A) {
    return build_epr_state(spec, form.c1(), form.c2(), stats);
  }
  // Undo the sign picked up when the beta term was brought into B-order.
  double sign = exchange_sign(stats);
  return build_epr_state(spec, form.c1(), sign * form.c2(), stats);
}

TwoParticleState round_trip(const TwoParticleState& s, VariableId via) {
  LabeledBipartiteState form =
      via == VariableId::A ? relabel_by_a(s) : relabel_by_b(s);
  return reconstruct(form, s.statistics(), s.variable_spec());
}

TwoSpeciesState::TwoSpeciesState(std::array<Complex, 16> amplitudes)
    : amps_(amplitudes) {
  double n2 = 0.0;
  for (const Complex& a : amps_) n2 += std::norm(a);
  if (n2 <= 0.0) throw ZeroStateError("all amplitudes vanish");
  double inv = 1.0 / std::sqrt(n2);
  for (Complex& a : amps_) a *= inv;
}

TwoSpeciesState TwoSpeciesState::epr_analogue(Complex alpha, Complex beta) {
  if (std::norm(alpha) + std::norm(beta) <= 0.0)
    throw ZeroStateError("alpha and beta are both zero");
  std::array<Complex, 16> amps{};
  amps[4 * Mode{1, 1}.index() + Mode{2, 2}.index()] = alpha;
  amps[4 * Mode{1, 2}.index() + Mode{2, 1}.index()] = beta;
  return TwoSpeciesState(amps);
}

LabeledBipartiteState attempt_relabel_by_b_nip(const TwoSpeciesState& s) {
  Complex alpha = s.amplitude(Mode{1, 1}, Mode{2, 2});
  Complex beta = s.amplitude(Mode{1, 2}, Mode{2, 1});
  for (int ci = 0; ci < 4; ++ci) {
    for (int di = 0; di < 4; ++di) {
      Mode cm = Mode::from_index(ci);
      Mode dm = Mode::from_index(di);
      if ((cm == Mode{1, 1} && dm == Mode{2, 2}) ||
          (cm == Mode{1, 2} && dm == Mode{2, 1}))
        continue;
      if (std::abs(s.amplitude(cm, dm)) > kTol)
        throw NotEprFormError(
            "two-species state has support outside the two-term family");
    }
  }
  if (std::abs(alpha) > kTol && std::abs(beta) > kTol) {
    // Label slot B1 would hold species c with A1 in the first term and
    // species d with A2 in the second; a superposition of distinct species
    // attributes in one tensor slot is not a state.
    throw SpeciesSuperpositionForbiddenError(
        "slot=B1 requires superposing species {c:A1, d:A2}; "
        "slot=B2 requires superposing species {d:A2, c:A1}");
  }
  // Product case: a single term relabels slot-by-slot with no mixing.
  return LabeledBipartiteState(VariableId::B, alpha, beta);
}

}  // namespace dualsim
