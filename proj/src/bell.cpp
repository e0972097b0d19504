// Copyright 2026 The dualsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "dualsim/bell.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

namespace dualsim {

namespace {

constexpr double kPi = std::numbers::pi;

Eigen::Vector3d to_vec(const std::array<double, 3>& a) {
  return Eigen::Vector3d(a[0], a[1], a[2]);
}

PseudoSpinSetting setting_from_direction(const Eigen::Vector3d& n) {
  double z = std::clamp(n.z(), -1.0, 1.0);
  double theta = std::acos(z);
  double phi = std::atan2(n.y(), n.x());
  if (phi < 0.0) phi += 2.0 * kPi;
  return PseudoSpinSetting{theta, phi};
}

Eigen::Matrix4cd kron2(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
  Eigen::Matrix4cd out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

const Eigen::Matrix2cd& sigma(int axis) {
  static const Eigen::Matrix2cd sx =
      (Eigen::Matrix2cd() << 0, 1, 1, 0).finished();
  static const Eigen::Matrix2cd sy =
      (Eigen::Matrix2cd() << 0, Complex(0, -1), Complex(0, 1), 0).finished();
  static const Eigen::Matrix2cd sz =
      (Eigen::Matrix2cd() << 1, 0, 0, -1).finished();
  static const std::array<const Eigen::Matrix2cd*, 3> all = {&sx, &sy, &sz};
  return *all[axis];
}

double correlator_t(const Eigen::Matrix3d& t, const Eigen::Vector3d& na,
                    const Eigen::Vector3d& nb) {
  return na.dot(t * nb);
}

double chsh_value_t(const Eigen::Matrix3d& t, const BellSettings& st) {
  Eigen::Vector3d a = to_vec(st.a.direction());
  Eigen::Vector3d ap = to_vec(st.a_prime.direction());
  Eigen::Vector3d b = to_vec(st.b.direction());
  Eigen::Vector3d bp = to_vec(st.b_prime.direction());
  return correlator_t(t, a, b) + correlator_t(t, a, bp) +
         correlator_t(t, ap, b) - correlator_t(t, ap, bp);
}

// Downhill simplex minimizer, deterministic; good enough for polishing a
// grid optimum in a smooth low-dimensional landscape.
std::vector<double> nelder_mead(
    const std::function<double(const std::vector<double>&)>& f,
    std::vector<double> start, double step, int max_evals) {
  const std::size_t n = start.size();
  struct Vertex {
    std::vector<double> x;
    double fx;
  };
  std::vector<Vertex> simplex;
  simplex.push_back({start, f(start)});
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> x = start;
    x[i] += step;
    simplex.push_back({x, f(x)});
  }
  int evals = static_cast<int>(n) + 1;
  auto by_value = [](const Vertex& u, const Vertex& v) { return u.fx < v.fx; };
  while (evals < max_evals) {
    std::sort(simplex.begin(), simplex.end(), by_value);
    if (simplex.back().fx - simplex.front().fx < 1e-12) break;
    std::vector<double> centroid(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) centroid[j] += simplex[i].x[j];
    }
    for (double& c : centroid) c /= static_cast<double>(n);
    auto affine = [&](double coef) {
      std::vector<double> x(n);
      for (std::size_t j = 0; j < n; ++j)
        x[j] = centroid[j] + coef * (simplex.back().x[j] - centroid[j]);
      return x;
    };
    std::vector<double> xr = affine(-1.0);
    double fr = f(xr);
    ++evals;
    if (fr < simplex.front().fx) {
      std::vector<double> xe = affine(-2.0);
      double fe = f(xe);
      ++evals;
      simplex.back() = fe < fr ? Vertex{xe, fe} : Vertex{xr, fr};
    } else if (fr < simplex[n - 1].fx) {
      simplex.back() = {xr, fr};
    } else {
      std::vector<double> xc = affine(0.5);
      double fc = f(xc);
      ++evals;
      if (fc < simplex.back().fx) {
        simplex.back() = {xc, fc};
      } else {
        for (std::size_t i = 1; i <= n; ++i) {
          for (std::size_t j = 0; j < n; ++j)
            simplex[i].x[j] =
                0.5 * (simplex[i].x[j] + simplex.front().x[j]);
          simplex[i].fx = f(simplex[i].x);
          ++evals;
        }
      }
    }
  }
  std::sort(simplex.begin(), simplex.end(), by_value);
  return simplex.front().x;
}

BellSettings settings_from_angles(const std::vector<double>& x) {
  return BellSettings{PseudoSpinSetting{x[0], x[1]},
                      PseudoSpinSetting{x[2], x[3]},
                      PseudoSpinSetting{x[4], x[5]},
                      PseudoSpinSetting{x[6], x[7]}};
}

// Flip both of one party's settings through the origin; all four
// correlators change sign, so S does too.
BellSettings negate_party_a(const BellSettings& st) {
  auto flip = [](const PseudoSpinSetting& s) {
    double phi = s.phi + kPi;
    if (phi >= 2.0 * kPi) phi -= 2.0 * kPi;
    return PseudoSpinSetting{kPi - s.theta, phi};
  };
  return BellSettings{flip(st.a), flip(st.a_prime), st.b, st.b_prime};
}

}  // namespace

std::array<double, 3> PseudoSpinSetting::direction() const {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
          std::cos(theta)};
}

BellSettings BellSettings::canonical() {
  return BellSettings{PseudoSpinSetting{kPi / 2, 0.0},
                      PseudoSpinSetting{kPi / 2, kPi / 2},
                      PseudoSpinSetting{kPi / 2, kPi / 4},
                      PseudoSpinSetting{kPi / 2, -kPi / 4}};
}

bool BellSettings::in_plane(double tol) const {
  for (const PseudoSpinSetting* s : {&a, &a_prime, &b, &b_prime})
    if (std::abs(s->theta - kPi / 2) > tol) return false;
  return true;
}

Eigen::Matrix2cd pauli_direction(const PseudoSpinSetting& setting) {
  auto n = setting.direction();
  Eigen::Matrix2cd m;
  m << n[2], Complex(n[0], -n[1]), Complex(n[0], n[1]), -n[2];
  return m;
}

Eigen::Vector4cd two_qubit_vector(const LabeledBipartiteState& state) {
  Eigen::Vector4cd v;
  v << Complex{0, 0}, state.c1(), state.c2(), Complex{0, 0};
  return v;
}

double correlator(const Eigen::Matrix4cd& rho, const PseudoSpinSetting& sa,
                  const PseudoSpinSetting& sb) {
  Eigen::Matrix4cd obs = kron2(pauli_direction(sa), pauli_direction(sb));
  return (rho * obs).trace().real();
}

double correlator(const LabeledBipartiteState& state,
                  const PseudoSpinSetting& sa, const PseudoSpinSetting& sb) {
  Eigen::Vector4cd psi = two_qubit_vector(state);
  Eigen::Matrix4cd obs = kron2(pauli_direction(sa), pauli_direction(sb));
  return psi.dot(obs * psi).real();
}

ChshResult bell_expectation(const Eigen::Matrix4cd& rho,
                            const BellSettings& settings) {
  ChshResult r;
  r.settings = settings;
  r.e_ab = correlator(rho, settings.a, settings.b);
  r.e_ab_prime = correlator(rho, settings.a, settings.b_prime);
  r.e_a_prime_b = correlator(rho, settings.a_prime, settings.b);
  r.e_a_prime_b_prime = correlator(rho, settings.a_prime, settings.b_prime);
  r.s = r.e_ab + r.e_ab_prime + r.e_a_prime_b - r.e_a_prime_b_prime;
  return r;
}

ChshResult bell_expectation(const LabeledBipartiteState& state,
                            const BellSettings& settings) {
  Eigen::Vector4cd psi = two_qubit_vector(state);
  return bell_expectation(Eigen::Matrix4cd(psi * psi.adjoint()), settings);
}

Eigen::Matrix3d correlation_matrix(const Eigen::Matrix4cd& rho) {
  Eigen::Matrix3d t;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      t(i, j) = (rho * kron2(sigma(i), sigma(j))).trace().real();
  return t;
}

Eigen::Matrix3d correlation_matrix(const LabeledBipartiteState& state) {
  Eigen::Vector4cd psi = two_qubit_vector(state);
  return correlation_matrix(Eigen::Matrix4cd(psi * psi.adjoint()));
}

ChshOptimum chsh_optimal(const Eigen::Matrix4cd& rho) {
  Eigen::Matrix3d t = correlation_matrix(rho);

  // Route 1: the two largest singular values of T bound and attain the
  // optimum: max |S| = 2 sqrt(s1^2 + s2^2).
  Eigen::JacobiSVD<Eigen::Matrix3d> svd(t);
  Eigen::Vector3d sv = svd.singularValues();
  double criterion = 2.0 * std::sqrt(sv(0) * sv(0) + sv(1) * sv(1));

  // Route 2: search over settings. For Bob's pair write b + b' = 2 cos(x) c
  // and b - b' = 2 sin(x) c' with c, c' orthonormal; Alice's best responses
  // align with T(b +- b'), giving S = 2 (cos(x) |Tc| + sin(x) |Tc'|). The
  // grid scans c at 1 degree; the optimal c' in the plane normal to c and
  // the optimal x are elementary maximizations of a sinusoid.
  double best_val = -1.0;
  double best_theta = 0.0, best_phi = 0.0, best_psi = 0.0;
  const double deg = kPi / 180.0;
  for (int it = 0; it <= 180; ++it) {
    double theta = it * deg;
    double st = std::sin(theta), ct = std::cos(theta);
    for (int ip = 0; ip < 360; ++ip) {
      double phi = ip * deg;
      double sp = std::sin(phi), cp = std::cos(phi);
      Eigen::Vector3d c(st * cp, st * sp, ct);
      Eigen::Vector3d e1(ct * cp, ct * sp, -st);
      Eigen::Vector3d e2(-sp, cp, 0.0);
      Eigen::Vector3d tc = t * c;
      Eigen::Vector3d t1 = t * e1;
      Eigen::Vector3d t2 = t * e2;
      double qa = t1.squaredNorm();
      double qb = t2.squaredNorm();
      double qc = t1.dot(t2);
      // max over psi of |T (cos(psi) e1 + sin(psi) e2)|^2
      double half_diff = 0.5 * (qa - qb);
      double perp_max =
          0.5 * (qa + qb) + std::sqrt(half_diff * half_diff + qc * qc);
      double val = tc.squaredNorm() + perp_max;
      if (val > best_val) {
        best_val = val;
        best_theta = theta;
        best_phi = phi;
        best_psi = 0.5 * std::atan2(2.0 * qc, qa - qb);
      }
    }
  }

  // Reconstruct explicit settings from the best frame.
  double st = std::sin(best_theta), ct = std::cos(best_theta);
  double sp = std::sin(best_phi), cp = std::cos(best_phi);
  Eigen::Vector3d c(st * cp, st * sp, ct);
  Eigen::Vector3d e1(ct * cp, ct * sp, -st);
  Eigen::Vector3d e2(-sp, cp, 0.0);
  Eigen::Vector3d cperp = std::cos(best_psi) * e1 + std::sin(best_psi) * e2;
  double xi = std::atan2((t * cperp).norm(), (t * c).norm());
  Eigen::Vector3d b = std::cos(xi) * c + std::sin(xi) * cperp;
  Eigen::Vector3d bp = std::cos(xi) * c - std::sin(xi) * cperp;
  auto respond = [&](const Eigen::Vector3d& u) {
    Eigen::Vector3d v = t * u;
    double n = v.norm();
    return n > 1e-15 ? Eigen::Vector3d(v / n) : Eigen::Vector3d(0, 0, 1);
  };
  Eigen::Vector3d a = respond(b + bp);
  Eigen::Vector3d ap = respond(b - bp);

  std::vector<double> x0;
  for (const Eigen::Vector3d* v : {&a, &ap, &b, &bp}) {
    PseudoSpinSetting s = setting_from_direction(*v);
    x0.push_back(s.theta);
    x0.push_back(s.phi);
  }

  // Polish on the raw settings objective.
  auto objective = [&](const std::vector<double>& x) {
    return -std::abs(chsh_value_t(t, settings_from_angles(x)));
  };
  std::vector<double> xbest = nelder_mead(objective, x0, 0.02, 4000);
  BellSettings settings = settings_from_angles(xbest);
  double s_refined = chsh_value_t(t, settings);
  if (s_refined < 0.0) {
    settings = negate_party_a(settings);
    s_refined = -s_refined;
  }

  if (std::abs(s_refined - criterion) > 1e-6)
    throw std::logic_error("CHSH optimizer routes disagree beyond 1e-6");
  return ChshOptimum{s_refined, criterion, settings};
}

ChshOptimum chsh_optimal(const LabeledBipartiteState& state) {
  Eigen::Vector4cd psi = two_qubit_vector(state);
  return chsh_optimal(Eigen::Matrix4cd(psi * psi.adjoint()));
}

SignDifferenceReport sign_difference_report(const TwoParticleState& s,
                                            const BellSettings& settings) {
  if (!settings.in_plane())
    throw SettingsNotInPlaneError(
        "sign-difference comparison requires all polar angles = pi/2");
  LabeledBipartiteState a_form = relabel_by_a(s);
  LabeledBipartiteState b_form = relabel_by_b(s);
  if (std::abs(a_form.c1() - a_form.c2()) > 1e-9)
    throw InvalidArgumentError(
        "sign-difference comparison requires equal term amplitudes");
  SignDifferenceReport rep{bell_expectation(a_form, settings),
                           bell_expectation(b_form, settings), 0};
  if (std::abs(rep.a_form.s) < 1e-9 || std::abs(rep.b_form.s) < 1e-9)
    throw InvalidArgumentError(
        "CHSH expectation vanishes at these settings; ratio sign undefined");
  rep.ratio_sign = rep.a_form.s * rep.b_form.s > 0.0 ? +1 : -1;
  return rep;
}

}  // namespace dualsim
