#include "kgscatter/matcher.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "kgscatter/errors.hpp"

namespace kgscatter {
namespace {

constexpr Complex kI{0.0, 1.0};

// 2 i a V0: the Whittaker argument at both joints.
Complex joint_argument(const ScatterParams& p) { return {0.0, 2.0 * p.a * p.V0}; }

WhittakerIndex signed_index(const ScatterParams& p, MuSign sign) {
  WhittakerIndex idx = whittaker_index(p);
  if (sign == MuSign::minus) idx.mu = -idx.mu;
  return idx;
}

using System = std::array<std::array<Complex, 5>, 4>;  // augmented [A | rhs]

std::array<Complex, 4> solve_pivoted(System m) {
  double norm = 0.0;
  for (const auto& row : m) {
    double s = 0.0;
    for (int j = 0; j < 4; ++j) s += std::abs(row[j]);
    norm = std::max(norm, s);
  }
  for (int col = 0; col < 4; ++col) {
    int piv = col;
    for (int r = col + 1; r < 4; ++r) {
      if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
    }
    if (std::abs(m[piv][col]) < 1e-13 * norm) {
      throw SingularSystemError("matching system is singular (column " + std::to_string(col) +
                                ")");
    }
    std::swap(m[col], m[piv]);
    for (int r = col + 1; r < 4; ++r) {
      const Complex f = m[r][col] / m[col][col];
      for (int j = col; j < 5; ++j) m[r][j] -= f * m[col][j];
    }
  }
  std::array<Complex, 4> x{};
  for (int r = 3; r >= 0; --r) {
    Complex acc = m[r][4];
    for (int j = r + 1; j < 4; ++j) acc -= m[r][j] * x[j];
    x[r] = acc / m[r][r];
  }
  return x;
}

struct JointWaves {
  WaveValue incident;   // phi_I(+mu) at x0
  WaveValue reflected;  // phi_I(-mu) at x0
  Region2Basis left;    // region II basis at x0
  Region2Basis right;   // region II basis at 0
  WaveValue transmitted;  // phi_III at 0
};

JointWaves joint_waves(const ScatterParams& p, const SeriesOptions& opts) {
  return {region1_wave(p, MuSign::plus, p.x0, opts), region1_wave(p, MuSign::minus, p.x0, opts),
          region2_wave(p, p.x0), region2_wave(p, 0.0), region3_wave(p, 0.0, opts)};
}

System assemble(const JointWaves& w) {
  System m{};
  m[0] = {w.reflected.value, -w.left.backward.value, -w.left.forward.value, 0.0,
          -w.incident.value};
  m[1] = {w.reflected.deriv, -w.left.backward.deriv, -w.left.forward.deriv, 0.0,
          -w.incident.deriv};
  m[2] = {0.0, w.right.backward.value, w.right.forward.value, -w.transmitted.value, 0.0};
  m[3] = {0.0, w.right.backward.deriv, w.right.forward.deriv, -w.transmitted.deriv, 0.0};
  return m;
}

double residual_of(const System& m, const std::array<Complex, 4>& x) {
  double worst = 0.0;
  for (const auto& row : m) {
    Complex r = -row[4];
    double scale = std::abs(row[4]);
    for (int j = 0; j < 4; ++j) {
      r += row[j] * x[j];
      scale += std::abs(row[j] * x[j]);
    }
    if (scale > 0.0) worst = std::max(worst, std::abs(r) / scale);
  }
  return worst;
}

void require_positive_height(const ScatterParams& p) {
  if (!(p.V0 > 0.0)) throw DomainError("Whittaker region solutions need V0 > 0");
}

}  // namespace

WaveValue region1_wave(const ScatterParams& p, MuSign sign, double x, const SeriesOptions& opts) {
  validate(p);
  require_positive_height(p);
  if (x > p.x0) throw DomainError("region I wave evaluated at x > x0");
  const Complex s = joint_argument(p);
  const double t = (x - p.x0) / p.a;
  const Complex z = s * std::exp(t);
  const Complex pref = std::pow(s, -0.5) * std::exp(-0.5 * t);
  const WhittakerValue m = whittaker_m_with_deriv(signed_index(p, sign), z, opts);
  const Complex value = pref * m.value;
  // d/dx: prefactor gives -1/(2a), dz/dx = z/a.
  return {value, -value / (2.0 * p.a) + pref * m.deriv * z / p.a};
}

Region2Basis region2_wave(const ScatterParams& p, double x) {
  const Kinematics kin = kinematics(p);
  if (x < p.x0 || x > 0.0) throw DomainError("region II wave evaluated outside [x0, 0]");
  const Complex back = std::exp(-kI * kin.q * x);
  const Complex fwd = std::exp(kI * kin.q * x);
  return {{back, -kI * kin.q * back}, {fwd, kI * kin.q * fwd}};
}

WaveValue region3_wave(const ScatterParams& p, double x, const SeriesOptions& opts) {
  validate(p);
  require_positive_height(p);
  if (x < 0.0) throw DomainError("region III wave evaluated at x < 0");
  const Complex s = joint_argument(p);
  const double t = x / p.a;
  const Complex z = s * std::exp(-t);
  const Complex pref = std::pow(s, -0.5) * std::exp(0.5 * t);
  const WhittakerValue m = whittaker_m_with_deriv(signed_index(p, MuSign::minus), z, opts);
  const Complex value = pref * m.value;
  // d/dx: prefactor gives +1/(2a), dz/dx = -z/a.
  return {value, value / (2.0 * p.a) - pref * m.deriv * z / p.a};
}

Amplitudes solve_matching(const ScatterParams& p, const SeriesOptions& opts) {
  const System m = assemble(joint_waves(p, opts));
  const auto x = solve_pivoted(m);
  const double res = residual_of(m, x);
  if (!(res <= 1e-10)) {
    throw SingularSystemError("matching residual " + std::to_string(res) + " above 1e-10");
  }
  return {x[0], x[1], x[2], x[3]};
}

double matching_residual(const ScatterParams& p, const Amplitudes& amps,
                         const SeriesOptions& opts) {
  return residual_of(assemble(joint_waves(p, opts)), {amps.b1, amps.b2, amps.c2, amps.b3});
}

AsymptoticAmplitudes asymptotic_amplitudes(const ScatterParams& p, const Amplitudes& amps) {
  const Complex pw = std::pow(joint_argument(p), whittaker_index(p).mu);  // (2iaV0)^mu
  return {pw, amps.b1 / pw, amps.b3 / pw};
}

Coefficients coefficients(const ScatterParams& p, const SeriesOptions& opts) {
  validate(p);
  if (p.V0 == 0.0) return make_coefficients(0.0, 1.0);
  const AsymptoticAmplitudes asym = asymptotic_amplitudes(p, solve_matching(p, opts));
  const double inc = std::norm(asym.incident);
  return make_coefficients(std::norm(asym.reflected) / inc, std::norm(asym.transmitted) / inc);
}

}  // namespace kgscatter
