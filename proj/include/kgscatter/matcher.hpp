#pragma once

#include "kgscatter/barrier.hpp"
#include "kgscatter/coefficients.hpp"
#include "kgscatter/specfun.hpp"

namespace kgscatter {

// phi(x) and dphi/dx at one point.
struct WaveValue {
  Complex value;
  Complex deriv;
};

// Selects M_{kappa,+mu} (incident, e^{+ikx} as x -> -inf) or M_{kappa,-mu} (reflected).
enum class MuSign { plus, minus };

// Plane-wave basis of the flat top: e^{-iqx} and e^{+iqx}.
struct Region2Basis {
  WaveValue backward;
  WaveValue forward;
};

// Matching unknowns for unit incident coefficient c1 = 1.
//   region I:   phi = phi_I(+mu) + b1 phi_I(-mu)
//   region II:  phi = b2 e^{-iqx} + c2 e^{iqx}
//   region III: phi = b3 phi_III
struct Amplitudes {
  Complex b1;
  Complex b2;
  Complex c2;
  Complex b3;
};

// Coefficients of the plane waves the region solutions tend to far from the
// barrier: incident/reflected as x -> -inf, transmitted as x -> +inf.
struct AsymptoticAmplitudes {
  Complex incident;
  Complex reflected;
  Complex transmitted;
};

// (2iaV0)^{-1/2} e^{-(x-x0)/2a} M_{kappa,+-mu}(2iaV0 e^{(x-x0)/a}), x <= x0.
WaveValue region1_wave(const ScatterParams& p, MuSign sign, double x,
                       const SeriesOptions& opts = {});

// x0 <= x <= 0.
Region2Basis region2_wave(const ScatterParams& p, double x);

// (2iaV0)^{-1/2} e^{x/2a} M_{kappa,-mu}(2iaV0 e^{-x/a}), x >= 0.
WaveValue region3_wave(const ScatterParams& p, double x, const SeriesOptions& opts = {});

/// Solves continuity of phi and phi' at x = x0 and x = 0 for (b1, b2, c2, b3).
///
/// The rows are assembled from the region solutions above, so the system is
/// correct by construction for any sign or index convention the region
/// functions use. Gaussian elimination with partial pivoting; throws
/// SingularSystemError if a pivot falls below 1e-13 of the matrix norm or the
/// post-solve residual exceeds 1e-10 relative. Requires V0 > 0.
Amplitudes solve_matching(const ScatterParams& p, const SeriesOptions& opts = {});

// Largest relative mismatch over the four continuity equations.
double matching_residual(const ScatterParams& p, const Amplitudes& amps,
                         const SeriesOptions& opts = {});

AsymptoticAmplitudes asymptotic_amplitudes(const ScatterParams& p, const Amplitudes& amps);

// R = |A_ref / A_inc|^2, T = |A_trans / A_inc|^2. V0 = 0 returns (0, 1) exactly.
Coefficients coefficients(const ScatterParams& p, const SeriesOptions& opts = {});

}  // namespace kgscatter
