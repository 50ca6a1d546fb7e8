#pragma once

#include <functional>
#include <vector>

#include "kgscatter/barrier.hpp"
#include "kgscatter/coefficients.hpp"

namespace kgscatter {

// Any real potential V(x); only finitely many kinks or jumps are allowed and
// they should be listed as breakpoints so steps never straddle them.
using Potential = std::function<double(double)>;

struct OracleConfig {
  double x_min = -12.0;
  double x_max = 12.0;
  double step = 1e-4;
  double tail_tol = 1e-10;  // |V| at both window ends must stay below tail_tol * max|V|
  std::vector<double> breakpoints;
};

// Window for the smooth barrier: a * max(12, ln(1/tail_tol) + 1) beyond each joint,
// with the two joints as breakpoints.
OracleConfig default_oracle_config(const ScatterParams& p, double step = 1e-4,
                                   double tail_tol = 1e-10);

/// R and T from direct integration of phi'' = -[(E - V)^2 - 1] phi.
///
/// Starts from a pure transmitted wave e^{ikx} at x_max, runs classical RK4
/// backward to x_min and projects (phi, phi') there onto e^{+ikx}, e^{-ikx}.
/// Throws StepError when |R + T - 1| > 1e-6 and DomainError when the window
/// does not contain the potential to tail_tol.
Coefficients integrate_rt(const Potential& V, double E, const OracleConfig& cfg);

// |R(step) - R(step/2)|.
double convergence_check(const Potential& V, double E, const OracleConfig& cfg);

Potential smooth_barrier(const ScatterParams& p);

// V0 on [x0, 0], zero elsewhere.
Potential square_barrier(double V0, double x0);

// integrate_rt on the smooth barrier with its default window.
Coefficients oracle_coefficients(const ScatterParams& p, double step = 1e-4);

}  // namespace kgscatter
