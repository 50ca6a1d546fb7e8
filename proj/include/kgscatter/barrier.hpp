#pragma once

#include "kgscatter/specfun.hpp"

namespace kgscatter {

// Physical inputs in natural units (hbar = c = m = 1).
//
//   V(x) = V0 exp((x - x0)/a)   x < x0
//          V0                   x0 <= x <= 0
//          V0 exp(-x/a)         x > 0
struct ScatterParams {
  double E = 2.0;   // energy, units of the rest energy; E > 1 propagates
  double V0 = 0.0;  // barrier height, >= 0
  double a = 0.5;   // smoothness length, > 0
  double x0 = 0.0;  // left edge of the flat top, <= 0 (x0 = 0 gives the cusp)
};

struct Kinematics {
  double k;   // exterior wavenumber sqrt(E^2 - 1)
  Complex q;  // interior wavenumber, Re q > 0 or q on the positive imaginary axis
};

// Throws DomainError unless E > 1, V0 >= 0, a > 0, x0 <= 0 and all finite.
void validate(const ScatterParams& p);

double potential_value(double x, const ScatterParams& p);

// Throws DegenerateError when |(E - V0)^2 - 1| < 1e-12.
Kinematics kinematics(const ScatterParams& p);

// kappa = i a E, mu = i a sqrt(E^2 - 1).
WhittakerIndex whittaker_index(const ScatterParams& p);

// |(E - V0)^2 - 1| below which the interior solution degenerates.
inline constexpr double kDegenerateThreshold = 1e-12;

}  // namespace kgscatter
