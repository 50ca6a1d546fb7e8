#pragma once

namespace kgscatter {

// Reflection/transmission pair; unitarity_residual = R + T - 1.
struct Coefficients {
  double R = 0.0;
  double T = 0.0;
  double unitarity_residual = 0.0;
};

inline Coefficients make_coefficients(double R, double T) { return {R, T, (R + T) - 1.0}; }

}  // namespace kgscatter
