#pragma once

#include <string_view>

#include "kgscatter/coefficients.hpp"

namespace kgscatter {

// Dispersion relation for the square-barrier wavenumbers:
//   schrodinger:  k1 = sqrt(2E),      k2 = sqrt(2(E - V0))
//   klein_gordon: k1 = sqrt(E^2 - 1), k2 = sqrt((E - V0)^2 - 1)
enum class Dispersion { schrodinger, klein_gordon };

std::string_view to_string(Dispersion d);

/// Closed-form R, T for a square barrier of height V0 on [x0, 0].
///
/// Evaluated as R = D S / (4 k1^2 + D S), T = 4 k1^2 / (4 k1^2 + D S) with
/// D = (k1^2 - k2^2)^2 and S = sin^2(k2 L) / k2^2, which becomes
/// sinh^2(|k2| L) / |k2|^2 under the barrier. Throws DomainError outside the
/// propagating regime and DegenerateError when |k2^2| < 1e-12.
Coefficients square_barrier_rt(double E, double V0, double x0, Dispersion d);

}  // namespace kgscatter
