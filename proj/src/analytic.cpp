#include "kgscatter/analytic.hpp"

#include <cmath>

#include "kgscatter/barrier.hpp"
#include "kgscatter/errors.hpp"

namespace kgscatter {

std::string_view to_string(Dispersion d) {
  return d == Dispersion::schrodinger ? "schrodinger" : "klein_gordon";
}

Coefficients square_barrier_rt(double E, double V0, double x0, Dispersion d) {
  if (!std::isfinite(E) || !std::isfinite(V0) || !std::isfinite(x0)) {
    throw DomainError("square barrier: parameters must be finite");
  }
  double k1sq = 0.0;
  double k2sq = 0.0;
  if (d == Dispersion::schrodinger) {
    if (!(E > 0.0)) throw DomainError("square barrier (Schrodinger): E must be positive");
    k1sq = 2.0 * E;
    k2sq = 2.0 * (E - V0);
  } else {
    if (!(E > 1.0)) throw DomainError("square barrier (Klein-Gordon): E must exceed 1");
    k1sq = E * E - 1.0;
    k2sq = (E - V0) * (E - V0) - 1.0;
  }
  if (std::abs(k2sq) < kDegenerateThreshold) {
    throw DegenerateError("square barrier: k2 vanishes");
  }
  const double width = std::abs(x0);
  double s = 0.0;
  if (k2sq > 0.0) {
    const double k2 = std::sqrt(k2sq);
    s = std::pow(std::sin(k2 * width), 2) / k2sq;
  } else {
    const double kappa = std::sqrt(-k2sq);
    s = std::pow(std::sinh(kappa * width), 2) / -k2sq;
  }
  const double ds = std::pow(k1sq - k2sq, 2) * s;
  const double den = 4.0 * k1sq + ds;
  return make_coefficients(ds / den, 4.0 * k1sq / den);
}

}  // namespace kgscatter
