#include "kgscatter/barrier.hpp"

#include <cmath>
#include <string>

#include "kgscatter/errors.hpp"

namespace kgscatter {

void validate(const ScatterParams& p) {
  if (!std::isfinite(p.E) || !std::isfinite(p.V0) || !std::isfinite(p.a) || !std::isfinite(p.x0)) {
    throw DomainError("scatter parameters must be finite");
  }
  if (!(p.E > 1.0)) throw DomainError("E must exceed 1 (got " + std::to_string(p.E) + ")");
  if (p.V0 < 0.0) throw DomainError("V0 must be non-negative");
  if (!(p.a > 0.0)) throw DomainError("smoothness a must be positive");
  if (p.x0 > 0.0) throw DomainError("x0 must be <= 0");
}

double potential_value(double x, const ScatterParams& p) {
  if (x < p.x0) return p.V0 * std::exp((x - p.x0) / p.a);
  if (x <= 0.0) return p.V0;
  return p.V0 * std::exp(-x / p.a);
}

Kinematics kinematics(const ScatterParams& p) {
  validate(p);
  const double k = std::sqrt(p.E * p.E - 1.0);
  const double d = p.E - p.V0;
  const double q2 = d * d - 1.0;
  if (std::abs(q2) < kDegenerateThreshold) {
    throw DegenerateError("interior wavenumber q vanishes (|E - V0| = 1)");
  }
  const Complex q = q2 > 0.0 ? Complex(std::sqrt(q2), 0.0) : Complex(0.0, std::sqrt(-q2));
  return {k, q};
}

WhittakerIndex whittaker_index(const ScatterParams& p) {
  validate(p);
  return {Complex(0.0, p.a * p.E), Complex(0.0, p.a * std::sqrt(p.E * p.E - 1.0))};
}

}  // namespace kgscatter
