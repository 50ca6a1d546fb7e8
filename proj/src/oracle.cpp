#include "kgscatter/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include "kgscatter/errors.hpp"

namespace kgscatter {
namespace {

using Cx = std::complex<double>;

struct State {
  Cx phi;
  Cx dphi;
};

// Segment ends, descending from x_max to x_min.
std::vector<double> segment_ends(const OracleConfig& cfg) {
  std::vector<double> ends{cfg.x_max, cfg.x_min};
  for (double b : cfg.breakpoints) {
    if (b > cfg.x_min && b < cfg.x_max) ends.push_back(b);
  }
  std::sort(ends.begin(), ends.end(), std::greater<>());
  ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
  return ends;
}

void check_config(double E, const OracleConfig& cfg) {
  if (!(E > 1.0) || !std::isfinite(E)) throw DomainError("oracle: E must exceed 1");
  if (!(cfg.x_min < cfg.x_max) || !std::isfinite(cfg.x_min) || !std::isfinite(cfg.x_max)) {
    throw DomainError("oracle: need finite x_min < x_max");
  }
  if (!(cfg.step > 0.0)) throw DomainError("oracle: step must be positive");
}

}  // namespace

OracleConfig default_oracle_config(const ScatterParams& p, double step, double tail_tol) {
  validate(p);
  const double width = p.a * std::max(12.0, std::log(1.0 / tail_tol) + 1.0);
  OracleConfig cfg;
  cfg.x_min = p.x0 - width;
  cfg.x_max = width;
  cfg.step = step;
  cfg.tail_tol = tail_tol;
  cfg.breakpoints = {p.x0, 0.0};
  return cfg;
}

Coefficients integrate_rt(const Potential& V, double E, const OracleConfig& cfg) {
  check_config(E, cfg);
  const double k = std::sqrt(E * E - 1.0);
  const Cx ik{0.0, k};
  auto w = [E](double v) { return (E - v) * (E - v) - 1.0; };

  State y{std::exp(ik * cfg.x_max), ik * std::exp(ik * cfg.x_max)};
  double vmax = 0.0;

  const auto ends = segment_ends(cfg);
  for (std::size_t s = 0; s + 1 < ends.size(); ++s) {
    const double from = ends[s];
    const double len = from - ends[s + 1];
    const auto n = static_cast<long>(std::ceil(len / cfg.step - 1e-9));
    const double h = -len / static_cast<double>(n);
    const double to = ends[s + 1];
    // One-sided limits at the segment ends so a jump at a breakpoint is
    // sampled from the side being integrated.
    double v0 = V(std::nextafter(from, to));
    for (long i = 0; i < n; ++i) {
      const double x = from + static_cast<double>(i) * h;
      const double vm = V(x + 0.5 * h);
      const double v1 = V(i + 1 == n ? std::nextafter(to, from) : x + h);
      vmax = std::max({vmax, std::abs(v0), std::abs(vm), std::abs(v1)});
      const double w0 = w(v0), wm = w(vm), w1 = w(v1);

      const State k1{y.dphi, -w0 * y.phi};
      const State k2{y.dphi + 0.5 * h * k1.dphi, -wm * (y.phi + 0.5 * h * k1.phi)};
      const State k3{y.dphi + 0.5 * h * k2.dphi, -wm * (y.phi + 0.5 * h * k2.phi)};
      const State k4{y.dphi + h * k3.dphi, -w1 * (y.phi + h * k3.phi)};
      y.phi += h / 6.0 * (k1.phi + 2.0 * k2.phi + 2.0 * k3.phi + k4.phi);
      y.dphi += h / 6.0 * (k1.dphi + 2.0 * k2.dphi + 2.0 * k3.dphi + k4.dphi);
      v0 = v1;
    }
  }

  const double tail = std::max(std::abs(V(cfg.x_min)), std::abs(V(cfg.x_max)));
  if (tail > cfg.tail_tol * vmax) {
    throw DomainError("oracle: potential at the window edge is " + std::to_string(tail) +
                      ", above tail_tol * max|V|");
  }

  const Cx a_inc = 0.5 * (y.phi + y.dphi / ik) * std::exp(-ik * cfg.x_min);
  const Cx a_ref = 0.5 * (y.phi - y.dphi / ik) * std::exp(ik * cfg.x_min);
  const double inc = std::norm(a_inc);
  const Coefficients c = make_coefficients(std::norm(a_ref) / inc, 1.0 / inc);
  if (!(std::abs(c.unitarity_residual) <= 1e-6)) {
    throw StepError("oracle: |R + T - 1| = " + std::to_string(std::abs(c.unitarity_residual)) +
                    " at step " + std::to_string(cfg.step));
  }
  return c;
}

double convergence_check(const Potential& V, double E, const OracleConfig& cfg) {
  OracleConfig half = cfg;
  half.step = 0.5 * cfg.step;
  return std::abs(integrate_rt(V, E, cfg).R - integrate_rt(V, E, half).R);
}

Potential smooth_barrier(const ScatterParams& p) {
  return [p](double x) { return potential_value(x, p); };
}

Potential square_barrier(double V0, double x0) {
  return [V0, x0](double x) { return (x >= x0 && x <= 0.0) ? V0 : 0.0; };
}

Coefficients oracle_coefficients(const ScatterParams& p, double step) {
  return integrate_rt(smooth_barrier(p), p.E, default_oracle_config(p, step));
}

}  // namespace kgscatter
