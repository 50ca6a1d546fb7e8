#include "kgscatter/checks.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "kgscatter/analytic.hpp"
#include "kgscatter/matcher.hpp"
#include "kgscatter/oracle.hpp"
#include "kgscatter/scan.hpp"
#include "kgscatter/specfun.hpp"

namespace kgscatter::checks {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

ScanSpec v0_sweep(Engine engine, double E, double a, double x0, double stop, double step) {
  ScanSpec spec;
  spec.sweep = SweepVariable::V0;
  spec.range = {0.0, stop, step};
  spec.fixed = {E, 0.0, a, x0};
  spec.engine = engine;
  return spec;
}

std::string sci(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

}  // namespace

CheckResult unitarity_sweep() {
  const auto t0 = Clock::now();
  double worst = 0.0;
  double worst_bound = 0.0;
  std::size_t evaluated = 0, degenerate = 0, errors = 0;
  for (double E : {1.5, 2.0, 3.0, 5.0}) {
    for (double a : {1e-3, 0.1, 0.5, 1.0}) {
      for (double x0 : {-3.0, -2.0, -1.0, 0.0}) {
        const ScanResult res = run_scan(v0_sweep(Engine::matcher, E, a, x0, 10.0, 0.05));
        evaluated += res.rows.size();
        for (const auto& s : res.skipped) (s.degenerate ? degenerate : errors) += 1;
        for (const auto& row : res.rows) {
          worst = std::max(worst, std::abs(row.unitarity_residual));
          worst_bound = std::max({worst_bound, -row.R, -row.T, row.R - 1.0, row.T - 1.0});
        }
      }
    }
  }
  const double secs = seconds_since(t0);
  const bool ok = errors == 0 && worst <= 1e-8 && worst_bound <= 1e-8 && secs <= 120.0;
  return {"unitarity sweep", ok,
          "points=" + std::to_string(evaluated) + " degenerate_skipped=" +
              std::to_string(degenerate) + " errors=" + std::to_string(errors) +
              " max|R+T-1|=" + sci(worst) + " (<=1e-8) max bound excess=" + sci(worst_bound) +
              " time=" + sci(secs) + "s (<=120)",
          secs};
}

CheckResult matcher_oracle_equivalence() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(20201017);
  std::uniform_real_distribution<double> uE(1.2, 5.0), uV(0.0, 10.0), ua(0.1, 1.0),
      ux(-3.0, 0.0);
  double worst = 0.0;
  int n = 0;
  while (n < 50) {
    const ScatterParams p{uE(rng), uV(rng), ua(rng), ux(rng)};
    const double q2 = (p.E - p.V0) * (p.E - p.V0) - 1.0;
    if (std::abs(q2) < 1e-3) continue;
    worst = std::max(worst, std::abs(coefficients(p).R - oracle_coefficients(p).R));
    ++n;
  }
  const double secs = seconds_since(t0);
  return {"matcher-oracle equivalence", worst <= 1e-6 && secs <= 60.0,
          "points=50 max|dR|=" + sci(worst) + " (<=1e-6) time=" + sci(secs) + "s (<=60)", secs};
}

CheckResult square_barrier_limit() {
  const auto t0 = Clock::now();
  double worst = 0.0, at = 0.0;
  for (const double V0 : grid_points({0.0, 6.0, 0.05})) {
    const ScatterParams p{3.0, V0, 1e-3, -3.0};
    try {
      const double d = std::abs(coefficients(p).R -
                                square_barrier_rt(3.0, V0, -3.0, Dispersion::klein_gordon).R);
      if (d > worst) worst = d, at = V0;
    } catch (const DegenerateError&) {
    }
  }
  return {"square-barrier limit (a=1e-3)", worst <= 1e-3,
          "max|R_matcher-R_KG|=" + sci(worst) + " at V0=" + format_number(at) + " (<=1e-3)",
          seconds_since(t0)};
}

CheckResult resonance_positions() {
  const auto t0 = Clock::now();
  const double kg_target = 3.0 - std::sqrt(1.0 + std::numbers::pi * std::numbers::pi / 9.0);
  const double sch_target = 3.0 - std::numbers::pi * std::numbers::pi / 18.0;
  auto nearest = [](Engine engine, double target) {
    const ScanResult res = run_scan(v0_sweep(engine, 3.0, 0.5, -3.0, 6.0, 0.01));
    double best = INFINITY;
    for (const auto& r : find_resonances(res.rows)) {
      if (std::abs(r.position - target) < std::abs(best - target)) best = r.position;
    }
    return best;
  };
  const double kg = nearest(Engine::analytic_kg, kg_target);
  const double sch = nearest(Engine::analytic_schrodinger, sch_target);
  const bool ok = std::abs(kg - kg_target) <= 1e-3 && std::abs(sch - sch_target) <= 1e-3;
  return {"square-barrier resonance positions", ok,
          "KG peak " + format_number(kg) + " vs " + format_number(kg_target) +
              ", Schrodinger peak " + format_number(sch) + " vs " + format_number(sch_target) +
              " (within 1e-3)",
          seconds_since(t0)};
}

CheckResult smooth_barrier_resonance_counts() {
  const auto t0 = Clock::now();
  auto count = [](double x0) {
    const ScanResult res = run_scan(v0_sweep(Engine::matcher, 2.0, 0.5, x0, 10.0, 0.01));
    return find_resonances(res.rows).size();
  };
  const std::size_t n1 = count(-1.0);
  const std::size_t n2 = count(-2.0);
  return {"smooth-barrier resonances x0=-1 vs x0=-2", n1 >= 1 && n2 >= 1 && n2 >= n1,
          "count(x0=-1)=" + std::to_string(n1) + " count(x0=-2)=" + std::to_string(n2) +
              " (both >=1, second >= first)",
          seconds_since(t0)};
}

CheckResult kg_vs_schrodinger_counts() {
  const auto t0 = Clock::now();
  auto count = [](Engine engine) {
    return find_resonances(run_scan(v0_sweep(engine, 3.0, 0.5, -3.0, 6.0, 0.01)).rows).size();
  };
  const std::size_t kg = count(Engine::analytic_kg);
  const std::size_t sch = count(Engine::analytic_schrodinger);
  return {"KG vs Schrodinger resonance count", kg > sch,
          "KG=" + std::to_string(kg) + " Schrodinger=" + std::to_string(sch) + " (KG > Schr)",
          seconds_since(t0)};
}

CheckResult special_functions() {
  const auto t0 = Clock::now();
  std::ostringstream why;
  bool ok = true;
  auto expect = [&](bool cond, const std::string& what, double measured) {
    if (!cond) {
      ok = false;
      why << what << "=" << sci(measured) << "; ";
    }
  };
  auto rel = [](Complex got, Complex want) { return std::abs(got - want) / std::abs(want); };

  // Closed forms.
  expect(rel(kummer_m(1.0, 2.0, 1.0), std::numbers::e - 1.0) <= 1e-12, "M(1,2,1)",
         rel(kummer_m(1.0, 2.0, 1.0), std::numbers::e - 1.0));
  const WhittakerIndex half{0.0, 0.5};
  const double two_sinh = 2.0 * std::sinh(1.0);
  expect(rel(whittaker_m(half, 2.0), two_sinh) <= 1e-12, "M_{0,1/2}(2)",
         rel(whittaker_m(half, 2.0), two_sinh));
  expect(rel(whittaker_m_deriv(half, 2.0), std::cosh(1.0)) <= 1e-12, "M'_{0,1/2}(2)",
         rel(whittaker_m_deriv(half, 2.0), std::cosh(1.0)));

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  auto rc = [&](double scale) { return Complex(scale * u(rng), scale * u(rng)); };
  auto admissible_b = [&] { return Complex(1.75 + 1.25 * u(rng), 2.0 * u(rng)); };

  double kummer_worst = 0.0, special_worst = 0.0, conj_worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const Complex a = rc(3.0), b = admissible_b();
    const Complex z = rc(10.0 / std::sqrt(2.0));
    const Complex m = kummer_m(a, b, z);
    kummer_worst = std::max(kummer_worst, std::abs(m - std::exp(z) * kummer_m(b - a, b, -z)) /
                                              std::abs(m));
    special_worst = std::max({special_worst, rel(kummer_m(b, b, z), std::exp(z)),
                              rel(kummer_m(0.0, b, z), 1.0)});
    conj_worst = std::max(conj_worst, rel(kummer_m(std::conj(a), std::conj(b), std::conj(z)),
                                          std::conj(m)));
  }
  expect(kummer_worst <= 1e-10, "Kummer transformation", kummer_worst);
  expect(special_worst <= 1e-12, "M(a,a,z)/M(0,b,z)", special_worst);
  expect(conj_worst <= 1e-14, "conjugation", conj_worst);

  double ode_worst = 0.0, fd_worst = 0.0;
  std::uniform_real_distribution<double> ur(0.5, 8.0), uth(-2.5, 2.5);
  for (int i = 0; i < 20; ++i) {
    const WhittakerIndex idx{rc(2.0), Complex(0.75 + 0.75 * u(rng), 2.0 * u(rng))};
    const Complex z = std::polar(ur(rng), uth(rng));
    const double h = 1e-6;
    const Complex fd = (whittaker_m(idx, z + h) - whittaker_m(idx, z - h)) / (2.0 * h);
    const Complex d = whittaker_m_deriv(idx, z);
    fd_worst = std::max(fd_worst, rel(fd, d));

    const double h2 = 1e-5;
    const Complex f = whittaker_m(idx, z);
    const Complex f2 = (whittaker_m_deriv(idx, z + h2) - whittaker_m_deriv(idx, z - h2)) / (2.0 * h2);
    const Complex qf = (-0.25 + idx.kappa / z + (0.25 - idx.mu * idx.mu) / (z * z)) * f;
    ode_worst = std::max(ode_worst, std::abs(f2 + qf) / (std::abs(f2) + std::abs(qf)));
  }
  expect(fd_worst <= 1e-6, "derivative vs finite difference", fd_worst);
  expect(ode_worst <= 1e-6, "Whittaker ODE residual", ode_worst);

  std::ostringstream detail;
  detail << "Kummer=" << sci(kummer_worst) << " (<=1e-10) M(a,a,z),M(0,b,z)=" << sci(special_worst)
         << " (<=1e-12) conj=" << sci(conj_worst) << " deriv-FD=" << sci(fd_worst)
         << " (<=1e-6) ODE=" << sci(ode_worst) << " (<=1e-6)";
  if (!ok) detail << " FAILED: " << why.str();
  return {"special-function suite", ok, detail.str(), seconds_since(t0)};
}

std::vector<NamedCheck> all() {
  return {{"special-function suite", special_functions},
          {"unitarity sweep", unitarity_sweep},
          {"matcher-oracle equivalence", matcher_oracle_equivalence},
          {"square-barrier limit (a=1e-3)", square_barrier_limit},
          {"square-barrier resonance positions", resonance_positions},
          {"smooth-barrier resonances x0=-1 vs x0=-2", smooth_barrier_resonance_counts},
          {"KG vs Schrodinger resonance count", kg_vs_schrodinger_counts}};
}

}  // namespace kgscatter::checks
