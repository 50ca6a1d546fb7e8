#include "kgscatter/scan.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <variant>

#include "kgscatter/analytic.hpp"
#include "kgscatter/matcher.hpp"
#include "kgscatter/oracle.hpp"

namespace kgscatter {
namespace {

using Outcome = std::variant<Coefficients, SkippedPoint>;

ScatterParams params_at(const ScanSpec& spec, double value) {
  ScatterParams p = spec.fixed;
  switch (spec.sweep) {
    case SweepVariable::V0: p.V0 = value; break;
    case SweepVariable::E: p.E = value; break;
    case SweepVariable::a: p.a = value; break;
    case SweepVariable::x0: p.x0 = value; break;
  }
  return p;
}

Outcome evaluate_point(const ScanSpec& spec, double value) {
  try {
    return evaluate(spec.engine, params_at(spec, value));
  } catch (const DegenerateError& e) {
    return SkippedPoint{value, true, e.what()};
  } catch (const std::exception& e) {
    return SkippedPoint{value, false, e.what()};
  }
}

ScanResult assemble(const ScanSpec& spec, const std::vector<double>& grid,
                    std::vector<Outcome>& outcomes) {
  ScanResult out;
  out.points = grid.size();
  std::size_t failures = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (const auto* c = std::get_if<Coefficients>(&outcomes[i])) {
      out.rows.push_back({grid[i], c->R, c->T, c->unitarity_residual, spec.engine});
      continue;
    }
    auto& skip = std::get<SkippedPoint>(outcomes[i]);
    if (!skip.degenerate) ++failures;
    out.warnings.push_back((skip.degenerate ? "skipped degenerate point " : "error at ") +
                           std::string(to_string(spec.sweep)) + "=" + format_number(grid[i]) +
                           ": " + skip.reason);
    out.skipped.push_back(std::move(skip));
  }
  if (10 * failures > grid.size()) {
    throw ScanError(std::to_string(failures) + " of " + std::to_string(grid.size()) +
                    " grid points failed (first: " + out.warnings.front() + ")");
  }
  return out;
}

}  // namespace

std::string_view to_string(SweepVariable v) {
  switch (v) {
    case SweepVariable::V0: return "V0";
    case SweepVariable::E: return "E";
    case SweepVariable::a: return "a";
    case SweepVariable::x0: return "x0";
  }
  return "?";
}

std::string_view to_string(Engine e) {
  switch (e) {
    case Engine::matcher: return "matcher";
    case Engine::oracle: return "oracle";
    case Engine::analytic_kg: return "analytic_kg";
    case Engine::analytic_schrodinger: return "analytic_schrodinger";
  }
  return "?";
}

std::optional<SweepVariable> parse_sweep_variable(std::string_view s) {
  for (auto v : {SweepVariable::V0, SweepVariable::E, SweepVariable::a, SweepVariable::x0}) {
    if (s == to_string(v)) return v;
  }
  return std::nullopt;
}

std::optional<Engine> parse_engine(std::string_view s) {
  for (auto e : {Engine::matcher, Engine::oracle, Engine::analytic_kg,
                 Engine::analytic_schrodinger}) {
    if (s == to_string(e)) return e;
  }
  return std::nullopt;
}

void validate(const ScanSpec& spec) {
  const Range& r = spec.range;
  if (!std::isfinite(r.start) || !std::isfinite(r.stop) || !std::isfinite(r.step)) {
    throw DomainError("scan range must be finite");
  }
  if (r.start > r.stop) throw DomainError("scan range needs start <= stop");
  if (!(r.step > 0.0)) throw DomainError("scan step must be positive");
  // Fixed parameters must be valid on their own; the swept one is replaced
  // by an admissible placeholder.
  ScatterParams probe = spec.fixed;
  switch (spec.sweep) {
    case SweepVariable::V0: probe.V0 = 0.0; break;
    case SweepVariable::E: probe.E = 2.0; break;
    case SweepVariable::a: probe.a = 1.0; break;
    case SweepVariable::x0: probe.x0 = 0.0; break;
  }
  if (spec.engine == Engine::analytic_schrodinger && probe.E > 0.0) {
    probe.E = 2.0;  // Schrodinger only needs E > 0
  }
  kgscatter::validate(probe);
}

std::vector<double> grid_points(const Range& r) {
  const auto n = static_cast<std::size_t>(std::floor((r.stop - r.start) / r.step + 1e-9));
  std::vector<double> pts(n + 1);
  for (std::size_t i = 0; i <= n; ++i) pts[i] = r.start + static_cast<double>(i) * r.step;
  return pts;
}

double default_oracle_step(const ScatterParams& p) { return std::min(1e-4, p.a / 50.0); }

Coefficients evaluate(Engine engine, const ScatterParams& p) {
  switch (engine) {
    case Engine::matcher: return coefficients(p);
    case Engine::oracle: return oracle_coefficients(p, default_oracle_step(p));
    case Engine::analytic_kg:
      if (p.x0 > 0.0) throw DomainError("x0 must be <= 0");
      return square_barrier_rt(p.E, p.V0, p.x0, Dispersion::klein_gordon);
    case Engine::analytic_schrodinger:
      if (p.x0 > 0.0) throw DomainError("x0 must be <= 0");
      return square_barrier_rt(p.E, p.V0, p.x0, Dispersion::schrodinger);
  }
  throw DomainError("unknown engine");
}

ScanResult run_scan(const ScanSpec& spec) {
  validate(spec);
  const std::vector<double> grid = grid_points(spec.range);
  std::vector<Outcome> outcomes(grid.size());
  const auto n = static_cast<long>(grid.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (long i = 0; i < n; ++i) {
    outcomes[static_cast<std::size_t>(i)] = evaluate_point(spec, grid[static_cast<std::size_t>(i)]);
  }
  return assemble(spec, grid, outcomes);
}

namespace serial {

ScanResult run_scan(const ScanSpec& spec) {
  validate(spec);
  const std::vector<double> grid = grid_points(spec.range);
  std::vector<Outcome> outcomes;
  outcomes.reserve(grid.size());
  for (double v : grid) outcomes.push_back(evaluate_point(spec, v));
  return assemble(spec, grid, outcomes);
}

}  // namespace serial

std::vector<Resonance> find_resonances(std::span<const ScanRow> rows, double eps) {
  std::vector<Resonance> out;
  for (std::size_t i = 1; i + 1 < rows.size(); ++i) {
    const ScanRow& l = rows[i - 1];
    const ScanRow& m = rows[i];
    const ScanRow& r = rows[i + 1];
    if (!(m.T > l.T && m.T >= r.T)) continue;
    // Parabola through the three samples, in coordinates centred on m.
    const double dl = l.swept_value - m.swept_value;
    const double dr = r.swept_value - m.swept_value;
    const double sl = (l.T - m.T) / dl;
    const double sr = (r.T - m.T) / dr;
    const double c = (sr - sl) / (dr - dl);
    double pos = m.swept_value;
    double peak = m.T;
    if (c < 0.0) {
      const double b = sr - c * dr;
      const double u = std::clamp(-b / (2.0 * c), dl, dr);
      pos = m.swept_value + u;
      peak = m.T + b * u + c * u * u;
    }
    if (peak >= 1.0 - eps) out.push_back({pos, peak});
  }
  return out;
}

CrossCheck cross_check(ScanSpec spec) {
  CrossCheck cc;
  spec.engine = Engine::matcher;
  cc.matcher = run_scan(spec);
  spec.engine = Engine::oracle;
  cc.oracle = run_scan(spec);
  std::map<double, double> matcher_r;
  for (const auto& row : cc.matcher.rows) matcher_r[row.swept_value] = row.R;
  for (const auto& row : cc.oracle.rows) {
    if (auto it = matcher_r.find(row.swept_value); it != matcher_r.end()) {
      cc.max_abs_dR = std::max(cc.max_abs_dR, std::abs(it->second - row.R));
    }
  }
  return cc;
}

std::vector<FigureSweep> figure_sweeps() {
  auto sweep = [](Engine engine, ScatterParams fixed, double stop) {
    ScanSpec spec;
    spec.sweep = SweepVariable::V0;
    spec.range = {0.0, stop, 0.01};
    spec.fixed = fixed;
    spec.engine = engine;
    return spec;
  };
  return {
      {"fig2", sweep(Engine::matcher, {2.0, 0.0, 0.5, -1.0}, 10.0)},
      {"fig3", sweep(Engine::matcher, {2.0, 0.0, 0.5, -2.0}, 10.0)},
      {"fig4", sweep(Engine::matcher, {2.0, 0.0, 0.5, 0.0}, 10.0)},
      {"fig5", sweep(Engine::matcher, {2.0, 0.0, 0.001, -2.0}, 10.0)},
      {"fig6", sweep(Engine::analytic_schrodinger, {3.0, 0.0, 0.5, -3.0}, 6.0)},
      {"fig7", sweep(Engine::analytic_kg, {3.0, 0.0, 0.5, -3.0}, 6.0)},
  };
}

}  // namespace kgscatter
