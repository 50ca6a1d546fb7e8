#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kgscatter/barrier.hpp"
#include "kgscatter/coefficients.hpp"
#include "kgscatter/errors.hpp"

namespace kgscatter {

enum class SweepVariable { V0, E, a, x0 };
enum class Engine { matcher, oracle, analytic_kg, analytic_schrodinger };

std::string_view to_string(SweepVariable v);
std::string_view to_string(Engine e);
std::optional<SweepVariable> parse_sweep_variable(std::string_view s);
std::optional<Engine> parse_engine(std::string_view s);

// Inclusive grid start, start + step, ..., up to stop (within 1e-9 steps).
// start == stop gives a single point.
struct Range {
  double start = 0.0;
  double stop = 0.0;
  double step = 0.0;
};

struct ScanSpec {
  SweepVariable sweep = SweepVariable::V0;
  Range range;
  ScatterParams fixed;  // the swept field is overwritten per point
  Engine engine = Engine::matcher;
};

struct ScanRow {
  double swept_value = 0.0;
  double R = 0.0;
  double T = 0.0;
  double unitarity_residual = 0.0;
  Engine engine = Engine::matcher;
};

struct SkippedPoint {
  double swept_value = 0.0;
  bool degenerate = false;  // false: the point raised some other error
  std::string reason;
};

struct ScanResult {
  std::vector<ScanRow> rows;          // ascending swept value
  std::vector<SkippedPoint> skipped;  // ascending swept value
  std::vector<std::string> warnings;
  std::size_t points = 0;
};

// More than 10% of the grid points raised a non-degenerate error.
class ScanError : public Error {
 public:
  using Error::Error;
};

void validate(const ScanSpec& spec);
std::vector<double> grid_points(const Range& r);

// Oracle step used by the scan engine: min(1e-4, a/50).
double default_oracle_step(const ScatterParams& p);

// One point with the selected engine. The analytic engines read E, V0, x0.
Coefficients evaluate(Engine engine, const ScatterParams& p);

// Grid points run in parallel (OpenMP); output order is the grid order.
ScanResult run_scan(const ScanSpec& spec);

namespace serial {
// Single-threaded reference for run_scan; identical output.
ScanResult run_scan(const ScanSpec& spec);
}  // namespace serial

struct Resonance {
  double position;
  double T_peak;
};

/// Interior local maxima of T whose parabolic-vertex value is >= 1 - eps.
/// Rows must be sorted by swept value.
std::vector<Resonance> find_resonances(std::span<const ScanRow> rows, double eps = 1e-3);

// Matcher and oracle over the same grid.
struct CrossCheck {
  ScanResult matcher;
  ScanResult oracle;
  double max_abs_dR = 0.0;
};
CrossCheck cross_check(ScanSpec spec);

// Sweeps behind the published coefficient plots: fig2..fig5 are the smooth
// barrier (matcher) at E = 2, fig6/fig7 the square barrier at E = 3, x0 = -3.
struct FigureSweep {
  std::string name;
  ScanSpec spec;
};
std::vector<FigureSweep> figure_sweeps();

// ---- flat-file formats ----------------------------------------------------

// 12 significant digits, '.' decimal point, locale independent.
std::string format_number(double v);

// Header `swept_value,R,T,unitarity_residual,engine`, rows and
// `# skipped swept_value=... reason=...` comments in ascending swept order.
void write_csv(std::ostream& out, std::span<const ScanRow> rows,
               std::span<const SkippedPoint> skipped = {});
void emit_csv(const std::string& path, std::span<const ScanRow> rows,
              std::span<const SkippedPoint> skipped = {});

// Numeric rows of a CSV written by write_csv; comment lines are ignored.
std::vector<ScanRow> parse_csv(std::istream& in);
std::vector<ScanRow> read_csv(const std::string& path);

/// `key = value` lines, `#` starts a comment. Keys: sweep, start, stop,
/// step, E, V0, a, x0, engine. Unset parameters keep ScatterParams defaults.
/// ConfigError messages name the offending line.
ScanSpec parse_config(std::istream& in, const std::string& source = "<config>");
ScanSpec read_config(const std::string& path);

}  // namespace kgscatter
