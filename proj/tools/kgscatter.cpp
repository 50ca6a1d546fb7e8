// kgscatter: reflection/transmission of a Klein-Gordon particle on the smooth
// barrier. Verbs: scan, resonances, check, figures-data.
//
// Exit codes: 0 success, 1 configuration or usage error, 2 more than 10% of
// the grid points failed, 3 a verification (check, --engine both) failed.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "kgscatter/checks.hpp"
#include "kgscatter/scan.hpp"

namespace {

using namespace kgscatter;

constexpr int kOk = 0;
constexpr int kConfigError = 1;
constexpr int kPointFailures = 2;
constexpr int kVerificationFailed = 3;

void report_warnings(const ScanResult& res) {
  for (const auto& w : res.warnings) std::cerr << "warning: " << w << '\n';
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out || !(out << text)) throw IOError("cannot write " + out_path);
}

std::string csv_text(std::span<const ScanRow> rows, std::span<const SkippedPoint> skipped) {
  std::ostringstream os;
  write_csv(os, rows, skipped);
  return os.str();
}

ScanSpec load_spec(const std::string& config, const std::string& engine_flag, bool allow_both) {
  ScanSpec spec = read_config(config);
  if (!engine_flag.empty() && !(allow_both && engine_flag == "both")) {
    const auto e = parse_engine(engine_flag);
    if (!e) throw ConfigError("unknown engine '" + engine_flag + "'");
    spec.engine = *e;
  }
  return spec;
}

int cmd_scan(const std::string& config, const std::string& engine, const std::string& out) {
  ScanSpec spec = load_spec(config, engine, true);
  if (engine == "both") {
    const CrossCheck cc = cross_check(spec);
    report_warnings(cc.matcher);
    report_warnings(cc.oracle);
    // Interleave by swept value; matcher row first on ties.
    std::vector<ScanRow> rows;
    std::merge(cc.matcher.rows.begin(), cc.matcher.rows.end(), cc.oracle.rows.begin(),
               cc.oracle.rows.end(), std::back_inserter(rows),
               [](const ScanRow& l, const ScanRow& r) { return l.swept_value < r.swept_value; });
    std::vector<SkippedPoint> skipped;
    std::merge(cc.matcher.skipped.begin(), cc.matcher.skipped.end(), cc.oracle.skipped.begin(),
               cc.oracle.skipped.end(), std::back_inserter(skipped),
               [](const SkippedPoint& l, const SkippedPoint& r) {
                 return l.swept_value < r.swept_value;
               });
    write_output(out, csv_text(rows, skipped));
    std::cerr << "max |R_matcher - R_oracle| = " << format_number(cc.max_abs_dR)
              << " (tolerance 1e-06)\n";
    return cc.max_abs_dR <= 1e-6 ? kOk : kVerificationFailed;
  }
  const ScanResult res = run_scan(spec);
  report_warnings(res);
  write_output(out, csv_text(res.rows, res.skipped));
  return kOk;
}

int cmd_resonances(const std::string& config, const std::string& engine, const std::string& out,
                   double eps) {
  const ScanSpec spec = load_spec(config, engine, false);
  const ScanResult res = run_scan(spec);
  report_warnings(res);
  std::ostringstream os;
  os << "swept_value,T_peak\n";
  for (const auto& r : find_resonances(res.rows, eps)) {
    os << format_number(r.position) << ',' << format_number(r.T_peak) << '\n';
  }
  write_output(out, os.str());
  return kOk;
}

int cmd_check() {
  bool all_ok = true;
  for (const auto& c : checks::all()) {
    const checks::CheckResult r = c.run();
    all_ok = all_ok && r.passed;
    std::cout << (r.passed ? "PASS  " : "FAIL  ") << r.name << ": " << r.detail << std::endl;
  }
  std::cout << (all_ok ? "all checks passed" : "some checks FAILED") << std::endl;
  return all_ok ? kOk : kVerificationFailed;
}

int cmd_figures(const std::string& out_dir) {
  const std::filesystem::path dir = out_dir.empty() ? "." : out_dir;
  std::filesystem::create_directories(dir);
  for (const auto& fig : figure_sweeps()) {
    const ScanResult res = run_scan(fig.spec);
    report_warnings(res);
    const auto path = (dir / (fig.name + ".csv")).string();
    emit_csv(path, res.rows, res.skipped);
    std::cerr << "wrote " << path << " (" << res.rows.size() << " rows)\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Klein-Gordon scattering on a smooth barrier"};
  app.require_subcommand(1);

  std::string config, engine, out;
  double eps = 1e-3;

  auto* scan = app.add_subcommand("scan", "sweep one parameter and write R, T as CSV");
  scan->add_option("--config", config, "sweep configuration file")->required();
  scan->add_option("--engine", engine, "matcher | oracle | analytic_kg | analytic_schrodinger | both");
  scan->add_option("--out", out, "output CSV (default: stdout)");

  auto* res = app.add_subcommand("resonances", "list transmission peaks with T >= 1 - eps");
  res->add_option("--config", config, "sweep configuration file")->required();
  res->add_option("--engine", engine, "engine override");
  res->add_option("--out", out, "output CSV (default: stdout)");
  res->add_option("--eps", eps, "peak threshold 1 - T (default 1e-3)");

  app.add_subcommand("check", "run the verification suites");

  auto* figs = app.add_subcommand("figures-data", "write the figure sweep CSVs");
  figs->add_option("--out", out, "output directory (default: .)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    if (*scan) return cmd_scan(config, engine, out);
    if (*res) return cmd_resonances(config, engine, out, eps);
    if (app.got_subcommand("check")) return cmd_check();
    if (*figs) return cmd_figures(out);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const ScanError& e) {
    std::cerr << "scan failed: " << e.what() << '\n';
    return kPointFailures;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConfigError;
  }
  return kOk;
}
