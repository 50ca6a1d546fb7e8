#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "kgscatter/scan.hpp"

namespace kgscatter {
namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::optional<double> parse_double(std::string_view s) {
  double v = 0.0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc{} || ptr != end) return std::nullopt;
  return v;
}

}  // namespace

std::string format_number(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

void write_csv(std::ostream& out, std::span<const ScanRow> rows,
               std::span<const SkippedPoint> skipped) {
  out << "swept_value,R,T,unitarity_residual,engine\n";
  std::size_t s = 0;
  for (const ScanRow& row : rows) {
    for (; s < skipped.size() && skipped[s].swept_value < row.swept_value; ++s) {
      out << "# skipped swept_value=" << format_number(skipped[s].swept_value)
          << " reason=" << skipped[s].reason << '\n';
    }
    out << format_number(row.swept_value) << ',' << format_number(row.R) << ','
        << format_number(row.T) << ',' << format_number(row.unitarity_residual) << ','
        << to_string(row.engine) << '\n';
  }
  for (; s < skipped.size(); ++s) {
    out << "# skipped swept_value=" << format_number(skipped[s].swept_value)
        << " reason=" << skipped[s].reason << '\n';
  }
}

void emit_csv(const std::string& path, std::span<const ScanRow> rows,
              std::span<const SkippedPoint> skipped) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IOError("cannot open " + path + " for writing");
  write_csv(out, rows, skipped);
  if (!out.flush()) throw IOError("write failed: " + path);
}

std::vector<ScanRow> parse_csv(std::istream& in) {
  std::vector<ScanRow> rows;
  std::string line;
  if (!std::getline(in, line) || trim(line) != "swept_value,R,T,unitarity_residual,engine") {
    throw IOError("CSV header missing or malformed");
  }
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string_view t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    std::vector<std::string_view> fields;
    std::size_t pos = 0;
    while (true) {
      const auto comma = t.find(',', pos);
      fields.push_back(t.substr(pos, comma == std::string_view::npos ? comma : comma - pos));
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    if (fields.size() != 5) throw IOError("CSV line " + std::to_string(lineno) + ": expected 5 fields");
    ScanRow row;
    double* dst[] = {&row.swept_value, &row.R, &row.T, &row.unitarity_residual};
    for (int i = 0; i < 4; ++i) {
      const auto v = parse_double(fields[static_cast<std::size_t>(i)]);
      if (!v) throw IOError("CSV line " + std::to_string(lineno) + ": bad number");
      *dst[i] = *v;
    }
    const auto engine = parse_engine(fields[4]);
    if (!engine) throw IOError("CSV line " + std::to_string(lineno) + ": unknown engine");
    row.engine = *engine;
    rows.push_back(row);
  }
  return rows;
}

std::vector<ScanRow> read_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IOError("cannot open " + path);
  return parse_csv(in);
}

ScanSpec parse_config(std::istream& in, const std::string& source) {
  ScanSpec spec;
  bool have_sweep = false, have_start = false, have_stop = false, have_step = false;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto where = [&] { return source + ":" + std::to_string(lineno) + ": "; };
    std::string_view t = line;
    if (const auto hash = t.find('#'); hash != std::string_view::npos) t = t.substr(0, hash);
    t = trim(t);
    if (t.empty()) continue;
    const auto eq = t.find('=');
    if (eq == std::string_view::npos) throw ConfigError(where() + "expected 'key = value'");
    const std::string_view key = trim(t.substr(0, eq));
    const std::string_view value = trim(t.substr(eq + 1));
    if (value.empty()) throw ConfigError(where() + "empty value for '" + std::string(key) + "'");

    if (key == "sweep") {
      const auto v = parse_sweep_variable(value);
      if (!v) throw ConfigError(where() + "unknown sweep variable '" + std::string(value) + "'");
      spec.sweep = *v;
      have_sweep = true;
    } else if (key == "engine") {
      const auto e = parse_engine(value);
      if (!e) throw ConfigError(where() + "unknown engine '" + std::string(value) + "'");
      spec.engine = *e;
    } else {
      double* dst = nullptr;
      if (key == "start") dst = &spec.range.start, have_start = true;
      else if (key == "stop") dst = &spec.range.stop, have_stop = true;
      else if (key == "step") dst = &spec.range.step, have_step = true;
      else if (key == "E") dst = &spec.fixed.E;
      else if (key == "V0") dst = &spec.fixed.V0;
      else if (key == "a") dst = &spec.fixed.a;
      else if (key == "x0") dst = &spec.fixed.x0;
      if (!dst) throw ConfigError(where() + "unknown key '" + std::string(key) + "'");
      const auto v = parse_double(value);
      if (!v) throw ConfigError(where() + "'" + std::string(value) + "' is not a number");
      *dst = *v;
    }
  }
  if (!have_sweep || !have_start || !have_stop || !have_step) {
    throw ConfigError(source + ": sweep, start, stop and step are required");
  }
  try {
    validate(spec);
  } catch (const DomainError& e) {
    throw ConfigError(source + ": " + e.what());
  }
  return spec;
}

ScanSpec read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IOError("cannot open config " + path);
  return parse_config(in, path);
}

}  // namespace kgscatter
