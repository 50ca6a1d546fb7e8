#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "kgscatter/scan.hpp"

using namespace kgscatter;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

ScanSpec parse(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in, "test.cfg");
}

std::string config_error(const std::string& text) {
  try {
    parse(text);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("number format") {
  CHECK(format_number(0.0) == "0");
  CHECK(format_number(0.5) == "0.5");
  CHECK(format_number(1.0 / 3.0) == "0.333333333333");
  CHECK(format_number(-2.5e-14) == "-2.5e-14");
  CHECK(format_number(1234567.0) == "1234567");
}

TEST_CASE("empty scan writes only the header") {
  std::ostringstream os;
  write_csv(os, {});
  CHECK(os.str() == "swept_value,R,T,unitarity_residual,engine\n");
}

TEST_CASE("skipped points become ordered comment lines") {
  const std::vector<ScanRow> rows{{0.5, 0.1, 0.9, 0.0, Engine::matcher},
                                  {1.5, 0.2, 0.8, 0.0, Engine::matcher}};
  const std::vector<SkippedPoint> skipped{{1.0, true, "q vanishes"}, {2.0, false, "boom"}};
  std::ostringstream os;
  write_csv(os, rows, skipped);
  CHECK(os.str() ==
        "swept_value,R,T,unitarity_residual,engine\n"
        "0.5,0.1,0.9,0,matcher\n"
        "# skipped swept_value=1 reason=q vanishes\n"
        "1.5,0.2,0.8,0,matcher\n"
        "# skipped swept_value=2 reason=boom\n");
  std::istringstream in(os.str());
  CHECK(parse_csv(in).size() == 2);
}

TEST_CASE("CSV round trip keeps 12 significant digits") {
  ScanSpec spec;
  spec.sweep = SweepVariable::V0;
  spec.range = {0.0, 10.0, 0.25};
  spec.fixed = {2.0, 0.0, 0.5, -1.0};
  const ScanResult r = run_scan(spec);
  std::stringstream ss;
  write_csv(ss, r.rows, r.skipped);
  const auto back = parse_csv(ss);
  REQUIRE(back.size() == r.rows.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    CHECK(back[i].swept_value == doctest::Approx(r.rows[i].swept_value).epsilon(1e-12));
    CHECK(back[i].R == doctest::Approx(r.rows[i].R).epsilon(1e-12));
    CHECK(back[i].T == doctest::Approx(r.rows[i].T).epsilon(1e-12));
    CHECK(back[i].engine == Engine::matcher);
  }
  std::stringstream again;
  write_csv(again, back, r.skipped);
  std::stringstream first;
  write_csv(first, r.rows, r.skipped);
  CHECK(again.str() == first.str());
}

TEST_CASE("malformed CSV") {
  std::istringstream no_header("1,2,3,4,matcher\n");
  CHECK_THROWS_AS(parse_csv(no_header), IOError);
  std::istringstream bad("swept_value,R,T,unitarity_residual,engine\n1,x,3,4,matcher\n");
  CHECK_THROWS_AS(parse_csv(bad), IOError);
  std::istringstream engine("swept_value,R,T,unitarity_residual,engine\n1,2,3,4,magic\n");
  CHECK_THROWS_AS(parse_csv(engine), IOError);
  CHECK_THROWS_AS(read_csv("/nonexistent/file.csv"), IOError);
}

TEST_CASE("config parsing") {
  const ScanSpec s = parse(
      "# comment\n"
      "sweep = E   # trailing comment\n"
      "start = 1.5\n"
      "\n"
      "stop=3\n"
      "step = 0.5\n"
      "V0 = 2.5\n"
      "a = 0.25\n"
      "x0 = -2\n"
      "engine = oracle\n");
  CHECK(s.sweep == SweepVariable::E);
  CHECK(s.range.start == 1.5);
  CHECK(s.range.stop == 3.0);
  CHECK(s.range.step == 0.5);
  CHECK(s.fixed.V0 == 2.5);
  CHECK(s.fixed.a == 0.25);
  CHECK(s.fixed.x0 == -2.0);
  CHECK(s.engine == Engine::oracle);
}

TEST_CASE("config errors name the offending line") {
  const std::string base = "sweep = V0\nstart = 0\nstop = 1\nstep = 0.1\n";
  CHECK(config_error(base + "colour = blue\n").find("test.cfg:5") != std::string::npos);
  CHECK(config_error(base + "E = two\n").find("test.cfg:5") != std::string::npos);
  CHECK(config_error("sweep = V0\nstart 0\n").find("test.cfg:2") != std::string::npos);
  CHECK(config_error("sweep = Q\n").find("test.cfg:1") != std::string::npos);
  CHECK(config_error(base + "engine = magic\n").find("test.cfg:5") != std::string::npos);
  CHECK(config_error("sweep = V0\nstart = 0\n").find("required") != std::string::npos);
  CHECK_FALSE(config_error(base + "a = -1\n").empty());
  CHECK_FALSE(config_error(base + "E = 0.5\n").empty());
  CHECK_THROWS_AS(read_config("/nonexistent.cfg"), IOError);
}

TEST_CASE("shipped configs describe the built-in figure sweeps") {
  for (const auto& fig : figure_sweeps()) {
    const ScanSpec s = read_config(test_fixtures::source_path("configs/" + fig.name + ".cfg"));
    CHECK(s.sweep == fig.spec.sweep);
    CHECK(s.range.start == fig.spec.range.start);
    CHECK(s.range.stop == fig.spec.range.stop);
    CHECK(s.range.step == fig.spec.range.step);
    CHECK(s.fixed.E == fig.spec.fixed.E);
    CHECK(s.fixed.a == fig.spec.fixed.a);
    CHECK(s.fixed.x0 == fig.spec.fixed.x0);
    CHECK(s.engine == fig.spec.engine);
  }
}

TEST_CASE("figure 2 config reproduces the golden CSV byte for byte") {
  const ScanSpec spec = read_config(test_fixtures::source_path("configs/fig2.cfg"));
  const ScanResult r = run_scan(spec);
  const auto tmp = std::filesystem::temp_directory_path() / "kgscatter_fig2_test.csv";
  emit_csv(tmp.string(), r.rows, r.skipped);
  CHECK(slurp(tmp.string()) == slurp(test_fixtures::source_path("fixtures/fig2.csv")));
  std::filesystem::remove(tmp);
}
