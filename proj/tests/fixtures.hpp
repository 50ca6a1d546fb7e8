#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "kgscatter/barrier.hpp"

namespace test_fixtures {

inline std::string source_path(const std::string& rel) {
  return std::string(KGSCATTER_SOURCE_DIR) + "/" + rel;
}

struct OracleGolden {
  kgscatter::ScatterParams p;
  double R, T, step;
};

// fixtures/oracle_golden.csv: E,V0,a,x0,R,T,step
inline std::vector<OracleGolden> oracle_golden() {
  std::ifstream in(source_path("fixtures/oracle_golden.csv"));
  std::string line;
  std::getline(in, line);
  std::vector<OracleGolden> out;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    OracleGolden g{};
    char c;
    ls >> g.p.E >> c >> g.p.V0 >> c >> g.p.a >> c >> g.p.x0 >> c >> g.R >> c >> g.T >> c >> g.step;
    if (ls) out.push_back(g);
  }
  return out;
}

}  // namespace test_fixtures
