// Regenerates fixtures/oracle_golden.csv: smooth-barrier R, T from the RK4
// oracle at step 1e-5, frozen only if halving the step moves R by < 1e-8.

#include <cstdio>
#include <fstream>
#include <iostream>

#include "kgscatter/oracle.hpp"
#include "kgscatter/scan.hpp"

int main(int argc, char** argv) {
  using namespace kgscatter;
  const std::string path = argc > 1 ? argv[1] : "fixtures/oracle_golden.csv";
  const double step = 1e-5;
  const ScatterParams points[] = {
      {2.0, 4.0, 0.5, -1.0},
      {2.0, 2.5, 0.5, -1.0},
      {3.0, 1.2, 0.25, -2.0},
      {1.5, 6.0, 1.0, 0.0},
  };
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot write " << path << '\n';
    return 1;
  }
  out << "E,V0,a,x0,R,T,step\n";
  for (const auto& p : points) {
    const OracleConfig cfg = default_oracle_config(p, step);
    const double drift = convergence_check(smooth_barrier(p), p.E, cfg);
    if (!(drift < 1e-8)) {
      std::cerr << "not converged at E=" << p.E << " V0=" << p.V0 << ": " << drift << '\n';
      return 1;
    }
    const Coefficients c = integrate_rt(smooth_barrier(p), p.E, cfg);
    out << format_number(p.E) << ',' << format_number(p.V0) << ',' << format_number(p.a) << ','
        << format_number(p.x0) << ',' << format_number(c.R) << ',' << format_number(c.T) << ','
        << format_number(step) << '\n';
  }
  return 0;
}
