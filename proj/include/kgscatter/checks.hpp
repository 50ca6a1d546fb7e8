#pragma once

#include <functional>
#include <string>
#include <vector>

namespace kgscatter::checks {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  // measured values against their thresholds
  double seconds = 0.0;
};

// |R + T - 1| <= 1e-8 and 0 <= R, T <= 1 + 1e-8 over E x V0 x a x x0 =
// {1.5,2,3,5} x [0,10]/0.05 x {1e-3,0.1,0.5,1} x {-3,-2,-1,0}; <= 120 s.
CheckResult unitarity_sweep();

// 50 seeded random parameter points, |R_matcher - R_oracle| <= 1e-6; <= 60 s.
CheckResult matcher_oracle_equivalence();

// a = 1e-3, E = 3, x0 = -3, V0 in [0,6]/0.05: max |R_matcher - R_square(KG)| <= 1e-3.
CheckResult square_barrier_limit();

// Sine-root resonances of the square barrier at E = 3, x0 = -3 located by
// find_resonances within 1e-3: KG 3 - sqrt(1 + pi^2/9), Schrodinger 3 - pi^2/18.
CheckResult resonance_positions();

// E = 2, a = 0.5, V0 in [0,10]/0.01: resonances for x0 = -1 and -2, and the
// x0 = -2 count is at least the x0 = -1 count.
CheckResult smooth_barrier_resonance_counts();

// E = 3, x0 = -3, V0 in [0,6]/0.01: more KG resonances than Schrodinger ones.
CheckResult kg_vs_schrodinger_counts();

// Kummer transformation, closed forms, Whittaker ODE residual, analytic vs
// finite-difference derivative, conjugation symmetry.
CheckResult special_functions();

struct NamedCheck {
  std::string name;
  std::function<CheckResult()> run;
};

std::vector<NamedCheck> all();

}  // namespace kgscatter::checks
