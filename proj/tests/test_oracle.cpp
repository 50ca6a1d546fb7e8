#include <doctest.h>

#include <cmath>

#include "fixtures.hpp"
#include "kgscatter/analytic.hpp"
#include "kgscatter/errors.hpp"
#include "kgscatter/oracle.hpp"

using namespace kgscatter;

TEST_CASE("free propagation") {
  OracleConfig cfg;
  cfg.x_min = -5.0;
  cfg.x_max = 5.0;
  const Potential zero = [](double) { return 0.0; };
  const Coefficients c = integrate_rt(zero, 2.0, cfg);
  CHECK(c.R < 1e-10);
  CHECK(std::abs(c.T - 1.0) < 1e-10);
  CHECK(convergence_check(zero, 2.0, cfg) < 1e-12);
}

TEST_CASE("square barrier matches the closed form") {
  OracleConfig cfg;
  cfg.x_min = -5.0;
  cfg.x_max = 2.0;
  cfg.breakpoints = {-3.0, 0.0};
  // Oscillatory, evanescent, and both sides of the Klein threshold E + 1.
  for (double V0 : {1.0, 2.5, 4.35, 5.5}) {
    const Coefficients o = integrate_rt(square_barrier(V0, -3.0), 3.0, cfg);
    const Coefficients a = square_barrier_rt(3.0, V0, -3.0, Dispersion::klein_gordon);
    CHECK(std::abs(o.R - a.R) < 1e-8);
    CHECK(std::abs(o.T - a.T) < 1e-8);
    CHECK(convergence_check(square_barrier(V0, -3.0), 3.0, cfg) < 1e-8);
  }
}

TEST_CASE("golden smooth-barrier values are reproduced and converged") {
  for (const auto& g : test_fixtures::oracle_golden()) {
    const OracleConfig cfg = default_oracle_config(g.p, 1e-4);
    const Coefficients c = integrate_rt(smooth_barrier(g.p), g.p.E, cfg);
    CHECK(std::abs(c.R - g.R) < 1e-9);
    CHECK(std::abs(c.T - g.T) < 1e-9);
    CHECK(std::abs(c.unitarity_residual) < 1e-8);
    CHECK(convergence_check(smooth_barrier(g.p), g.p.E, cfg) < 1e-8);
  }
}

TEST_CASE("RK4 converges at fourth order on the smooth barrier") {
  const ScatterParams p{2.0, 4.0, 0.5, -1.0};
  auto R = [&](double h) { return oracle_coefficients(p, h).R; };
  const double r1 = R(0.04), r2 = R(0.02), r3 = R(0.01);
  const double ratio = std::abs(r1 - r2) / std::abs(r2 - r3);
  CHECK(ratio >= 12.0);
  CHECK(ratio <= 20.0);
}

TEST_CASE("translation invariance") {
  const ScatterParams p{2.5, 3.2, 0.4, -1.5};
  const OracleConfig cfg = default_oracle_config(p);
  const Coefficients base = integrate_rt(smooth_barrier(p), p.E, cfg);
  for (double shift : {0.75, -2.0}) {
    OracleConfig moved = cfg;
    moved.x_min += shift;
    moved.x_max += shift;
    for (double& b : moved.breakpoints) b += shift;
    const Potential V = [&](double x) { return potential_value(x - shift, p); };
    const Coefficients c = integrate_rt(V, p.E, moved);
    CHECK(std::abs(c.R - base.R) < 1e-10);
    CHECK(std::abs(c.T - base.T) < 1e-10);
  }
}

TEST_CASE("oracle error paths") {
  const ScatterParams p{2.0, 4.0, 0.5, -1.0};
  CHECK_THROWS_AS(oracle_coefficients(p, 0.4), StepError);

  OracleConfig narrow = default_oracle_config(p);
  narrow.x_min = p.x0 - 12.0 * p.a;
  narrow.x_max = 12.0 * p.a;
  CHECK_THROWS_AS(integrate_rt(smooth_barrier(p), p.E, narrow), DomainError);

  OracleConfig bad;
  bad.x_min = 1.0;
  bad.x_max = -1.0;
  CHECK_THROWS_AS(integrate_rt(smooth_barrier(p), 2.0, bad), DomainError);
  CHECK_THROWS_AS(integrate_rt(smooth_barrier(p), 1.0, default_oracle_config(p)), DomainError);
}
