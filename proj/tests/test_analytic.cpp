#include <doctest.h>

#include <cmath>
#include <numbers>

#include "kgscatter/analytic.hpp"
#include "kgscatter/errors.hpp"

using namespace kgscatter;

namespace {

constexpr double kPi = std::numbers::pi;

// Interior maxima of T over V0 in [0, stop] at the given step, T >= 0.999.
int count_peaks(Dispersion d, double E, double x0, double stop, double step) {
  int peaks = 0;
  double prev2 = -1.0, prev = -1.0;
  for (double V0 = 0.0; V0 <= stop + 1e-12; V0 += step) {
    double T = 0.0;
    try {
      T = square_barrier_rt(E, V0, x0, d).T;
    } catch (const DegenerateError&) {
      continue;
    }
    if (prev > prev2 && prev >= T && prev >= 0.999 && prev2 >= 0.0) ++peaks;
    prev2 = prev;
    prev = T;
  }
  return peaks;
}

}  // namespace

TEST_CASE("sine roots give perfect transmission") {
  const double sch = 3.0 - kPi * kPi / 18.0;  // 2.45169
  CHECK(sch == doctest::Approx(2.45169).epsilon(1e-5));
  CHECK(square_barrier_rt(3.0, sch, -3.0, Dispersion::schrodinger).T ==
        doctest::Approx(1.0).epsilon(1e-14));

  const double kg = 3.0 - std::sqrt(1.0 + kPi * kPi / 9.0);  // 1.55203
  CHECK(kg == doctest::Approx(1.55203).epsilon(1e-5));
  CHECK(square_barrier_rt(3.0, kg, -3.0, Dispersion::klein_gordon).T ==
        doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("no barrier, no reflection") {
  for (auto d : {Dispersion::schrodinger, Dispersion::klein_gordon}) {
    const Coefficients c = square_barrier_rt(3.0, 0.0, -3.0, d);
    CHECK(c.R == 0.0);
    CHECK(c.T == 1.0);
    CHECK(square_barrier_rt(3.0, 2.5, 0.0, d).R == 0.0);  // zero width
  }
}

TEST_CASE("R + T = 1 identically") {
  for (auto d : {Dispersion::schrodinger, Dispersion::klein_gordon}) {
    for (double V0 = 0.0; V0 <= 10.0; V0 += 0.037) {
      for (double x0 : {-0.5, -3.0, -7.0}) {
        try {
          const Coefficients c = square_barrier_rt(3.0, V0, x0, d);
          CHECK(std::abs(c.unitarity_residual) < 1e-14);
          CHECK(c.R >= 0.0);
          CHECK(c.R <= 1.0);
        } catch (const DegenerateError&) {
        }
      }
    }
  }
}

TEST_CASE("continuous across k2 = 0") {
  // One-sided values at k2^2 = +-eps differ by O(eps): about 3.2e-5 at 1e-4.
  auto gap = [](Dispersion d, double eps) {
    // KG: (E - V0)^2 - 1 = +-eps; Schrodinger: 2(E - V0) = +-eps.
    double below = 0.0, above = 0.0;
    if (d == Dispersion::klein_gordon) {
      below = 3.0 - std::sqrt(1.0 + eps);
      above = 3.0 - std::sqrt(1.0 - eps);
    } else {
      below = 3.0 - 0.5 * eps;
      above = 3.0 + 0.5 * eps;
    }
    return std::abs(square_barrier_rt(3.0, below, -3.0, d).R -
                    square_barrier_rt(3.0, above, -3.0, d).R);
  };
  for (auto d : {Dispersion::schrodinger, Dispersion::klein_gordon}) {
    CHECK(gap(d, 1e-6) < 1e-6);
    CHECK(gap(d, 1e-4) / gap(d, 1e-6) == doctest::Approx(100.0).epsilon(0.01));
  }
}

TEST_CASE("Klein-Gordon has more transmission peaks than Schrodinger") {
  const int kg = count_peaks(Dispersion::klein_gordon, 3.0, -3.0, 6.0, 0.01);
  const int sch = count_peaks(Dispersion::schrodinger, 3.0, -3.0, 6.0, 0.01);
  CHECK(kg == 4);
  CHECK(sch == 2);
}

TEST_CASE("analytic error paths") {
  CHECK_THROWS_AS(square_barrier_rt(3.0, 2.0, -3.0, Dispersion::klein_gordon), DegenerateError);
  CHECK_THROWS_AS(square_barrier_rt(3.0, 3.0, -3.0, Dispersion::schrodinger), DegenerateError);
  CHECK_THROWS_AS(square_barrier_rt(1.0, 0.5, -3.0, Dispersion::klein_gordon), DomainError);
  CHECK_THROWS_AS(square_barrier_rt(0.0, 0.5, -3.0, Dispersion::schrodinger), DomainError);
  CHECK_NOTHROW(square_barrier_rt(0.5, 0.2, -3.0, Dispersion::schrodinger));
}
