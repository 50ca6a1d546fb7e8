#pragma once

#include <complex>

namespace kgscatter {

using Complex = std::complex<double>;

// Index pair (kappa, mu) of the Whittaker function M_{kappa,mu}.
struct WhittakerIndex {
  Complex kappa;
  Complex mu;
};

struct SeriesOptions {
  double z_max = 50.0;       // largest |z| accepted by the power series
  double tol = 1e-15;        // relative size of the running term at which summation stops
  int max_terms = 500;
  bool allow_branch_cut = false;  // accept z on the negative real axis (principal value)
};

/// Confluent hypergeometric function 1F1(a; b; z) by its Taylor series.
///
/// The series is accumulated in extended precision: for the purely imaginary
/// arguments |z| ~ 20 met at the barrier joints the terms exceed the sum by
/// up to eight orders of magnitude.
Complex kummer_m(Complex a, Complex b, Complex z, const SeriesOptions& opts = {});

/// M_{kappa,mu}(z) = exp(-z/2) z^{1/2+mu} M(1/2+mu-kappa, 1+2mu, z), principal branch.
Complex whittaker_m(const WhittakerIndex& idx, Complex z, const SeriesOptions& opts = {});

/// d/dz M_{kappa,mu}(z), analytic (product rule plus dM/dz = (a/b) M(a+1, b+1, z)).
Complex whittaker_m_deriv(const WhittakerIndex& idx, Complex z, const SeriesOptions& opts = {});

// Value and z-derivative together; shares the power-law prefactor.
struct WhittakerValue {
  Complex value;
  Complex deriv;
};
WhittakerValue whittaker_m_with_deriv(const WhittakerIndex& idx, Complex z,
                                      const SeriesOptions& opts = {});

}  // namespace kgscatter
