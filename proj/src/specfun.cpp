#include "kgscatter/specfun.hpp"

#include <cmath>
#include <string>

#include "kgscatter/errors.hpp"

namespace kgscatter {
namespace {

using ExtComplex = std::complex<long double>;

void require_finite(Complex v, const char* what) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
    throw DomainError(std::string(what) + " is not finite");
  }
}

bool near_nonpositive_integer(Complex b) {
  const double n = std::round(b.real());
  return n <= 0.0 && std::abs(b - Complex(n, 0.0)) < 1e-12;
}

ExtComplex kummer_series(ExtComplex a, ExtComplex b, ExtComplex z, const SeriesOptions& opts) {
  ExtComplex term{1.0L, 0.0L};
  ExtComplex sum{1.0L, 0.0L};
  const long double zabs = std::abs(z);
  const long double tol = opts.tol;
  int quiet = 0;
  for (int n = 0; n < opts.max_terms; ++n) {
    const long double nn = n;
    term *= (a + nn) / ((b + nn) * (nn + 1.0L)) * z;
    sum += term;
    if (term == ExtComplex{}) return sum;  // a is a non-positive integer
    // Terms only decay for good once n exceeds |z|; before that a small term
    // can be an accident of a + n passing near zero.
    if (nn + 1.0L >= zabs && std::abs(term) <= tol * std::abs(sum)) {
      if (++quiet == 2) return sum;
    } else {
      quiet = 0;
    }
  }
  throw ConvergenceError("1F1 series did not converge within " + std::to_string(opts.max_terms) +
                         " terms");
}

void check_series_args(Complex b, Complex z, const SeriesOptions& opts) {
  if (near_nonpositive_integer(b)) {
    throw DomainError("1F1: b is a non-positive integer");
  }
  if (std::abs(z) > opts.z_max) {
    throw DomainError("1F1: |z| = " + std::to_string(std::abs(z)) + " exceeds series cap " +
                      std::to_string(opts.z_max));
  }
}

// exp(-z/2) z^c on the principal branch, arg z in (-pi, pi].
ExtComplex whittaker_prefactor(Complex z, ExtComplex c, const SeriesOptions& opts) {
  if (z == Complex{}) throw DomainError("Whittaker M: z = 0");
  ExtComplex zz(z.real(), z.imag());
  if (z.imag() == 0.0 && z.real() < 0.0) {
    if (!opts.allow_branch_cut) {
      throw BranchError("Whittaker M: z on the negative real axis");
    }
    zz = ExtComplex(z.real(), 0.0L);  // +0 imaginary part selects arg = +pi
  }
  return std::exp(-zz / 2.0L + c * std::log(zz));
}

struct Parts {
  ExtComplex c, a, b;
};

Parts whittaker_parts(const WhittakerIndex& idx, Complex z, const SeriesOptions& opts) {
  require_finite(idx.kappa, "kappa");
  require_finite(idx.mu, "mu");
  require_finite(z, "z");
  const ExtComplex kappa(idx.kappa.real(), idx.kappa.imag());
  const ExtComplex mu(idx.mu.real(), idx.mu.imag());
  Parts p{0.5L + mu, 0.5L + mu - kappa, 1.0L + 2.0L * mu};
  check_series_args(Complex(double(p.b.real()), double(p.b.imag())), z, opts);
  return p;
}

Complex narrow(ExtComplex v) { return {double(v.real()), double(v.imag())}; }

}  // namespace

Complex kummer_m(Complex a, Complex b, Complex z, const SeriesOptions& opts) {
  require_finite(a, "a");
  require_finite(b, "b");
  require_finite(z, "z");
  check_series_args(b, z, opts);
  return narrow(kummer_series({a.real(), a.imag()}, {b.real(), b.imag()}, {z.real(), z.imag()},
                              opts));
}

Complex whittaker_m(const WhittakerIndex& idx, Complex z, const SeriesOptions& opts) {
  const Parts p = whittaker_parts(idx, z, opts);
  const ExtComplex zz(z.real(), z.imag());
  return narrow(whittaker_prefactor(z, p.c, opts) * kummer_series(p.a, p.b, zz, opts));
}

WhittakerValue whittaker_m_with_deriv(const WhittakerIndex& idx, Complex z,
                                      const SeriesOptions& opts) {
  const Parts p = whittaker_parts(idx, z, opts);
  const ExtComplex zz(z.real(), z.imag());
  const ExtComplex pref = whittaker_prefactor(z, p.c, opts);
  const ExtComplex m0 = kummer_series(p.a, p.b, zz, opts);
  const ExtComplex m1 = kummer_series(p.a + 1.0L, p.b + 1.0L, zz, opts);
  const ExtComplex d = pref * ((p.c / zz - 0.5L) * m0 + (p.a / p.b) * m1);
  return {narrow(pref * m0), narrow(d)};
}

Complex whittaker_m_deriv(const WhittakerIndex& idx, Complex z, const SeriesOptions& opts) {
  return whittaker_m_with_deriv(idx, z, opts).deriv;
}

}  // namespace kgscatter
