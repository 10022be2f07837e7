#pragma once

#include <complex>
#include <functional>

// Test-only oracles, deliberately independent of the library's evaluation
// paths: tanh-sinh quadrature for the moment integrals, the accelerated
// alternating series for zeta, the Gauss closed form for digamma at
// rationals, and finite differences of libm's lgamma.

namespace zdb::testing {

// Tanh-sinh quadrature on (a, b); tolerates integrable endpoint
// singularities.  Returns the integral; last_error(optional) receives the
// level-to-level difference.
double tanh_sinh(const std::function<double(double)>& f, double a, double b,
                 double target_rel, double* err_out = nullptr);

// integral_0^inf x^A e^{-2 alpha x^beta} (log x)^n dx by quadrature only.
double moment_integral_quadrature(double A, int n, double alpha, double beta);

// zeta via the accelerated alternating (eta) series; good for Re s > 0 and
// moderate |Im s| with terms ~ 100.
std::complex<double> zeta_alternating(std::complex<double> s, int terms = 100);

// psi(p/q) for integers p, q >= 1 via the Gauss digamma theorem plus the
// recurrence; exact closed form, independent of the series route.
double digamma_rational(long p, long q);

// psi and psi' from Richardson-extrapolated central differences of
// std::lgamma.
double digamma_fd(double x);
double trigamma_fd(double x);

}  // namespace zdb::testing
