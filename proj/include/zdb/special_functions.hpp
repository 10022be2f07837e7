#pragma once

#include <complex>
#include <stdexcept>

// Gamma, digamma/trigamma and Riemann zeta evaluation for positive real
// (and, for zeta, complex) arguments.  Everything here is plain double
// arithmetic with truncation bounds checked at evaluation time; no interval
// arithmetic is attempted.

namespace zdb {

// Thrown when a series/Euler-Maclaurin evaluation cannot certify the
// requested relative tolerance within its term budget.
class precision_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct EvalPrecision {
    double rel_tol = 1e-12;  // > 0
    int max_terms = 200;     // >= 10
};

// log Gamma(x), x > 0.  Recurrence shift into x >= 12, then Stirling series.
double log_gamma(double x);

// psi(x) = Gamma'(x)/Gamma(x), x > 0.
double digamma(double x);

// psi'(x), x > 0.
double trigamma(double x);

// Gamma^{(j)}(x) for j in {0,1,2}, x > 0.
//   Gamma'  = Gamma * psi
//   Gamma'' = Gamma * (psi^2 + psi')
double gamma_deriv(int j, double x);

// zeta(s) for real s > 1, Euler-Maclaurin with certified truncation.
double zeta_real(double s, const EvalPrecision& prec = {});

// zeta(s) for complex s != 1 with Re(s) > -1 and |Im(s)| <= 1e6.
// Euler-Maclaurin; throws precision_error if the certified remainder cannot
// be brought below rel_tol * |result| within the term budget.
std::complex<double> zeta_complex(std::complex<double> s,
                                  const EvalPrecision& prec = {});

// x^p via exp(p log x) for x > 0.  All non-integer powers in the constant
// cascade go through this one helper so table reproduction is deterministic.
double pow_rl(double x, double p);

}  // namespace zdb
