#pragma once

#include <array>
#include <string>
#include <utility>

#include "zdb/inputs.hpp"

// The full constant cascade: moment integrals I(A,n), mean value constants
// C1..C4, tail constants C5/C6, weight envelopes omega1/omega2, the
// aggregates J, K, U, V and M(k,delta), the argument/log constants b5..b11
// with C7/C8, and the two master constants scriptC1/scriptC2.

namespace zdb {

// I(A,n) = integral_0^inf x^A e^{-2 alpha x^beta} (log x)^n dx, A > -1,
// n in {0,1,2}, via the Gamma-derivative closed form
//   (2a)^{-(A+1)/b} b^{-(n+1)} sum_j C(n,j) (-log 2a)^j Gamma^{(n-j)}((A+1)/b).
double eval_I(double A, int n, double alpha, double beta);

struct MeanValueConstants {
    double C1, C2, a3, C3, C4;
};
// C1 = 6/pi^2 + b2/log(kH0),
// C2 = pi m0 b1/log(kH0) + 6 m0/(pi k H0) + pi m0 b2/(k H0 log(kH0)),
// a3 = -6 a1/e + a2,  C3 = a3^2 C1 log(kH0),  C4 = C1 a1^2 (1 + 1/sqrt(C3))^2.
MeanValueConstants eval_mean_value_constants(double k);

// The seven T-independent coefficient groups of J(k,T); every one must be
// positive for U(alpha,k,T) to decrease in T.
std::array<double, 7> j_coefficient_groups(double k, double alpha);

// J(k,T): groups assembled with their 1/log T and T^{-1/6}, T^{-1/3} decays.
double eval_J(double k, double T, double alpha);

// U(alpha,k,T) = 8 alpha C4 omega1(1/2,T,alpha)^2 J(k,T).
double eval_U(double alpha, double k, double T);

// (C5, C6), the lambda_X tail constants at (k, delta).
std::pair<double, double> eval_tail_constants(double k, double delta);

// K = (C5 + C6 pi m0/(kT)) I(1,0) + (C6/k) I(2,0)  [I at (alpha, beta=2)],
// V = 8 alpha omega1(sigma2,T,alpha)^2 K with sigma2 = 1 + delta/log(kT).
std::pair<double, double> eval_K_and_V(double alpha, double k, double delta, double T);

// M(k,delta) = log(H0)/(log(kH0)+2delta) if log k + 2delta < 0, else 1.
double eval_M(double k, double delta);

// which=1: omega1 = e^{alpha (sigma/T)^2};
// which=2: omega2 = (1 - 1/H) e^{alpha (sigma/T)^2 - alpha}.
double eval_omega(int which, double sigma, double T, double alpha, double H);

// b6(X,eta): upper bound for |f_X(1+eta+it)| from the divisor sum tail.
double eval_b6(double X, double eta);

struct ArgumentConstants {
    double b5, b6_at_1e9, b7, b8, b9, C7;
};
// Constants feeding the argument bound; throws std::domain_error when
// 1 - b6(1e9,eta)^2 <= 0 (eta at or below eta0).
ArgumentConstants eval_argument_constants(double k, double eta, double H);

struct LogConstants {
    double b10, b11_2mu, b11_2mu_minus_1, C8;
};
// Constants feeding the -log|h_X| bound; throws std::domain_error when
// b6(kH0, mu-1) >= 1.
LogConstants eval_log_constants(double k, double mu);

// (scriptC1, scriptC2): the two master constants of the final bound, with
// U and V evaluated at T = H0.  Throws std::domain_error from sub-constants
// and std::invalid_argument if U(alpha,k,H0) <= 1.
std::pair<double, double> eval_script_constants(const ParameterSet& p);

// Everything above evaluated once for a ParameterSet.  U, V, J, K are the
// T = H0 values entering scriptC1; omega1_half / omega2_sigma are the weight
// envelopes at the instance's own T.
struct ConstantBundle {
    double C1, C2, C3, C4, C5, C6, C7, C8;
    double a3;
    double b5, b6_at_1e9, b6_at_kH0_mu, b7, b8, b9, b10, b11_2mu, b11_2mu_minus_1, b12;
    double M_k_delta;
    double omega1_half, omega2_sigma;
    double J, K, U, V;
    double scriptC1, scriptC2;
};

ConstantBundle eval_constant_bundle(const ParameterSet& p);

// One "name = value" per line, 17 significant digits.
std::string to_key_value(const ConstantBundle& b);

}  // namespace zdb
