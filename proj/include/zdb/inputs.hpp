#pragma once

// Fixed numeric inputs and the parameter tuple that drives every bound.
// Logs are natural logarithms throughout (consistent with the e^gamma
// factors in the tail constants).

namespace zdb {

namespace inputs {

// Height to which all nontrivial zeros are known to lie on the critical
// line (Platt's verification).
inline constexpr double H0 = 3.0610046e10;

// Subconvexity constants for |zeta(1/2+it)| (Hiary).
inline constexpr double a1 = 0.63;
inline constexpr double a2 = 2.851;

// Squarefree / lambda_X / divisor sum constants (Ramare).
inline constexpr double b1 = 0.62;
inline constexpr double b2 = 1.048;
inline constexpr double b3 = 0.605;
inline constexpr double b4 = 0.529;

inline constexpr double euler_gamma = 0.577215664901532861;

// Mean value theorem constant m0 = sqrt(1 + (2/3) sqrt(6/5)).
double m0();

// Smallest admissible eta: the root of b6(1e9, eta) = 1 in (0, 1/2).
// Recomputed by bisection on first use and asserted to be 0.23622 to five
// decimals.
double eta0();

double log_H0();      // log(3.0610046e10)
double loglog_H0();   // log(log(H0))

// Upper end of the admissible delta range, log(H0)(loglog(H0)-1)/2.
double delta_max();

// Smallest admissible mollifier scale, 1e9 / H0.
double k_min();

}  // namespace inputs

// The full tuple (sigma, T, k, alpha, delta, d, eta, mu, H) determining a
// bound instance; X is always derived as X = k T.
struct ParameterSet {
    double sigma = 0.0;
    double T = inputs::H0;
    double k = 1.0;
    double alpha = 0.0;
    double delta = 0.0;
    double d = 0.0;
    double eta = 0.0;
    double mu = 0.0;
    double H = 1002.0;
};

}  // namespace zdb
