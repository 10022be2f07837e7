#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "zdb/verification/arithmetic_tables.hpp"

// Brute-force and quadrature oracles for the inequalities the constant
// cascade relies on, each producing a LemmaReport at desk scale.

namespace zdb {

struct LemmaReport {
    std::string lemma_id;
    std::string instance;  // parameter description, truncation notes
    double lhs = 0.0;
    double rhs = 0.0;
    bool pass = false;  // margin() >= 0
    std::string caveat;  // non-empty when outside the stated hypothesis

    double margin() const { return rhs - lhs; }
    bool in_hypothesis() const { return caveat.empty(); }
};

// sum_{n<=X} mu^2(n) <= b1 X            (stated for X >= 1700)
// sum_{n<=X} mu^2(n)/n - (6/pi^2)log X <= b2   (stated for X >= 1002)
std::pair<LemmaReport, LemmaReport> check_mobius_sums(std::int64_t X);

// The four lambda_X tail inequalities.  [0]: full enumeration of
// sum_{X<n<5X} lambda^2/n^2 vs b3/X.  [1..3]: partial sums to window_cap
// (certified lower bounds on the lhs) vs the tau = 2, tau = 1+delta/logX and
// tau = 2+2delta/logX right sides.  All four carry a caveat below X = 1e9.
std::vector<LemmaReport> check_lambda_sums(std::int64_t X, double delta,
                                           std::int64_t window_cap);

// sum_{n>=X} d(n)/n^tau and sum_{n>=X} d(n)^2/n^tau against their
// closed-form majorants; lhs = exact partial sum + certified tail bound.
std::pair<LemmaReport, LemmaReport> check_divisor_sums(std::int64_t X, double tau);

// integral_{T1}^{T2} |sum u_n n^{it}|^2 dt <= sum u_n^2 (T2-T1+2 pi m0 (n+1)).
// The t-integral is done in closed form (diagonal + sinc cross terms), so the
// only lhs error is rounding; raises precision_error if that estimate
// exceeds 1% of the margin.
LemmaReport check_mv_inequality(std::span<const double> u, double T1, double T2);

// Subconvexity |zeta(1/2+it)| <= a1 t^{1/6} log t (t >= 3), the max-form
// with +a2, and the convexity-strip bound at sigma in {-eta,0,1/2,1+eta}.
std::vector<LemmaReport> check_zeta_bounds(std::span<const double> t_samples,
                                           double eta);

// |g(sigma+it)| <= omega1 e^{-alpha(t/T)^2} for every sample, omega2 <= |g|
// for samples in [H,T], and |g(sigma-it)| = |g(sigma+it)| over the samples.
std::vector<LemmaReport> check_weight_bounds(double sigma, double T, double alpha,
                                             double H,
                                             std::span<const double> t_samples);

// Toy-scale direct quadrature of M_{g,T}(X,sigma):
// [0] log-convexity in sigma between sigma1 and sigma2;
// [1] the integration-by-parts majorant
//     M <= 4 omega1^2 alpha beta int x^{beta-1} e^{-2 alpha x^beta} F_X(sigma,xT) dx.
std::pair<LemmaReport, LemmaReport> check_smoothing_and_convexity(
    std::int64_t X, double T, double sigma1, double sigma, double sigma2,
    double alpha);

// Interpolation exponents (a, b), both routes; they agree identically.
std::pair<double, double> exponents_by_ratio(double sigma, double delta, double X);
std::pair<double, double> exponents_closed_form(double sigma, double delta, double X);

// Aligned text / CSV rendering for reports.
std::string format_reports(std::span<const LemmaReport> reports, bool csv);

}  // namespace zdb
