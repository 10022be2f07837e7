#include "zdb/special_functions.hpp"

#include <cmath>
#include <cstddef>

namespace zdb {

namespace {

constexpr double kPi = 3.14159265358979323846;

// B_{2k} / (2k (2k-1)), k = 1..10: Stirling series for log Gamma.
constexpr double kStirling[] = {
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
    -174611.0 / 125400.0,
};

// B_{2k} / (2k), k = 1..10: asymptotic series for digamma.
constexpr double kDigamma[] = {
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
    -3617.0 / 8160.0,
    43867.0 / 14364.0,
    -174611.0 / 6600.0,
};

// B_{2k}, k = 1..10: asymptotic series for trigamma.
constexpr double kBernoulli[] = {
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
};

// B_{2k} / (2k)!, k = 0..14: Euler-Maclaurin correction coefficients.
constexpr double kEmCoeff[] = {
    1.0,
    8.3333333333333333e-02,
    -1.3888888888888889e-03,
    3.3068783068783069e-05,
    -8.2671957671957672e-07,
    2.0876756987868099e-08,
    -5.2841901386874932e-10,
    1.3382536530684679e-11,
    -3.3896802963225829e-13,
    8.5860620562778446e-15,
    -2.1748686985580619e-16,
    5.5090028283602295e-18,
    -1.3954464685812523e-19,
    3.5347070396294675e-21,
    -8.9535174270375469e-23,
};
constexpr int kEmMaxK = 13;  // need kEmCoeff[k+1] for the remainder bound

double require_positive(double x) {
    if (!(x > 0.0)) throw std::domain_error("special_functions: argument must be > 0");
    return x;
}

}  // namespace

double log_gamma(double x) {
    require_positive(x);
    double shift = 0.0;
    while (x < 12.0) {
        shift -= std::log(x);
        x += 1.0;
    }
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    double series = 0.0, p = inv;
    for (double c : kStirling) {
        series += c * p;
        p *= inv2;
    }
    return shift + (x - 0.5) * std::log(x) - x + 0.5 * std::log(2.0 * kPi) + series;
}

double digamma(double x) {
    require_positive(x);
    double shift = 0.0;
    while (x < 12.0) {
        shift -= 1.0 / x;
        x += 1.0;
    }
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    double series = 0.0, p = inv2;
    for (double c : kDigamma) {
        series += c * p;
        p *= inv2;
    }
    return shift + std::log(x) - 0.5 * inv - series;
}

double trigamma(double x) {
    require_positive(x);
    double shift = 0.0;
    while (x < 12.0) {
        shift += 1.0 / (x * x);
        x += 1.0;
    }
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    double series = 0.0, p = inv * inv2;
    for (double c : kBernoulli) {
        series += c * p;
        p *= inv2;
    }
    return shift + inv + 0.5 * inv2 + series;
}

double gamma_deriv(int j, double x) {
    require_positive(x);
    if (j < 0 || j > 2) throw std::domain_error("gamma_deriv: j must be 0, 1 or 2");
    const double g = std::exp(log_gamma(x));
    if (j == 0) return g;
    const double psi = digamma(x);
    if (j == 1) return g * psi;
    return g * (psi * psi + trigamma(x));
}

double zeta_real(double s, const EvalPrecision& prec) {
    if (!(s > 1.0)) throw std::domain_error("zeta_real: requires s > 1");
    const int N = 16;
    double acc = 0.0;
    for (int n = 1; n < N; ++n) acc += pow_rl(double(n), -s);
    acc += pow_rl(double(N), 1.0 - s) / (s - 1.0);
    acc += 0.5 * pow_rl(double(N), -s);

    // acc += sum_k B_{2k}/(2k)! * s(s+1)...(s+2k-2) * N^{-s-2k+1}
    double rising = s;                            // s(s+1)...(s+2k-2)
    double npow = pow_rl(double(N), -s - 1.0);    // N^{-s-2k+1}
    for (int k = 1; k <= kEmMaxK; ++k) {
        acc += kEmCoeff[k] * rising * npow;
        const double rising_next = rising * (s + 2 * k - 1) * (s + 2 * k);
        const double npow_next = npow / (double(N) * double(N));
        // |remainder| <= |first omitted term| * |s+2q+1|/(sigma+2q+1) = 1 here
        const double rem = std::fabs(kEmCoeff[k + 1]) * rising_next * npow_next;
        if (rem <= prec.rel_tol * std::fabs(acc)) return acc;
        rising = rising_next;
        npow = npow_next;
    }
    throw precision_error("zeta_real: Euler-Maclaurin tail did not certify rel_tol");
}

std::complex<double> zeta_complex(std::complex<double> s, const EvalPrecision& prec) {
    using cd = std::complex<double>;
    if (s == cd(1.0, 0.0)) throw std::domain_error("zeta_complex: pole at s = 1");
    if (std::fabs(s.imag()) > 1e6)
        throw std::domain_error("zeta_complex: |Im s| above supported range (1e6)");
    if (s.real() <= -1.0)
        throw std::domain_error("zeta_complex: requires Re s > -1");

    // Correction terms decay only once 2 pi N exceeds |s + 2k|.
    const int N = std::max(16, int(std::ceil(0.45 * std::fabs(s.imag()))) + 8);
    cd acc(0.0, 0.0);
    for (int n = 1; n < N; ++n) acc += std::exp(-s * std::log(double(n)));
    const cd logN(std::log(double(N)), 0.0);
    acc += std::exp((1.0 - s) * logN) / (s - 1.0);
    acc += 0.5 * std::exp(-s * logN);

    cd rising = s;
    cd npow = std::exp((-s - 1.0) * logN);
    const double sigma = s.real();
    int terms = N;
    for (int k = 1; k <= kEmMaxK; ++k) {
        if (++terms > prec.max_terms + N) break;
        acc += kEmCoeff[k] * rising * npow;
        const cd rising_next = rising * (s + cd(2.0 * k - 1.0)) * (s + cd(2.0 * k));
        const cd npow_next = npow / (double(N) * double(N));
        const double rem = std::fabs(kEmCoeff[k + 1]) * std::abs(rising_next) *
                           std::abs(npow_next) * std::abs(s + cd(2.0 * k + 1.0)) /
                           (sigma + 2.0 * k + 1.0);
        if (rem <= prec.rel_tol * std::abs(acc)) return acc;
        rising = rising_next;
        npow = npow_next;
    }
    throw precision_error("zeta_complex: Euler-Maclaurin tail did not certify rel_tol");
}

double pow_rl(double x, double p) {
    return std::exp(p * std::log(require_positive(x)));
}

}  // namespace zdb
