#include "oracles.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace zdb::testing {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

double tanh_sinh(const std::function<double(double)>& f, double a, double b,
                 double target_rel, double* err_out) {
    const double c = 0.5 * (a + b), r = 0.5 * (b - a);
    const double u_max = 3.8;
    auto node = [&](double u, double& x, double& w) {
        const double s = 0.5 * kPi * std::sinh(u);
        const double t = std::tanh(s);
        x = c + r * t;
        const double ch = std::cosh(s);
        w = r * 0.5 * kPi * std::cosh(u) / (ch * ch);
    };
    double h = 1.0;
    double sum = 0.0;
    {
        double x, w;
        node(0.0, x, w);
        sum = f(x) * w;
        for (double u = h; u <= u_max; u += h) {
            node(u, x, w);
            if (x > a && x < b) sum += f(x) * w;
            node(-u, x, w);
            if (x > a && x < b) sum += f(x) * w;
        }
    }
    double prev = sum * h;
    for (int level = 1; level <= 12; ++level) {
        h *= 0.5;
        double add = 0.0;
        for (double u = h; u <= u_max; u += 2.0 * h) {
            double x, w;
            node(u, x, w);
            if (x > a && x < b) add += f(x) * w;
            node(-u, x, w);
            if (x > a && x < b) add += f(x) * w;
        }
        sum += add;
        const double cur = sum * h;
        const double diff = std::fabs(cur - prev);
        if (level >= 3 && diff <= target_rel * std::fabs(cur)) {
            if (err_out) *err_out = diff;
            return cur;
        }
        prev = cur;
    }
    if (err_out) *err_out = std::fabs(prev) * 1e-10;
    return prev;
}

double moment_integral_quadrature(double A, int n, double alpha, double beta) {
    auto integrand = [=](double x) {
        const double lg = std::log(x);
        double lp = 1.0;
        for (int i = 0; i < n; ++i) lp *= lg;
        return std::exp(A * lg - 2.0 * alpha * std::exp(beta * lg)) * lp;
    };
    // e^{-2 alpha R^beta} = e^{-90}: everything beyond is far below 1e-12
    // of the total.
    const double R = std::exp(std::log(45.0 / alpha) / beta);
    const double head = tanh_sinh(integrand, 0.0, 1.0, 1e-13);
    const double tail = tanh_sinh(integrand, 1.0, std::max(R, 2.0), 1e-13);
    return head + tail;
}

std::complex<double> zeta_alternating(std::complex<double> s, int terms) {
    using cd = std::complex<double>;
    // Cohen-Rodriguez Villegas-Zagier acceleration of
    // eta(s) = sum_k (-1)^k (k+1)^{-s}.
    const int n = terms;
    double d = std::pow(3.0 + std::sqrt(8.0), n);
    d = 0.5 * (d + 1.0 / d);
    double b = -1.0, c = -d;
    cd acc(0.0, 0.0);
    for (int k = 0; k < n; ++k) {
        c = b - c;
        acc += c * std::exp(-s * std::log(double(k + 1)));
        b *= (k + n) * (k - n) / ((k + 0.5) * (k + 1.0));
    }
    const cd eta = acc / d;
    return eta / (1.0 - std::exp((1.0 - s) * std::log(2.0)));
}

double digamma_rational(long p, long q) {
    if (p < 1 || q < 1) throw std::invalid_argument("digamma_rational: p, q >= 1");
    // Reduce to 0 < p/q <= 1 with psi(x+1) = psi(x) + 1/x.
    double shift = 0.0;
    while (p > q) {
        p -= q;
        shift += double(q) / double(p);
    }
    if (p == q) return shift - 0.57721566490153286554942843;  // psi(1) = -gamma
    const double gamma = 0.57721566490153286554942843;
    const double x = double(p) / double(q);
    double v = -gamma - std::log(2.0 * q) - 0.5 * kPi / std::tan(kPi * x);
    for (long m = 1; 2 * m <= q - 1; ++m)
        v += 2.0 * std::cos(2.0 * kPi * m * x) * std::log(std::sin(kPi * m / q));
    return v + shift;
}

namespace {

double central_diff1(const std::function<double(double)>& f, double x, double h) {
    return (f(x - 2 * h) - 8 * f(x - h) + 8 * f(x + h) - f(x + 2 * h)) / (12 * h);
}

double central_diff2(const std::function<double(double)>& f, double x, double h) {
    return (-f(x - 2 * h) + 16 * f(x - h) - 30 * f(x) + 16 * f(x + h) -
            f(x + 2 * h)) /
           (12 * h * h);
}

}  // namespace

double digamma_fd(double x) {
    auto lg = [](double t) { return std::lgamma(t); };
    const double h = 0.02 * std::max(1.0, x);
    const double d1 = central_diff1(lg, x, h);
    const double d2 = central_diff1(lg, x, 0.5 * h);
    return d2 + (d2 - d1) / 15.0;  // Richardson on the h^4 stencil
}

double trigamma_fd(double x) {
    auto lg = [](double t) { return std::lgamma(t); };
    const double h = 0.02 * std::max(1.0, x);
    const double d1 = central_diff2(lg, x, h);
    const double d2 = central_diff2(lg, x, 0.5 * h);
    return d2 + (d2 - d1) / 15.0;
}

}  // namespace zdb::testing
