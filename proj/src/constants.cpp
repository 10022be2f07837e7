#include "zdb/constants.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "zdb/special_functions.hpp"

namespace zdb {

namespace {

constexpr double kPi = 3.14159265358979323846;

double binom(int n, int j) {
    double r = 1.0;
    for (int i = 0; i < j; ++i) r = r * (n - i) / (i + 1);
    return r;
}

}  // namespace

double eval_I(double A, int n, double alpha, double beta) {
    if (!(A > -1.0)) throw std::domain_error("eval_I: requires A > -1");
    if (n < 0 || n > 2) throw std::domain_error("eval_I: n must be 0, 1 or 2");
    if (!(alpha > 0.0 && beta > 0.0)) throw std::domain_error("eval_I: alpha, beta > 0");
    const double z = (A + 1.0) / beta;
    const double neg_log_2a = -std::log(2.0 * alpha);
    double sum = 0.0;
    double lpow = 1.0;  // (-log 2 alpha)^j
    for (int j = 0; j <= n; ++j) {
        sum += binom(n, j) * lpow * gamma_deriv(n - j, z);
        lpow *= neg_log_2a;
    }
    return pow_rl(2.0 * alpha, -z) * pow_rl(beta, -double(n + 1)) * sum;
}

MeanValueConstants eval_mean_value_constants(double k) {
    using namespace inputs;
    const double lkH0 = std::log(k * H0);
    MeanValueConstants c;
    c.C1 = 6.0 / (kPi * kPi) + b2 / lkH0;
    c.C2 = kPi * m0() * b1 / lkH0 + 6.0 * m0() / (kPi * k * H0) +
           kPi * m0() * b2 / (k * H0 * lkH0);
    c.a3 = -6.0 * a1 / std::exp(1.0) + a2;
    c.C3 = c.a3 * c.a3 * c.C1 * lkH0;
    const double t = 1.0 + 1.0 / std::sqrt(c.C3);
    c.C4 = c.C1 * a1 * a1 * t * t;
    return c;
}

namespace {

// Gamma^{(j)}((A+1)/2) for the six A values appearing in J(k,T) with beta=2.
struct GammaTriple {
    double g0, g1, g2;
};

const GammaTriple& gamma_at(double z) {
    struct Entry {
        double z;
        GammaTriple t;
    };
    static const std::array<Entry, 6> table = [] {
        std::array<Entry, 6> e{};
        const double zs[6] = {5.0 / 3.0, 7.0 / 6.0, 19.0 / 12.0, 13.0 / 12.0, 1.5, 1.0};
        for (int i = 0; i < 6; ++i)
            e[i] = {zs[i], {gamma_deriv(0, zs[i]), gamma_deriv(1, zs[i]),
                            gamma_deriv(2, zs[i])}};
        return e;
    }();
    for (const auto& e : table)
        if (e.z == z) return e.t;
    throw std::logic_error("gamma_at: z not in the J table");
}

// I(A,n) at beta = 2 through the cached Gamma triple (optimizer hot path).
double I2(double A, int n, double alpha) {
    const double z = (A + 1.0) / 2.0;
    const GammaTriple& g = gamma_at(z);
    const double L = -std::log(2.0 * alpha);
    double sum;
    switch (n) {
        case 0: sum = g.g0; break;
        case 1: sum = g.g1 + L * g.g0; break;
        default: sum = g.g2 + 2.0 * L * g.g1 + L * L * g.g0; break;
    }
    return pow_rl(2.0 * alpha, -z) * pow_rl(2.0, -double(n + 1)) * sum;
}

}  // namespace

std::array<double, 7> j_coefficient_groups(double k, double alpha) {
    using namespace inputs;
    const MeanValueConstants c = eval_mean_value_constants(k);
    const double rk = c.C2 / c.C1 * k;
    const double q = 2.0 * a2 / a1;
    const double q2 = (a2 / a1) * (a2 / a1);
    // beta = 2: A = beta+1/3 = 7/3, beta-2/3 = 4/3, beta+1/6 = 13/6,
    // beta-5/6 = 7/6, beta = 2, beta-1 = 1.
    return {
        I2(7.0 / 3.0, 0, alpha),
        rk * I2(4.0 / 3.0, 0, alpha),
        2.0 * I2(7.0 / 3.0, 1, alpha) + 2.0 * rk * I2(4.0 / 3.0, 1, alpha),
        I2(7.0 / 3.0, 2, alpha) + rk * I2(4.0 / 3.0, 2, alpha),
        q * (I2(13.0 / 6.0, 0, alpha) + rk * I2(7.0 / 6.0, 0, alpha)),
        q * (I2(13.0 / 6.0, 1, alpha) + rk * I2(7.0 / 6.0, 1, alpha)),
        q2 * (I2(2.0, 0, alpha) + rk * I2(1.0, 0, alpha)),
    };
}

double eval_J(double k, double T, double alpha) {
    const auto g = j_coefficient_groups(k, alpha);
    const double lT = std::log(T);
    const double T16 = pow_rl(T, 1.0 / 6.0);
    return g[0] + g[1] + g[2] / lT + g[3] / (lT * lT) + g[4] / (T16 * lT) +
           g[5] / (T16 * lT * lT) + g[6] / (T16 * T16 * lT * lT);
}

double eval_U(double alpha, double k, double T) {
    const double C4 = eval_mean_value_constants(k).C4;
    const double w1 = eval_omega(1, 0.5, T, alpha, 0.0);
    return 8.0 * alpha * C4 * w1 * w1 * eval_J(k, T, alpha);
}

std::pair<double, double> eval_tail_constants(double k, double delta) {
    using namespace inputs;
    const double lkH0 = std::log(k * H0);
    const double u5 = 1.0 + 2.0 * delta / lkH0;
    const double C5 = kPi * m0() * b4 / (2.0 * delta) * u5 * u5 *
                      std::exp(2.0 * delta * euler_gamma / lkH0);
    const double u6 = 1.0 + delta / lkH0;
    const double C6 = b4 / (5.0 * delta * std::exp(delta)) * u6 * u6 +
                      b3 * std::exp(-2.0 * delta) / (lkH0 * lkH0);
    return {C5, C6};
}

std::pair<double, double> eval_K_and_V(double alpha, double k, double delta, double T) {
    using namespace inputs;
    const auto [C5, C6] = eval_tail_constants(k, delta);
    const double K = (C5 + C6 * kPi * m0() / (k * T)) * I2(1.0, 0, alpha) +
                     (C6 / k) * I2(2.0, 0, alpha);
    const double sigma2 = 1.0 + delta / std::log(k * T);
    const double w1 = eval_omega(1, sigma2, T, alpha, 0.0);
    const double V = 8.0 * alpha * w1 * w1 * K;
    return {K, V};
}

double eval_M(double k, double delta) {
    using namespace inputs;
    if (std::log(k) + 2.0 * delta < 0.0)
        return log_H0() / (std::log(k * H0) + 2.0 * delta);
    return 1.0;
}

double eval_omega(int which, double sigma, double T, double alpha, double H) {
    const double r = sigma / T;
    const double w1 = std::exp(alpha * r * r);
    if (which == 1) return w1;
    if (which == 2) return (1.0 - 1.0 / H) * w1 * std::exp(-alpha);
    throw std::domain_error("eval_omega: which must be 1 or 2");
}

double eval_b6(double X, double eta) {
    using namespace inputs;
    const double lX = std::log(X);
    return (1.0 + eta) * lX / (eta * pow_rl(X, eta)) *
           (1.0 + 1.0 / (eta * lX) + euler_gamma / lX +
            7.0 * eta / (12.0 * (1.0 + eta) * X * lX));
}

ArgumentConstants eval_argument_constants(double k, double eta, double H) {
    using namespace inputs;
    const double ln2 = std::log(2.0);
    ArgumentConstants a;
    const double z1 = zeta_real(1.0 + eta);
    const double z2 = zeta_real(2.0 + 2.0 * eta);
    a.b5 = z1 * z1 * z1 * z1 / (z2 * z2) + 2.0 * z1 * z1 / z2;
    a.b6_at_1e9 = eval_b6(1e9, eta);
    const double one_minus_b6sq = 1.0 - a.b6_at_1e9 * a.b6_at_1e9;
    if (!(one_minus_b6sq > 0.0))
        throw std::domain_error("eval_argument_constants: 1 - b6(1e9,eta)^2 <= 0");
    a.b7 = (1.0 + 2.0 / (3.006 * z1 * pow_rl(k * H0, 1.0 + eta))) *
           (3.006 * z1) * (3.006 * z1);
    a.b8 = std::sqrt((2.0 + eta) * (2.0 + eta) / (H * H) +
                     ((1.0 + 2.0 * eta) / H + 1.0) * ((1.0 + 2.0 * eta) / H + 1.0));
    a.b9 = kPi * std::log(a.b7) / ln2 + kPi * std::log(a.b5) / ln2 -
           2.0 * kPi * std::log(one_minus_b6sq) / ln2 + kPi +
           2.0 * (1.0 + 2.0 * eta) / ln2 * std::log(a.b8 / (2.0 * kPi));
    a.C7 = (2.0 * (1.0 + 2.0 * eta) + 2.0 * kPi * (1.0 + eta)) / ln2 + a.b9 / log_H0();
    return a;
}

LogConstants eval_log_constants(double k, double mu) {
    using namespace inputs;
    const double X = k * H0;
    const double lX = std::log(X);
    const double u = eval_b6(X, mu - 1.0);
    if (!(u < 1.0))
        throw std::domain_error("eval_log_constants: b6(kH0, mu-1) >= 1");
    LogConstants c;
    c.b10 = -std::log(1.0 - u * u) / (u * u);
    auto b11 = [lX](double tau) {
        const double t = tau - 1.0;
        return 1.0 + 3.0 / (t * lX) + 6.0 / (t * t * lX * lX) +
               6.0 / (t * t * t * lX * lX * lX);
    };
    c.b11_2mu = b11(2.0 * mu);
    c.b11_2mu_minus_1 = b11(2.0 * mu - 1.0);
    c.C8 = c.b10 * lX * lX / pow_rl(X, 2.0 * mu - 2.0) *
           (4.0 * mu * c.b11_2mu / (k * (2.0 * mu - 1.0)) +
            2.0 * kPi * m0() * (2.0 * mu - 1.0) * c.b11_2mu_minus_1 / (mu - 1.0));
    return c;
}

std::pair<double, double> eval_script_constants(const ParameterSet& p) {
    using namespace inputs;
    const double lkH0 = std::log(p.k * H0);
    const double U = eval_U(p.alpha, p.k, H0);
    if (!(U > 1.0))
        throw std::invalid_argument("eval_script_constants: U(alpha,k,H0) <= 1");
    const double V = eval_K_and_V(p.alpha, p.k, p.delta, H0).second;

    const double b12 = 1.0 / (2.0 * (1.0 - 1.0 / p.H) * (1.0 - 1.0 / p.H));
    const double two_sig = 2.0 * p.sigma - 1.0;
    const double e1 = (8.0 / 3.0) * p.delta * two_sig * eval_M(p.k, p.delta) +
                      4.0 * p.delta * two_sig * loglog_H0() / (lkH0 + 2.0 * p.delta);
    const double eU = 2.0 * (1.0 - p.sigma) + 2.0 * p.d / log_H0() +
                      2.0 * p.delta * two_sig / (lkH0 + 2.0 * p.delta);
    const double e2 = 2.0 * p.d * (2.0 * loglog_H0() - std::log(lkH0)) / log_H0() +
                      8.0 * p.d / 3.0 + 2.0 * p.alpha;
    const double scriptC1 = b12 * std::exp(e1) * pow_rl(U, eU) * pow_rl(V, two_sig) *
                            std::exp(e2);

    const ArgumentConstants a = eval_argument_constants(p.k, p.eta, p.H);
    const LogConstants l = eval_log_constants(p.k, p.mu);
    const double scriptC2 = a.C7 * (p.mu - p.sigma + p.d / log_H0()) + l.C8;
    return {scriptC1, scriptC2};
}

ConstantBundle eval_constant_bundle(const ParameterSet& p) {
    using namespace inputs;
    ConstantBundle b{};
    const MeanValueConstants mv = eval_mean_value_constants(p.k);
    b.C1 = mv.C1;
    b.C2 = mv.C2;
    b.a3 = mv.a3;
    b.C3 = mv.C3;
    b.C4 = mv.C4;
    const auto [C5, C6] = eval_tail_constants(p.k, p.delta);
    b.C5 = C5;
    b.C6 = C6;
    const ArgumentConstants a = eval_argument_constants(p.k, p.eta, p.H);
    b.b5 = a.b5;
    b.b6_at_1e9 = a.b6_at_1e9;
    b.b7 = a.b7;
    b.b8 = a.b8;
    b.b9 = a.b9;
    b.C7 = a.C7;
    const LogConstants l = eval_log_constants(p.k, p.mu);
    b.b6_at_kH0_mu = eval_b6(p.k * H0, p.mu - 1.0);
    b.b10 = l.b10;
    b.b11_2mu = l.b11_2mu;
    b.b11_2mu_minus_1 = l.b11_2mu_minus_1;
    b.C8 = l.C8;
    b.b12 = 1.0 / (2.0 * (1.0 - 1.0 / p.H) * (1.0 - 1.0 / p.H));
    b.M_k_delta = eval_M(p.k, p.delta);
    b.omega1_half = eval_omega(1, 0.5, p.T, p.alpha, p.H);
    b.omega2_sigma = eval_omega(2, p.sigma, p.T, p.alpha, p.H);
    b.J = eval_J(p.k, H0, p.alpha);
    const auto [K, V] = eval_K_and_V(p.alpha, p.k, p.delta, H0);
    b.K = K;
    b.V = V;
    b.U = eval_U(p.alpha, p.k, H0);
    const auto [c1, c2] = eval_script_constants(p);
    b.scriptC1 = c1;
    b.scriptC2 = c2;
    return b;
}

std::string to_key_value(const ConstantBundle& b) {
    std::ostringstream os;
    os.precision(17);
    auto put = [&os](const char* name, double v) { os << name << " = " << v << "\n"; };
    put("C1", b.C1);
    put("C2", b.C2);
    put("C3", b.C3);
    put("C4", b.C4);
    put("C5", b.C5);
    put("C6", b.C6);
    put("C7", b.C7);
    put("C8", b.C8);
    put("a3", b.a3);
    put("b5", b.b5);
    put("b6_at_1e9", b.b6_at_1e9);
    put("b6_at_kH0_mu", b.b6_at_kH0_mu);
    put("b7", b.b7);
    put("b8", b.b8);
    put("b9", b.b9);
    put("b10", b.b10);
    put("b11_2mu", b.b11_2mu);
    put("b11_2mu_minus_1", b.b11_2mu_minus_1);
    put("b12", b.b12);
    put("M_k_delta", b.M_k_delta);
    put("omega1_half", b.omega1_half);
    put("omega2_sigma", b.omega2_sigma);
    put("J", b.J);
    put("K", b.K);
    put("U", b.U);
    put("V", b.V);
    put("scriptC1", b.scriptC1);
    put("scriptC2", b.scriptC2);
    return os.str();
}

}  // namespace zdb
