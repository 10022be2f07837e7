#include "zdb/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <vector>

namespace zdb {

namespace {

constexpr double kGolden = 0.61803398874989485;
constexpr double kTwoPi = 6.28318530717958647693;

// Golden-section minimum of f on [lo, hi] to absolute tolerance tol.
// f may throw std::domain_error near the ends; such points count as +inf.
template <class F>
double golden_min(F f, double lo, double hi, double tol) {
    auto safe = [&f](double x) {
        try {
            return f(x);
        } catch (const std::domain_error&) {
            return std::numeric_limits<double>::infinity();
        }
    };
    double a = lo, b = hi;
    double x1 = b - kGolden * (b - a);
    double x2 = a + kGolden * (b - a);
    double f1 = safe(x1), f2 = safe(x2);
    while (b - a > tol) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kGolden * (b - a);
            f1 = safe(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kGolden * (b - a);
            f2 = safe(x2);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

std::pair<double, double> minimize_eta_mu(double k, double H) {
    using namespace inputs;
    if (!(H >= 1002.0 && H <= H0))
        throw std::domain_error("minimize_eta_mu: H outside [1002, H0]");
    const double e0 = eta0();
    const double eta = golden_min(
        [k, H](double e) { return eval_argument_constants(k, e, H).C7; },
        e0 + 1e-9, 0.5 - 1e-9, 1e-6);
    const double C7 = eval_argument_constants(k, eta, H).C7;
    const double mu = golden_min(
        [k, C7](double m) { return m * C7 + eval_log_constants(k, m).C8; },
        1.0 + e0, 1.0 + eta, 1e-6);
    return {eta, mu};
}

namespace {

struct Candidate {
    double k, alpha, delta, d;
    bool operator<(const Candidate& o) const {
        if (k != o.k) return k < o.k;
        if (alpha != o.alpha) return alpha < o.alpha;
        if (delta != o.delta) return delta < o.delta;
        return d < o.d;
    }
};

std::vector<double> grid(double lo, double hi, int n, bool log_spaced) {
    std::vector<double> g(n);
    if (n == 1) {
        g[0] = 0.5 * (lo + hi);
        return g;
    }
    for (int i = 0; i < n; ++i) {
        const double t = double(i) / (n - 1);
        g[i] = log_spaced ? lo * std::exp(t * std::log(hi / lo))
                          : lo + t * (hi - lo);
    }
    return g;
}

struct EtaMuCache {
    double k_key = -1.0;
    double eta = 0.0, mu = 0.0;
};

}  // namespace

MinimizeResult minimize(double sigma, const SearchConfig& cfg) {
    using namespace inputs;
    if (!(sigma > 0.5 && sigma < 1.0))
        throw std::domain_error("minimize: sigma must lie in (1/2, 1)");
    if (cfg.grid_k < 2 || cfg.grid_alpha < 2 || cfg.grid_delta < 2 || cfg.grid_d < 2)
        throw std::invalid_argument("minimize: grid resolutions must be >= 2");

    const double H = cfg.objective == Objective::min_A ? H0 - 1.0 : H0 - 1e-6;
    const double d_cap = (sigma - 0.5) * log_H0() * (1.0 - 1e-9);
    const double k_lo = cfg.k_lo > 0.0 ? cfg.k_lo : k_min();
    const double d_hi0 = std::min(cfg.d_hi > 0.0 ? cfg.d_hi : d_cap, d_cap);
    const double d_lo0 = std::min(cfg.d_lo, 0.5 * d_hi0);

    // (eta, mu) decouple from (alpha, delta, d); memoize per k.
    std::map<double, std::pair<double, double>> eta_mu;
    auto eta_mu_for = [&](double k) {
        auto it = eta_mu.find(k);
        if (it == eta_mu.end()) it = eta_mu.emplace(k, minimize_eta_mu(k, H)).first;
        return it->second;
    };

    long evals = 0;
    auto objective = [&](const Candidate& c) {
        ++evals;
        ParameterSet p;
        p.sigma = sigma;
        p.T = H0;
        p.k = c.k;
        p.alpha = c.alpha;
        p.delta = c.delta;
        p.d = c.d;
        p.H = H;
        const auto [eta, mu] = eta_mu_for(c.k);
        p.eta = eta;
        p.mu = mu;
        if (!validate_params(p).empty())
            return std::numeric_limits<double>::infinity();
        const auto [c1, c2] = eval_script_constants(p);
        if (cfg.objective == Objective::min_A) return c1 / (kTwoPi * p.d);
        return bound_log_form(p).value;
    };

    const double inf = std::numeric_limits<double>::infinity();
    double best_val = inf;
    Candidate best{};
    bool have_best = false;

    // One grid sweep over the current box; lexicographic tie-breaking comes
    // from the loop order plus the strict comparison.
    auto sweep = [&](const std::vector<double>& ks, const std::vector<double>& as,
                     const std::vector<double>& ds, const std::vector<double>& dds) {
        for (double k : ks)
            for (double a : as)
                for (double del : ds)
                    for (double dd : dds) {
                        if (evals >= cfg.max_evals) return;
                        const Candidate c{k, a, del, dd};
                        const double val = objective(c);
                        if (val < best_val ||
                            (val == best_val && have_best && c < best)) {
                            best_val = val;
                            best = c;
                            have_best = true;
                        }
                    }
    };

    sweep(grid(k_lo, cfg.k_hi, cfg.grid_k, false),
          grid(cfg.alpha_lo, cfg.alpha_hi, cfg.grid_alpha, true),
          grid(cfg.delta_lo, cfg.delta_hi, cfg.grid_delta, true),
          grid(d_lo0, d_hi0, cfg.grid_d, true));
    if (!have_best || best_val == inf)
        throw no_valid_point_error("minimize: no valid point on the initial grid");

    auto shrink = [](double center, double lo, double hi, double span,
                     int n) {
        const double a = std::max(lo, center - span);
        const double b = std::min(hi, center + span);
        return grid(a, b, n, false);
    };

    double span_k = (cfg.k_hi - k_lo) / (cfg.grid_k - 1);
    double span_a = (cfg.alpha_hi - cfg.alpha_lo) / (cfg.grid_alpha - 1);
    double span_de = (cfg.delta_hi - cfg.delta_lo) / (cfg.grid_delta - 1);
    double span_d = (d_hi0 - d_lo0) / (cfg.grid_d - 1);
    for (int round = 0; round < cfg.refine_rounds && evals < cfg.max_evals; ++round) {
        sweep(shrink(best.k, k_lo, cfg.k_hi, span_k, cfg.grid_k),
              shrink(best.alpha, cfg.alpha_lo, cfg.alpha_hi, span_a, cfg.grid_alpha),
              shrink(best.delta, cfg.delta_lo, cfg.delta_hi, span_de, cfg.grid_delta),
              shrink(best.d, d_lo0, d_hi0, span_d, cfg.grid_d));
        const double zoom = 2.4;
        span_k /= zoom;
        span_a /= zoom;
        span_de /= zoom;
        span_d /= zoom;
    }

    MinimizeResult res;
    res.params.sigma = sigma;
    res.params.T = H0;
    res.params.k = best.k;
    res.params.alpha = best.alpha;
    res.params.delta = best.delta;
    res.params.d = best.d;
    res.params.H = H;
    const auto [eta, mu] = eta_mu_for(best.k);
    res.params.eta = eta;
    res.params.mu = mu;
    res.bound = cfg.objective == Objective::min_A ? bound_power_form(res.params)
                                                  : bound_log_form(res.params);
    res.objective_value = best_val;
    res.evals = evals;
    return res;
}

}  // namespace zdb
