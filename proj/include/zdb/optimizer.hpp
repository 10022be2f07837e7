#pragma once

#include <utility>

#include "zdb/density_bounds.hpp"

// Deterministic search over the valid parameter region: minimize
// A = scriptC1/(2 pi d) at fixed sigma (table-1 mode) or the log-form bound
// at T = H0 (table-2 mode).

namespace zdb {

enum class Objective { min_A, min_bound_at_H0 };

struct SearchConfig {
    Objective objective = Objective::min_A;
    int grid_k = 8;        // per-parameter grid resolutions (>= 2)
    int grid_alpha = 12;
    int grid_delta = 10;
    int grid_d = 14;
    int refine_rounds = 5;
    long max_evals = 100000;  // objective evaluation budget
    // Search box; d is additionally capped by (sigma - 1/2) log H0.
    double k_lo = 0.0, k_hi = 1.0;       // 0 -> k_min()
    double alpha_lo = 0.02, alpha_hi = 0.45;
    double delta_lo = 0.05, delta_hi = 2.0;
    double d_lo = 0.02, d_hi = 0.0;      // 0 -> d_max(sigma)
    bool search_H = false;  // default pins H (H0-1 for min_A, H0-1e-6 otherwise)
};

class no_valid_point_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// eta minimizing C7(eta,H) over (eta0, 1/2), then mu minimizing
// mu C7(eta,H) + C8(k,mu) over [1+eta0, 1+eta], both by golden section to
// 1e-6.  Sub-intervals where the constants are undefined (b6 >= 1) are
// excluded by the bracketing.
std::pair<double, double> minimize_eta_mu(double k, double H);

struct MinimizeResult {
    ParameterSet params;
    BoundResult bound;
    double objective_value = 0.0;
    long evals = 0;
};

// Coarse grid over (k, alpha, delta, d) with the (eta, mu) pre-minimization
// per k, then refine_rounds of box shrinking.  Deterministic: fixed grids,
// ties broken by lexicographically smallest (k, alpha, delta, d).
MinimizeResult minimize(double sigma, const SearchConfig& cfg = {});

}  // namespace zdb
