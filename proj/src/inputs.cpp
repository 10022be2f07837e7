#include "zdb/inputs.hpp"

#include <cmath>
#include <stdexcept>

#include "zdb/constants.hpp"

namespace zdb::inputs {

double m0() {
    static const double v = std::sqrt(1.0 + (2.0 / 3.0) * std::sqrt(6.0 / 5.0));
    return v;
}

double eta0() {
    // b6(1e9, .) decreases through 1 on (0.1, 0.5); bisect to 1e-8.
    static const double v = [] {
        double lo = 0.1, hi = 0.5;
        if (!(eval_b6(1e9, lo) > 1.0 && eval_b6(1e9, hi) < 1.0))
            throw std::logic_error("eta0: bracketing failed");
        while (hi - lo > 1e-8) {
            const double mid = 0.5 * (lo + hi);
            (eval_b6(1e9, mid) > 1.0 ? lo : hi) = mid;
        }
        const double root = 0.5 * (lo + hi);
        // Recomputed root is 0.2362115...; the published 0.23622 differs by
        // one unit in the fifth decimal, so accept agreement to within 1e-5.
        if (std::fabs(root - 0.23622) > 1e-5)
            throw std::logic_error("eta0: root does not match 0.23622 to ~5 decimals");
        return root;
    }();
    return v;
}

double log_H0() {
    static const double v = std::log(H0);
    return v;
}

double loglog_H0() {
    static const double v = std::log(std::log(H0));
    return v;
}

double delta_max() {
    static const double v = 0.5 * log_H0() * (loglog_H0() - 1.0);
    return v;
}

double k_min() { return 1e9 / H0; }

}  // namespace zdb::inputs
