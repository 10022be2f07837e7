#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

// Sieved arithmetic data backing the lemma oracles: mu(n), d(n), and the
// mollifier tail coefficients lambda_X(n) on a window.

namespace zdb {

class budget_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// mu(n) for 0 <= n <= n_max by linear sieve (index 0 unused).
std::vector<std::int8_t> mobius_sieve(std::int64_t n_max);

// d(n) for 0 <= n <= n_max by linear sieve.
std::vector<std::int32_t> divisor_count_sieve(std::int64_t n_max);

// lambda_X(n) = sum_{d|n, d<=X} mu(d) for n > X, and 0 for n <= X
// (the n = 1 Dirichlet coefficient of zeta*M_X - 1 cancels).
// Direct divisor enumeration; the per-n oracle.
std::int64_t lambda_by_divisors(std::int64_t n, std::int64_t X);

// lambda_X(n) for n in (lo, hi], accumulated divisor-by-divisor over d <= X.
// Entry i holds lambda_X(lo + 1 + i).
std::vector<std::int32_t> lambda_window(std::int64_t X, std::int64_t lo,
                                        std::int64_t hi);

struct ArithmeticTables {
    std::int64_t X = 0;
    std::vector<std::int8_t> mobius;           // n <= n_max
    std::vector<std::int32_t> divisor_counts;  // n <= n_max
    std::int64_t window_lo = 0, window_hi = 0; // lambda on (window_lo, window_hi]
    std::vector<std::int32_t> lambda;
};

// Caps: X <= 1e7, n_max <= 1e8.  The lambda window is (X, min(5X, n_max)].
ArithmeticTables build_tables(std::int64_t X, std::int64_t n_max);

}  // namespace zdb
