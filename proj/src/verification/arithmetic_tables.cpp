#include "zdb/verification/arithmetic_tables.hpp"

#include <algorithm>

namespace zdb {

std::vector<std::int8_t> mobius_sieve(std::int64_t n_max) {
    if (n_max < 1 || n_max > 100'000'000)
        throw budget_error("mobius_sieve: n_max outside [1, 1e8]");
    std::vector<std::int8_t> mu(n_max + 1, 0);
    std::vector<std::int32_t> primes;
    std::vector<std::uint8_t> composite(n_max + 1, 0);
    mu[1] = 1;
    for (std::int64_t i = 2; i <= n_max; ++i) {
        if (!composite[i]) {
            primes.push_back(int32_t(i));
            mu[i] = -1;
        }
        for (std::int32_t p : primes) {
            const std::int64_t ip = i * p;
            if (ip > n_max) break;
            composite[ip] = 1;
            if (i % p == 0) {
                mu[ip] = 0;  // square factor
                break;
            }
            mu[ip] = -mu[i];
        }
    }
    return mu;
}

std::vector<std::int32_t> divisor_count_sieve(std::int64_t n_max) {
    if (n_max < 1 || n_max > 100'000'000)
        throw budget_error("divisor_count_sieve: n_max outside [1, 1e8]");
    // d(n) via linear sieve, tracking the multiplicity of the least prime.
    std::vector<std::int32_t> d(n_max + 1, 0);
    std::vector<std::int32_t> lp_mult(n_max + 1, 0);
    std::vector<std::int32_t> primes;
    std::vector<std::uint8_t> composite(n_max + 1, 0);
    d[1] = 1;
    for (std::int64_t i = 2; i <= n_max; ++i) {
        if (!composite[i]) {
            primes.push_back(int32_t(i));
            d[i] = 2;
            lp_mult[i] = 1;
        }
        for (std::int32_t p : primes) {
            const std::int64_t ip = i * p;
            if (ip > n_max) break;
            composite[ip] = 1;
            if (i % p == 0) {
                lp_mult[ip] = lp_mult[i] + 1;
                d[ip] = d[i] / (lp_mult[i] + 1) * (lp_mult[i] + 2);
                break;
            }
            lp_mult[ip] = 1;
            d[ip] = d[i] * 2;
        }
    }
    return d;
}

std::int64_t lambda_by_divisors(std::int64_t n, std::int64_t X) {
    if (n < 1 || X < 1) throw std::invalid_argument("lambda_by_divisors: n, X >= 1");
    if (n <= X) return 0;
    // mu over divisors <= X, collecting both members of each divisor pair.
    auto mu_of = [](std::int64_t m) {
        int sign = 1;
        for (std::int64_t p = 2; p * p <= m; ++p) {
            if (m % p == 0) {
                m /= p;
                if (m % p == 0) return 0;
                sign = -sign;
            }
        }
        if (m > 1) sign = -sign;
        return sign;
    };
    std::int64_t sum = 0;
    for (std::int64_t a = 1; a * a <= n; ++a) {
        if (n % a != 0) continue;
        const std::int64_t b = n / a;
        if (a <= X) sum += mu_of(a);
        if (b != a && b <= X) sum += mu_of(b);
    }
    return sum;
}

std::vector<std::int32_t> lambda_window(std::int64_t X, std::int64_t lo,
                                        std::int64_t hi) {
    if (X < 1 || X > 10'000'000) throw budget_error("lambda_window: X outside [1, 1e7]");
    if (!(lo >= X && hi > lo && hi <= 100'000'000))
        throw budget_error("lambda_window: window outside (X, 1e8]");
    const auto mu = mobius_sieve(X);
    std::vector<std::int32_t> lam(hi - lo, 0);
    for (std::int64_t d = 1; d <= X; ++d) {
        if (mu[d] == 0) continue;
        for (std::int64_t m = (lo / d + 1) * d; m <= hi; m += d)
            lam[m - lo - 1] += mu[d];
    }
    return lam;
}

ArithmeticTables build_tables(std::int64_t X, std::int64_t n_max) {
    if (X < 1 || X > 10'000'000) throw budget_error("build_tables: X outside [1, 1e7]");
    if (n_max < X || n_max > 100'000'000)
        throw budget_error("build_tables: n_max outside [X, 1e8]");
    ArithmeticTables t;
    t.X = X;
    t.mobius = mobius_sieve(n_max);
    t.divisor_counts = divisor_count_sieve(n_max);
    t.window_lo = X;
    t.window_hi = std::min<std::int64_t>(5 * X, n_max);
    if (t.window_hi > t.window_lo)
        t.lambda = lambda_window(X, t.window_lo, t.window_hi);
    return t;
}

}  // namespace zdb
