#pragma once

/**
 * Small factorization toolkit: trial division with a Pollard-rho fallback,
 * plus divisor enumeration from a factorization.  The integers factored here
 * are curve discriminants and cleared-denominator polynomial coefficients,
 * whose prime factors are small in practice; rho is insurance for the odd
 * large cofactor.
 */

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "rrn/rational.hpp"

namespace rrn {

using Factorization = std::map<Integer, unsigned>;

namespace detail {

inline Integer pollard_rho(const Integer& n) {
    // n odd composite, not a prime power of interest; returns a nontrivial factor.
    for (unsigned c = 1;; ++c) {
        Integer x = 2, y = 2, d = 1;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            d = gcd(x > y ? x - y : y - x, n);
        }
        if (d != n)
            return d;
    }
}

inline void factor_into(Integer n, Factorization& out) {
    if (n <= 1)
        return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30)) {
        ++out[n];
        return;
    }
    Integer d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace detail

/// Factorization of |n|; n must be nonzero.  The sign is dropped.
inline Factorization factorize(Integer n) {
    if (n == 0)
        throw std::domain_error("factorize(0)");
    n = abs(n);
    Factorization f;
    for (long p : {2L, 3L, 5L}) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            ++f[Integer(p)];
            n /= p;
        }
    }
    // wheel over 7, 11, 13, ... up to 10^6, then rho for what remains
    for (long p = 7; p <= 1000000 && n > 1; p += 2) {
        if (p % 3 == 0 || p % 5 == 0)
            continue;
        if (Integer(p) * p > n) {
            ++f[n];
            return f;
        }
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            ++f[Integer(p)];
            n /= p;
        }
    }
    detail::factor_into(n, f);
    return f;
}

/// All positive divisors, sorted ascending.
inline std::vector<Integer> divisors(const Factorization& f) {
    std::vector<Integer> ds{1};
    for (const auto& [p, e] : f) {
        size_t m = ds.size();
        Integer pe = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pe *= p;
            for (size_t j = 0; j < m; ++j)
                ds.push_back(ds[j] * pe);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

inline std::vector<Integer> divisors(const Integer& n) {
    return divisors(factorize(n));
}

/// Positive square divisors of the factored value, returned via their roots:
/// every v with v^2 dividing the original number.
inline std::vector<Integer> square_divisor_roots(const Factorization& f) {
    Factorization half;
    for (const auto& [p, e] : f)
        if (e >= 2)
            half[p] = e / 2;
    return divisors(half);
}

}  // namespace rrn
