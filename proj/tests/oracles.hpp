#pragma once

// Slow reference implementations that share no code with the library. Tests
// compare the library against these, never the other way round.

#include <cstddef>
#include <functional>
#include <random>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Coeffs = std::vector<mpz_class>;

inline Coeffs unit(std::size_t order)
{
    Coeffs c(order + 1);
    c[0] = 1;
    return c;
}

// Plain O(N^2) convolution, truncated to the shorter input.
inline Coeffs convolve(const Coeffs &a, const Coeffs &b)
{
    const auto n = std::min(a.size(), b.size());
    Coeffs c(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; i + j < n; ++j) {
            c[i + j] += a[i] * b[j];
        }
    }
    return c;
}

// prod_{n>=0} (1 - sign q^{r + n m}) by repeated full convolution.
inline Coeffs pochhammer(int sign, std::size_t r, std::size_t m, std::size_t order)
{
    Coeffs acc = unit(order);
    for (std::size_t e = r; e <= order; e += m) {
        Coeffs factor = unit(order);
        factor[e] -= sign;
        acc = convolve(acc, factor);
    }
    return acc;
}

// 1/(1-q^r)^... via the geometric series, again by convolution.
inline Coeffs reciprocal_binomial(std::size_t e, std::size_t order)
{
    Coeffs g(order + 1);
    for (std::size_t i = 0; i <= order; i += e) {
        g[i] = 1;
    }
    return g;
}

// Restricted partitions by explicit recursion over part types: counts the
// multisets of (size, flavour) pairs summing to n where `allowed(size)` gives
// the number of flavours.
inline mpz_class enumerate_partitions(const std::function<std::size_t(std::size_t)> &flavours, std::size_t n)
{
    std::vector<std::size_t> types;
    for (std::size_t p = 1; p <= n; ++p) {
        for (std::size_t f = 0; f < flavours(p); ++f) {
            types.push_back(p);
        }
    }
    std::function<mpz_class(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t rest) -> mpz_class {
        if (rest == 0) {
            return 1;
        }
        if (i == types.size()) {
            return 0;
        }
        mpz_class total = 0;
        for (std::size_t used = 0; used * types[i] <= rest; ++used) {
            total += rec(i + 1, rest - used * types[i]);
        }
        return total;
    };
    return rec(0, n);
}

inline Coeffs random_coeffs(std::mt19937_64 &rng, std::size_t order, long bound)
{
    std::uniform_int_distribution<long> d(-bound, bound);
    Coeffs c(order + 1);
    for (auto &x : c) {
        x = d(rng);
    }
    return c;
}

} // namespace oracle
