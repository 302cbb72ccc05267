#include "qseries/theta.hpp"

#include <cstdint>
#include <cstdlib>

#include "qseries/errors.hpp"

namespace qseries {

std::string to_string(const SignedMonomial &m)
{
    std::string s = m.negative ? "-q" : "q";
    if (m.exponent != 1) {
        s += "^" + std::to_string(m.exponent);
    }
    return s;
}

void apply_pochhammer(std::vector<Integer> &coeffs, std::span<const SignedMonomial> args, std::size_t modulus,
                      long power)
{
    if (modulus == 0) {
        throw InvalidParameters("Pochhammer modulus must be positive");
    }
    const std::size_t order = coeffs.size() - 1;
    for (const auto &arg : args) {
        if (!arg.negative && arg.exponent == 0) {
            throw ZeroProduct("(q^0; q^m)_inf has the factor 1 - 1 = 0");
        }
        if (arg.exponent == 0 && power < 0) {
            // (-1; q^m)_inf has constant term 2
            throw NonUnitConstantTerm("(-q^0; q^m)_inf has constant term 2 and cannot be inverted");
        }
        // factor 1 - arg q^{nm}
        const int sign = arg.sign();
        for (std::size_t e = arg.exponent; e <= order; e += modulus) {
            for (long p = 0; p < std::labs(power); ++p) {
                if (power > 0) {
                    detail::multiply_binomial(coeffs, sign, e);
                } else {
                    detail::divide_binomial(coeffs, sign, e);
                }
            }
        }
    }
}

TruncatedSeries pochhammer(const PochhammerFactor &f, std::size_t order)
{
    std::vector<Integer> c(order + 1);
    c[0] = 1;
    apply_pochhammer(c, std::span(&f.arg, 1), f.modulus, 1);
    return TruncatedSeries(std::move(c));
}

namespace {

// Exponent of the n-th term of f(q^r, q^s): (r n(n+1) + s n(n-1)) / 2.
std::int64_t theta_exponent(std::int64_t r, std::int64_t s, std::int64_t n)
{
    return (r * n * (n + 1) + s * n * (n - 1)) / 2;
}

bool odd_triangular(std::int64_t t)
{
    return (t % 2) != 0;
}

} // namespace

TruncatedSeries theta_f(const SignedMonomial &a, const SignedMonomial &b, std::size_t order)
{
    if (a.exponent + b.exponent == 0) {
        throw InvalidThetaArgument("f(a,b) needs |ab| < 1, i.e. a positive total exponent");
    }
    const auto r = static_cast<std::int64_t>(a.exponent);
    const auto s = static_cast<std::int64_t>(b.exponent);
    const auto N = static_cast<std::int64_t>(order);
    std::vector<Integer> c(order + 1);

    // The exponent is an upward parabola in n with vertex in [-1/2, 1/2], so it
    // is non-decreasing walking away from 0 in either direction.
    const auto add_term = [&](std::int64_t n) {
        const auto e = theta_exponent(r, s, n);
        const bool neg = (a.negative && odd_triangular(n * (n + 1) / 2)) != (b.negative && odd_triangular(n * (n - 1) / 2));
        if (neg) {
            --c[static_cast<std::size_t>(e)];
        } else {
            ++c[static_cast<std::size_t>(e)];
        }
    };
    for (std::int64_t n = 0; theta_exponent(r, s, n) <= N; ++n) {
        add_term(n);
    }
    for (std::int64_t n = -1; theta_exponent(r, s, n) <= N; --n) {
        add_term(n);
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries jtp_product(const SignedMonomial &a, const SignedMonomial &b, std::size_t order)
{
    if (a.exponent + b.exponent == 0) {
        throw InvalidThetaArgument("f(a,b) needs |ab| < 1, i.e. a positive total exponent");
    }
    // base ab = (sa sb) q^m; the n-th factor of (x; ab)_inf is 1 - x (sa sb)^n q^{mn}
    const std::size_t m = a.exponent + b.exponent;
    const int base_sign = a.sign() * b.sign();
    std::vector<Integer> c(order + 1);
    c[0] = 1;
    const auto apply = [&](int x_sign, std::size_t x_exp) {
        int sign = x_sign;
        for (std::size_t e = x_exp; e <= order; e += m) {
            detail::multiply_binomial(c, sign, e);
            sign *= base_sign;
        }
    };
    apply(-a.sign(), a.exponent);   // (-a; ab)
    apply(-b.sign(), b.exponent);   // (-b; ab)
    apply(base_sign, m);            // (ab; ab)
    return TruncatedSeries(std::move(c));
}

TruncatedSeries phi(std::size_t k, std::size_t order)
{
    if (k == 0) {
        throw InvalidParameters("phi(q^k) needs k >= 1");
    }
    std::vector<Integer> c(order + 1);
    c[0] = 1;
    for (std::size_t n = 1; k * n * n <= order; ++n) {
        c[k * n * n] += 2;
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries psi(std::size_t k, std::size_t order)
{
    if (k == 0) {
        throw InvalidParameters("psi(q^k) needs k >= 1");
    }
    std::vector<Integer> c(order + 1);
    for (std::size_t n = 0; k * n * (n + 1) / 2 <= order; ++n) {
        c[k * n * (n + 1) / 2] += 1;
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries bsum(long A, long B, std::size_t order)
{
    if (A < 1 || std::labs(B) >= 2 * A) {
        throw InvalidParameters("bsum(A,B) needs A >= 1 and |B| < 2A, got (" + std::to_string(A) + "," +
                                std::to_string(B) + ")");
    }
    // With |B| < 2A only n = +-1 can give a negative exponent.
    if (A - std::labs(B) < 0) {
        throw NegativeExponent("bsum(" + std::to_string(A) + "," + std::to_string(B) +
                               ") has a term with negative exponent");
    }
    const auto N = static_cast<std::int64_t>(order);
    std::vector<Integer> c(order + 1);
    const auto exponent = [A, B](std::int64_t n) { return A * n * n + B * n; };
    for (std::int64_t n = 0; exponent(n) <= N; ++n) {
        ++c[static_cast<std::size_t>(exponent(n))];
    }
    for (std::int64_t n = -1; exponent(n) <= N; --n) {
        ++c[static_cast<std::size_t>(exponent(n))];
    }
    return TruncatedSeries(std::move(c));
}

} // namespace qseries
