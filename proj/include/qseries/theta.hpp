#pragma once

#include <cstddef>
#include <span>
#include <string>

#include "qseries/series.hpp"

namespace qseries {

/// +q^r or -q^r.
struct SignedMonomial {
    bool negative = false;
    std::size_t exponent = 0;

    static constexpr SignedMonomial plus(std::size_t e) { return {false, e}; }
    static constexpr SignedMonomial minus(std::size_t e) { return {true, e}; }

    constexpr int sign() const noexcept { return negative ? -1 : 1; }
    friend bool operator==(const SignedMonomial &, const SignedMonomial &) = default;
};

/// "q^4", "-q", "q^0"
std::string to_string(const SignedMonomial &m);

/// (arg; q^modulus)_inf = prod_{n>=0} (1 - arg * q^{n*modulus}).
struct PochhammerFactor {
    SignedMonomial arg;
    std::size_t modulus = 1;
};

/// Expansion of a single q-Pochhammer symbol. Throws ZeroProduct for (q^0;q^m)
/// and InvalidParameters for modulus 0.
TruncatedSeries pochhammer(const PochhammerFactor &f, std::size_t order);

/// Multiplies `coeffs` in place by prod f^power over the given factors.
/// A negative power divides instead. Cost is linear in the order per
/// binomial, which is why product-heavy expressions are evaluated this way
/// rather than by series multiplication.
void apply_pochhammer(std::vector<Integer> &coeffs, std::span<const SignedMonomial> args, std::size_t modulus,
                      long power);

/// Ramanujan's f(a,b) = sum_{n in Z} a^{n(n+1)/2} b^{n(n-1)/2}, summed directly.
/// Requires exponent(a)+exponent(b) >= 1 (InvalidThetaArgument otherwise).
/// A zero exponent with either sign is allowed, which covers f(1,a).
TruncatedSeries theta_f(const SignedMonomial &a, const SignedMonomial &b, std::size_t order);

/// f(a,b) through the Jacobi triple product (-a,-b,ab;ab)_inf, built factor
/// by factor. Used as an independent route to theta_f.
TruncatedSeries jtp_product(const SignedMonomial &a, const SignedMonomial &b, std::size_t order);

/// phi(q^k) = sum_{n in Z} q^{k n^2}
TruncatedSeries phi(std::size_t k, std::size_t order);
/// psi(q^k) = sum_{n>=0} q^{k n(n+1)/2}
TruncatedSeries psi(std::size_t k, std::size_t order);

/// sum_{n in Z} q^{A n^2 + B n}. Needs A >= 1 and |B| < 2A (InvalidParameters),
/// and no negative exponent (NegativeExponent, possible when |B| > A).
TruncatedSeries bsum(long A, long B, std::size_t order);

} // namespace qseries
