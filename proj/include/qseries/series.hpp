#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace qseries {

using Integer = mpz_class;

/// A formal power series sum_{i=0}^{N} c_i q^i with exact integer
/// coefficients, truncated at the inclusive order N.
///
/// Values are immutable once built: every operation returns a new series.
/// Binary operations truncate to the smaller of the two orders, so a result
/// never claims more precision than its least precise operand.
class TruncatedSeries {
public:
    /// The zero series of the given order.
    explicit TruncatedSeries(std::size_t order);
    /// Takes ownership of the coefficients; order = coeffs.size() - 1.
    /// Throws std::invalid_argument on an empty vector.
    explicit TruncatedSeries(std::vector<Integer> coeffs);
    TruncatedSeries(std::initializer_list<long> coeffs);

    static TruncatedSeries zero(std::size_t order) { return TruncatedSeries(order); }
    static TruncatedSeries one(std::size_t order);
    /// c * q^e, which is the zero series when e > order.
    static TruncatedSeries monomial(const Integer &c, std::size_t e, std::size_t order);

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    std::span<const Integer> coeffs() const noexcept { return coeffs_; }
    const Integer &operator[](std::size_t i) const { return coeffs_.at(i); }

    bool is_zero() const;
    /// Same coefficients, cut down to a lower order. Requires order <= this->order().
    TruncatedSeries truncate(std::size_t order) const;

    friend bool operator==(const TruncatedSeries &, const TruncatedSeries &) = default;

private:
    std::vector<Integer> coeffs_;
};

TruncatedSeries operator+(const TruncatedSeries &a, const TruncatedSeries &b);
TruncatedSeries operator-(const TruncatedSeries &a, const TruncatedSeries &b);
TruncatedSeries operator-(const TruncatedSeries &a);
TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b);
TruncatedSeries operator*(const Integer &c, const TruncatedSeries &a);

inline TruncatedSeries add(const TruncatedSeries &a, const TruncatedSeries &b) { return a + b; }
inline TruncatedSeries mul(const TruncatedSeries &a, const TruncatedSeries &b) { return a * b; }

/// Multiplicative inverse. The constant term must be +1 or -1, otherwise
/// NonUnitConstantTerm is thrown.
TruncatedSeries invert(const TruncatedSeries &a);

/// a / b = a * invert(b); a zero constant term in b throws NegativeExponent.
TruncatedSeries divide(const TruncatedSeries &a, const TruncatedSeries &b);

/// Integer power; negative exponents go through invert.
TruncatedSeries pow(const TruncatedSeries &a, long exponent);

/// a(q^k), keeping a's order. k must be >= 1.
TruncatedSeries substitute_power(const TruncatedSeries &a, std::size_t k);

/// q^e * a(q), keeping a's order.
TruncatedSeries shift(const TruncatedSeries &a, std::size_t e);

/// Compressed arithmetic-progression extraction: result(n) = a(k n + l),
/// with order floor((a.order - l) / k). Requires k >= 1 and l < k; when
/// l > a.order the result is the order-0 zero series.
TruncatedSeries dissect(const TruncatedSeries &a, std::size_t k, std::size_t l);

/// The uncompressed extraction sum a(kn+l) q^(kn+l), i.e.
/// shift(substitute_power(dissect(a,k,l),k),l).
TruncatedSeries progression(const TruncatedSeries &a, std::size_t k, std::size_t l);

std::ostream &operator<<(std::ostream &os, const TruncatedSeries &s);

namespace detail {

// In-place kernels shared by the product evaluators. `c` holds coefficients
// 0..N and is modified directly.

// c <- c * (1 - sign q^e)
void multiply_binomial(std::vector<Integer> &c, int sign, std::size_t e);
// c <- c / (1 - sign q^e), e >= 1
void divide_binomial(std::vector<Integer> &c, int sign, std::size_t e);

} // namespace detail

} // namespace qseries
