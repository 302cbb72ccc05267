#include "qseries/series.hpp"

#include <algorithm>
#include <stdexcept>

#include "qseries/errors.hpp"

namespace qseries {

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

TruncatedSeries::TruncatedSeries(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty()) {
        throw std::invalid_argument("a truncated series needs at least one coefficient");
    }
}

TruncatedSeries::TruncatedSeries(std::initializer_list<long> coeffs)
    : TruncatedSeries(std::vector<Integer>(coeffs.begin(), coeffs.end()))
{
}

TruncatedSeries TruncatedSeries::one(std::size_t order)
{
    return monomial(1, 0, order);
}

TruncatedSeries TruncatedSeries::monomial(const Integer &c, std::size_t e, std::size_t order)
{
    TruncatedSeries s(order);
    if (e <= order) {
        s.coeffs_[e] = c;
    }
    return s;
}

bool TruncatedSeries::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer &c) { return sgn(c) == 0; });
}

TruncatedSeries TruncatedSeries::truncate(std::size_t order) const
{
    if (order > this->order()) {
        throw std::invalid_argument("cannot truncate a series to a higher order");
    }
    return TruncatedSeries(std::vector<Integer>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(order + 1)));
}

TruncatedSeries operator+(const TruncatedSeries &a, const TruncatedSeries &b)
{
    const auto n = std::min(a.order(), b.order());
    std::vector<Integer> c(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        c[i] = a[i] + b[i];
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries operator-(const TruncatedSeries &a, const TruncatedSeries &b)
{
    const auto n = std::min(a.order(), b.order());
    std::vector<Integer> c(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        c[i] = a[i] - b[i];
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries operator-(const TruncatedSeries &a)
{
    std::vector<Integer> c(a.coeffs().begin(), a.coeffs().end());
    for (auto &x : c) {
        x = -x;
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries operator*(const Integer &k, const TruncatedSeries &a)
{
    std::vector<Integer> c(a.coeffs().begin(), a.coeffs().end());
    for (auto &x : c) {
        x *= k;
    }
    return TruncatedSeries(std::move(c));
}

// Schoolbook convolution. Theta-function operands are very sparse, so rows
// belonging to zero coefficients are skipped.
TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b)
{
    const auto n = std::min(a.order(), b.order());
    const auto lhs = a.coeffs();
    const auto rhs = b.coeffs();
    // Put the sparser operand on the outside.
    const auto nonzeros = [n](std::span<const Integer> s) {
        return std::count_if(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(n + 1),
                             [](const Integer &x) { return sgn(x) != 0; });
    };
    const bool swap = nonzeros(rhs) < nonzeros(lhs);
    const auto outer = swap ? rhs : lhs;
    const auto inner = swap ? lhs : rhs;

    std::vector<Integer> c(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        if (sgn(outer[i]) == 0) {
            continue;
        }
        const auto *x = outer[i].get_mpz_t();
        for (std::size_t j = 0; i + j <= n; ++j) {
            mpz_addmul(c[i + j].get_mpz_t(), x, inner[j].get_mpz_t());
        }
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries invert(const TruncatedSeries &a)
{
    const Integer &a0 = a[0];
    if (abs(a0) != 1) {
        throw NonUnitConstantTerm("cannot invert a series whose constant term is " + a0.get_str());
    }
    const auto n = a.order();
    const auto ac = a.coeffs();
    std::vector<Integer> b(n + 1);
    b[0] = a0;
    Integer acc;
    for (std::size_t m = 1; m <= n; ++m) {
        acc = 0;
        for (std::size_t i = 1; i <= m; ++i) {
            if (sgn(ac[i]) != 0) {
                mpz_addmul(acc.get_mpz_t(), ac[i].get_mpz_t(), b[m - i].get_mpz_t());
            }
        }
        // 1/a0 == a0 for a unit
        b[m] = -a0 * acc;
    }
    return TruncatedSeries(std::move(b));
}

TruncatedSeries divide(const TruncatedSeries &a, const TruncatedSeries &b)
{
    if (sgn(b[0]) == 0) {
        throw NegativeExponent("division by a series with zero constant term needs negative powers of q");
    }
    return a * invert(b);
}

TruncatedSeries pow(const TruncatedSeries &a, long exponent)
{
    TruncatedSeries base = exponent < 0 ? invert(a) : a;
    unsigned long e = exponent < 0 ? 0UL - static_cast<unsigned long>(exponent) : static_cast<unsigned long>(exponent);
    TruncatedSeries result = TruncatedSeries::one(a.order());
    while (e != 0) {
        if (e & 1UL) {
            result = result * base;
        }
        e >>= 1;
        if (e != 0) {
            base = base * base;
        }
    }
    return result;
}

TruncatedSeries substitute_power(const TruncatedSeries &a, std::size_t k)
{
    if (k == 0) {
        throw std::invalid_argument("substitute_power needs k >= 1");
    }
    const auto n = a.order();
    std::vector<Integer> c(n + 1);
    for (std::size_t i = 0; i * k <= n; ++i) {
        c[i * k] = a[i];
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries shift(const TruncatedSeries &a, std::size_t e)
{
    const auto n = a.order();
    std::vector<Integer> c(n + 1);
    for (std::size_t i = e; i <= n; ++i) {
        c[i] = a[i - e];
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries dissect(const TruncatedSeries &a, std::size_t k, std::size_t l)
{
    if (k == 0 || l >= k) {
        throw std::invalid_argument("dissect needs k >= 1 and 0 <= l < k");
    }
    if (l > a.order()) {
        return TruncatedSeries(0);
    }
    const auto m = (a.order() - l) / k;
    std::vector<Integer> c(m + 1);
    for (std::size_t i = 0; i <= m; ++i) {
        c[i] = a[k * i + l];
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries progression(const TruncatedSeries &a, std::size_t k, std::size_t l)
{
    if (k == 0 || l >= k) {
        throw std::invalid_argument("progression needs k >= 1 and 0 <= l < k");
    }
    std::vector<Integer> c(a.order() + 1);
    for (std::size_t i = l; i <= a.order(); i += k) {
        c[i] = a[i];
    }
    return TruncatedSeries(std::move(c));
}

std::ostream &operator<<(std::ostream &os, const TruncatedSeries &s)
{
    os << '[';
    for (std::size_t i = 0; i <= s.order(); ++i) {
        os << (i ? "," : "") << s[i];
    }
    return os << "] + O(q^" << s.order() + 1 << ')';
}

namespace detail {

void multiply_binomial(std::vector<Integer> &c, int sign, std::size_t e)
{
    if (e == 0) {
        const long k = 1 - sign;
        for (auto &x : c) {
            x *= k;
        }
        return;
    }
    for (std::size_t i = c.size(); i-- > e;) {
        if (sign > 0) {
            c[i] -= c[i - e];
        } else {
            c[i] += c[i - e];
        }
    }
}

void divide_binomial(std::vector<Integer> &c, int sign, std::size_t e)
{
    // 1/(1 - s q^e) = sum s^j q^{je}; forward recurrence b_i = a_i + s b_{i-e}
    for (std::size_t i = e; i < c.size(); ++i) {
        if (sign > 0) {
            c[i] += c[i - e];
        } else {
            c[i] -= c[i - e];
        }
    }
}

} // namespace detail

} // namespace qseries
