#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qseries/series.hpp"
#include "qseries/theta.hpp"

namespace qseries {

class QExpr;

namespace ast {

struct IntegerLiteral {
    Integer value;
};
/// coefficient * q^exponent
struct Monomial {
    Integer coefficient{1};
    std::size_t exponent = 0;
};
/// (a1,...,am; q^modulus)_inf^power
struct Pochhammer {
    std::vector<SignedMonomial> args;
    std::size_t modulus = 1;
    long power = 1;
};
struct ThetaF {
    SignedMonomial a, b;
};
struct Phi {
    std::size_t k = 1;
};
struct Psi {
    std::size_t k = 1;
};
struct BSum {
    long A = 1;
    long B = 0;
};
struct Add;
struct Sub;
struct Mul;
struct Div;
struct Neg;
struct Pow;

} // namespace ast

/// Immutable expression tree; copies share structure.
class QExpr {
public:
    using Node = std::variant<ast::IntegerLiteral, ast::Monomial, ast::Pochhammer, ast::ThetaF, ast::Phi, ast::Psi,
                              ast::BSum, ast::Add, ast::Sub, ast::Mul, ast::Div, ast::Neg, ast::Pow>;

    /// The literal 0.
    QExpr();
    QExpr(ast::IntegerLiteral n);
    QExpr(ast::Monomial m);
    QExpr(ast::Pochhammer p);
    QExpr(ast::ThetaF t);
    QExpr(ast::Phi p);
    QExpr(ast::Psi p);
    QExpr(ast::BSum b);
    QExpr(ast::Add n);
    QExpr(ast::Sub n);
    QExpr(ast::Mul n);
    QExpr(ast::Div n);
    QExpr(ast::Neg n);
    QExpr(ast::Pow n);

    const Node &node() const noexcept;

    template <typename T>
    const T *as() const noexcept;

    /// Structural equality.
    friend bool operator==(const QExpr &a, const QExpr &b);

private:
    std::shared_ptr<const Node> node_;
};

namespace ast {

struct Add {
    QExpr lhs, rhs;
};
struct Sub {
    QExpr lhs, rhs;
};
struct Mul {
    QExpr lhs, rhs;
};
struct Div {
    QExpr lhs, rhs;
};
struct Neg {
    QExpr operand;
};
struct Pow {
    QExpr base;
    long exponent = 1;
};

} // namespace ast

inline const QExpr::Node &QExpr::node() const noexcept { return *node_; }

template <typename T>
const T *QExpr::as() const noexcept
{
    return std::get_if<T>(node_.get());
}

// Builders, mostly for code that assembles expressions programmatically.
QExpr operator+(QExpr a, QExpr b);
QExpr operator-(QExpr a, QExpr b);
QExpr operator*(QExpr a, QExpr b);
QExpr operator/(QExpr a, QExpr b);
QExpr operator-(QExpr a);
QExpr power(QExpr base, long exponent);
QExpr integer(long value);
QExpr q_power(std::size_t exponent);

/// Parses the expression grammar:
///
///   expr   := term (("+"|"-") term)*
///   term   := factor (("*"|"/") factor)*
///   factor := "-" factor | atom ("^" int)?
///   atom   := int | monomial | poch | theta | "phi(" monomial ")"
///           | "psi(" monomial ")" | "bsum(" int "," int ")" | "(" expr ")"
///   poch   := "(" smono ("," smono)* ";" monomial ")_inf"
///   theta  := "f(" smono "," smono ")"
///   smono  := "-"? monomial
///   monomial := "q" ("^" uint)?
///
/// Whitespace is ignored. Throws SyntaxError or InvalidFactor.
QExpr parse(std::string_view text);

/// Renders back to the grammar; parse(render(e)) == e for parsed trees.
std::string render(const QExpr &e);

/// Lowers an expression to a series truncated at `order`.
///
/// Products are flattened first; Pochhammer factors (with any integer power,
/// including those sitting in a denominator) are applied in place one
/// binomial at a time, monomials become shifts and integers scalars. Only
/// what is left goes through full series multiplication and inversion.
TruncatedSeries evaluate(const QExpr &e, std::size_t order);

/// (-q^r,-q^{t-r};q^t)^3_inf (q^s,q^{2t-s};q^{2t})_inf
QExpr family_g(std::size_t r, std::size_t s, std::size_t t);
/// (-q^r,-q^{t-r};q^t)_inf (q^s,q^{2t-s};q^{2t})^3_inf
QExpr family_h(std::size_t r, std::size_t s, std::size_t t);

} // namespace qseries
