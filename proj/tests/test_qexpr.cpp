#include <doctest.h>

#include <algorithm>
#include <functional>

#include "qseries/errors.hpp"
#include "qseries/identities.hpp"
#include "qseries/qexpr.hpp"

using namespace qseries;
using SM = SignedMonomial;

namespace {

std::vector<QExpr> claim_expressions(const Claim &c)
{
    return std::visit(
        [](const auto &x) -> std::vector<QExpr> {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, SeriesEquality> || std::is_same_v<T, DissectionRelation>) {
                return {x.lhs, x.rhs};
            } else {
                return {x.expr};
            }
        },
        c);
}

std::vector<QExpr> registry_expressions()
{
    std::vector<QExpr> out;
    for (const auto &r : registry()) {
        for (auto &e : claim_expressions(r.claim)) {
            out.push_back(e);
        }
        for (const auto &alt : r.alternatives) {
            for (auto &e : claim_expressions(alt.claim)) {
                out.push_back(e);
            }
        }
    }
    return out;
}

void walk(const QExpr &e, const std::function<void(const QExpr &)> &fn)
{
    fn(e);
    std::visit(
        [&](const auto &n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (requires { n.lhs; }) {
                walk(n.lhs, fn);
                walk(n.rhs, fn);
            } else if constexpr (std::is_same_v<T, ast::Neg>) {
                walk(n.operand, fn);
            } else if constexpr (std::is_same_v<T, ast::Pow>) {
                walk(n.base, fn);
            }
        },
        e.node());
}

// Operands of a maximal chain of the same associative operator.
template <typename Op>
void flatten(const QExpr &e, std::vector<QExpr> &out)
{
    if (const auto *n = e.as<Op>()) {
        flatten<Op>(n->lhs, out);
        flatten<Op>(n->rhs, out);
    } else {
        out.push_back(e);
    }
}

// Rebuilds every Add and Mul chain right-associated with operands reversed.
QExpr regroup(const QExpr &e)
{
    const auto chain = [](const QExpr &x, auto tag, auto combine) {
        using Op = decltype(tag);
        std::vector<QExpr> ops;
        flatten<Op>(x, ops);
        std::reverse(ops.begin(), ops.end());
        QExpr acc = regroup(ops.back());
        for (auto it = ops.rbegin() + 1; it != ops.rend(); ++it) {
            acc = combine(regroup(*it), acc);
        }
        return acc;
    };
    if (e.as<ast::Add>()) {
        return chain(e, ast::Add{}, [](QExpr a, QExpr b) { return a + b; });
    }
    if (e.as<ast::Mul>()) {
        return chain(e, ast::Mul{}, [](QExpr a, QExpr b) { return a * b; });
    }
    if (const auto *n = e.as<ast::Sub>()) {
        return regroup(n->lhs) - regroup(n->rhs);
    }
    if (const auto *n = e.as<ast::Div>()) {
        return regroup(n->lhs) / regroup(n->rhs);
    }
    if (const auto *n = e.as<ast::Neg>()) {
        return -regroup(n->operand);
    }
    if (const auto *n = e.as<ast::Pow>()) {
        return power(regroup(n->base), n->exponent);
    }
    return e;
}

std::size_t node_count(const QExpr &e)
{
    std::size_t n = 0;
    walk(e, [&](const QExpr &) { ++n; });
    return n;
}

} // namespace

TEST_CASE("parse builds the expected trees")
{
    const auto e = parse("(q,q^4;q^5)_inf^2 * (q^2,q^8;q^10)_inf");
    const auto *mul = e.as<ast::Mul>();
    REQUIRE(mul);
    const auto *pw = mul->lhs.as<ast::Pow>();
    REQUIRE(pw);
    CHECK(pw->exponent == 2);
    const auto *p1 = pw->base.as<ast::Pochhammer>();
    REQUIRE(p1);
    CHECK(p1->args == std::vector<SM>{SM::plus(1), SM::plus(4)});
    CHECK(p1->modulus == 5);
    CHECK(p1->power == 1);
    const auto *p2 = mul->rhs.as<ast::Pochhammer>();
    REQUIRE(p2);
    CHECK(p2->args == std::vector<SM>{SM::plus(2), SM::plus(8)});
    CHECK(p2->power == 1);

    const auto t = parse("f(-q^2,-q^3)");
    REQUIRE(t.as<ast::ThetaF>());
    CHECK(t.as<ast::ThetaF>()->a == SM::minus(2));
    CHECK(t.as<ast::ThetaF>()->b == SM::minus(3));

    const auto s = parse("phi(q^5) - phi(q)");
    REQUIRE(s.as<ast::Sub>());
    CHECK(s.as<ast::Sub>()->lhs.as<ast::Phi>()->k == 5);
    CHECK(s.as<ast::Sub>()->rhs.as<ast::Phi>()->k == 1);

    CHECK(parse("bsum(20,-2)").as<ast::BSum>()->B == -2);
    CHECK(parse("(q;q)_inf^-2").as<ast::Pow>()->exponent == -2);
    CHECK(parse(" ( q ; q ) _inf").as<ast::Pochhammer>());
    CHECK(parse("12345678901234567890123").as<ast::IntegerLiteral>()->value ==
          Integer("12345678901234567890123"));
}

TEST_CASE("precedence and associativity")
{
    CHECK(parse("1 - 2 - 3") == (integer(1) - integer(2)) - integer(3));
    CHECK(parse("1 + 2*3") == integer(1) + integer(2) * integer(3));
    CHECK(parse("-(q;q)_inf^2") == -parse("(q;q)_inf^2"));
    CHECK(parse("(1+q)^3") == power(integer(1) + q_power(1), 3));
    CHECK(evaluate(parse("2 - 1 - 1"), 3).is_zero());
    CHECK(parse("8/2/2") == (integer(8) / integer(2)) / integer(2));
    // division needs a unit constant term, even for plain integers
    CHECK_THROWS_AS(evaluate(parse("8/2"), 0), NonUnitConstantTerm);
}

TEST_CASE("syntax errors carry a position")
{
    const auto position_of = [](std::string_view text) -> std::size_t {
        try {
            parse(text);
        } catch (const SyntaxError &e) {
            return e.position();
        } catch (const InvalidFactor &e) {
            return e.position() + 1000;
        }
        return 9999;
    };
    CHECK(position_of("(q;q") == 4);
    CHECK(position_of("q^") == 2);
    CHECK(position_of("1 +") == 3);
    CHECK(position_of("f(q)") == 3);
    CHECK(position_of("phi(2)") == 4);
    CHECK(position_of("1 ) ") == 2);
    CHECK(position_of("(q^0;q)_inf") == 1001);
    CHECK(position_of("(q;q^0)_inf") == 1003);
    CHECK(position_of("f(q^0,q^0)") == 1000);
    CHECK(position_of("psi(q^0)") == 1004);
    CHECK_THROWS_AS(parse(""), SyntaxError);
    CHECK_THROWS_AS(parse("x"), SyntaxError);
    try {
        parse("(q;q");
    } catch (const SyntaxError &e) {
        CHECK_FALSE(e.expected().empty());
    }
}

TEST_CASE("evaluate examples")
{
    CHECK(evaluate(parse("(-q,-q^4;q^5)_inf^2*(q^4,q^6;q^10)_inf"), 4) == TruncatedSeries{1, 2, 1, 0, 1});
    CHECK(evaluate(parse("(-q^2,-q^3;q^5)_inf^2*(q^2,q^8;q^10)_inf"), 4) == TruncatedSeries{1, 0, 1, 2, -1});
    CHECK(evaluate(parse("(-q^2,-q^3;q^5)_inf^2*(q^2,q^8;q^10)_inf"), 24) ==
          TruncatedSeries{1, 0, 1, 2, -1, 2, 0, 0, 2, 0, 4, 0, 3, 4, -2, 6, 0, 2, 6, -2, 11, 0, 6, 12, -4});
    CHECK(evaluate(parse("1"), 5) == TruncatedSeries::one(5));
    CHECK(evaluate(parse("3*q^2"), 3) == TruncatedSeries{0, 0, 3, 0});
    CHECK(evaluate(parse("(-q^0;q)_inf"), 3) == TruncatedSeries{2, 2, 2, 4});
    CHECK_THROWS_AS(evaluate(parse("1/(2+q)"), 3), NonUnitConstantTerm);
    CHECK_THROWS_AS(evaluate(parse("1/q"), 3), NegativeExponent);
    CHECK_THROWS_AS(evaluate(parse("(-q^0;q)_inf^-1"), 3), NonUnitConstantTerm);
    CHECK_THROWS_AS(evaluate(parse("bsum(3,5)"), 3), NegativeExponent);
}

TEST_CASE("evaluation follows the tree")
{
    const auto a = parse("(q,q^2;q^5)_inf^-1 + 3*q");
    const auto b = parse("f(-q,q^3) - psi(q^2)");
    const std::size_t n = 80;
    CHECK(evaluate(a * b, n) == evaluate(a, n) * evaluate(b, n));
    CHECK(evaluate(a + b, n) == evaluate(a, n) + evaluate(b, n));
    CHECK(evaluate(a - b, n) == evaluate(a, n) - evaluate(b, n));
    CHECK(evaluate(b / a, n) == divide(evaluate(b, n), evaluate(a, n)));
    CHECK(evaluate(power(a, 3), n) == pow(evaluate(a, n), 3));
    CHECK(evaluate(power(a, -2), n) == pow(evaluate(a, n), -2));
    CHECK(evaluate(-a, n) == -evaluate(a, n));
    // merged Pochhammer powers cancel
    CHECK(evaluate(parse("(q;q)_inf^3/(q;q)_inf^3"), n) == TruncatedSeries::one(n));
}

TEST_CASE("family builders")
{
    CHECK(family_g(1, 2, 5) == parse("(-q,-q^4;q^5)_inf^3*(q^2,q^8;q^10)_inf"));
    CHECK(family_h(2, 2, 5) == parse("(-q^2,-q^3;q^5)_inf*(q^2,q^8;q^10)_inf^3"));
    CHECK(family_g(1, 1, 7) == parse("(-q,-q^6;q^7)_inf^3*(q,q^13;q^14)_inf"));
    CHECK_THROWS_AS(family_g(0, 2, 5), InvalidFamilyParameters);
    CHECK_THROWS_AS(family_g(5, 2, 5), InvalidFamilyParameters);
    CHECK_THROWS_AS(family_h(1, 5, 5), InvalidFamilyParameters);
    CHECK_THROWS_AS(family_h(1, 10, 5), InvalidFamilyParameters);
}

TEST_CASE("property: render round trip for every registry expression")
{
    const auto exprs = registry_expressions();
    REQUIRE(exprs.size() >= 120);
    for (const auto &e : exprs) {
        const auto text = render(e);
        const auto back = parse(text);
        REQUIRE_MESSAGE(back == e, text);
        REQUIRE(render(back) == text);
    }
}

TEST_CASE("theta nodes of the registry agree with their triple product form")
{
    std::size_t seen = 0;
    for (const auto &e : registry_expressions()) {
        walk(e, [&](const QExpr &x) {
            if (const auto *t = x.as<ast::ThetaF>()) {
                ++seen;
                const auto ab = SM{t->a.negative != t->b.negative, t->a.exponent + t->b.exponent};
                // (-a, -b, ab; ab)_inf, written out as an expression
                const auto neg = [](SM m) { return SM{!m.negative, m.exponent}; };
                const auto jtp = QExpr(ast::Pochhammer{{neg(t->a), neg(t->b), ab}, ab.exponent, 1});
                if (!ab.negative && !(t->a.exponent == 0 && t->a.negative) &&
                    !(t->b.exponent == 0 && t->b.negative)) {
                    REQUIRE(evaluate(x, 200) == evaluate(jtp, 200));
                }
                REQUIRE(evaluate(x, 200) == jtp_product(t->a, t->b, 200));
            }
        });
    }
    CHECK(seen > 100);
}

TEST_CASE("regrouped registry expressions evaluate identically")
{
    std::size_t changed = 0;
    for (const auto &e : registry_expressions()) {
        const auto g = regroup(e);
        if (!(g == e)) {
            ++changed;
        }
        CHECK(node_count(g) == node_count(e));
        REQUIRE(evaluate(g, 150) == evaluate(e, 150));
    }
    CHECK(changed > 50);
}
