#include "qseries/qexpr.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <map>
#include <sstream>
#include <tuple>

#include "qseries/errors.hpp"

namespace qseries {

namespace {

std::string join_expected(const std::vector<std::string> &expected)
{
    std::string s;
    for (std::size_t i = 0; i < expected.size(); ++i) {
        s += (i ? ", " : "") + ("'" + expected[i] + "'");
    }
    return s;
}

} // namespace

SyntaxError::SyntaxError(std::size_t position, std::vector<std::string> expected, const std::string &found)
    : Error("syntax error at offset " + std::to_string(position) + ": expected one of " + join_expected(expected) +
            ", found " + found),
      position_(position), expected_(std::move(expected))
{
}

QExpr::QExpr() : QExpr(ast::IntegerLiteral{0}) {}
QExpr::QExpr(ast::IntegerLiteral n) : node_(std::make_shared<const Node>(std::move(n))) {}
QExpr::QExpr(ast::Monomial m) : node_(std::make_shared<const Node>(std::move(m))) {}
QExpr::QExpr(ast::Pochhammer p) : node_(std::make_shared<const Node>(std::move(p))) {}
QExpr::QExpr(ast::ThetaF t) : node_(std::make_shared<const Node>(t)) {}
QExpr::QExpr(ast::Phi p) : node_(std::make_shared<const Node>(p)) {}
QExpr::QExpr(ast::Psi p) : node_(std::make_shared<const Node>(p)) {}
QExpr::QExpr(ast::BSum b) : node_(std::make_shared<const Node>(b)) {}
QExpr::QExpr(ast::Add n) : node_(std::make_shared<const Node>(std::move(n))) {}
QExpr::QExpr(ast::Sub n) : node_(std::make_shared<const Node>(std::move(n))) {}
QExpr::QExpr(ast::Mul n) : node_(std::make_shared<const Node>(std::move(n))) {}
QExpr::QExpr(ast::Div n) : node_(std::make_shared<const Node>(std::move(n))) {}
QExpr::QExpr(ast::Neg n) : node_(std::make_shared<const Node>(std::move(n))) {}
QExpr::QExpr(ast::Pow n) : node_(std::make_shared<const Node>(std::move(n))) {}

namespace ast {
namespace {

bool operator==(const IntegerLiteral &a, const IntegerLiteral &b) { return a.value == b.value; }
bool operator==(const Monomial &a, const Monomial &b) { return a.coefficient == b.coefficient && a.exponent == b.exponent; }
bool operator==(const Pochhammer &a, const Pochhammer &b)
{
    return a.args == b.args && a.modulus == b.modulus && a.power == b.power;
}
bool operator==(const ThetaF &a, const ThetaF &b) { return a.a == b.a && a.b == b.b; }
bool operator==(const Phi &a, const Phi &b) { return a.k == b.k; }
bool operator==(const Psi &a, const Psi &b) { return a.k == b.k; }
bool operator==(const BSum &a, const BSum &b) { return a.A == b.A && a.B == b.B; }
bool operator==(const Add &a, const Add &b) { return a.lhs == b.lhs && a.rhs == b.rhs; }
bool operator==(const Sub &a, const Sub &b) { return a.lhs == b.lhs && a.rhs == b.rhs; }
bool operator==(const Mul &a, const Mul &b) { return a.lhs == b.lhs && a.rhs == b.rhs; }
bool operator==(const Div &a, const Div &b) { return a.lhs == b.lhs && a.rhs == b.rhs; }
bool operator==(const Neg &a, const Neg &b) { return a.operand == b.operand; }
bool operator==(const Pow &a, const Pow &b) { return a.exponent == b.exponent && a.base == b.base; }

} // namespace
} // namespace ast

bool operator==(const QExpr &a, const QExpr &b)
{
    if (a.node_ == b.node_) {
        return true;
    }
    return std::visit(
        [](const auto &x, const auto &y) -> bool {
            if constexpr (std::is_same_v<std::decay_t<decltype(x)>, std::decay_t<decltype(y)>>) {
                using ast::operator==;
                return x == y;
            } else {
                return false;
            }
        },
        *a.node_, *b.node_);
}

QExpr operator+(QExpr a, QExpr b) { return ast::Add{std::move(a), std::move(b)}; }
QExpr operator-(QExpr a, QExpr b) { return ast::Sub{std::move(a), std::move(b)}; }
QExpr operator*(QExpr a, QExpr b) { return ast::Mul{std::move(a), std::move(b)}; }
QExpr operator/(QExpr a, QExpr b) { return ast::Div{std::move(a), std::move(b)}; }
QExpr operator-(QExpr a) { return ast::Neg{std::move(a)}; }
QExpr power(QExpr base, long exponent) { return ast::Pow{std::move(base), exponent}; }
QExpr integer(long value) { return ast::IntegerLiteral{Integer(value)}; }
QExpr q_power(std::size_t exponent) { return ast::Monomial{Integer(1), exponent}; }

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    QExpr parse_all()
    {
        QExpr e = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) {
            fail({"+", "-", "*", "/", "end of input"});
        }
        return e;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    char peek()
    {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool accept(std::string_view lit)
    {
        skip_ws();
        if (text_.substr(pos_, lit.size()) == lit) {
            pos_ += lit.size();
            return true;
        }
        return false;
    }

    void expect(std::string_view lit)
    {
        if (!accept(lit)) {
            fail({std::string(lit)});
        }
    }

    [[noreturn]] void fail(std::vector<std::string> expected)
    {
        skip_ws();
        const std::string found =
            pos_ < text_.size() ? "'" + std::string(text_.substr(pos_, 8)) + "'" : std::string("end of input");
        throw SyntaxError(pos_, std::move(expected), found);
    }

    std::string_view digits()
    {
        skip_ws();
        const auto start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        if (start == pos_) {
            fail({"digit"});
        }
        return text_.substr(start, pos_ - start);
    }

    template <typename T>
    T small_uint()
    {
        const auto start = pos_;
        const auto d = digits();
        T v{};
        const auto [ptr, ec] = std::from_chars(d.data(), d.data() + d.size(), v);
        if (ec != std::errc{} || ptr != d.data() + d.size()) {
            throw SyntaxError(start, {"integer that fits in 64 bits"}, "'" + std::string(d) + "'");
        }
        return v;
    }

    long small_int()
    {
        const bool neg = accept("-");
        const auto v = small_uint<long>();
        return neg ? -v : v;
    }

    std::size_t monomial_exponent()
    {
        // after 'q'
        skip_ws();
        if (pos_ + 1 <= text_.size() && text_.substr(pos_, 1) == "^") {
            // only an unsigned exponent belongs to the monomial; q^-1 is a Pow
            auto save = pos_;
            ++pos_;
            skip_ws();
            if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                return small_uint<std::size_t>();
            }
            pos_ = save;
        }
        return 1;
    }

    std::size_t monomial()
    {
        expect("q");
        return monomial_exponent();
    }

    SignedMonomial signed_monomial()
    {
        const bool neg = accept("-");
        return SignedMonomial{neg, monomial()};
    }

    QExpr parse_expr()
    {
        QExpr lhs = parse_term();
        for (;;) {
            if (accept("+")) {
                lhs = ast::Add{lhs, parse_term()};
            } else if (accept("-")) {
                lhs = ast::Sub{lhs, parse_term()};
            } else {
                return lhs;
            }
        }
    }

    QExpr parse_term()
    {
        QExpr lhs = parse_factor();
        for (;;) {
            if (accept("*")) {
                lhs = ast::Mul{lhs, parse_factor()};
            } else if (accept("/")) {
                lhs = ast::Div{lhs, parse_factor()};
            } else {
                return lhs;
            }
        }
    }

    QExpr parse_factor()
    {
        if (accept("-")) {
            return ast::Neg{parse_factor()};
        }
        QExpr base = parse_atom();
        if (accept("^")) {
            return ast::Pow{base, small_int()};
        }
        return base;
    }

    // Distinguishes "(q,q^4;q^5)_inf" from "(q+1)" without backtracking.
    bool pochhammer_ahead() const
    {
        std::size_t p = pos_;
        const auto ws = [&] {
            while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p]))) {
                ++p;
            }
        };
        ws();
        if (p < text_.size() && text_[p] == '-') {
            ++p;
            ws();
        }
        if (p >= text_.size() || text_[p] != 'q') {
            return false;
        }
        ++p;
        ws();
        if (p < text_.size() && text_[p] == '^') {
            ++p;
            ws();
            while (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]))) {
                ++p;
            }
            ws();
        }
        return p < text_.size() && (text_[p] == ',' || text_[p] == ';');
    }

    QExpr parse_atom()
    {
        const char c = peek();
        const auto start = pos_;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return ast::IntegerLiteral{Integer(std::string(digits()))};
        }
        if (keyword("phi")) {
            return ast::Phi{scaled_argument("phi")};
        }
        if (keyword("psi")) {
            return ast::Psi{scaled_argument("psi")};
        }
        if (keyword("bsum")) {
            const long a = small_int();
            expect(",");
            const long b = small_int();
            expect(")");
            return ast::BSum{a, b};
        }
        if (keyword("f")) {
            const auto a = signed_monomial();
            expect(",");
            const auto b = signed_monomial();
            expect(")");
            if (a.exponent + b.exponent == 0) {
                throw InvalidFactor(start, "f(a,b) needs a positive total exponent");
            }
            return ast::ThetaF{a, b};
        }
        if (c == 'q') {
            return ast::Monomial{Integer(1), monomial()};
        }
        if (accept("(")) {
            if (pochhammer_ahead()) {
                return pochhammer();
            }
            QExpr inner = parse_expr();
            expect(")");
            return inner;
        }
        fail({"integer", "q", "(", "f(", "phi(", "psi(", "bsum("});
    }

    // name followed by an opening parenthesis, spaces allowed in between
    bool keyword(std::string_view name)
    {
        const auto save = pos_;
        if (accept(name) && accept("(")) {
            return true;
        }
        pos_ = save;
        return false;
    }

    std::size_t scaled_argument(const char *name)
    {
        const auto start = pos_;
        const auto k = monomial();
        expect(")");
        if (k == 0) {
            throw InvalidFactor(start, std::string(name) + "(q^k) needs k >= 1");
        }
        return k;
    }

    QExpr pochhammer()
    {
        ast::Pochhammer p;
        do {
            const auto arg_pos = pos_;
            const auto m = signed_monomial();
            if (!m.negative && m.exponent == 0) {
                throw InvalidFactor(arg_pos, "Pochhammer argument q^0 makes the product vanish");
            }
            p.args.push_back(m);
        } while (accept(","));
        expect(";");
        const auto mod_pos = pos_;
        p.modulus = monomial();
        if (p.modulus == 0) {
            throw InvalidFactor(mod_pos, "Pochhammer base must be q^m with m >= 1");
        }
        expect(")");
        expect("_inf");
        return p;
    }

};

// Rendering precedence levels, loosest first.
enum Prec { kSum = 1, kProduct = 2, kUnary = 3, kPower = 4, kAtom = 5 };

std::string monomial_text(std::size_t e)
{
    return e == 1 ? "q" : "q^" + std::to_string(e);
}

struct Rendered {
    std::string text;
    int prec;
};

Rendered render_node(const QExpr &e);

std::string wrap(const QExpr &e, int min_prec)
{
    auto r = render_node(e);
    return r.prec < min_prec ? "(" + r.text + ")" : r.text;
}

Rendered render_node(const QExpr &e)
{
    return std::visit(
        [](const auto &n) -> Rendered {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, ast::IntegerLiteral>) {
                return {n.value.get_str(), sgn(n.value) < 0 ? kUnary : kAtom};
            } else if constexpr (std::is_same_v<T, ast::Monomial>) {
                if (n.coefficient == 1) {
                    return {monomial_text(n.exponent), kAtom};
                }
                return {n.coefficient.get_str() + "*" + monomial_text(n.exponent), kProduct};
            } else if constexpr (std::is_same_v<T, ast::Pochhammer>) {
                std::string s = "(";
                for (std::size_t i = 0; i < n.args.size(); ++i) {
                    s += (i ? "," : "") + to_string(n.args[i]);
                }
                s += ";" + monomial_text(n.modulus) + ")_inf";
                if (n.power != 1) {
                    return {s + "^" + std::to_string(n.power), kPower};
                }
                return {s, kAtom};
            } else if constexpr (std::is_same_v<T, ast::ThetaF>) {
                return {"f(" + to_string(n.a) + "," + to_string(n.b) + ")", kAtom};
            } else if constexpr (std::is_same_v<T, ast::Phi>) {
                return {"phi(" + monomial_text(n.k) + ")", kAtom};
            } else if constexpr (std::is_same_v<T, ast::Psi>) {
                return {"psi(" + monomial_text(n.k) + ")", kAtom};
            } else if constexpr (std::is_same_v<T, ast::BSum>) {
                return {"bsum(" + std::to_string(n.A) + "," + std::to_string(n.B) + ")", kAtom};
            } else if constexpr (std::is_same_v<T, ast::Add>) {
                return {wrap(n.lhs, kSum) + " + " + wrap(n.rhs, kProduct), kSum};
            } else if constexpr (std::is_same_v<T, ast::Sub>) {
                return {wrap(n.lhs, kSum) + " - " + wrap(n.rhs, kProduct), kSum};
            } else if constexpr (std::is_same_v<T, ast::Mul>) {
                return {wrap(n.lhs, kProduct) + "*" + wrap(n.rhs, kUnary), kProduct};
            } else if constexpr (std::is_same_v<T, ast::Div>) {
                return {wrap(n.lhs, kProduct) + "/" + wrap(n.rhs, kUnary), kProduct};
            } else if constexpr (std::is_same_v<T, ast::Neg>) {
                return {"-" + wrap(n.operand, kUnary), kUnary};
            } else {
                static_assert(std::is_same_v<T, ast::Pow>);
                // a bare q would fuse with the exponent into a single monomial
                const bool fuses = n.base.template as<ast::Monomial>() != nullptr;
                const auto base = fuses ? "(" + render_node(n.base).text + ")" : wrap(n.base, kAtom);
                return {base + "^" + std::to_string(n.exponent), kPower};
            }
        },
        e.node());
}

// ---------------------------------------------------------------------------
// Evaluation

TruncatedSeries evaluate_node(const QExpr &e, std::size_t order);

// A product of factors split by how cheaply each can be applied.
struct Product {
    Integer scalar{1};
    std::size_t shift = 0;
    // (negative, exponent, modulus) -> net power
    std::map<std::tuple<bool, std::size_t, std::size_t>, long> pochhammers;
    std::vector<QExpr> numerators;
    std::vector<QExpr> denominators;

    void add_pochhammer(const ast::Pochhammer &p, long power)
    {
        for (const auto &arg : p.args) {
            pochhammers[{arg.negative, arg.exponent, p.modulus}] += power;
        }
    }

    void collect(const QExpr &e, bool in_denominator)
    {
        const auto &node = e.node();
        if (const auto *m = std::get_if<ast::Mul>(&node)) {
            collect(m->lhs, in_denominator);
            collect(m->rhs, in_denominator);
        } else if (const auto *d = std::get_if<ast::Div>(&node)) {
            collect(d->lhs, in_denominator);
            collect(d->rhs, !in_denominator);
        } else if (const auto *n = std::get_if<ast::Neg>(&node)) {
            scalar = -scalar;
            collect(n->operand, in_denominator);
        } else if (const auto *p = std::get_if<ast::Pochhammer>(&node)) {
            add_pochhammer(*p, in_denominator ? -p->power : p->power);
        } else if (const auto *lit = std::get_if<ast::IntegerLiteral>(&node); lit && !in_denominator) {
            scalar *= lit->value;
        } else if (const auto *mono = std::get_if<ast::Monomial>(&node); mono && !in_denominator) {
            scalar *= mono->coefficient;
            shift += mono->exponent;
        } else if (const auto *pw = std::get_if<ast::Pow>(&node)) {
            collect_power(e, *pw, in_denominator);
        } else {
            (in_denominator ? denominators : numerators).push_back(e);
        }
    }

    void collect_power(const QExpr &e, const ast::Pow &pw, bool in_denominator)
    {
        if (pw.exponent == 0) {
            return;
        }
        if (const auto *p = pw.base.as<ast::Pochhammer>()) {
            const long power = p->power * pw.exponent;
            add_pochhammer(*p, in_denominator ? -power : power);
            return;
        }
        const bool flip = pw.exponent < 0;
        const bool side = in_denominator != flip;
        const unsigned long n = flip ? 0UL - static_cast<unsigned long>(pw.exponent) : static_cast<unsigned long>(pw.exponent);
        if (const auto *mono = pw.base.as<ast::Monomial>(); mono && !side) {
            Integer c;
            mpz_pow_ui(c.get_mpz_t(), mono->coefficient.get_mpz_t(), n);
            scalar *= c;
            shift += mono->exponent * n;
            return;
        }
        if (!flip) {
            (side ? denominators : numerators).push_back(e);
        } else {
            (side ? denominators : numerators).push_back(power(pw.base, static_cast<long>(n)));
        }
    }

    TruncatedSeries evaluate(std::size_t order) const
    {
        TruncatedSeries acc = TruncatedSeries::one(order);
        for (const auto &e : numerators) {
            acc = acc * evaluate_node(e, order);
        }
        if (!denominators.empty()) {
            TruncatedSeries den = TruncatedSeries::one(order);
            for (const auto &e : denominators) {
                den = den * evaluate_node(e, order);
            }
            acc = divide(acc, den);
        }
        std::vector<Integer> c(acc.coeffs().begin(), acc.coeffs().end());
        for (const auto &[key, power] : pochhammers) {
            if (power == 0) {
                continue;
            }
            const auto [neg, exponent, modulus] = key;
            const SignedMonomial arg{neg, exponent};
            apply_pochhammer(c, std::span(&arg, 1), modulus, power);
        }
        TruncatedSeries result(std::move(c));
        if (scalar != 1) {
            result = scalar * result;
        }
        return shift == 0 ? result : qseries::shift(result, shift);
    }
};

TruncatedSeries evaluate_node(const QExpr &e, std::size_t order)
{
    return std::visit(
        [&](const auto &n) -> TruncatedSeries {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, ast::Add>) {
                return evaluate_node(n.lhs, order) + evaluate_node(n.rhs, order);
            } else if constexpr (std::is_same_v<T, ast::Sub>) {
                return evaluate_node(n.lhs, order) - evaluate_node(n.rhs, order);
            } else if constexpr (std::is_same_v<T, ast::ThetaF>) {
                return theta_f(n.a, n.b, order);
            } else if constexpr (std::is_same_v<T, ast::Phi>) {
                return phi(n.k, order);
            } else if constexpr (std::is_same_v<T, ast::Psi>) {
                return psi(n.k, order);
            } else if constexpr (std::is_same_v<T, ast::BSum>) {
                return bsum(n.A, n.B, order);
            } else if constexpr (std::is_same_v<T, ast::IntegerLiteral>) {
                return TruncatedSeries::monomial(n.value, 0, order);
            } else if constexpr (std::is_same_v<T, ast::Monomial>) {
                return TruncatedSeries::monomial(n.coefficient, n.exponent, order);
            } else if constexpr (std::is_same_v<T, ast::Pow>) {
                if (n.base.template as<ast::Pochhammer>() || n.base.template as<ast::Monomial>()) {
                    Product p;
                    p.collect(e, false);
                    return p.evaluate(order);
                }
                return pow(evaluate_node(n.base, order), n.exponent);
            } else {
                // Mul, Div, Neg, Pochhammer
                Product p;
                p.collect(e, false);
                return p.evaluate(order);
            }
        },
        e.node());
}

void check_family(std::size_t r, std::size_t s, std::size_t t)
{
    if (!(0 < r && r < t && 0 < s && s < 2 * t && s != t)) {
        throw InvalidFamilyParameters("family needs 0 < r < t, 0 < s < 2t and s != t; got (r,s,t) = (" +
                                      std::to_string(r) + "," + std::to_string(s) + "," + std::to_string(t) + ")");
    }
}

QExpr theta_pair(std::size_t r, std::size_t t)
{
    return ast::Pochhammer{{SignedMonomial::minus(r), SignedMonomial::minus(t - r)}, t, 1};
}

QExpr base_pair(std::size_t s, std::size_t t)
{
    return ast::Pochhammer{{SignedMonomial::plus(s), SignedMonomial::plus(2 * t - s)}, 2 * t, 1};
}

} // namespace

QExpr parse(std::string_view text)
{
    return Parser(text).parse_all();
}

std::string render(const QExpr &e)
{
    return render_node(e).text;
}

TruncatedSeries evaluate(const QExpr &e, std::size_t order)
{
    return evaluate_node(e, order);
}

QExpr family_g(std::size_t r, std::size_t s, std::size_t t)
{
    check_family(r, s, t);
    return power(theta_pair(r, t), 3) * base_pair(s, t);
}

QExpr family_h(std::size_t r, std::size_t s, std::size_t t)
{
    check_family(r, s, t);
    return theta_pair(r, t) * power(base_pair(s, t), 3);
}

} // namespace qseries
