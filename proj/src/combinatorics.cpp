#include "qseries/combinatorics.hpp"

#include <charconv>
#include <set>

#include "qseries/errors.hpp"

namespace qseries {

void PartClassSpec::validate() const
{
    if (modulus == 0) {
        throw InvalidParameters("part class modulus must be positive");
    }
    std::set<std::size_t> seen;
    for (const auto &c : classes) {
        if (c.residue < 1 || c.residue > modulus) {
            throw InvalidParameters("residue " + std::to_string(c.residue) + " is outside [1, " +
                                    std::to_string(modulus) + "]");
        }
        if (c.flavours == 0) {
            throw InvalidParameters("flavour counts must be at least 1");
        }
        if (!seen.insert(c.residue).second) {
            throw InvalidParameters("residue " + std::to_string(c.residue) + " listed twice");
        }
    }
}

std::size_t PartClassSpec::flavours_of(std::size_t part) const
{
    std::size_t total = 0;
    for (const auto &c : classes) {
        if (part % modulus == c.residue % modulus) {
            total += c.flavours;
        }
    }
    return total;
}

QExpr PartClassSpec::generating_function() const
{
    QExpr gf = integer(1);
    for (const auto &c : classes) {
        ast::Pochhammer p{{SignedMonomial::plus(c.residue)}, modulus, 1};
        gf = gf / power(p, static_cast<long>(c.flavours));
    }
    return gf;
}

namespace {

std::size_t parse_number(std::string_view s, std::string_view what)
{
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
        throw InvalidParameters("malformed " + std::string(what) + " '" + std::string(s) + "' in part spec");
    }
    return v;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && s.front() == ' ') {
        s.remove_prefix(1);
    }
    while (!s.empty() && s.back() == ' ') {
        s.remove_suffix(1);
    }
    return s;
}

} // namespace

PartClassSpec parse_part_spec(std::string_view text)
{
    text = trim(text);
    const auto semi = text.find(';');
    if (semi == std::string_view::npos || trim(text.substr(0, semi)).substr(0, 2) != "M=") {
        throw InvalidParameters("part spec must look like 'M=10;1x2,9x2'");
    }
    PartClassSpec spec;
    spec.modulus = parse_number(trim(trim(text.substr(0, semi)).substr(2)), "modulus");
    auto rest = text.substr(semi + 1);
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        const auto item = trim(rest.substr(0, comma));
        const auto x = item.find('x');
        if (x == std::string_view::npos) {
            throw InvalidParameters("part class '" + std::string(item) + "' must be residue x flavours");
        }
        spec.classes.push_back({parse_number(trim(item.substr(0, x)), "residue"),
                                parse_number(trim(item.substr(x + 1)), "flavour count")});
        if (comma == std::string_view::npos) {
            break;
        }
        rest = rest.substr(comma + 1);
    }
    if (spec.classes.empty()) {
        throw InvalidParameters("part spec lists no classes");
    }
    spec.validate();
    return spec;
}

std::string to_string(const PartClassSpec &spec)
{
    std::string s = "M=" + std::to_string(spec.modulus) + ";";
    for (std::size_t i = 0; i < spec.classes.size(); ++i) {
        s += (i ? "," : "") + std::to_string(spec.classes[i].residue) + "x" + std::to_string(spec.classes[i].flavours);
    }
    return s;
}

std::vector<Integer> count_partitions_upto(const PartClassSpec &spec, std::size_t n)
{
    spec.validate();
    if (n > kPartitionBudget) {
        throw InvalidParameters("partition counts are supported up to n = " + std::to_string(kPartitionBudget));
    }
    // Each flavour of each part size is an independent part type; adding the
    // types one at a time gives the unbounded-knapsack recurrence.
    std::vector<Integer> ways(n + 1);
    ways[0] = 1;
    for (std::size_t part = 1; part <= n; ++part) {
        for (std::size_t f = spec.flavours_of(part); f > 0; --f) {
            for (std::size_t m = part; m <= n; ++m) {
                ways[m] += ways[m - part];
            }
        }
    }
    return ways;
}

Integer count_partitions(const PartClassSpec &spec, std::size_t n)
{
    return count_partitions_upto(spec, n).back();
}

InterpretationReport verify_interpretation(const PartClassSpec &spec, const QExpr &expr, std::size_t k,
                                           std::size_t l, std::size_t up_to, int sign, long multiplier)
{
    if (k == 0 || l >= k) {
        throw InvalidParameters("dissection needs k >= 1 and 0 <= l < k");
    }
    const auto counts = count_partitions_upto(spec, up_to);
    const auto series = dissect(evaluate(expr, k * up_to + l), k, l);
    InterpretationReport report;
    report.checked_up_to = up_to;
    for (std::size_t n = 0; n <= up_to; ++n) {
        const Integer expected = sign * multiplier * counts[n];
        if (expected != series[n]) {
            report.first_mismatch = InterpretationMismatch{n, expected, series[n]};
            return report;
        }
    }
    report.pass = true;
    return report;
}

std::vector<Interpretation> standard_interpretations()
{
    const std::string g1 = "(-q,-q^4;q^5)_inf^2*(q^4,q^6;q^10)_inf";
    const std::string h1 = "(-q^2,-q^3;q^5)_inf^2*(q^2,q^8;q^10)_inf";
    // Classes read off the reciprocal products (parts mod 10).
    const auto spec = [](std::initializer_list<PartClass> cs) { return PartClassSpec{10, cs}; };
    return {
        {"G0", g1, 5, 0, spec({{1, 2}, {9, 2}, {2, 1}, {8, 1}, {4, 2}, {6, 2}}), 1, 1},
        {"G1", g1, 5, 1, spec({{1, 1}, {9, 1}, {2, 2}, {8, 2}, {3, 1}, {7, 1}, {4, 1}, {6, 1}}), 2, 1},
        {"G2", g1, 5, 2, spec({{1, 2}, {9, 2}, {4, 3}, {6, 3}}), 1, 1},
        {"G4", g1, 5, 4, spec({{2, 2}, {8, 2}, {3, 2}, {7, 2}, {4, 1}, {6, 1}}), 1, 1},
        {"H0", h1, 5, 0, spec({{1, 2}, {9, 2}, {2, 1}, {8, 1}, {4, 2}, {6, 2}}), 1, 1},
        {"H2", h1, 5, 2, spec({{2, 3}, {8, 3}, {3, 2}, {7, 2}}), 1, 1},
        {"H3", h1, 5, 3, spec({{1, 1}, {9, 1}, {2, 1}, {8, 1}, {3, 1}, {7, 1}, {4, 2}, {6, 2}}), 2, 1},
        {"H4", h1, 5, 4, spec({{2, 2}, {8, 2}, {3, 2}, {7, 2}, {4, 1}, {6, 1}}), 1, -1},
    };
}

SignSummary scan_signs(const QExpr &expr, std::size_t k, std::size_t l, std::size_t up_to)
{
    if (k == 0 || l >= k) {
        throw InvalidParameters("dissection needs k >= 1 and 0 <= l < k");
    }
    const auto series = dissect(evaluate(expr, k * up_to + l), k, l);
    SignSummary s;
    int last = 0;
    for (std::size_t n = 0; n <= up_to; ++n) {
        const int sg = sgn(series[n]);
        s.signs.push_back(sg);
        s.values.push_back(series[n]);
        if (sg == 0) {
            s.zeros.push_back(n);
            continue;
        }
        if (last != 0 && sg != last) {
            s.sign_changes.push_back(n);
        }
        last = sg;
    }
    return s;
}

std::string sign_string(const SignSummary &s)
{
    std::string out;
    for (int sg : s.signs) {
        out += sg > 0 ? '+' : sg < 0 ? '-' : '0';
    }
    return out;
}

} // namespace qseries
