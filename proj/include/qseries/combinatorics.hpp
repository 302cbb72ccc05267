#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qseries/qexpr.hpp"
#include "qseries/series.hpp"

namespace qseries {

/// Parts congruent to `residue` (mod M), available in `flavours` copies.
/// A residue of M stands for parts divisible by M.
struct PartClass {
    std::size_t residue = 1;
    std::size_t flavours = 1;
};

/// Allowed part sizes for a restricted partition count; the generating
/// function is prod over classes of (q^r; q^M)_inf^(-flavours).
struct PartClassSpec {
    std::size_t modulus = 1;
    std::vector<PartClass> classes;

    /// Throws InvalidParameters on repeated residues, residues outside
    /// [1, M] or zero flavours.
    void validate() const;
    /// Number of part types (counting flavours) of size `part`.
    std::size_t flavours_of(std::size_t part) const;
    /// The generating function as an expression.
    QExpr generating_function() const;
};

/// "M=10;1x2,9x2,2x1,8x1,4x2,6x2". Throws InvalidParameters when malformed.
PartClassSpec parse_part_spec(std::string_view text);
std::string to_string(const PartClassSpec &spec);

/// Upper bound on n accepted by the counting routines.
inline constexpr std::size_t kPartitionBudget = 10000;

/// Number of multisets of flavoured parts summing to n, by dynamic programming
/// over part sizes. Throws InvalidParameters when n exceeds the budget.
Integer count_partitions(const PartClassSpec &spec, std::size_t n);
/// Counts for every m in [0, n].
std::vector<Integer> count_partitions_upto(const PartClassSpec &spec, std::size_t n);

struct InterpretationMismatch {
    std::size_t n;
    Integer expected; // sign * multiplier * count
    Integer actual;   // coefficient of the dissected series
};

struct InterpretationReport {
    bool pass = false;
    std::size_t checked_up_to = 0;
    std::optional<InterpretationMismatch> first_mismatch;
};

/// Checks sign * multiplier * count(spec, n) == dissect(evaluate(expr), k, l)(n)
/// for every n <= up_to.
InterpretationReport verify_interpretation(const PartClassSpec &spec, const QExpr &expr, std::size_t k,
                                           std::size_t l, std::size_t up_to, int sign = 1, long multiplier = 1);

/// One of the eight partition readings of the 5-dissections of g1 and h1.
struct Interpretation {
    std::string id;
    std::string series; // text of the generating function that is dissected
    std::size_t k = 5;
    std::size_t l = 0;
    PartClassSpec spec;
    long multiplier = 1;
    int sign = 1;
};

std::vector<Interpretation> standard_interpretations();

struct SignSummary {
    /// -1, 0 or +1 for each n in [0, up_to]
    std::vector<int> signs;
    std::vector<Integer> values;
    std::vector<std::size_t> zeros;
    /// n > 0 whose (nonzero) sign differs from the previous nonzero sign
    std::vector<std::size_t> sign_changes;
};

/// Sign of the coefficient at k n + l for n = 0..up_to.
SignSummary scan_signs(const QExpr &expr, std::size_t k, std::size_t l, std::size_t up_to);

/// '+', '-' or '0' per entry.
std::string sign_string(const SignSummary &s);

} // namespace qseries
