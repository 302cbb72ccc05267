#pragma once

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "qseries/qexpr.hpp"
#include "qseries/series.hpp"

namespace qseries {

// ---- claim kinds -----------------------------------------------------------

struct SeriesEquality {
    QExpr lhs, rhs;
};

/// dissect(lhs, k1, l1) == sign * dissect(rhs, k2, l2)
struct DissectionRelation {
    QExpr lhs;
    std::size_t k1 = 1, l1 = 0;
    QExpr rhs;
    std::size_t k2 = 1, l2 = 0;
    int sign = 1;
};

struct VanishingProgression {
    QExpr expr;
    std::size_t k = 1, l = 0;
};

struct Congruence {
    QExpr expr;
    std::size_t k = 1, l = 0;
    Integer modulus;
};

/// Every coefficient at k n + l has sign `expected_sign`, except for the n
/// listed in `exceptions`, whose values are only reported.
struct SignPattern {
    QExpr expr;
    std::size_t k = 1, l = 0;
    int expected_sign = 1;
    std::set<std::size_t> exceptions;
};

using Claim = std::variant<SeriesEquality, DissectionRelation, VanishingProgression, Congruence, SignPattern>;

std::string_view kind_name(const Claim &c);

/// An alternative reading of an ambiguous or misprinted claim.
struct Reading {
    std::string label;
    Claim claim;
};

struct IdentityRecord {
    std::string id;
    /// Label of the source equation or statement.
    std::string citation;
    Claim claim;
    /// Describes `claim` when alternatives exist, e.g. "as printed".
    std::string claim_label;
    /// Other readings; all readings are checked and the record passes when
    /// any of them holds. The report says which one did.
    std::vector<Reading> alternatives;
    /// Caveat carried into every report of this record.
    std::string note;
    std::size_t default_order = 300;
};

// ---- reports ---------------------------------------------------------------

enum class Status { Pass, Fail, Error };
std::string_view to_string(Status s);

/// First disagreement. `index` is the coefficient index for series
/// equalities and the progression index n otherwise.
struct Failure {
    std::size_t index = 0;
    Integer lhs;
    Integer rhs;
};

struct ReadingOutcome {
    std::string label;
    Status status = Status::Pass;
    std::optional<Failure> first_failure;
    std::string message;
};

struct VerificationReport {
    std::string id;
    Status status = Status::Pass;
    std::size_t checked_order = 0;
    /// Number of coefficient pairs (or progression terms) examined.
    std::size_t compared = 0;
    std::optional<Failure> first_failure;
    std::chrono::nanoseconds elapsed{0};
    /// Error text for Status::Error.
    std::string message;
    /// Label of the reading that verified, when the record has several.
    std::string interpretation;
    std::vector<std::string> flags;
    std::vector<ReadingOutcome> readings;
    /// (n, value) at each SignPattern exception.
    std::vector<std::pair<std::size_t, Integer>> exception_values;
};

// ---- operations ------------------------------------------------------------

/// The compiled-in registry, sorted by id.
const std::vector<IdentityRecord> &registry();

const IdentityRecord *find_record(std::string_view id);

VerificationReport verify(const IdentityRecord &rec, std::size_t order);
inline VerificationReport verify(const IdentityRecord &rec) { return verify(rec, rec.default_order); }

/// Verifies every record whose id starts with `filter` (all when empty),
/// possibly in parallel. Reports come back sorted by id.
std::vector<VerificationReport> verify_all(std::size_t order, std::string_view filter = {});
/// An empty `order` verifies each record at its own default order.
std::vector<VerificationReport> verify_all(const std::vector<IdentityRecord> &records,
                                           std::optional<std::size_t> order, std::string_view filter = {});

bool all_pass(const std::vector<VerificationReport> &reports);

// ---- user record files -----------------------------------------------------

class RecordFileError : public std::runtime_error {
public:
    RecordFileError(std::size_t line, const std::string &what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line)
    {
    }
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// One record per line: id | kind | parameters | lhs | rhs
///
///   kind        parameters                       rhs
///   series      (none)                           required
///   dissection  k1=5,l1=0,k2=1,l2=0,sign=-1      required
///   vanishing   k=5,l=3                          empty
///   congruence  k=5,l=3,mod=2                    empty
///   sign        k=5,l=4,sign=-1,except=1;7       empty
///
/// Any kind also accepts order=N. Blank lines and lines starting with '#'
/// are skipped.
std::vector<IdentityRecord> parse_record_file(std::string_view text);
std::vector<IdentityRecord> load_record_file(const std::filesystem::path &path);

} // namespace qseries
