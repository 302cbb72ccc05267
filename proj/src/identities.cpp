#include "qseries/identities.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "qseries/errors.hpp"

namespace qseries {

std::string_view kind_name(const Claim &c)
{
    static constexpr std::string_view names[] = {"SeriesEquality", "DissectionRelation", "VanishingProgression",
                                                  "Congruence", "SignPattern"};
    return names[c.index()];
}

std::string_view to_string(Status s)
{
    switch (s) {
    case Status::Pass:
        return "pass";
    case Status::Fail:
        return "fail";
    case Status::Error:
        return "error";
    }
    return "?";
}

namespace {

struct Outcome {
    Status status = Status::Pass;
    std::optional<Failure> failure;
    std::size_t compared = 0;
    std::vector<std::pair<std::size_t, Integer>> exception_values;
    std::string message;
};

Outcome compare(const TruncatedSeries &lhs, const TruncatedSeries &rhs, int sign)
{
    Outcome out;
    const auto n = std::min(lhs.order(), rhs.order());
    out.compared = n + 1;
    for (std::size_t i = 0; i <= n; ++i) {
        const Integer r = sign * rhs[i];
        if (lhs[i] != r) {
            out.status = Status::Fail;
            out.failure = Failure{i, lhs[i], r};
            break;
        }
    }
    return out;
}

// Progression terms n = 0..m with k m + l <= order.
TruncatedSeries selected(const QExpr &e, std::size_t k, std::size_t l, std::size_t order)
{
    return dissect(evaluate(e, order), k, l);
}

Outcome check(const SeriesEquality &c, std::size_t order)
{
    return compare(evaluate(c.lhs, order), evaluate(c.rhs, order), 1);
}

Outcome check(const DissectionRelation &c, std::size_t order)
{
    if (c.l1 > order || c.l2 > order) {
        return {};
    }
    // compare the same number of terms on both sides without overshooting `order`
    const auto m = std::min((order - c.l1) / c.k1, (order - c.l2) / c.k2);
    return compare(selected(c.lhs, c.k1, c.l1, c.k1 * m + c.l1), selected(c.rhs, c.k2, c.l2, c.k2 * m + c.l2),
                   c.sign);
}

Outcome check(const VanishingProgression &c, std::size_t order)
{
    if (c.l > order) {
        return {};
    }
    const auto s = selected(c.expr, c.k, c.l, order);
    Outcome out;
    out.compared = s.order() + 1;
    for (std::size_t n = 0; n <= s.order(); ++n) {
        if (sgn(s[n]) != 0) {
            out.status = Status::Fail;
            out.failure = Failure{n, s[n], 0};
            break;
        }
    }
    return out;
}

Outcome check(const Congruence &c, std::size_t order)
{
    if (c.l > order) {
        return {};
    }
    const auto s = selected(c.expr, c.k, c.l, order);
    Outcome out;
    out.compared = s.order() + 1;
    for (std::size_t n = 0; n <= s.order(); ++n) {
        Integer r;
        mpz_mod(r.get_mpz_t(), s[n].get_mpz_t(), c.modulus.get_mpz_t());
        if (sgn(r) != 0) {
            out.status = Status::Fail;
            out.failure = Failure{n, s[n], r};
            break;
        }
    }
    return out;
}

Outcome check(const SignPattern &c, std::size_t order)
{
    if (c.l > order) {
        return {};
    }
    const auto s = selected(c.expr, c.k, c.l, order);
    Outcome out;
    out.compared = s.order() + 1;
    for (std::size_t n = 0; n <= s.order(); ++n) {
        if (c.exceptions.contains(n)) {
            out.exception_values.emplace_back(n, s[n]);
            continue;
        }
        if (sgn(s[n]) != c.expected_sign && out.status == Status::Pass) {
            out.status = Status::Fail;
            out.failure = Failure{n, s[n], c.expected_sign};
        }
    }
    return out;
}

Outcome check_claim(const Claim &claim, std::size_t order)
{
    try {
        return std::visit([order](const auto &c) { return check(c, order); }, claim);
    } catch (const std::exception &e) {
        Outcome out;
        out.status = Status::Error;
        out.message = e.what();
        return out;
    }
}

std::string describe_failure(const Outcome &o)
{
    if (o.status == Status::Error) {
        return "error: " + o.message;
    }
    if (!o.failure) {
        return "holds";
    }
    return "fails at index " + std::to_string(o.failure->index) + " (" + o.failure->lhs.get_str() + " vs " +
           o.failure->rhs.get_str() + ")";
}

} // namespace

VerificationReport verify(const IdentityRecord &rec, std::size_t order)
{
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.id = rec.id;
    report.checked_order = order;
    if (!rec.note.empty()) {
        report.flags.push_back(rec.note);
    }

    if (order < 1) {
        report.status = Status::Error;
        report.message = "verification order must be at least 1";
        return report;
    }

    const Outcome primary = check_claim(rec.claim, order);
    report.status = primary.status;
    report.first_failure = primary.failure;
    report.compared = primary.compared;
    report.message = primary.message;
    report.exception_values = primary.exception_values;

    if (!rec.alternatives.empty()) {
        const std::string primary_label = rec.claim_label.empty() ? "primary" : rec.claim_label;
        report.readings.push_back({primary_label, primary.status, primary.failure, primary.message});
        std::optional<std::size_t> winner;
        if (primary.status == Status::Pass) {
            report.interpretation = primary_label;
        }
        for (std::size_t i = 0; i < rec.alternatives.size(); ++i) {
            const auto &alt = rec.alternatives[i];
            const Outcome o = check_claim(alt.claim, order);
            report.readings.push_back({alt.label, o.status, o.failure, o.message});
            if (o.status == Status::Pass && report.interpretation.empty()) {
                winner = i;
                report.interpretation = alt.label;
                report.status = Status::Pass;
                report.first_failure.reset();
                report.message.clear();
                report.compared = o.compared;
                report.exception_values = o.exception_values;
            }
        }
        if (winner) {
            report.flags.push_back("reading '" + primary_label + "' " + describe_failure(primary) + "; reading '" +
                                   rec.alternatives[*winner].label + "' holds");
        } else if (primary.status == Status::Pass) {
            for (std::size_t i = 1; i < report.readings.size(); ++i) {
                const auto &o = report.readings[i];
                if (o.status != Status::Pass) {
                    Outcome alt;
                    alt.status = o.status;
                    alt.failure = o.first_failure;
                    alt.message = o.message;
                    report.flags.push_back("reading '" + o.label + "' " + describe_failure(alt));
                }
            }
        }
    }

    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
}

std::vector<VerificationReport> verify_all(const std::vector<IdentityRecord> &records,
                                           std::optional<std::size_t> order, std::string_view filter)
{
    std::vector<const IdentityRecord *> selected;
    for (const auto &r : records) {
        if (r.id.starts_with(filter)) {
            selected.push_back(&r);
        }
    }
    std::sort(selected.begin(), selected.end(), [](auto *a, auto *b) { return a->id < b->id; });

    std::vector<VerificationReport> reports(selected.size());
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t i = next++; i < selected.size(); i = next++) {
            reports[i] = verify(*selected[i], order.value_or(selected[i]->default_order));
        }
    };
    const auto threads = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 16);
    std::vector<std::jthread> pool;
    for (std::size_t t = 1; t < std::min(threads, selected.size()); ++t) {
        pool.emplace_back(worker);
    }
    worker();
    pool.clear();
    return reports;
}

std::vector<VerificationReport> verify_all(std::size_t order, std::string_view filter)
{
    return verify_all(registry(), order, filter);
}

const IdentityRecord *find_record(std::string_view id)
{
    const auto &r = registry();
    const auto it = std::find_if(r.begin(), r.end(), [id](const auto &rec) { return rec.id == id; });
    return it == r.end() ? nullptr : &*it;
}

bool all_pass(const std::vector<VerificationReport> &reports)
{
    return std::all_of(reports.begin(), reports.end(), [](const auto &r) { return r.status == Status::Pass; });
}

} // namespace qseries
