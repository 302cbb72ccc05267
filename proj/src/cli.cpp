#include "qseries/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <set>

#include "qseries/combinatorics.hpp"
#include "qseries/errors.hpp"
#include "qseries/identities.hpp"
#include "qseries/qexpr.hpp"

namespace qseries {
namespace {

using json = nlohmann::ordered_json;

enum class Format { Text, Json };

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

json coeff_array(std::span<const Integer> cs)
{
    json a = json::array();
    for (const auto &c : cs) {
        a.push_back(c.get_str());
    }
    return a;
}

void print_coeffs(std::ostream &out, std::span<const Integer> cs)
{
    for (std::size_t i = 0; i < cs.size(); ++i) {
        out << (i ? " " : "") << cs[i].get_str();
    }
    out << '\n';
}

json failure_json(const std::optional<Failure> &f)
{
    if (!f) {
        return nullptr;
    }
    return {{"index", f->index}, {"lhs", f->lhs.get_str()}, {"rhs", f->rhs.get_str()}};
}

json report_json(const VerificationReport &r, const IdentityRecord &rec)
{
    json j;
    j["id"] = r.id;
    j["citation"] = rec.citation;
    j["kind"] = kind_name(rec.claim);
    j["status"] = to_string(r.status);
    j["checkedOrder"] = r.checked_order;
    j["compared"] = r.compared;
    j["firstFailure"] = failure_json(r.first_failure);
    if (!r.message.empty()) {
        j["message"] = r.message;
    }
    if (!r.interpretation.empty()) {
        j["interpretation"] = r.interpretation;
    }
    if (!r.readings.empty()) {
        json rs = json::array();
        for (const auto &o : r.readings) {
            json x{{"label", o.label}, {"status", to_string(o.status)}, {"firstFailure", failure_json(o.first_failure)}};
            if (!o.message.empty()) {
                x["message"] = o.message;
            }
            rs.push_back(std::move(x));
        }
        j["readings"] = std::move(rs);
    }
    if (!r.exception_values.empty()) {
        json ex = json::array();
        for (const auto &[n, v] : r.exception_values) {
            ex.push_back({{"n", n}, {"value", v.get_str()}});
        }
        j["exceptions"] = std::move(ex);
    }
    j["flags"] = r.flags;
    return j;
}

void report_text(std::ostream &out, const VerificationReport &r)
{
    static constexpr const char *tags[] = {"PASS ", "FAIL ", "ERROR"};
    const auto ms = std::chrono::duration<double, std::milli>(r.elapsed).count();
    out << tags[static_cast<int>(r.status)] << ' ' << r.id << "  (order " << r.checked_order << ", " << r.compared
        << " compared, " << std::fixed << std::setprecision(1) << ms << " ms)\n";
    out.unsetf(std::ios::floatfield);
    if (r.first_failure) {
        out << "      first failure at " << r.first_failure->index << ": " << r.first_failure->lhs.get_str()
            << " vs " << r.first_failure->rhs.get_str() << '\n';
    }
    if (!r.message.empty()) {
        out << "      " << r.message << '\n';
    }
    if (!r.interpretation.empty()) {
        out << "      reading: " << r.interpretation << '\n';
    }
    for (const auto &[n, v] : r.exception_values) {
        out << "      exception n=" << n << ": " << v.get_str() << '\n';
    }
    for (const auto &f : r.flags) {
        out << "      note: " << f << '\n';
    }
}

struct Options {
    std::size_t order = 300;
    bool order_given = false;
    Format format = Format::Text;
    std::string expr;
    std::size_t mod = 1;
    std::size_t res = 0;
    std::size_t up_to = 200;
    std::string filter;
    std::vector<std::string> record_files;
    bool only_files = false;
    std::string spec;
    std::size_t n = 0;
    std::string expect;
};

int cmd_expand(const Options &o, std::ostream &out)
{
    const auto e = parse(o.expr);
    const auto s = evaluate(e, o.order);
    if (o.format == Format::Json) {
        out << json{{"expr", o.expr}, {"order", o.order}, {"coeffs", coeff_array(s.coeffs())}}.dump() << '\n';
    } else {
        print_coeffs(out, s.coeffs());
    }
    return kPass;
}

int cmd_dissect(const Options &o, std::ostream &out, std::ostream &err)
{
    if (o.res >= o.mod) {
        err << "error: --res must be smaller than --mod\n";
        return kUsage;
    }
    const auto e = parse(o.expr);
    const auto s = dissect(evaluate(e, o.order), o.mod, o.res);
    if (o.format == Format::Json) {
        out << json{{"expr", o.expr},
                    {"order", o.order},
                    {"mod", o.mod},
                    {"res", o.res},
                    {"coeffs", coeff_array(s.coeffs())}}
                   .dump()
            << '\n';
    } else {
        print_coeffs(out, s.coeffs());
    }
    return kPass;
}

int cmd_verify(const Options &o, std::ostream &out, std::ostream &err)
{
    std::vector<IdentityRecord> records;
    if (!o.only_files) {
        records = registry();
    }
    for (const auto &path : o.record_files) {
        try {
            auto extra = load_record_file(path);
            records.insert(records.end(), std::make_move_iterator(extra.begin()),
                           std::make_move_iterator(extra.end()));
        } catch (const RecordFileError &e) {
            err << "error: " << path << ": " << e.what() << '\n';
            return kUsage;
        }
    }
    std::set<std::string_view> ids;
    for (const auto &r : records) {
        if (!ids.insert(r.id).second) {
            err << "error: record id '" << r.id << "' is defined more than once\n";
            return kUsage;
        }
    }
    const auto reports = verify_all(records, o.order_given ? std::optional(o.order) : std::nullopt, o.filter);
    if (reports.empty()) {
        err << "warning: no records match filter '" << o.filter << "'\n";
    }
    std::map<std::string, const IdentityRecord *> by_id;
    for (const auto &r : records) {
        by_id.emplace(r.id, &r);
    }
    std::size_t passed = 0;
    for (const auto &r : reports) {
        passed += r.status == Status::Pass;
    }
    if (o.format == Format::Json) {
        json a = json::array();
        for (const auto &r : reports) {
            a.push_back(report_json(r, *by_id.at(r.id)));
        }
        out << a.dump(2) << '\n';
    } else {
        for (const auto &r : reports) {
            report_text(out, r);
        }
        out << passed << '/' << reports.size() << " records pass\n";
    }
    return passed == reports.size() ? kPass : kFail;
}

int cmd_scan(const Options &o, std::ostream &out, std::ostream &err)
{
    if (o.res >= o.mod) {
        err << "error: --res must be smaller than --mod\n";
        return kUsage;
    }
    if (!o.expect.empty() && o.expect != "+" && o.expect != "-" && o.expect != "0") {
        err << "error: --expect takes +, - or 0\n";
        return kUsage;
    }
    const auto s = scan_signs(parse(o.expr), o.mod, o.res, o.up_to);
    const auto signs = sign_string(s);
    const bool ok = o.expect.empty() || signs.find_first_not_of(o.expect[0]) == std::string::npos;
    if (o.format == Format::Json) {
        json j{{"expr", o.expr}, {"mod", o.mod}, {"res", o.res}, {"upTo", o.up_to}, {"signs", signs}};
        j["zeros"] = s.zeros;
        j["signChanges"] = s.sign_changes;
        if (!o.expect.empty()) {
            j["expect"] = o.expect;
            j["status"] = ok ? "pass" : "fail";
        }
        out << j.dump() << '\n';
    } else {
        out << signs << '\n';
        out << "zeros:";
        for (auto n : s.zeros) {
            out << ' ' << n;
        }
        out << "\nsign changes:";
        for (auto n : s.sign_changes) {
            out << ' ' << n;
        }
        out << '\n';
        if (!o.expect.empty()) {
            out << (ok ? "pass" : "fail") << '\n';
        }
    }
    return ok ? kPass : kFail;
}

int cmd_count(const Options &o, std::ostream &out, std::ostream &err)
{
    PartClassSpec spec;
    try {
        spec = parse_part_spec(o.spec);
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    if (o.n > kPartitionBudget) {
        err << "error: --n exceeds the budget of " << kPartitionBudget << '\n';
        return kUsage;
    }
    const auto c = count_partitions(spec, o.n);
    if (o.format == Format::Json) {
        out << json{{"spec", to_string(spec)}, {"n", o.n}, {"count", c.get_str()}}.dump() << '\n';
    } else {
        out << c.get_str() << '\n';
    }
    return kPass;
}

int cmd_interpret(const Options &o, std::ostream &out)
{
    bool all = true;
    json a = json::array();
    for (const auto &it : standard_interpretations()) {
        const auto r = verify_interpretation(it.spec, parse(it.series), it.k, it.l, o.up_to, it.sign, it.multiplier);
        all = all && r.pass;
        if (o.format == Format::Json) {
            json j{{"id", it.id}, {"spec", to_string(it.spec)}, {"res", it.l}, {"multiplier", it.multiplier},
                   {"sign", it.sign}, {"upTo", r.checked_up_to}, {"status", r.pass ? "pass" : "fail"}};
            if (r.first_mismatch) {
                j["firstMismatch"] = {{"n", r.first_mismatch->n},
                                      {"expected", r.first_mismatch->expected.get_str()},
                                      {"actual", r.first_mismatch->actual.get_str()}};
            }
            a.push_back(std::move(j));
        } else {
            out << (r.pass ? "PASS " : "FAIL ") << it.id << "  " << to_string(it.spec) << "  x" << it.sign * it.multiplier
                << "  n<=" << r.checked_up_to << '\n';
            if (r.first_mismatch) {
                out << "      n=" << r.first_mismatch->n << ": expected " << r.first_mismatch->expected.get_str()
                    << ", series gives " << r.first_mismatch->actual.get_str() << '\n';
            }
        }
    }
    if (o.format == Format::Json) {
        out << a.dump(2) << '\n';
    }
    return all ? kPass : kFail;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Exact q-series engine: expansion, dissection and identity verification"};
    app.name("qseries");
    app.require_subcommand(1);
    app.fallthrough(false);

    Options o;
    const std::map<std::string, Format> formats{{"text", Format::Text}, {"json", Format::Json}};
    const auto common = [&](CLI::App *sub) {
        sub->add_option("--format", o.format, "text or json")
            ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    };
    const auto with_order = [&](CLI::App *sub) {
        sub->add_option("-N,--order", o.order, "truncation order (default 300)")
            ->check(CLI::PositiveNumber)
            ->each([&](const std::string &) { o.order_given = true; });
    };

    auto *expand = app.add_subcommand("expand", "print the coefficients of an expression");
    expand->add_option("expr", o.expr, "expression")->required();
    with_order(expand);
    common(expand);

    auto *dis = app.add_subcommand("dissect", "print the coefficients at indices mod*n + res");
    dis->add_option("expr", o.expr, "expression")->required();
    dis->add_option("--mod", o.mod, "modulus k")->required()->check(CLI::PositiveNumber);
    dis->add_option("--res", o.res, "residue l")->required();
    with_order(dis);
    common(dis);

    auto *ver = app.add_subcommand("verify", "verify the identity registry");
    ver->add_option("--filter", o.filter, "id prefix");
    ver->add_option("--records", o.record_files, "extra record file(s)")->check(CLI::ExistingFile);
    ver->add_flag("--only-records", o.only_files, "skip the compiled-in registry");
    with_order(ver);
    common(ver);

    auto *scan = app.add_subcommand("scan", "sign table of the coefficients at mod*n + res");
    scan->add_option("expr", o.expr, "expression")->required();
    scan->add_option("--mod", o.mod, "modulus k")->required()->check(CLI::PositiveNumber);
    scan->add_option("--res", o.res, "residue l")->required();
    scan->add_option("--upTo", o.up_to, "last n (default 200)");
    scan->add_option("--expect", o.expect, "fail unless every sign is this one (+, - or 0)");
    common(scan);

    auto *count = app.add_subcommand("count", "count flavoured partitions, e.g. \"M=10;1x2,9x2,2x1,8x1,4x2,6x2\"");
    count->add_option("spec", o.spec, "part class spec")->required();
    count->add_option("--n", o.n, "number to partition")->required();
    common(count);

    auto *interp = app.add_subcommand("interpret", "check the partition readings of the 5-dissections");
    interp->add_option("--upTo", o.up_to, "last n (default 200)");
    common(interp);

    std::vector<std::string> argv_store{"qseries"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char *> argv;
    for (auto &a : argv_store) {
        argv.push_back(a.data());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kPass : kUsage;
    }

    try {
        if (expand->parsed()) {
            return cmd_expand(o, out);
        }
        if (dis->parsed()) {
            return cmd_dissect(o, out, err);
        }
        if (ver->parsed()) {
            return cmd_verify(o, out, err);
        }
        if (scan->parsed()) {
            return cmd_scan(o, out, err);
        }
        if (count->parsed()) {
            return cmd_count(o, out, err);
        }
        if (interp->parsed()) {
            return cmd_interpret(o, out);
        }
    } catch (const SyntaxError &e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const InvalidFactor &e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kFail;
    }
    return kUsage;
}

} // namespace qseries
