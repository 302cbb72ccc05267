#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "qseries/errors.hpp"
#include "qseries/identities.hpp"

namespace qseries {
namespace {

std::string_view trim(std::string_view s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) {
        return {};
    }
    return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    for (;;) {
        const auto p = s.find(sep);
        out.push_back(trim(s.substr(0, p)));
        if (p == std::string_view::npos) {
            return out;
        }
        s.remove_prefix(p + 1);
    }
}

class Params {
public:
    Params(std::string_view text, std::size_t line) : line_(line)
    {
        if (text.empty()) {
            return;
        }
        for (auto kv : split(text, ',')) {
            const auto eq = kv.find('=');
            if (eq == std::string_view::npos) {
                throw RecordFileError(line, "expected key=value, got '" + std::string(kv) + "'");
            }
            values_[std::string(trim(kv.substr(0, eq)))] = std::string(trim(kv.substr(eq + 1)));
        }
    }

    long integer(const std::string &key, std::optional<long> fallback = std::nullopt)
    {
        const auto it = values_.find(key);
        if (it == values_.end()) {
            if (fallback) {
                return *fallback;
            }
            throw RecordFileError(line_, "missing parameter '" + key + "'");
        }
        used_.insert(key);
        return to_long(key, it->second);
    }

    std::size_t positive(const std::string &key, std::optional<long> fallback = std::nullopt)
    {
        const auto v = integer(key, fallback);
        if (v < 1) {
            throw RecordFileError(line_, "parameter '" + key + "' must be positive");
        }
        return static_cast<std::size_t>(v);
    }

    std::size_t natural(const std::string &key, std::optional<long> fallback = std::nullopt)
    {
        const auto v = integer(key, fallback);
        if (v < 0) {
            throw RecordFileError(line_, "parameter '" + key + "' must be non-negative");
        }
        return static_cast<std::size_t>(v);
    }

    int sign(const std::string &key, int fallback)
    {
        const auto v = integer(key, fallback);
        if (v != 1 && v != -1) {
            throw RecordFileError(line_, "parameter '" + key + "' must be 1 or -1");
        }
        return static_cast<int>(v);
    }

    std::set<std::size_t> list(const std::string &key)
    {
        std::set<std::size_t> out;
        const auto it = values_.find(key);
        if (it == values_.end() || it->second.empty()) {
            return out;
        }
        used_.insert(key);
        for (auto item : split(it->second, ';')) {
            const auto v = to_long(key, std::string(item));
            if (v < 0) {
                throw RecordFileError(line_, "parameter '" + key + "' must list non-negative integers");
            }
            out.insert(static_cast<std::size_t>(v));
        }
        return out;
    }

    void check_all_used() const
    {
        for (const auto &[k, v] : values_) {
            if (!used_.contains(k)) {
                throw RecordFileError(line_, "unknown parameter '" + k + "'");
            }
        }
    }

private:
    long to_long(const std::string &key, const std::string &text) const
    {
        long v = 0;
        const auto *end = text.data() + text.size();
        const auto [p, ec] = std::from_chars(text.data(), end, v);
        if (ec != std::errc{} || p != end) {
            throw RecordFileError(line_, "parameter '" + key + "' is not an integer: '" + text + "'");
        }
        return v;
    }

    std::size_t line_;
    std::map<std::string, std::string> values_;
    std::set<std::string> used_;
};

QExpr parse_field(std::string_view text, std::size_t line, const char *which)
{
    if (text.empty()) {
        throw RecordFileError(line, std::string(which) + " expression is empty");
    }
    try {
        return parse(text);
    } catch (const Error &e) {
        throw RecordFileError(line, std::string(which) + ": " + e.what());
    }
}

void check_residue(std::size_t k, std::size_t l, std::size_t line)
{
    if (l >= k) {
        throw RecordFileError(line, "residue " + std::to_string(l) + " must be smaller than modulus " +
                                        std::to_string(k));
    }
}

IdentityRecord parse_line(std::string_view text, std::size_t line)
{
    auto fields = split(text, '|');
    if (fields.size() == 4) {
        fields.emplace_back();
    }
    if (fields.size() != 5) {
        throw RecordFileError(line, "expected 5 fields separated by '|', got " + std::to_string(fields.size()));
    }
    const auto [id, kind, param_text, lhs, rhs] = std::tie(fields[0], fields[1], fields[2], fields[3], fields[4]);
    if (id.empty()) {
        throw RecordFileError(line, "empty id");
    }
    Params p(param_text, line);
    IdentityRecord r;
    r.id = std::string(id);
    r.citation = "user";
    r.default_order = p.positive("order", 300);

    const auto no_rhs = [&] {
        if (!rhs.empty()) {
            throw RecordFileError(line, "kind '" + std::string(kind) + "' takes no right-hand side");
        }
    };
    if (kind == "series") {
        r.claim = SeriesEquality{parse_field(lhs, line, "lhs"), parse_field(rhs, line, "rhs")};
    } else if (kind == "dissection") {
        DissectionRelation c;
        c.lhs = parse_field(lhs, line, "lhs");
        c.rhs = parse_field(rhs, line, "rhs");
        c.k1 = p.positive("k1");
        c.l1 = p.natural("l1");
        c.k2 = p.positive("k2", 1);
        c.l2 = p.natural("l2", 0);
        c.sign = p.sign("sign", 1);
        check_residue(c.k1, c.l1, line);
        check_residue(c.k2, c.l2, line);
        r.claim = c;
    } else if (kind == "vanishing") {
        no_rhs();
        auto e = parse_field(lhs, line, "expression");
        const auto k = p.positive("k");
        const auto l = p.natural("l");
        check_residue(k, l, line);
        r.claim = VanishingProgression{e, k, l};
    } else if (kind == "congruence") {
        no_rhs();
        auto e = parse_field(lhs, line, "expression");
        const auto k = p.positive("k");
        const auto l = p.natural("l");
        check_residue(k, l, line);
        r.claim = Congruence{e, k, l, Integer(static_cast<long>(p.positive("mod")))};
    } else if (kind == "sign") {
        no_rhs();
        auto e = parse_field(lhs, line, "expression");
        const auto k = p.positive("k");
        const auto l = p.natural("l");
        check_residue(k, l, line);
        const auto s = p.sign("sign", 1);
        r.claim = SignPattern{e, k, l, s, p.list("except")};
    } else {
        throw RecordFileError(line, "unknown kind '" + std::string(kind) +
                                        "' (expected series, dissection, vanishing, congruence or sign)");
    }
    p.check_all_used();
    return r;
}

} // namespace

std::vector<IdentityRecord> parse_record_file(std::string_view text)
{
    std::vector<IdentityRecord> out;
    std::set<std::string> seen;
    std::size_t line = 0;
    for (auto raw : split(text, '\n')) {
        ++line;
        if (raw.empty() || raw.front() == '#') {
            continue;
        }
        auto rec = parse_line(raw, line);
        if (!seen.insert(rec.id).second) {
            throw RecordFileError(line, "duplicate id '" + rec.id + "'");
        }
        out.push_back(std::move(rec));
    }
    return out;
}

std::vector<IdentityRecord> load_record_file(const std::filesystem::path &path)
{
    std::ifstream in(path);
    if (!in) {
        throw RecordFileError(0, "cannot open " + path.string());
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_record_file(ss.str());
}

} // namespace qseries
