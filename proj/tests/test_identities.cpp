#include <doctest.h>

#include <algorithm>

#include "qseries/errors.hpp"
#include "qseries/identities.hpp"

using namespace qseries;

namespace {

const char *g1 = "(-q,-q^4;q^5)_inf^2*(q^4,q^6;q^10)_inf";
const char *h1 = "(-q^2,-q^3;q^5)_inf^2*(q^2,q^8;q^10)_inf";

IdentityRecord equality(std::string id, const std::string &lhs, const std::string &rhs)
{
    IdentityRecord r;
    r.id = std::move(id);
    r.claim = SeriesEquality{parse(lhs), parse(rhs)};
    return r;
}

} // namespace

TEST_CASE("registry contents")
{
    const auto &reg = registry();
    CHECK(reg.size() >= 60);
    CHECK(std::is_sorted(reg.begin(), reg.end(), [](auto &a, auto &b) { return a.id < b.id; }));
    for (std::size_t i = 1; i < reg.size(); ++i) {
        CHECK(reg[i - 1].id != reg[i].id);
    }
    for (const auto &r : reg) {
        CHECK_FALSE(r.citation.empty());
    }

    const auto *g3 = find_record("T1.G3");
    REQUIRE(g3);
    CHECK(kind_name(g3->claim) == "VanishingProgression");
    const auto &v = std::get<VanishingProgression>(g3->claim);
    CHECK(v.k == 5);
    CHECK(v.l == 3);

    REQUIRE(find_record("T4.i3"));
    CHECK(kind_name(find_record("T4.i3")->claim) == "SeriesEquality");
    CHECK(find_record("no.such.record") == nullptr);
}

TEST_CASE("verify examples")
{
    for (const char *id : {"T1.G3", "T4.i1", "T4.i3", "T3.r7", "C.g1h1-eq"}) {
        const auto *rec = find_record(id);
        REQUIRE_MESSAGE(rec, id);
        const auto rep = verify(*rec, 500);
        CHECK_MESSAGE(rep.status == Status::Pass, id);
        CHECK(rep.checked_order == 500);
        CHECK_FALSE(rep.first_failure);
    }
}

TEST_CASE("a corrupted identity fails at the first perturbed coefficient")
{
    const auto *rec = find_record("T4.i1");
    REQUIRE(rec);
    auto bad = *rec;
    auto &eq = std::get<SeriesEquality>(bad.claim);
    eq.rhs = eq.rhs * parse("1+q");
    const auto rep = verify(bad, 100);
    CHECK(rep.status == Status::Fail);
    REQUIRE(rep.first_failure);
    CHECK(rep.first_failure->index == 1);
    CHECK(rep.first_failure->lhs != rep.first_failure->rhs);
}

TEST_CASE("verify_all by prefix")
{
    const auto reps = verify_all(300, "T3.");
    REQUIRE(reps.size() == 8);
    CHECK(all_pass(reps));
    CHECK(reps.front().id == "T3.r1");
    CHECK(reps.back().id == "T3.r8");
    CHECK(verify_all(300, "nothing-matches").empty());
}

TEST_CASE("verify_all is deterministic and ordered")
{
    const auto a = verify_all(120, "L2.");
    const auto b = verify_all(120, "L2.");
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].id == b[i].id);
        CHECK(a[i].status == b[i].status);
        if (i) {
            CHECK(a[i - 1].id < a[i].id);
        }
    }
}

TEST_CASE("evaluation problems surface as errors")
{
    const auto rep = verify(equality("bad", "1/q", "1"), 20);
    CHECK(rep.status == Status::Error);
    CHECK_FALSE(rep.message.empty());
    CHECK(verify(equality("ok", "1", "1"), 0).status == Status::Error);
}

TEST_CASE("alternative readings")
{
    const auto rep = verify(*find_record("KT.i2"), 300);
    CHECK(rep.status == Status::Pass);
    CHECK(rep.interpretation == "(q^10;q^10)_inf squared on the right");
    CHECK_FALSE(rep.flags.empty());
    REQUIRE(rep.readings.size() == 2);
    CHECK(rep.readings[0].status == Status::Fail);
    REQUIRE(rep.readings[0].first_failure);
    CHECK(rep.readings[0].first_failure->index == 10);
    CHECK(rep.readings[1].status == Status::Pass);

    const auto hat = verify(*find_record("R5.hat1"), 300);
    CHECK(hat.status == Status::Pass);
    CHECK(hat.readings[0].status == Status::Fail);
}

TEST_CASE("sign patterns report exceptions")
{
    const auto rep = verify(*find_record("C.signs.h1.5n+4"), 500);
    CHECK(rep.status == Status::Pass);
    REQUIRE(rep.exception_values.size() == 1);
    CHECK(rep.exception_values[0].first == 1);
    CHECK(rep.exception_values[0].second == 0);

    IdentityRecord r;
    r.id = "flipped";
    r.claim = SignPattern{parse(h1), 5, 4, 1, {1}};
    const auto bad = verify(r, 100);
    CHECK(bad.status == Status::Fail);
    REQUIRE(bad.first_failure);
    CHECK(bad.first_failure->index == 0);
}

TEST_CASE("congruence and vanishing failures")
{
    IdentityRecord r;
    r.id = "c";
    r.claim = Congruence{parse("(q;q)_inf"), 1, 0, Integer(2)};
    const auto rep = verify(r, 50);
    CHECK(rep.status == Status::Fail);
    REQUIRE(rep.first_failure);
    CHECK(rep.first_failure->index == 0);

    r.claim = VanishingProgression{parse(g1), 5, 1};
    const auto v = verify(r, 50);
    CHECK(v.status == Status::Fail);
    REQUIRE(v.first_failure);
    CHECK(v.first_failure->index == 0);
}

TEST_CASE("passing records keep passing at higher order")
{
    for (const char *id : {"T2.H0", "L2.jtp.2", "T3.r1", "L4.ff1"}) {
        const auto *rec = find_record(id);
        REQUIRE_MESSAGE(rec, id);
        for (std::size_t order : {40, 120, 400}) {
            CHECK_MESSAGE(verify(*rec, order).status == Status::Pass, id);
        }
    }
}

TEST_CASE("dissection relations equal the selected progressions")
{
    for (const auto &rep : verify_all(200, "T3.")) {
        const auto &rel = std::get<DissectionRelation>(find_record(rep.id)->claim);
        const auto m = std::min((200 - rel.l1) / rel.k1, (200 - rel.l2) / rel.k2);
        const auto a = dissect(evaluate(rel.lhs, rel.k1 * m + rel.l1), rel.k1, rel.l1);
        const auto b = dissect(evaluate(rel.rhs, rel.k2 * m + rel.l2), rel.k2, rel.l2);
        for (std::size_t n = 0; n <= m; ++n) {
            REQUIRE(a[n] == rel.sign * b[n]);
        }
    }
}

TEST_CASE("two forms of the same product identities agree")
{
    const auto lhs1 = evaluate(std::get<SeriesEquality>(find_record("T4.i1")->claim).lhs, 200);
    const auto lhs2 = evaluate(parse(std::string(g1) + "+" + h1), 200);
    for (std::size_t n = 0; n <= 200; ++n) {
        REQUIRE(lhs1[n] == lhs2[n]);
    }
    CHECK(verify(*find_record("KT.i1"), 300).status == Status::Pass);
}

TEST_CASE("record files")
{
    const auto recs = parse_record_file("# comment\n"
                                        "\n"
                                        "a | series | | (q;q)_inf | 1/(1/(q;q)_inf)\n"
                                        "b | vanishing | k=5,l=3,order=100 | " +
                                        std::string(g1) +
                                        " |\n"
                                        "c | sign | k=5,l=4,sign=-1,except=1 | " +
                                        h1 +
                                        " |\n"
                                        "d | congruence | k=1,l=0,mod=1 | (q;q)_inf |\n"
                                        "e | dissection | k1=5,l1=1,k2=5,l2=2 | " + render(family_g(1, 2, 5)) + " | " +
                                        render(family_g(2, 4, 5)) + "\n");
    REQUIRE(recs.size() == 5);
    CHECK(recs[0].citation == "user");
    CHECK(recs[1].default_order == 100);
    CHECK(std::get<SignPattern>(recs[2].claim).exceptions == std::set<std::size_t>{1});
    CHECK(std::get<SignPattern>(recs[2].claim).expected_sign == -1);
    CHECK(all_pass(verify_all(recs, std::nullopt)));

    const auto line_of = [](const std::string &text) -> std::size_t {
        try {
            parse_record_file(text);
        } catch (const RecordFileError &e) {
            return e.line();
        }
        return 0;
    };
    CHECK(line_of("# x\nz | nonsense | | 1 | 1\n") == 2);
    CHECK(line_of("z | series | | 1\n") == 1);
    CHECK(line_of("z | vanishing | k=5 | 1 |\n") == 1);
    CHECK(line_of("z | vanishing | k=5,l=1,bogus=2 | 1 |\n") == 1);
    CHECK(line_of("z | series | | (q;q | 1\n") == 1);
    CHECK(line_of("z | sign | k=5,l=1,sign=2 | 1 |\n") == 1);
    CHECK(line_of("z | vanishing | k=5,l=5 | 1 |\n") == 1);
    CHECK(line_of("a | series | | 1 | 1\na | series | | 1 | 1\n") == 2);
    CHECK_THROWS(load_record_file("/nonexistent/file.records"));
}
