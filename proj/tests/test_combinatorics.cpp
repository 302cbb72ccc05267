#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qseries/combinatorics.hpp"
#include "qseries/errors.hpp"

using namespace qseries;

namespace {

const char *g1 = "(-q,-q^4;q^5)_inf^2*(q^4,q^6;q^10)_inf";
const char *h1 = "(-q^2,-q^3;q^5)_inf^2*(q^2,q^8;q^10)_inf";
const char *g2 = "(q,q^4;q^5)_inf^2*(q^4,q^6;q^10)_inf";

PartClassSpec g0_spec() { return parse_part_spec("M=10;1x2,9x2,2x1,8x1,4x2,6x2"); }

PartClassSpec random_spec(std::mt19937_64 &rng)
{
    PartClassSpec s;
    s.modulus = 1 + rng() % 12;
    for (std::size_t r = 1; r <= s.modulus; ++r) {
        if (rng() % 2) {
            s.classes.push_back({r, 1 + rng() % 3});
        }
    }
    if (s.classes.empty()) {
        s.classes.push_back({s.modulus, 1});
    }
    return s;
}

} // namespace

TEST_CASE("spec text")
{
    const auto s = g0_spec();
    CHECK(s.modulus == 10);
    CHECK(s.classes.size() == 6);
    CHECK(s.flavours_of(11) == 2);
    CHECK(s.flavours_of(12) == 1);
    CHECK(s.flavours_of(5) == 0);
    CHECK(to_string(s) == "M=10;1x2,9x2,2x1,8x1,4x2,6x2");
    CHECK_THROWS_AS(parse_part_spec("M=10;1x2,1x3"), InvalidParameters);
    CHECK_THROWS_AS(parse_part_spec("M=10;11x1"), InvalidParameters);
    CHECK_THROWS_AS(parse_part_spec("M=10;1x0"), InvalidParameters);
    CHECK_THROWS_AS(parse_part_spec("10;1x1"), InvalidParameters);
    CHECK_THROWS_AS(parse_part_spec("M=0;1x1"), InvalidParameters);
    CHECK_THROWS_AS(parse_part_spec("M=10;"), InvalidParameters);
    CHECK_THROWS_AS(parse_part_spec("M=10;1y2"), InvalidParameters);
}

TEST_CASE("counts")
{
    const auto s = g0_spec();
    CHECK(count_partitions(s, 0) == 1);
    CHECK(count_partitions(s, 1) == 2);
    CHECK(count_partitions(s, 2) == 4);
    const auto upto = count_partitions_upto(s, 7);
    CHECK(upto == std::vector<Integer>{1, 2, 4, 6, 11, 16, 26, 36});
    // parts >= 2 only
    CHECK(count_partitions(parse_part_spec("M=10;2x1,3x1"), 1) == 0);
    CHECK(count_partitions(parse_part_spec("M=10;2x1,3x1"), 5) == 1);
    CHECK(count_partitions(parse_part_spec("M=1;1x1"), 100) == Integer("190569292"));
    CHECK_THROWS_AS(count_partitions(s, kPartitionBudget + 1), InvalidParameters);
}

TEST_CASE("property: dynamic programming agrees with recursive enumeration")
{
    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
        const auto s = random_spec(rng);
        const auto n = static_cast<std::size_t>(rng() % 19);
        const auto dp = count_partitions(s, n);
        const auto brute = oracle::enumerate_partitions([&](std::size_t p) { return s.flavours_of(p); }, n);
        REQUIRE(dp == brute);
        REQUIRE((dp == 0) == (brute == 0));
    }
}

TEST_CASE("property: counts match the generating function up to 40")
{
    std::mt19937_64 rng(12);
    for (int i = 0; i < 100; ++i) {
        const auto s = random_spec(rng);
        const auto series = evaluate(s.generating_function(), 40);
        const auto counts = count_partitions_upto(s, 40);
        for (std::size_t n = 0; n <= 40; ++n) {
            REQUIRE(series[n] == counts[n]);
        }
    }
    for (const auto &it : standard_interpretations()) {
        const auto series = evaluate(it.spec.generating_function(), 40);
        const auto counts = count_partitions_upto(it.spec, 40);
        for (std::size_t n = 0; n <= 40; ++n) {
            REQUIRE(series[n] == counts[n]);
        }
    }
}

TEST_CASE("property: more flavours never means fewer partitions")
{
    std::mt19937_64 rng(13);
    for (int i = 0; i < 100; ++i) {
        auto s = random_spec(rng);
        auto more = s;
        more.classes[rng() % more.classes.size()].flavours += 1;
        for (std::size_t n = 0; n <= 30; n += 3) {
            REQUIRE(count_partitions(more, n) >= count_partitions(s, n));
        }
    }
}

TEST_CASE("representability")
{
    // parts 3 and 5 only: 1, 2, 4, 7 are not representable
    const auto s = parse_part_spec("M=10;3x1,5x1");
    for (std::size_t n = 0; n <= 30; ++n) {
        const bool representable = n != 1 && n != 2 && n != 4 && n != 7;
        CHECK((count_partitions(s, n) != 0) == representable);
    }
}

TEST_CASE("interpretations")
{
    const auto its = standard_interpretations();
    REQUIRE(its.size() == 8);
    for (const auto &it : its) {
        const auto r = verify_interpretation(it.spec, parse(it.series), it.k, it.l, 30, it.sign, it.multiplier);
        CHECK_MESSAGE(r.pass, it.id);
        CHECK(r.checked_up_to == 30);
    }
    // wrong multiplier is caught at n = 0
    const auto r = verify_interpretation(its[1].spec, parse(its[1].series), 5, 1, 30, 1, 1);
    CHECK_FALSE(r.pass);
    REQUIRE(r.first_mismatch);
    CHECK(r.first_mismatch->n == 0);
    CHECK(r.first_mismatch->actual == 2);
}

TEST_CASE("sign scans")
{
    const auto zero = scan_signs(parse(g1), 5, 3, 100);
    CHECK(zero.zeros.size() == 101);
    CHECK(sign_string(zero) == std::string(101, '0'));

    const auto h4 = scan_signs(parse(h1), 5, 4, 40);
    CHECK(h4.signs[1] == 0);
    CHECK(h4.values[1] == 0);
    for (std::size_t n = 0; n <= 40; ++n) {
        if (n != 1) {
            CHECK(h4.signs[n] == -1);
        }
    }
    CHECK(h4.zeros == std::vector<std::size_t>{1});
    CHECK(h4.sign_changes.empty());

    const auto neg = scan_signs(parse(g2), 5, 1, 200);
    CHECK(sign_string(neg) == std::string(201, '-'));
    CHECK_THROWS_AS(scan_signs(parse(g1), 5, 5, 10), InvalidParameters);
}
