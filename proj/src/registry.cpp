// The compiled-in identity registry. Every claim is written in the expression
// language so the text form can be printed, re-parsed and audited.

#include <algorithm>
#include <array>
#include <fmt/format.h>

#include "qseries/identities.hpp"
#include "qseries/theta.hpp"

namespace qseries {
namespace {

// generating functions
const std::string g1 = "(-q,-q^4;q^5)_inf^2*(q^4,q^6;q^10)_inf";
const std::string h1 = "(-q^2,-q^3;q^5)_inf^2*(q^2,q^8;q^10)_inf";
const std::string g2 = "(q,q^4;q^5)_inf^2*(q^4,q^6;q^10)_inf";
const std::string h2 = "(q^2,q^3;q^5)_inf^2*(q^2,q^8;q^10)_inf";
const std::string g1hat = "(-q,-q^4;q^5)_inf^2*(q^4,q^6;q^10)_inf^2*(q^2,q^8;q^10)_inf";
const std::string h1hat = "(-q^2,-q^3;q^5)_inf^2*(q^2,q^8;q^10)_inf^2*(q^4,q^6;q^10)_inf";

// the two sides of the theta expansions of the g1 dissection
const std::string M1 = "(f(q^18,q^22)^2 - q^8*f(q^2,q^38)^2)";
const std::string M2 = "(q^5*f(q^10,q^30)*f(q^2,q^38) - q*f(q^10,q^30)*f(q^18,q^22))";
const std::string N2 = "(f(q^20,q^20)*f(q^18,q^22) + 2*q^5*f(q^40,q^120)*f(q^18,q^22)"
                       " - q^4*f(q^20,q^20)*f(q^2,q^38) - 2*q^9*f(q^40,q^120)*f(q^2,q^38))";

std::string N1(int e)
{
    return fmt::format("(q^5*f(q^12,q^28)*f(q^2,q^{0}) + q^6*f(q^8,q^32)*f(q^2,q^{0})"
                       " - q*f(q^12,q^28)*f(q^18,q^22) - q^2*f(q^8,q^32)*f(q^18,q^22))",
                       e);
}

std::string g(int r, int s, int t) { return render(family_g(r, s, t)); }
std::string h(int r, int s, int t) { return render(family_h(r, s, t)); }

class Builder {
public:
    IdentityRecord &eq(std::string id, std::string cite, const std::string &lhs, const std::string &rhs)
    {
        return add(std::move(id), std::move(cite), SeriesEquality{parse(lhs), parse(rhs)});
    }

    IdentityRecord &dis(std::string id, std::string cite, const std::string &lhs, std::size_t k1, std::size_t l1,
                        const std::string &rhs, std::size_t k2, std::size_t l2, int sign = 1)
    {
        return add(std::move(id), std::move(cite), DissectionRelation{parse(lhs), k1, l1, parse(rhs), k2, l2, sign});
    }

    // dissect(lhs, k, l) = rhs
    IdentityRecord &gf(std::string id, std::string cite, const std::string &lhs, std::size_t k, std::size_t l,
                       const std::string &rhs)
    {
        return dis(std::move(id), std::move(cite), lhs, k, l, rhs, 1, 0);
    }

    IdentityRecord &vanish(std::string id, std::string cite, const std::string &e, std::size_t k, std::size_t l)
    {
        return add(std::move(id), std::move(cite), VanishingProgression{parse(e), k, l});
    }

    IdentityRecord &cong(std::string id, std::string cite, const std::string &e, std::size_t k, std::size_t l,
                         long m)
    {
        return add(std::move(id), std::move(cite), Congruence{parse(e), k, l, Integer(m)});
    }

    IdentityRecord &sign(std::string id, std::string cite, const std::string &e, std::size_t k, std::size_t l,
                         int expected, std::set<std::size_t> exceptions = {})
    {
        return add(std::move(id), std::move(cite), SignPattern{parse(e), k, l, expected, std::move(exceptions)});
    }

    std::vector<IdentityRecord> take()
    {
        std::sort(records_.begin(), records_.end(), [](auto &a, auto &b) { return a.id < b.id; });
        return std::move(records_);
    }

private:
    IdentityRecord &add(std::string id, std::string cite, Claim claim)
    {
        IdentityRecord r;
        r.id = std::move(id);
        r.citation = std::move(cite);
        r.claim = std::move(claim);
        return records_.emplace_back(std::move(r));
    }

    std::vector<IdentityRecord> records_;
};

void alternative(IdentityRecord &r, std::string primary, std::string label, Claim claim)
{
    r.claim_label = std::move(primary);
    r.alternatives.push_back({std::move(label), std::move(claim)});
}

// f(a,b) f(c,d) = f(ac,bd) f(ad,bc) + a f(b/c, c/b abcd) f(b/d, d/b abcd) when ab = cd
std::pair<std::string, std::string> ff_instance(SignedMonomial a, SignedMonomial b, SignedMonomial c,
                                                SignedMonomial d)
{
    const auto times = [](SignedMonomial x, SignedMonomial y) {
        return SignedMonomial{x.negative != y.negative, x.exponent + y.exponent};
    };
    const auto over = [](SignedMonomial x, SignedMonomial y) {
        return SignedMonomial{x.negative != y.negative, x.exponent - y.exponent};
    };
    const auto abcd = a.exponent + b.exponent + c.exponent + d.exponent;
    const auto s = [](SignedMonomial m) { return to_string(m); };
    const auto bc = over(b, c), bd = over(b, d);
    const SignedMonomial cb{bc.negative, abcd - bc.exponent}, db{bd.negative, abcd - bd.exponent};
    std::string lhs = fmt::format("f({},{})*f({},{})", s(a), s(b), s(c), s(d));
    std::string rhs = fmt::format("f({},{})*f({},{}) + {}*f({},{})*f({},{})", s(times(a, c)), s(times(b, d)),
                                  s(times(a, d)), s(times(b, c)), s(a), s(bc), s(cb), s(bd), s(db));
    return {lhs, rhs};
}

std::vector<IdentityRecord> build()
{
    Builder b;

    // ---- 5-dissections of g1 and h1 ----------------------------------------
    b.gf("T1.G0", "a1:5n", g1, 5, 0, "1/((q,q^4;q^5)_inf^2*(q^2,q^8;q^10)_inf)");
    b.gf("T1.G1", "a1:5n+1", g1, 5, 1, "2/((q,q^2,q^3,q^4;q^5)_inf*(q^2,q^8;q^10)_inf)");
    b.gf("T1.G2", "a1:5n+2", g1, 5, 2, "1/((q,q^4;q^5)_inf^2*(q^4,q^6;q^10)_inf)");
    b.vanish("T1.G3", "iden-vanish", g1, 5, 3);
    b.gf("T1.G4", "a1:5n+4", g1, 5, 4, "1/((q^2,q^3;q^5)_inf^2*(q^4,q^6;q^10)_inf)");

    b.gf("T2.H0", "b1:5n", h1, 5, 0, "1/((q,q^4;q^5)_inf^2*(q^2,q^8;q^10)_inf)");
    b.vanish("T2.H1", "iden-vanish", h1, 5, 1);
    b.gf("T2.H2", "b1:5n+1", h1, 5, 2, "1/((q^2,q^3;q^5)_inf^2*(q^2,q^8;q^10)_inf)");
    b.gf("T2.H3", "b1:5n+2", h1, 5, 3, "2/((q,q^2,q^3,q^4;q^5)_inf*(q^4,q^6;q^10)_inf)");
    b.gf("T2.H4", "b1:5n+4", h1, 5, 4, "-1/((q^2,q^3;q^5)_inf^2*(q^4,q^6;q^10)_inf)");

    // ---- corollaries -------------------------------------------------------
    b.dis("C.g1h1-eq", "a1b1-1", g1, 5, 0, h1, 5, 0);
    b.dis("C.g1h1-neg", "a1b1-2", g1, 5, 4, h1, 5, 4, -1);
    b.sign("C.signs.g1.5n", "a1:5n", g1, 5, 0, 1);
    b.sign("C.signs.g1.5n+1", "a1:5n+1", g1, 5, 1, 1);
    b.sign("C.signs.g1.5n+2", "a1:5n+2", g1, 5, 2, 1);
    b.sign("C.signs.g1.5n+4", "a1:5n+4", g1, 5, 4, 1, {1});
    b.sign("C.signs.h1.5n", "b1:5n", h1, 5, 0, 1);
    b.sign("C.signs.h1.5n+2", "b1:5n+1", h1, 5, 2, 1, {1});
    b.sign("C.signs.h1.5n+3", "b1:5n+2", h1, 5, 3, 1);
    b.sign("C.signs.h1.5n+4", "b1:5n+4", h1, 5, 4, -1, {1});

    // ---- relations between the families ------------------------------------
    b.dis("T3.r1", "a2b2-relation1", g(1, 2, 5), 5, 1, g(2, 4, 5), 5, 2);
    b.dis("T3.r2", "a2b2-relation2", g(1, 2, 5), 5, 3, g(2, 4, 5), 5, 4, -1);
    b.dis("T3.r3", "a3b3-relation1", g(1, 3, 5), 5, 0, g(2, 1, 5), 5, 0);
    b.dis("T3.r4", "a3b3-relation2", g(1, 3, 5), 5, 2, g(2, 1, 5), 5, 2);
    b.dis("T3.r5", "analog-relat-1", h(1, 1, 5), 5, 0, h(2, 3, 5), 5, 2);
    b.dis("T3.r6", "analog-relati-2", h(1, 1, 5), 5, 1, h(2, 3, 5), 5, 3);
    b.dis("T3.r7", "THM:relation", h(1, 4, 5), 5, 1, h(2, 2, 5), 5, 0);
    b.dis("T3.r8", "final-relation1", h(1, 4, 5), 5, 2, h(2, 2, 5), 5, 1, -1);

    // ---- product identities ------------------------------------------------
    const std::string A = "(-q,-q^4;q^5)_inf*(q^4,q^6;q^10)_inf^3";
    const std::string B = "(-q^2,-q^3;q^5)_inf*(q^2,q^8;q^10)_inf^3";
    b.eq("T4.i1", "q-iden-1", g1 + " + " + h1,
         "2*(q^10;q^10)_inf^3/((q^2;q^2)_inf*(q^5;q^5)_inf^2)*" + A);
    b.eq("T4.i2", "q-iden-2", g2 + " + " + h2,
         "2*(q;q)_inf^2*(q^10;q^10)_inf^4/((q^2;q^2)_inf^2*(q^5;q^5)_inf^4)*" + A);
    b.eq("T4.i3", "q-iden-3", A + " - q*" + B, "(q^2;q^2)_inf*(q^5;q^5)_inf^2/(q^10;q^10)_inf^3*" + h1);
    b.eq("T4.i4", "q-iden-4", A + " + q*" + B,
         "(q^2;q^2)_inf^2*(q^5;q^5)_inf^4/((q;q)_inf^2*(q^10;q^10)_inf^4)*" + h2);

    b.eq("KT.i1", "KT-iden-1",
         "(-q^2,-q^3,q^5;q^5)_inf^2*(q^10;q^10)_inf/(q^4,q^6;q^10)_inf"
         " + (-q,-q^4,q^5;q^5)_inf^2*(q^10;q^10)_inf/(q^2,q^8;q^10)_inf",
         "2*(-q,-q^4,q^5;q^5)_inf*(q^2;q^2)_inf*(q^10;q^10)_inf^2/((q^2,q^8;q^10)_inf^3*(q^5;q^5)_inf)");
    {
        const std::string lhs = "(-q^2,-q^3,q^5;q^5)_inf^2*(q^10;q^10)_inf/(q^4,q^6;q^10)_inf"
                                " + q*(-q^2,-q^3,q^5;q^5)_inf*(q^2;q^2)_inf*(q^10;q^10)_inf^2"
                                "/((q^4,q^6;q^10)_inf^3*(q^5;q^5)_inf)";
        const auto rhs = [](int p) {
            return fmt::format("(-q,-q^4,q^5;q^5)_inf*(q^2;q^2)_inf*(q^10;q^10)_inf^{}"
                               "/((q^2,q^8;q^10)_inf^3*(q^5;q^5)_inf)",
                               p);
        };
        auto &r = b.eq("KT.i2", "KT-iden-2", lhs, rhs(1));
        alternative(r, "as printed", "(q^10;q^10)_inf squared on the right",
                    SeriesEquality{parse(lhs), parse(rhs(2))});
        r.note = "printed right side carries (q^10;q^10)_inf to the first power; multiplying q-iden-3 "
                 "through gives the square";
    }

    // ---- theta function basics ---------------------------------------------
    b.eq("L2.fsym.1", "JTP-identity", "f(q,q^4)", "f(q^4,q)");
    b.eq("L2.fsym.2", "JTP-identity", "f(-q^3,q^5)", "f(q^5,-q^3)");
    b.eq("L2.f1a.1", "iden:psi", "f(q^0,q)", "2*f(q,q^3)");
    b.eq("L2.f1a.40", "iden:psi", "f(q^0,q^40)", "2*f(q^40,q^120)");
    b.eq("L2.jtp.1", "JTP-identity", "f(q,q^4)", "(-q,-q^4,q^5;q^5)_inf");
    b.eq("L2.jtp.2", "JTP-identity", "f(-q,-q^4)", "(q,q^4,q^5;q^5)_inf");
    b.eq("L2.jtp.3", "JTP-identity", "f(-q^4,-q^6)", "(q^4,q^6,q^10;q^10)_inf");
    b.eq("L2.phi.def", "def:psi", "phi(q)", "f(q,q)");
    b.eq("L2.phi.prod", "def:psi", "phi(q)", "(q^2;q^2)_inf^5/((q;q)_inf^2*(q^4;q^4)_inf^2)");
    b.eq("L2.psi.def", "def:psi", "psi(q)", "f(q,q^3)");
    b.eq("L2.psi.prod", "def:psi", "psi(q)", "(q^2;q^2)_inf^2/(q;q)_inf");
    b.eq("L2.lem1a", "2-dissec-phi", "phi(q)", "phi(q^4) + 2*q*psi(q^8)");
    b.eq("L2.lem1b", "relati:phi-psi", "4*q*(q^4;q^4)_inf*(q^20;q^20)_inf",
         "phi(q)*f(-q^5,-q^5) - f(-q,-q)*phi(q^5)");
    b.eq("L2.lem3a", "phi-psi-1", "phi(q) - phi(q^5)",
         "2*q*(q^4,q^6,q^10,q^14,q^16,q^20;q^20)_inf/(q^3,q^7,q^8,q^12,q^13,q^17;q^20)_inf");
    b.eq("L2.lem3b", "phi-psi-2", "psi(q^2) - q*psi(q^10)",
         "(q,q^9,q^10,q^11,q^19,q^20;q^20)_inf/(q^2,q^3,q^7,q^13,q^17,q^18;q^20)_inf");
    b.eq("L2.phi5neg", "5-identity", "f(-q^5,-q^5)", "phi(q^20) - 2*q^5*psi(q^40)");
    b.eq("L2.phiphi", "relati:phi-psi-4", "phi(q)*f(-q^5,-q^5) - f(-q,-q)*phi(q^5)",
         "4*q*psi(q^8)*phi(q^20) - 4*q^5*phi(q^4)*psi(q^40)");

    // ff instances, as used in the proofs
    using SM = SignedMonomial;
    const struct {
        const char *tag;
        const char *cite;
        std::array<SM, 4> abcd;
    } ff[] = {
        {"M1", "represe:M", {SM::minus(8), SM::minus(12), SM::minus(10), SM::minus(10)}},
        {"N1", "iden:N1", {SM::minus(5), SM::minus(15), SM::minus(7), SM::minus(13)}},
        {"N2", "iden:N2", {SM::minus(3), SM::minus(17), SM::minus(5), SM::minus(15)}},
        {"N3", "iden:N3", {SM::plus(1), SM::plus(9), SM::minus(4), SM::minus(6)}},
        {"M2", "represe:S-final", {SM::minus(4), SM::minus(16), SM::minus(6), SM::minus(14)}},
        {"T1", "iden:T1", {SM::minus(9), SM::minus(11), SM::minus(11), SM::minus(9)}},
        {"T2", "iden:T2", {SM::minus(1), SM::minus(19), SM::minus(19), SM::minus(1)}},
        {"T3", "iden:T3", {SM::minus(4), SM::minus(6), SM::plus(5), SM::plus(5)}},
        {"ffi1", "ff-iden-1", {SM::minus(1), SM::minus(4), SM::plus(2), SM::plus(3)}},
        {"ffi2", "ff-iden-2", {SM::plus(1), SM::plus(4), SM::minus(2), SM::minus(3)}},
    };
    for (const auto &x : ff) {
        const auto [lhs, rhs] = ff_instance(x.abcd[0], x.abcd[1], x.abcd[2], x.abcd[3]);
        b.eq(std::string("L2.ff.") + x.tag, x.cite, lhs, rhs);
    }

    // ---- theta expansion of the g1 dissection ------------------------------
    const std::string den = "((q;q)_inf^2*(q^2;q^2)_inf)";
    const auto n1_reading = [&](IdentityRecord &r, Claim corrected) {
        alternative(r, "as printed", "f(q^2,q^38) in place of f(q^2,q^48)", std::move(corrected));
        r.note = "f(q^2,q^48) does not arise from the ff instance used for this step; it gives f(q^2,q^38)";
    };
    {
        const auto mn = [&](int e) {
            return SeriesEquality{parse("phi(q)*" + M1 + " + 2*psi(q^2)*" + N1(e)),
                                  parse("phi(q^5)*" + M1 + " + 2*q*psi(q^10)*" + N1(e))};
        };
        auto &r = b.eq("L3.MN", "iden:M-N", "phi(q)*" + M1 + " + 2*psi(q^2)*" + N1(48),
                       "phi(q^5)*" + M1 + " + 2*q*psi(q^10)*" + N1(48));
        n1_reading(r, mn(38));
    }
    b.eq("L3.repM", "represe:M", M1, "f(-q^8,-q^12)*f(-q^10,-q^10)");
    {
        const std::string rhs = "-q*f(q,q^9)*f(-q^4,-q^6)";
        auto &r = b.eq("L3.repN", "represe:N", N1(48), rhs);
        n1_reading(r, SeriesEquality{parse(N1(38)), parse(rhs)});
    }
    {
        const auto lhs = [](int e) {
            return fmt::format("q*f(q^12,q^28)*f(q^18,q^22) - q^6*f(q^8,q^32)*f(q^2,q^{})", e);
        };
        const std::string rhs = "q*f(-q^5,-q^15)*f(-q^7,-q^13)";
        auto &r = b.eq("L3.N1a", "iden:N1", lhs(48), rhs);
        n1_reading(r, SeriesEquality{parse(lhs(38)), parse(rhs)});
    }
    {
        // the ff instance pairs the second term with f(q^12,q^28), not f(q^8,q^32)
        const std::string printed = "q^2*f(q^8,q^32)*f(q^18,q^22) - q^5*f(q^8,q^32)*f(q^2,q^48)";
        const std::string fixed = "q^2*f(q^8,q^32)*f(q^18,q^22) - q^5*f(q^12,q^28)*f(q^2,q^38)";
        const std::string rhs = "q^2*f(-q^3,-q^17)*f(-q^5,-q^15)";
        auto &r = b.eq("L3.N1b", "iden:N2", printed, rhs);
        alternative(r, "as printed", "f(q^12,q^28)*f(q^2,q^38) as second term",
                    SeriesEquality{parse(fixed), parse(rhs)});
        r.note = "the ff instance (-q^3,-q^17,-q^5,-q^15) yields f(q^12,q^28)*f(q^2,q^38) in the second term";
    }
    b.eq("L3.N1c", "iden:N3", "f(-q^5,-q^15)*f(-q^7,-q^13) + q*f(-q^3,-q^17)*f(-q^5,-q^15)",
         "f(q,q^9)*f(-q^4,-q^6)");
    b.eq("L3.phipsi", "phi-psi", "psi(q^2)*phi(q^5) - q*phi(q)*psi(q^10)", "(q;q)_inf*(q^5;q^5)_inf");

    // H_{5,0} of the double sums S1..S8, each S_i a product of two bsum(20,.)
    const struct {
        int shift, b1, b2, e;
        const char *rhs;
    } sums[] = {
        {0, 2, 6, 0, "f(q^90,q^110)^2"},
        {4, 18, 6, 20, "f(q^10,q^190)*f(q^90,q^110)"},
        {2, 2, 14, 20, "f(q^10,q^190)*f(q^90,q^110)"},
        {6, 18, 14, 40, "f(q^10,q^190)^2"},
        {1, 2, 4, 25, "f(q^60,q^140)*f(q^10,q^190)"},
        {5, 18, 4, 5, "f(q^60,q^140)*f(q^90,q^110)"},
        {4, 2, 16, 30, "f(q^40,q^160)*f(q^10,q^190)"},
        {8, 18, 16, 10, "f(q^40,q^160)*f(q^90,q^110)"},
    };
    for (int i = 0; i < 8; ++i) {
        const auto &x = sums[i];
        const auto shifted = [](int e, const std::string &body) {
            return e == 0 ? body : fmt::format("q^{}*{}", e, body);
        };
        b.dis(fmt::format("L3.S{}", i + 1), fmt::format("S{}:5", i + 1),
              shifted(x.shift, fmt::format("bsum(20,{})*bsum(20,{})", x.b1, x.b2)), 5, 0, shifted(x.e, x.rhs), 5, 0);
    }
    b.gf("L3.gfall", "gf:all a", g1, 1, 0,
         "phi(q^5)/((q^5;q^5)_inf^2*(q^10;q^10)_inf)*(bsum(20,2)*bsum(20,6) - q^4*bsum(20,18)*bsum(20,6)"
         " + q^2*bsum(20,2)*bsum(20,14) - q^6*bsum(20,18)*bsum(20,14))"
         " + 2*psi(q^10)/((q^5;q^5)_inf^2*(q^10;q^10)_inf)*(q*bsum(20,2)*bsum(20,4) - q^5*bsum(20,18)*bsum(20,4)"
         " + q^4*bsum(20,2)*bsum(20,16) - q^8*bsum(20,18)*bsum(20,16))");
    b.gf("L3.a5n", "gf:a5n", g1, 5, 0, "phi(q)/" + den + "*" + M1 + " + 2*psi(q^2)/" + den + "*" + N1(38));
    b.eq("L3.iden1", "iden-1", "1/(q,q^4;q^5)_inf^2",
         "phi(q^5)/(q;q)_inf^2*(bsum(20,2) + q^4*bsum(20,18))"
         " - 2*psi(q^10)/(q;q)_inf^2*(q^2*bsum(20,8) + q^3*bsum(20,12))");
    b.eq("L3.iden1b", "iden-1", "1/(q,q^4;q^5)_inf^2", "(q^2,q^3,q^5;q^5)_inf^2/(q;q)_inf^2");
    b.eq("L3.iden1c", "iden-1", "1/(q,q^4;q^5)_inf^2",
         "(phi(q^5)*bsum(5,1) - 2*q^2*psi(q^10)*bsum(5,4))/(q;q)_inf^2");
    b.eq("L3.iden2", "iden-2", "1/(q^2,q^8;q^10)_inf", "(bsum(20,2) - q^4*bsum(20,18))/(q^2;q^2)_inf");
    b.eq("L3.iden2b", "iden-2", "1/(q^2,q^8;q^10)_inf", "(q^4,q^6,q^10;q^10)_inf/(q^2;q^2)_inf");
    b.eq("L3.A0", "iden:A0", "1/((q,q^4;q^5)_inf^2*(q^2,q^8;q^10)_inf)",
         "phi(q^5)/" + den + "*" + M1 + " + 2*psi(q^10)/" + den +
             "*(q^6*f(q^12,q^28)*f(q^2,q^38) + q^7*f(q^8,q^32)*f(q^2,q^38)"
             " - q^2*f(q^12,q^28)*f(q^18,q^22) - q^3*f(q^8,q^32)*f(q^18,q^22))");
    b.gf("L3.a5n1", "gf:a5n+1", g1, 5, 1, "2*phi(q)/" + den + "*" + M2 + " + 2*psi(q^2)/" + den + "*" + N2);
    b.eq("L3.repM2", "represe:S-final", M2, "-q*f(-q^4,-q^16)*f(-q^6,-q^14)");
    b.eq("L3.relation", "relation", N2,
         "f(q^20,q^20)*f(q^18,q^22) - q^9*f(q^0,q^40)*f(q^2,q^38)"
         " + q^5*f(q^0,q^40)*f(q^18,q^22) - q^4*f(q^20,q^20)*f(q^2,q^38)");
    b.eq("L3.T1", "iden:T1", "f(q^20,q^20)*f(q^18,q^22) - q^9*f(q^0,q^40)*f(q^2,q^38)", "f(-q^9,-q^11)^2");
    b.eq("L3.T2", "iden:T2", "f(q^20,q^20)*f(q^2,q^38) - q*f(q^0,q^40)*f(q^18,q^22)", "f(-q,-q^19)^2");
    b.eq("L3.T3", "iden:T3", "f(-q^9,-q^11)^2 - q^4*f(-q,-q^19)^2", "phi(q^5)*f(-q^4,-q^6)");
    b.eq("L3.T3b", "iden:T3", "f(q^5,q^5)*f(-q^4,-q^6)", "phi(q^5)*f(-q^4,-q^6)");
    b.eq("L3.repN2", "represe:T-final", N2, "phi(q^5)*f(-q^4,-q^6)");
    b.gf("L3.simp1", "simp-gf:a5n+1", g1, 5, 1,
         "2*psi(q^2)*phi(q^5)*f(-q^4,-q^6)/" + den + " - 2*q*phi(q)*f(-q^4,-q^16)*f(-q^6,-q^14)/" + den);
    b.gf("L3.simp2", "simp-gf:a5n+1", g1, 5, 1,
         "2*psi(q^2)*phi(q^5)*f(-q^4,-q^6)/" + den + " - 2*q*phi(q)*psi(q^10)*f(-q^4,-q^6)/" + den);
    b.eq("L3.simpA1", "simp:a1-5n+1", "2/((q,q^2,q^3,q^4;q^5)_inf*(q^2,q^8;q^10)_inf)",
         "2*f(-q^2,-q^3)*f(-q,-q^4)*f(-q^4,-q^6)/" + den);
    b.eq("L3.simpA2", "simp:a1-5n+1", "2/((q,q^2,q^3,q^4;q^5)_inf*(q^2,q^8;q^10)_inf)",
         "2*(q;q)_inf*(q^5;q^5)_inf*f(-q^4,-q^6)/" + den);

    // ---- relations between the families: the proof of the first one --------
    const std::string k1 = "(q^10;q^10)_inf^4*(q^80;q^80)_inf^5/((q^5;q^5)_inf^5*(q^20;q^20)_inf^2*"
                           "(q^40;q^40)_inf^2*(q^160;q^160)_inf^2)";
    const std::string k2 = "2*(q^10;q^10)_inf^4*(q^160;q^160)_inf^2/((q^5;q^5)_inf^5*(q^20;q^20)_inf^2*"
                           "(q^80;q^80)_inf)";
    const std::string k3 = "2*(q^20;q^20)_inf^2*f(q^30,q^50)/((q^5;q^5)_inf^3*(q^10;q^10)_inf^2)";
    const std::string k4 = "2*(q^20;q^20)_inf^2*f(q^10,q^70)/((q^5;q^5)_inf^3*(q^10;q^10)_inf^2)";
    // q^{e1} bsum(40,b1) - q^{e2} bsum(40,b2)
    const auto diff = [](int e1, int b1, int e2, int b2) {
        const auto term = [](int e, int bb) {
            return e == 0 ? fmt::format("bsum(40,{})", bb) : fmt::format("q^{}*bsum(40,{})", e, bb);
        };
        return term(e1, b1) + " - " + term(e2, b2);
    };
    const auto tang = [&](const std::string &theta, std::array<std::array<int, 4>, 6> d) {
        const auto a = [&](int i) { return diff(d[i][0], d[i][1], d[i][2], d[i][3]); };
        return theta + "*(" + k1 + "*(" + a(0) + ") + " + k2 + "*(" + a(1) + ") + " + k3 + "*(" + a(2) + " + " +
               a(3) + ") + " + k4 + "*(" + a(4) + " + " + a(5) + "))";
    };
    const std::array<std::array<int, 4>, 6> sd = {{{0, 12, 4, 28},
                                                   {14, 28, 10, 12},
                                                   {1, 2, 10, 38},
                                                   {4, 22, 3, 18},
                                                   {15, 38, 9, 22},
                                                   {8, 18, 6, 2}}};
    const std::array<std::array<int, 4>, 6> td = {{{0, 4, 8, 36},
                                                   {18, 36, 10, 4},
                                                   {2, 6, 9, 34},
                                                   {3, 14, 6, 26},
                                                   {14, 34, 8, 14},
                                                   {11, 26, 7, 6}}};
    b.eq("L4.rep125", "sec:THM-relation", g(1, 2, 5), tang("f(q,q^4)", sd));
    b.eq("L4.rep245", "sec:THM-relation", g(2, 4, 5), tang("f(q^2,q^3)", td));
    b.eq("L4.iden3", "iden-3", "(-q^2,-q^3;q^5)_inf^2",
         "(q^10;q^10)_inf^5/((q^5;q^5)_inf^4*(q^20;q^20)_inf^2)*(bsum(20,2) + q^4*bsum(20,18))"
         " + 2*q^2*(q^20;q^20)_inf^2/((q^5;q^5)_inf^2*(q^10;q^10)_inf)*(bsum(20,8) + q*bsum(20,12))");
    b.eq("L4.iden3b", "iden-3", "(-q^2,-q^3;q^5)_inf^2", "(-q^2,-q^3,q^5;q^5)_inf^2/(q^5;q^5)_inf^2");
    b.eq("L4.iden4", "iden-4", "(q^4,q^6;q^10)_inf", "(bsum(20,2) - q^4*bsum(20,18))/(q^10;q^10)_inf");
    for (int i = 0; i < 6; ++i) {
        b.dis(fmt::format("L4.ST{}", i + 1), "sec:THM-relation",
              "f(q,q^4)*(" + diff(sd[i][0], sd[i][1], sd[i][2], sd[i][3]) + ")", 5, 1,
              "f(q^2,q^3)*(" + diff(td[i][0], td[i][1], td[i][2], td[i][3]) + ")", 5, 2);
    }
    b.eq("L4.split23", "sec:THM-relation", "f(q^2,q^3)",
         "bsum(40,2) + q^9*bsum(40,38) + q^2*bsum(40,18) + q^3*bsum(40,22)");
    b.eq("L4.split14", "sec:THM-relation", "f(q,q^4)",
         "bsum(40,6) + q^7*bsum(40,34) + q*bsum(40,14) + q^4*bsum(40,26)");
    // P_i, Q_i: shift and the two bsum(40,.) parameters
    const std::array<std::array<int, 3>, 8> pd = {
        {{0, 6, 12}, {7, 34, 12}, {1, 14, 12}, {4, 26, 12}, {4, 6, 28}, {11, 34, 28}, {5, 14, 28}, {8, 26, 28}}};
    const std::array<std::array<int, 3>, 8> qd = {
        {{9, 38, 4}, {0, 2, 4}, {2, 18, 4}, {3, 22, 4}, {17, 38, 36}, {8, 2, 36}, {10, 18, 36}, {11, 22, 36}}};
    const auto pq = [](const std::array<int, 3> &x) {
        const auto body = fmt::format("bsum(40,{})*bsum(40,{})", x[1], x[2]);
        return x[0] == 0 ? body : fmt::format("q^{}*{}", x[0], body);
    };
    for (int i = 0; i < 8; ++i) {
        auto &r = b.dis(fmt::format("L4.PQ{}", i + 1), "sec:THM-relation", pq(pd[i]), 5, 1, pq(qd[i]), 5, 2);
        if (i == 6) {
            r.note = "the exponent of P7 is printed as 40m^14+14m+...; read as 40m^2+14m+...";
        }
    }
    for (const auto &[s, t] : {std::pair{1, 2}, {2, 3}, {1, 4}}) {
        b.eq(fmt::format("L4.u1.{}-{}", s, t), "useful-iden-1", fmt::format("f(-q^{},-q^{})", 2 * s, 2 * t),
             fmt::format("(q^{0};q^{0})_inf/(q^{1};q^{1})_inf^2*f(q^{2},q^{3})*f(-q^{2},-q^{3})", 2 * (s + t), s + t,
                         s, t)
                        );
    }
    b.eq("L4.u2", "useful-iden-2", "f(q,q^4)*f(q^2,q^3)",
         "(q^2;q^2)_inf*(q^5;q^5)_inf^3/((q;q)_inf*(q^10;q^10)_inf)");
    b.eq("L4.ff1", "iden-ff-1", "f(-q^2,-q^3)*f(-q^4,-q^6)",
         "(q^2;q^2)_inf*(q^5;q^5)_inf/(q^10;q^10)_inf*f(-q^3,-q^7)");
    b.eq("L4.ff1.prod", "iden-ff-1", "f(-q^2,-q^3)*f(-q^4,-q^6)",
         "(q^5;q^5)_inf*(q^2,q^3,q^4,q^6,q^7,q^8,q^10;q^10)_inf");
    b.eq("L4.ff2", "iden-ff-2", "f(-q,-q^4)*f(-q^2,-q^8)",
         "(q^2;q^2)_inf*(q^5;q^5)_inf/(q^10;q^10)_inf*f(-q,-q^9)");
    b.eq("L4.ff2.prod", "iden-ff-2", "f(-q,-q^4)*f(-q^2,-q^8)",
         "(q^5;q^5)_inf*(q,q^2,q^4,q^6,q^8,q^9,q^10;q^10)_inf");
    b.eq("L4.ff3", "ff-iden-1", "f(-q,-q^4)*f(q^2,q^3)",
         "f(-q^3,-q^7)*f(-q^4,-q^6) - q*f(-q,-q^9)*f(-q^2,-q^8)");
    b.eq("L4.ff4", "ff-iden-2", "f(q,q^4)*f(-q^2,-q^3)",
         "f(-q^3,-q^7)*f(-q^4,-q^6) + q*f(-q,-q^9)*f(-q^2,-q^8)");
    b.eq("L4.P1a", "iden-P1-1", g1 + " + " + h1,
         "(f(q,q^4)^2*f(-q^4,-q^6) + f(q^2,q^3)^2*f(-q^2,-q^8))/((q^5;q^5)_inf^2*(q^10;q^10)_inf)");
    b.eq("L4.P1b", "iden-P1-1", g1 + " + " + h1,
         "(q^2;q^2)_inf/((q;q)_inf*(q^5;q^5)_inf*(q^10;q^10)_inf)*"
         "(f(q,q^4)*f(-q^2,-q^3) + f(-q,-q^4)*f(q^2,q^3))");
    b.eq("L4.P1c", "q-iden-1", g1 + " + " + h1,
         "2*(q^2;q^2)_inf/((q;q)_inf*(q^5;q^5)_inf*(q^10;q^10)_inf)*f(-q^3,-q^7)*f(-q^4,-q^6)");
    b.eq("L4.i1rhs", "q-iden-1", "2*(q^10;q^10)_inf^3/((q^2;q^2)_inf*(q^5;q^5)_inf^2)*" + A,
         "2/((q^2;q^2)_inf*(q^5;q^5)_inf^3)*f(q,q^4)*f(-q^4,-q^6)^3");
    b.eq("L4.i3mid", "q-iden-3", A + " - q*" + B,
         "(q^2;q^2)_inf^2*(q^5;q^5)_inf/((q;q)_inf*(q^10;q^10)_inf^4)*f(-q,-q^4)*f(q^2,q^3)");

    // ---- closing remarks ---------------------------------------------------
    const auto mod_relation = [&](std::string id, std::string cite, std::array<int, 3> lhs, std::size_t l1,
                                  std::array<int, 3> rhs, std::size_t l2, int sign) {
        const auto t = static_cast<std::size_t>(lhs[2]);
        auto &r = b.dis(std::move(id), std::move(cite), g(lhs[0], lhs[1], lhs[2]), t, l1, g(rhs[0], rhs[1], rhs[2]),
                        t, l2, sign);
        alternative(r, "a = g", "a = h",
                    DissectionRelation{parse(h(lhs[0], lhs[1], lhs[2])), t, l1, parse(h(rhs[0], rhs[1], rhs[2])), t,
                                       l2, sign});
        r.note = "a_{r,s,t} is not defined; read as g_{r,s,t} with h_{r,s,t} checked as well";
    };
    mod_relation("R5.m7a", "analog-relat-3", {1, 1, 7}, 1, {3, 3, 7}, 3, 1);
    mod_relation("R5.m7b", "analog-relat-3", {1, 6, 7}, 6, {2, 2, 7}, 6, -1);
    mod_relation("R5.m11a", "analog-relat-2", {4, 6, 11}, 5, {5, 2, 11}, 4, -1);
    mod_relation("R5.m11b", "analog-relat-2", {4, 6, 11}, 7, {5, 2, 11}, 6, 1);

    b.vanish("R5.vanish2.g2", "iden-vanish-2", g2, 5, 3);
    b.vanish("R5.vanish2.h2", "iden-vanish-2", h2, 5, 1);
    b.cong("R5.cong", "iden-vanish-2", h2, 5, 3, 2);
    {
        auto &r = b.dis("R5.hat1", "h,r-s-t", g1hat, 5, 0, h1hat, 5, 0, -1);
        alternative(r, "as printed", "with a plus sign",
                    DissectionRelation{parse(g1hat), 5, 0, parse(h1hat), 5, 0, 1});
        r.note = "the coefficients agree with a plus sign; the printed minus sign is read as a misprint";
    }
    b.vanish("R5.hat2.g", "h,r-s-t", g1hat, 5, 2);
    b.vanish("R5.hat2.h", "h,r-s-t", h1hat, 5, 1);
    b.dis("R5.hat3", "h,r-s-t", g1hat, 5, 3, h1hat, 5, 3, -1);

    b.sign("R5.conj.g2.5n", "ineq-begin", g2, 5, 0, 1);
    b.sign("R5.conj.g2.5n+1", "ineq-begin", g2, 5, 1, -1);
    b.sign("R5.conj.g2.5n+2", "ineq-begin", g2, 5, 2, 1);
    b.sign("R5.conj.g2.5n+4", "ineq-begin", g2, 5, 4, -1);
    b.sign("R5.conj.h2.5n", "ineq-end", h2, 5, 0, 1);
    b.sign("R5.conj.h2.5n+2", "ineq-end", h2, 5, 2, -1);
    b.sign("R5.conj.h2.5n+3", "ineq-end", h2, 5, 3, -1);
    b.sign("R5.conj.h2.5n+4", "ineq-end", h2, 5, 4, 1).note = "stated for h_3, which is undefined; read as h_2";

    return b.take();
}

} // namespace

const std::vector<IdentityRecord> &registry()
{
    static const std::vector<IdentityRecord> records = build();
    return records;
}

} // namespace qseries
