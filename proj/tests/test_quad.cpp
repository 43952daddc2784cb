#include "support.hpp"

#include "quatcf/error.hpp"

#include <doctest.h>

using namespace quatcf;

namespace {

const Rational eps = default_epsilon();

SpecialType special(long p, long q) { return SpecialType(maximal_order_pq(p, q), p); }

}  // namespace

TEST_CASE("periodic polynomial coefficients")
{
    SpecialType T = special(3, 2);
    const Algebra& B = T.algebra();
    Quat a = Quat::parse("0,-1/3,0,-1/9");

    PeriodicPoly one = build_periodic_cf_polynomial({a}, T, eps);
    CHECK(one.poly.P == Quat(1));
    CHECK(one.poly.Q1.is_zero());
    CHECK(one.poly.Q2 == -a);
    CHECK(one.poly.S == Quat(-1));
    CHECK(one.mu.hi() < 1);

    PeriodicPoly two = build_periodic_cf_polynomial({a, a}, T, eps);
    CHECK(two.poly.P == a);
    CHECK(two.poly.Q1 == Quat(1));
    CHECK(two.poly.Q2 == -(B.sqr(a) + Quat(1)));
    CHECK(two.poly.S == -a);

    std::mt19937_64 rng(19);
    for (int k = 0; k < 100; ++k) {
        Quat x = sample::quat(rng, 1000);
        CHECK(one.poly.eval(x, B) == B.sqr(x) - B.mul(a, x) - Quat(1));
    }
}

TEST_CASE("admissibility failures name the hypothesis")
{
    SpecialType T = special(3, 2);
    Quat a = Quat::parse("0,-1/3,0,-1/9");
    auto message = [&](const std::vector<Quat>& qs) {
        try {
            build_periodic_cf_polynomial(qs, T, eps);
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::AdmissibilityFailure);
            return std::string(e.what());
        }
        return std::string();
    };
    CHECK(message({Quat(1)}).find("|a|_p > 1") != std::string::npos);
    CHECK(message({Quat::parse("0,1/15,0,0")}).find("R[1/p]") != std::string::npos);
    CHECK(message({a, a + T.uniformizer()}).find("ball separation") != std::string::npos);
}

TEST_CASE("certification of X^2 - aX - 1")
{
    SpecialType T = special(3, 2);
    const Algebra& B = T.algebra();

    Quat a = Quat::parse("0,-1/3,0,-1/9");
    MuCertificate c = certify_no_root(build_periodic_cf_polynomial({a}, T, eps), T, eps);
    CHECK(c.verdict == Verdict::Certified);
    CHECK(c.mu.hi() < 1);
    CHECK(subfield_roots(a, B).empty());

    Quat b = Quat::parse("0,-1,0,-1/3");
    MuCertificate d = certify_no_root(build_periodic_cf_polynomial({b}, T, eps), T, eps);
    CHECK(d.verdict == Verdict::Inconclusive);
    CHECK(d.mu.lo() > 1);
    // the polynomial really has roots here; -b/2 is the purely periodic alpha_0 itself
    auto roots = subfield_roots(b, B);
    CHECK(roots == std::vector<Quat>{Rational(3, 2) * b, Rational(-1, 2) * b});
    CHECK(roots[1] == Quat::parse("0,1/2,0,1/6"));
}

TEST_CASE("subfield oracle")
{
    Algebra B(2, 3);
    Quat a = B.i() + B.j();
    auto roots = subfield_roots(a, B);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == Quat::parse("-3/2,1/2,1/2,0"));
    CHECK(roots[1] == Quat::parse("3/2,1/2,1/2,0"));
    for (const auto& x : roots)
        CHECK((B.sqr(x) - B.mul(a, x) - Quat(1)).is_zero());
    CHECK_THROWS_AS(subfield_roots(Quat(2), B), Error);

    // roots with v != 1/2: a = x - 1/x for a non-scalar x
    std::mt19937_64 rng(23);
    for (int k = 0; k < 200; ++k) {
        Quat x = sample::nonzero(rng, 50);
        if (x.is_scalar() || B.nrd(x) == 0)
            continue;
        Quat c = x - B.inv(x);
        if (c.is_scalar())
            continue;
        auto rs = subfield_roots(c, B);
        CHECK(std::find(rs.begin(), rs.end(), x) != rs.end());
        for (const auto& r : rs)
            CHECK((B.sqr(r) - B.mul(c, r) - Quat(1)).is_zero());
    }
}

TEST_CASE("oracle agreement on scaled digits")
{
    for (auto [p, q] : {std::pair{3, 2}, {3, 5}, {11, 2}}) {
        SpecialType T = special(p, q);
        const Algebra& B = T.algebra();
        for (const auto& c : T.digit_set()) {
            if (c.is_scalar())
                continue;
            for (int k = 1; k <= 2; ++k) {
                Quat a = Rational(1, k == 1 ? p : p * p) * c;
                PeriodicPoly poly;
                try {
                    poly = build_periodic_cf_polynomial({a}, T, eps);
                } catch (const Error&) {
                    continue;
                }
                if (certify_no_root(poly, T, eps).verdict == Verdict::Certified)
                    CHECK(subfield_roots(a, B).empty());
            }
        }
    }
}

TEST_CASE("counterexample traces")
{
    CounterexampleTrace t32 = counterexample_trace(3, 2, 5);
    CHECK(t32.status == CFStatus::Periodic);
    CHECK(t32.period == 1);
    REQUIRE(t32.steps.size() == 5);
    CHECK(t32.steps[1].alpha == t32.steps[0].alpha);
    CHECK(t32.steps[0].w == -1);
    CHECK(t32.steps[0].v == 1);

    CounterexampleTrace t112 = counterexample_trace(11, 2, 4);
    CHECK(t112.period == 2);
    CHECK(t112.steps[1].alpha == Rational(1, 10) * Quat(0, 1, 0, Rational(1, 11)));
    CHECK(t112.steps[2].alpha == t112.steps[0].alpha);

    CounterexampleTrace t35 = counterexample_trace(3, 5, 50);
    REQUIRE(t35.steps.size() == 50);
    for (const auto& s : t35.steps) {
        Integer den = s.k2 * ipow(3, static_cast<unsigned long>(s.r));
        CHECK((den % 5 == 0 || den % 2 == 0));
        CHECK(s.v * ipow(3, static_cast<unsigned long>(s.r + 1)) + s.w * s.k2 == s.k1);
    }
    CHECK_THROWS_AS(counterexample_trace(3, 13, 5), Error);
}
