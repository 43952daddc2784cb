#include "support.hpp"

#include "quatcf/error.hpp"

#include <doctest.h>

using namespace quatcf;

namespace {

SpecialType special(long p, long q) { return SpecialType(maximal_order_pq(p, q), p); }

Quat alpha0(long p, long q) { return Rational(1, q) * Quat(0, 1, 0, Rational(1, p)); }

}  // namespace

TEST_CASE("expansion of 1/2")
{
    SpecialType T = special(3, 2);
    CFExpansion e = expand(Quat(Rational(1, 2)), FloorFunction(T));
    CHECK(e.status == CFStatus::Finite);
    CHECK(e.partial == std::vector<Quat>{Quat(-1), Quat(Rational(2, 3))});
    CHECK(e.complete.back() == e.partial.back());
    CHECK(e.length() == 2);
    CHECK(evaluate_continued_fraction(e.partial, T.algebra()) == Quat(Rational(1, 2)));
}

TEST_CASE("periodic expansions of the counterexample family")
{
    SpecialType T = special(3, 2);
    Quat x = alpha0(3, 2);
    CFExpansion e = expand(x, FloorFunction(T));
    CHECK(e.status == CFStatus::Periodic);
    CHECK(e.preperiod == 0);
    CHECK(e.period == 1);
    CHECK(e.partial[0] == Quat::parse("0,-1,0,-1/3"));
    CHECK(e.complete_quotient(1) == x);
    CHECK(!e.length());
    CHECK(e.quotients(5).size() == 5);

    SpecialType U = special(11, 2);
    CFExpansion f = expand(alpha0(11, 2), FloorFunction(U));
    CHECK(f.status == CFStatus::Periodic);
    CHECK(f.period == 2);
    CHECK(f.complete[1] == Rational(1, 10) * Quat(0, 1, 0, Rational(1, 11)));
    CHECK(f.complete_quotient(2) == alpha0(11, 2));
}

TEST_CASE("resource limits truncate")
{
    SpecialType T = special(3, 5);
    Quat x = Quat::parse("1/7,2/11,3/13,5/17");
    CFExpansion e = expand(x, FloorFunction(T), {3, 65536});
    CHECK(e.status == CFStatus::Truncated);
    CHECK(e.truncation == Truncation::MaxSteps);
    CHECK(e.partial.size() == 3);

    CFExpansion g = expand(x, FloorFunction(T), {64, 8});
    CHECK(g.status == CFStatus::Truncated);
    CHECK(g.truncation == Truncation::SizeBudget);
}

TEST_CASE("convergent tables")
{
    Algebra B(2, 3);
    Quat a = Quat::parse("0,-1,0,-1/3");
    ConvergentTable t = convergents({a}, B);
    CHECK(t.A(0) == a);
    CHECK(t.B(0) == Quat(1));
    CHECK(t.A(-1) == Quat(1));
    CHECK(t.B(-1) == Quat());
    CHECK(t.Q(0) == a);

    ConvergentTable h = convergents({Quat(-1), Quat(Rational(2, 3))}, B);
    CHECK(h.Q(1) == Quat(Rational(1, 2)));

    ConvergentTable two = convergents({a, a, a}, B);
    CHECK(wp(two.B(2), 3, B) == HalfIntVal::from_twice(-2));  // |B_2|_3 = 3

    CHECK_THROWS_AS(convergents({Quat(1), Quat(), Quat(1)}, B), Error);
}

TEST_CASE("identity suite")
{
    SpecialType T = special(3, 2);
    const Algebra& B = T.algebra();
    Quat half(Rational(1, 2));
    CFExpansion e = expand(half, FloorFunction(T));
    ConvergentTable t = convergents(e.partial, B, half);
    IdentityReport r = verify_identities(half, e, t, B);
    CHECK(r.all_passed());
    CHECK(t.Q(static_cast<long>(t.size()) - 1) == half);

    Quat x = alpha0(3, 2);
    CFExpansion p = expand(x, FloorFunction(T));
    ConvergentTable tp = convergents(p.quotients(10), B, x);
    IdentityReport rp = verify_identities(x, p, tp, B);
    CHECK(rp.all_passed());
    REQUIRE(rp.find("bn_abs"));
    CHECK(rp.find("bn_abs")->checked == 9);
    REQUIRE(rp.find("v_abs"));
    CHECK(rp.find("v_abs")->passed);

    tp.tamper_A(3, tp.A(3) + Quat(1));
    IdentityReport bad = verify_identities(x, p, tp, B);
    const IdentityCheck* mp = bad.find("matrix_product");
    REQUIRE(mp);
    CHECK_FALSE(mp->passed);
    CHECK(mp->first_failure == 3);
    CHECK_FALSE(mp->witness.empty());
}

TEST_CASE("convergence profile")
{
    SpecialType T = special(3, 2);
    const Algebra& B = T.algebra();
    Quat half(Rational(1, 2));
    auto fin = convergence_profile(half, expand(half, FloorFunction(T)), 2, B);
    CHECK(fin.back().is_infinite());

    Quat x = alpha0(3, 2);
    CFExpansion e = expand(x, FloorFunction(T));
    auto prof = convergence_profile(x, e, 8, B);
    ConvergentTable t = convergents(e.quotients(9), B);
    for (std::size_t n = 0; n < prof.size(); ++n) {
        CHECK(prof[n].twice() == static_cast<long>(2 * n + 1));
        auto n_ = static_cast<long>(n);
        CHECK(prof[n] == -(wp(t.B(n_), 3, B) + wp(t.B(n_ + 1), 3, B)));
    }
}

TEST_CASE("expansion properties on random inputs")
{
    std::mt19937_64 rng(31);
    for (auto [p, q] : {std::pair{3, 2}, {3, 5}}) {
        SpecialType T = special(p, q);
        const Algebra& B = T.algebra();
        FloorFunction f(T);
        for (int k = 0; k < 60; ++k) {
            Quat x = sample::p_saturated(rng, p, 40, 3);
            CFExpansion e = expand(x, f, {15, 65536});
            ConvergentTable t = convergents(e.quotients(15), B, x);
            CHECK(verify_identities(x, e, t, B).all_passed());
            if (e.status == CFStatus::Finite)
                CHECK(evaluate_continued_fraction(e.partial, B) == x);
            if (e.status == CFStatus::Periodic) {
                Quat start = e.complete[e.preperiod];
                CFExpansion again = expand(start, f, {e.period + 1, 65536});
                CHECK(again.status == CFStatus::Periodic);
                CHECK(again.preperiod == 0);
                CHECK(again.period == e.period);
            }
        }
    }
}

TEST_CASE("prescribed quotients reproduce the expansion")
{
    for (auto [p, q] : {std::pair{3, 2}, {11, 2}, {3, 5}}) {
        SpecialType T = special(p, q);
        CFExpansion e = expand(alpha0(p, q), FloorFunction(T));
        REQUIRE(e.status == CFStatus::Periodic);
        FloorFunction g = make_override_floor(e.partial, T);
        CFExpansion again = expand(alpha0(p, q), g);
        CHECK(again.partial == e.partial);
        CHECK(again.period == e.period);

        CFExpansion pre = periodic_expansion({}, e.partial, T);
        CHECK(pre.floor_kind == "prescribed");
        CHECK(!pre.has_complete());
        CHECK(pre.quotient(7) == e.quotient(7));
    }
}
