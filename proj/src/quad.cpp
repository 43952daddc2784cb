#include "quatcf/quad.hpp"

#include "quatcf/error.hpp"

#include <algorithm>

namespace quatcf {

Quat QuadPoly::eval(const Quat& x, const Algebra& alg) const
{
    return alg.mul({x, P, x}) + alg.mul(x, Q1) + alg.mul(Q2, x) + S;
}

PeriodicPoly build_periodic_cf_polynomial(const std::vector<Quat>& quotients, const SpecialType& type,
                                          const Rational& eps)
{
    if (quotients.empty())
        throw Error(ErrorCode::AdmissibilityFailure, "empty quotient list");
    const auto zero = HalfIntVal::from_twice(0);
    for (const auto& a : quotients) {
        if (type.val(a) >= zero)
            throw Error(ErrorCode::AdmissibilityFailure, "|a|_p > 1 fails for " + a.to_string());
        if (!type.order().p_saturated_membership(a, type.p()))
            throw Error(ErrorCode::AdmissibilityFailure, "a in R[1/p] fails for " + a.to_string());
    }
    for (std::size_t k = 0; k < quotients.size(); ++k)
        for (std::size_t l = k + 1; l < quotients.size(); ++l)
            if (quotients[k] != quotients[l] && type.val(quotients[k] - quotients[l]) > zero)
                throw Error(ErrorCode::AdmissibilityFailure,
                            "ball separation fails for " + quotients[k].to_string() + " and " + quotients[l].to_string());

    const Algebra& alg = type.algebra();
    ConvergentTable t = convergents(quotients, alg);
    long n = static_cast<long>(quotients.size()) - 1;
    PeriodicPoly out;
    out.poly = {t.B(n), t.B(n - 1), -t.A(n), -t.A(n - 1)};
    out.quotients = quotients;
    out.mu = mu_of_quotients(quotients, type.p(), alg, eps);
    return out;
}

MuCertificate certify_no_root(const PeriodicPoly& poly, const SpecialType& type, const Rational& eps)
{
    std::vector<Quat> reversed(poly.quotients.rbegin(), poly.quotients.rend());
    MuCertificate fwd = certify_not_in_B(periodic_expansion({}, poly.quotients, type), type, eps);
    MuCertificate rev = certify_not_in_B(periodic_expansion({}, reversed, type), type, eps);
    MuCertificate out;
    out.mu = hull_max(fwd.mu, rev.mu);
    out.verdict = fwd.verdict == Verdict::Certified && rev.verdict == Verdict::Certified ? Verdict::Certified
                                                                                         : Verdict::Inconclusive;
    return out;
}

std::vector<Quat> subfield_roots(const Quat& a, const Algebra& alg)
{
    if (a.is_scalar())
        throw Error(ErrorCode::ScalarInput, "subfield oracle needs a non-scalar a");
    const Rational t = a.trd(), n = alg.nrd(a);
    std::vector<std::pair<Rational, Rational>> uv;

    // v = 1/2: needs t = 0, then u^2 = 1 - n/4.
    if (t == 0) {
        Rational u;
        if (rational_sqrt(1 - n / 4, u)) {
            uv.emplace_back(u, Rational(1, 2));
            uv.emplace_back(-u, Rational(1, 2));
        }
    }
    // v != 1/2: u = -t v (v-1) / (2v-1) and w = v^2 - v solves
    // (t^2 - 4n) w^2 - (n + 4) w - 1 = 0.
    std::vector<Rational> ws;
    Rational A = t * t - 4 * n, Bc = -(n + 4), Cc = -1;
    if (A == 0) {
        if (Bc != 0)
            ws.push_back(-Cc / Bc);
    } else {
        Rational root;
        if (rational_sqrt(Bc * Bc - 4 * A * Cc, root)) {
            ws.push_back((-Bc + root) / (2 * A));
            ws.push_back((-Bc - root) / (2 * A));
        }
    }
    for (const auto& w : ws) {
        Rational s;
        if (w == Rational(-1, 4) || !rational_sqrt(1 + 4 * w, s))
            continue;
        for (const Rational& v : {Rational((1 + s) / 2), Rational((1 - s) / 2)}) {
            Rational u = -t * v * (v - 1) / (2 * v - 1);
            uv.emplace_back(u, v);
        }
    }

    std::vector<Quat> roots;
    for (const auto& [u, v] : uv) {
        Quat x = Quat(u) + v * a;
        if (!(alg.sqr(x) - alg.mul(a, x) - Quat(1)).is_zero())
            throw Error(ErrorCode::MismatchError, "subfield candidate " + x.to_string() + " is not a root");
        roots.push_back(x);
    }
    std::sort(roots.begin(), roots.end(), [](const Quat& x, const Quat& y) { return x.coords() < y.coords(); });
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

CounterexampleTrace counterexample_trace(const Integer& p, const Integer& q, std::size_t steps)
{
    Order order = maximal_order_pq(p, q);
    SpecialType type(order, p);
    const Quat u(0, 1, 0, Rational(Integer(1), p));

    CounterexampleTrace tr;
    tr.p = p;
    tr.q = q;
    Rational c(Integer(1), q);  // alpha_n = c u
    CFExpansion exp = expand(Rational(c) * u, FloorFunction(type), ExpandLimits{steps, 65536});
    tr.status = exp.status;
    tr.preperiod = exp.preperiod;
    tr.period = exp.period;

    const Integer pm1 = p - 1;
    for (std::size_t n = 0; n < steps; ++n) {
        auto eng_a = exp.quotient(n);
        auto eng_alpha = exp.complete_quotient(n);
        if (!eng_a || !eng_alpha) {
            if (exp.status == CFStatus::Finite)
                throw Error(ErrorCode::MismatchError, "engine terminated at step " + std::to_string(n));
            break;  // size budget reached
        }
        TraceStep st;
        st.n = n;
        long vp = valuation(c, p);
        st.r = -vp;
        Rational unit = c / rpow(p, vp);  // k1 / k2, prime to p
        st.k1 = unit.get_num();
        st.k2 = unit.get_den();
        Integer mod = ipow(p, static_cast<unsigned long>(st.r + 1 > 0 ? st.r + 1 : 0));
        if (st.r + 1 <= 0)
            throw Error(ErrorCode::MismatchError, "alpha_" + std::to_string(n) + " is p-integral");
        st.w = centered_residue(unit, mod);
        Integer num = st.k1 - st.w * st.k2;
        st.v = num / mod;
        if (st.v * mod != num)
            throw Error(ErrorCode::MismatchError, "Bezout step is not exact at step " + std::to_string(n));
        st.alpha = c * u;
        Rational coeff(st.w, ipow(p, static_cast<unsigned long>(st.r)));
        coeff.canonicalize();
        st.quotient = coeff * u;

        Integer den(c.get_den());
        if (!mpz_divisible_p(den.get_mpz_t(), q.get_mpz_t()) && !mpz_divisible_p(den.get_mpz_t(), pm1.get_mpz_t()))
            throw Error(ErrorCode::MismatchError,
                        "denominator of alpha_" + std::to_string(n) + " divisible by neither q nor p-1");
        if (*eng_alpha != st.alpha)
            throw Error(ErrorCode::MismatchError, "complete quotient mismatch at step " + std::to_string(n) +
                                                      ": engine " + eng_alpha->to_string() + ", recursion " +
                                                      st.alpha.to_string());
        if (*eng_a != st.quotient)
            throw Error(ErrorCode::MismatchError, "partial quotient mismatch at step " + std::to_string(n) +
                                                      ": engine " + eng_a->to_string() + ", recursion " +
                                                      st.quotient.to_string());
        if (st.v == 0)
            throw Error(ErrorCode::MismatchError, "recursion terminates at step " + std::to_string(n));
        tr.steps.push_back(st);
        c = Rational(st.k2) / (Rational(q * pm1) * Rational(st.v));
    }
    return tr;
}

}  // namespace quatcf
