#include "quatcf/heights.hpp"

#include "quatcf/error.hpp"

#include <algorithm>
#include <set>

namespace quatcf {

namespace {

Surd mul(const Surd& x, const Surd& y, const Rational& c)
{
    return {x.r * y.r + c * x.s * y.s, x.r * y.s + x.s * y.r};
}

Surd add(const Surd& x, const Surd& y) { return {x.r + y.r, x.s + y.s}; }
Surd sub(const Surd& x, const Surd& y) { return {x.r - y.r, x.s - y.s}; }

RatInterval enclose(const Surd& x, const RatInterval& sqrt_c) { return RatInterval(x.r) + RatInterval(x.s) * sqrt_c; }

Integer lcm_of_dens(const Quat& x)
{
    Integer l = 1;
    for (const auto& c : x.coords())
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    return l;
}

Integer gcd_of_nums(const Quat& x)
{
    Integer g = 0;
    for (const auto& c : x.coords())
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
    return g;
}

}  // namespace

SplitMatrix SplitMatrix::operator*(const SplitMatrix& o) const
{
    if (radicand != o.radicand || swapped != o.swapped)
        throw Error(ErrorCode::PreconditionViolated, "split matrices over different fields");
    const Rational& c = radicand;
    SplitMatrix m{c, swapped, {}};
    for (int r = 0; r < 2; ++r)
        for (int k = 0; k < 2; ++k)
            m.e[2 * r + k] = add(mul(e[2 * r], o.e[k], c), mul(e[2 * r + 1], o.e[2 + k], c));
    return m;
}

Surd SplitMatrix::det() const { return sub(mul(e[0], e[3], radicand), mul(e[1], e[2], radicand)); }

Surd SplitMatrix::frobenius_sq() const
{
    Surd s{0, 0};
    for (const auto& x : e)
        s = add(s, mul(x, x, radicand));
    return s;
}

SplitMatrix real_split(const Quat& x, const Algebra& alg)
{
    const Rational &a = alg.a(), &b = alg.b();
    if (a < 0 && b < 0)
        throw Error(ErrorCode::NotSplittable, "definite algebra has no real splitting");
    // In the swapped case i plays the role of j: x = x0 + x2 J + x1 I + x3 (-(J I)).
    bool swapped = a < 0;
    Rational c = swapped ? b : a, d = swapped ? a : b;
    Rational u0 = x[0], u1 = swapped ? x[2] : x[1], u2 = swapped ? x[1] : x[2], u3 = swapped ? -x[3] : x[3];
    // u0 + u1 I + u2 J + u3 I J with I = diag(rc, -rc), J = [[0, 1], [d, 0]]
    SplitMatrix m{c, swapped, {}};
    m.e[0] = {u0, u1};
    m.e[1] = {u2, u3};
    m.e[2] = {d * u2, -d * u3};
    m.e[3] = {u0, -u1};
    return m;
}

ScaledElement split_content(const Quat& x)
{
    if (x.is_zero())
        return {Rational(0), x};
    Rational scale(gcd_of_nums(x), lcm_of_dens(x));
    scale.canonicalize();
    return {scale, x / scale};
}

RatInterval ninf_at(const Quat& x, const Algebra& alg, unsigned bits)
{
    if (x.is_zero()) {
        real_split(x, alg);  // still reject definite algebras
        return RatInterval(Rational(0));
    }
    auto [scale, y] = split_content(x);
    SplitMatrix m = real_split(y, alg);
    Surd s = m.frobenius_sq();
    Surd det = m.det();  // rational: nrd(y)
    unsigned work = bits + 16;
    RatInterval sc = s.s == 0 ? RatInterval(Rational(0)) : sqrt_enclosure(m.radicand, work + 8);
    RatInterval S = enclose(s, sc);
    RatInterval disc = S * S - RatInterval(Rational(4 * det.r * det.r));
    RatInterval sig2 = (S + sqrt(disc, work)) * RatInterval(Rational(1, 2));
    RatInterval sigma = sqrt(sig2, work);
    return (RatInterval(scale) * sigma).rounded(bits + 8);
}

RatInterval ninf(const Quat& x, const Algebra& alg, const Rational& eps)
{
    return refine([&](unsigned bits) { return ninf_at(x, alg, bits); }, eps);
}

RatInterval theta(const RatInterval& x, unsigned bits)
{
    if (x.lo() < 0)
        throw Error(ErrorCode::NegativeInput, "theta needs a nonnegative argument");
    auto end = [&](const Rational& t, bool upper) -> Rational {
        RatInterval r = sqrt_enclosure(t * t + 4, bits + 2);
        return (t + (upper ? r.hi() : r.lo())) / 2;
    };
    return {end(x.lo(), false), end(x.hi(), true)};
}

RatInterval theta_refined(const RatInterval& x, const Rational& eps)
{
    return refine([&](unsigned bits) { return theta(x, bits); }, eps);
}

RatInterval padic_abs_enclosure(const HalfIntVal& w, const Integer& p, unsigned bits)
{
    if (w.is_infinite())
        return RatInterval(Rational(0));
    long e = -w.twice();  // |x|_p = p^(e/2)
    if (e % 2 == 0)
        return RatInterval(rpow(p, e / 2));
    return RatInterval(rpow(p, (e - 1) / 2)) * sqrt_enclosure(Rational(p), bits + 8);
}

std::string PlaceNorm::to_string() const
{
    if (twice_exp % 2 == 0)
        return quatcf::to_string(rpow(prime, twice_exp / 2));
    return quatcf::to_string(prime) + "^(" + std::to_string(twice_exp) + "/2)";
}

Rational HeightReport::finite_rational_part() const
{
    Rational r(1);
    for (const auto& pn : finite)
        r *= rpow(pn.prime, pn.twice_exp % 2 == 0 ? pn.twice_exp / 2 : (pn.twice_exp - 1) / 2);
    return r;
}

Integer HeightReport::finite_sqrt_part() const
{
    Integer s(1);
    for (const auto& pn : finite)
        if (pn.twice_exp % 2 != 0)
            s *= pn.prime;
    return s;
}

HeightReport height(const Quat& x, const Order& unram, const Rational& eps)
{
    if (x.is_zero())
        throw Error(ErrorCode::PreconditionViolated, "height of 0");
    const Algebra& alg = unram.algebra();
    HeightReport rep;

    std::set<Integer> candidates;
    for (const auto& p : alg.ramified_primes())
        candidates.insert(p);
    Coords c = unram.coordinates(x);
    Quat cq(c[0], c[1], c[2], c[3]);
    for (const auto& q : prime_factors(lcm_of_dens(cq)))
        candidates.insert(q);
    for (const auto& q : prime_factors(gcd_of_nums(cq)))
        candidates.insert(q);

    for (const auto& q : candidates) {
        PlaceNorm pn{q, 0, alg.is_ramified_at(q)};
        if (pn.ramified)
            pn.twice_exp = -wp(x, q, alg).twice();
        else
            pn.twice_exp = 2 * valuation(unram.local_lattice_norm(x, q), q);
        if (pn.twice_exp != 0)
            rep.finite.push_back(pn);
    }

    rep.infinity = ninf(x, alg, eps);
    Rational fr = rep.finite_rational_part();
    Integer fs = rep.finite_sqrt_part();
    rep.height = refine(
        [&](unsigned bits) {
            RatInterval f = RatInterval(fr) * sqrt_enclosure(Rational(fs), bits + 8);
            return (f * ninf_at(x, alg, bits + 8)).rounded(bits + 4);
        },
        eps);
    return rep;
}

RatInterval mu_ratio(const Quat& a, const Integer& p, const Algebra& alg, const Rational& eps)
{
    HalfIntVal w = wp(a, p, alg);
    if (w.is_infinite())
        throw Error(ErrorCode::PreconditionViolated, "mu ratio of a zero quotient");
    return refine(
        [&](unsigned bits) {
            RatInterval t = theta(ninf_at(a, alg, bits + 8), bits + 8);
            return (t / padic_abs_enclosure(w, p, bits + 8)).rounded(bits + 4);
        },
        eps);
}

RatInterval mu_of_quotients(const std::vector<Quat>& quotients, const Integer& p, const Algebra& alg,
                            const Rational& eps)
{
    if (quotients.empty())
        throw Error(ErrorCode::PreconditionViolated, "mu over an empty quotient list");
    std::optional<RatInterval> out;
    for (const auto& a : quotients) {
        RatInterval r = mu_ratio(a, p, alg, eps);
        out = out ? hull_max(*out, r) : r;
    }
    return *out;
}

RatInterval mu_of_expansion(const CFExpansion& exp, std::size_t skip, const Algebra& alg, const Rational& eps)
{
    std::vector<Quat> qs;
    if (exp.status == CFStatus::Periodic) {
        qs.assign(exp.partial.begin() + static_cast<long>(exp.preperiod), exp.partial.end());
    } else {
        for (std::size_t n = std::max<std::size_t>(skip + 1, 1); n < exp.partial.size(); ++n)
            qs.push_back(exp.partial[n]);
    }
    if (qs.empty())
        throw Error(ErrorCode::PreconditionViolated, "no quotient with index > " + std::to_string(skip));
    return mu_of_quotients(qs, exp.p, alg, eps);
}

std::string to_string(Verdict v) { return v == Verdict::Certified ? "certified" : "inconclusive"; }

MuCertificate certify_not_in_B(const CFExpansion& exp, const SpecialType& type, const Rational& eps)
{
    if (exp.status != CFStatus::Periodic)
        throw Error(ErrorCode::PreconditionViolated, "certification needs a periodic expansion, got " + to_string(exp.status));
    make_override_floor(exp.partial, type);
    const auto zero = HalfIntVal::from_twice(0);
    for (std::size_t n = exp.preperiod; n < exp.partial.size(); ++n)
        if (type.val(exp.partial[n]) >= zero)
            throw Error(ErrorCode::NotAdmissible, "periodic quotient " + exp.partial[n].to_string() + " has |a|_p <= 1");
    MuCertificate cert;
    cert.mu = mu_of_expansion(exp, 0, type.algebra(), eps);
    cert.verdict = cert.mu.hi() < 1 ? Verdict::Certified : Verdict::Inconclusive;
    return cert;
}

bool GrowthBoundReport::all_passed() const
{
    return std::all_of(holds.begin(), holds.end(), [](bool b) { return b; });
}

std::optional<std::size_t> GrowthBoundReport::first_failure() const
{
    for (std::size_t n = 0; n < holds.size(); ++n)
        if (!holds[n])
            return n;
    return std::nullopt;
}

GrowthBoundReport growth_bound_check(const ConvergentTable& table, const Algebra& alg, const Rational& eps)
{
    if (!table.has_target())
        throw Error(ErrorCode::PreconditionViolated, "growth bound check needs V_n");
    unsigned bits = bits_for(eps) + 16;
    long N = static_cast<long>(table.size()) - 1;
    std::vector<RatInterval> t;  // t[n + 1] = N_inf(V_n)
    for (long n = -1; n <= N; ++n)
        t.push_back(ninf_at(table.V(n), alg, bits));

    GrowthBoundReport rep;
    rep.c = sqrt(t[1] * t[1] + t[0] * t[0], bits);
    RatInterval bound = rep.c;
    for (long n = 0; n <= N; ++n) {
        if (n >= 1)
            bound = (bound * theta(ninf_at(table.quotients()[static_cast<std::size_t>(n)], alg, bits), bits)).rounded(bits);
        RatInterval lhs = hull_max(t[static_cast<std::size_t>(n + 1)], t[static_cast<std::size_t>(n)]);
        rep.holds.push_back(lhs.lo() <= bound.hi());
    }
    return rep;
}

BoundedTypeReport bounded_type_analysis(const CFExpansion& exp, const Rational& C, const Algebra& alg,
                                        const Rational& eps)
{
    if (C <= 0)
        throw Error(ErrorCode::PreconditionViolated, "bound C must be positive");
    BoundedTypeReport rep;
    // least K with C^2 < p^K
    Rational c2 = C * C;
    long K = 0;
    while (rpow(exp.p, K) <= c2)
        ++K;
    while (rpow(exp.p, K - 1) > c2)
        --K;
    rep.K = K;
    for (std::size_t n = 0; n < exp.partial.size(); ++n) {
        const HalfIntVal& w = exp.valuations[n];
        if (!w.is_infinite() && -w.twice() <= K)
            rep.small_indices.push_back(n);
        if (!(ninf(exp.partial[n], alg, eps).hi() < C))
            rep.bound_unverified.push_back(n);
    }
    return rep;
}

}  // namespace quatcf
