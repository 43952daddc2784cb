#include "quatcf/cf.hpp"

#include "quatcf/error.hpp"

#include <algorithm>
#include <array>
#include <unordered_map>

namespace quatcf {

std::string to_string(CFStatus s)
{
    switch (s) {
    case CFStatus::Finite: return "finite";
    case CFStatus::Periodic: return "periodic";
    case CFStatus::Truncated: return "truncated";
    }
    return "unknown";
}

std::optional<std::size_t> CFExpansion::length() const
{
    if (status == CFStatus::Periodic)
        return std::nullopt;
    return partial.size();
}

namespace {

std::optional<std::size_t> unrolled_index(const CFExpansion& e, std::size_t n, std::size_t stored)
{
    if (n < stored)
        return n;
    if (e.status != CFStatus::Periodic || e.period == 0)
        return std::nullopt;
    return e.preperiod + (n - e.preperiod) % e.period;
}

}  // namespace

std::optional<Quat> CFExpansion::quotient(std::size_t n) const
{
    auto k = unrolled_index(*this, n, partial.size());
    if (!k)
        return std::nullopt;
    return partial[*k];
}

std::optional<Quat> CFExpansion::complete_quotient(std::size_t n) const
{
    if (complete.empty())
        return std::nullopt;
    auto k = unrolled_index(*this, n, complete.size());
    if (!k)
        return std::nullopt;
    return complete[*k];
}

std::vector<Quat> CFExpansion::quotients(std::size_t count) const
{
    std::vector<Quat> out;
    for (std::size_t n = 0; n < count; ++n) {
        auto a = quotient(n);
        if (!a)
            break;
        out.push_back(*a);
    }
    return out;
}

CFExpansion expand(const Quat& x, const FloorFunction& f, const ExpandLimits& limits)
{
    const Algebra& alg = f.algebra();
    CFExpansion e;
    e.floor_kind = f.descriptor();
    e.p = f.p();

    std::unordered_map<Quat, std::size_t, QuatHash> seen;
    Quat alpha = x;
    for (std::size_t n = 0;; ++n) {
        if (auto it = seen.find(alpha); it != seen.end()) {
            e.status = CFStatus::Periodic;
            e.preperiod = it->second;
            e.period = n - it->second;
            return e;
        }
        if (n >= limits.max_steps) {
            e.truncation = Truncation::MaxSteps;
            return e;
        }
        if (std::any_of(alpha.coords().begin(), alpha.coords().end(),
                        [&](const Rational& c) { return bit_size(c) > limits.coeff_bit_budget; })) {
            e.truncation = Truncation::SizeBudget;
            return e;
        }
        seen.emplace(alpha, n);
        Quat a = f(alpha);
        e.partial.push_back(a);
        e.complete.push_back(alpha);
        e.valuations.push_back(wp(a, f.p(), alg));
        if (alpha == a) {
            e.status = CFStatus::Finite;
            return e;
        }
        alpha = alg.inv(alpha - a);
    }
}

CFExpansion periodic_expansion(std::vector<Quat> preperiod, std::vector<Quat> period, const SpecialType& type)
{
    if (period.empty())
        throw Error(ErrorCode::PreconditionViolated, "periodic expansion needs a nonempty period");
    CFExpansion e;
    e.floor_kind = "prescribed";
    e.p = type.p();
    e.status = CFStatus::Periodic;
    e.preperiod = preperiod.size();
    e.period = period.size();
    e.partial = std::move(preperiod);
    e.partial.insert(e.partial.end(), period.begin(), period.end());
    for (const auto& a : e.partial)
        e.valuations.push_back(type.val(a));
    return e;
}

ConvergentTable convergents(const std::vector<Quat>& quotients, const Algebra& alg, const std::optional<Quat>& target)
{
    if (quotients.empty())
        throw Error(ErrorCode::PreconditionViolated, "convergents of an empty quotient list");
    ConvergentTable t;
    t.quotients_ = quotients;
    t.target_ = target;
    t.A_ = {Quat(1), quotients[0]};
    t.B_ = {Quat(0), Quat(1)};
    for (std::size_t n = 1; n < quotients.size(); ++n) {
        t.A_.push_back(alg.mul(t.A_[n], quotients[n]) + t.A_[n - 1]);
        t.B_.push_back(alg.mul(t.B_[n], quotients[n]) + t.B_[n - 1]);
    }
    for (std::size_t n = 0; n < quotients.size(); ++n) {
        const Quat& bn = t.B_[n + 1];
        if (alg.nrd(bn) == 0)
            throw Error(ErrorCode::SingularBn, "B_" + std::to_string(n) + " is a zero divisor");
        t.Q_.push_back(alg.mul(t.A_[n + 1], alg.inv(bn)));
    }
    if (target) {
        for (std::size_t k = 0; k < t.A_.size(); ++k)
            t.V_.push_back(t.A_[k] - alg.mul(*target, t.B_[k]));
    }
    return t;
}

Quat evaluate_continued_fraction(const std::vector<Quat>& quotients, const Algebra& alg)
{
    if (quotients.empty())
        throw Error(ErrorCode::PreconditionViolated, "empty continued fraction");
    Quat v = quotients.back();
    for (auto it = quotients.rbegin() + 1; it != quotients.rend(); ++it)
        v = *it + alg.inv(v);
    return v;
}

bool IdentityReport::all_passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.passed; });
}

const IdentityCheck* IdentityReport::find(const std::string& name) const
{
    for (const auto& c : checks)
        if (c.name == name)
            return &c;
    return nullptr;
}

namespace {

class Recorder {
public:
    explicit Recorder(std::string name) { check_.name = std::move(name); }

    template <class Witness>
    void record(long n, bool ok, Witness&& witness)
    {
        ++check_.checked;
        if (!ok && check_.passed) {
            check_.passed = false;
            check_.first_failure = n;
            check_.witness = "n=" + std::to_string(n) + ": " + witness();
        }
    }

    IdentityCheck take() { return std::move(check_); }

private:
    IdentityCheck check_;
};

std::string pair_witness(const Quat& lhs, const Quat& rhs) { return lhs.to_string() + " vs " + rhs.to_string(); }

std::string pair_witness(const HalfIntVal& lhs, const HalfIntVal& rhs)
{
    return lhs.to_string() + " vs " + rhs.to_string();
}

using QMat = std::array<Quat, 4>;  // row-major 2x2 with entries in B

QMat mat_mul(const QMat& x, const QMat& y, const Algebra& alg)
{
    return {alg.mul(x[0], y[0]) + alg.mul(x[1], y[2]), alg.mul(x[0], y[1]) + alg.mul(x[1], y[3]),
            alg.mul(x[2], y[0]) + alg.mul(x[3], y[2]), alg.mul(x[2], y[1]) + alg.mul(x[3], y[3])};
}

}  // namespace

IdentityReport verify_identities(const Quat& x, const CFExpansion& exp, const ConvergentTable& table,
                                 const Algebra& alg)
{
    const Integer& p = exp.p;
    const auto& a = table.quotients();
    const long N = static_cast<long>(a.size()) - 1;
    auto w = [&](const Quat& y) { return wp(y, p, alg); };
    auto alpha = [&](long n) { return exp.complete_quotient(static_cast<std::size_t>(n)); };

    IdentityReport report;

    {
        Recorder r("matrix_product");
        QMat prod{a[0], Quat(1), Quat(1), Quat(0)};
        for (long n = 0; n <= N; ++n) {
            if (n > 0)
                prod = mat_mul(prod, {a[n], Quat(1), Quat(1), Quat(0)}, alg);
            QMat expect{table.A(n), table.A(n - 1), table.B(n), table.B(n - 1)};
            r.record(n, prod == expect, [&] { return pair_witness(expect[0], prod[0]); });
        }
        report.checks.push_back(r.take());
    }
    {
        Recorder r("convergent_quotient");
        for (long n = 0; n <= N; ++n) {
            Quat nested = evaluate_continued_fraction(std::vector<Quat>(a.begin(), a.begin() + n + 1), alg);
            Quat ratio = alg.mul(table.A(n), alg.inv(table.B(n)));
            r.record(n, nested == ratio && nested == table.Q(n), [&] { return pair_witness(ratio, nested); });
        }
        report.checks.push_back(r.take());
    }
    {
        Recorder r("quotient_abs");
        for (long n = 1; n <= N; ++n)
            r.record(n, w(a[n]) < HalfIntVal::from_twice(0), [&] { return "w_p(a_n) = " + w(a[n]).to_string(); });
        report.checks.push_back(r.take());
    }
    {
        Recorder r("bn_abs");
        HalfIntVal sum = HalfIntVal::from_twice(0);
        for (long n = 1; n <= N; ++n) {
            sum = sum + w(a[n]);
            r.record(n, w(table.B(n)) == sum, [&] { return pair_witness(w(table.B(n)), sum); });
        }
        report.checks.push_back(r.take());
    }
    {
        Recorder r("convergent_gap");
        for (long n = 1; n <= N; ++n) {
            HalfIntVal lhs = w(table.Q(n) - table.Q(n - 1));
            HalfIntVal rhs = -(w(table.B(n)) + w(table.B(n - 1)));
            r.record(n, lhs == rhs, [&] { return pair_witness(lhs, rhs); });
        }
        report.checks.push_back(r.take());
    }
    {
        Recorder r("complete_abs");
        for (long n = 0; n <= N; ++n)
            if (auto an = alpha(n))
                r.record(n, w(*an) == w(a[n]), [&] { return pair_witness(w(*an), w(a[n])); });
        report.checks.push_back(r.take());
    }
    {
        Recorder r("mobius_reconstruction");
        for (long n = 0; n <= N; ++n) {
            auto next = alpha(n + 1);
            if (!next)
                continue;
            Quat num = alg.mul(table.A(n), *next) + table.A(n - 1);
            Quat den = alg.mul(table.B(n), *next) + table.B(n - 1);
            Quat rec = alg.mul(num, alg.inv(den));
            r.record(n, rec == x, [&] { return pair_witness(rec, x); });
        }
        report.checks.push_back(r.take());
    }
    if (table.has_target()) {
        {
            Recorder r("v_recurrence");
            for (long n = 1; n <= N; ++n) {
                Quat rhs = alg.mul(table.V(n - 1), a[n]) + table.V(n - 2);
                r.record(n, table.V(n) == rhs, [&] { return pair_witness(table.V(n), rhs); });
            }
            report.checks.push_back(r.take());
        }
        {
            Recorder r("v_annihilation");
            for (long n = 1; n <= N + 1; ++n) {
                auto an = alpha(n);
                if (!an)
                    continue;
                Quat lhs = alg.mul(table.V(n - 1), *an) + table.V(n - 2);
                r.record(n, lhs.is_zero(), [&] { return lhs.to_string(); });
            }
            report.checks.push_back(r.take());
        }
        {
            Recorder r("v_product");
            Quat prod(1);
            for (long n = 1; n <= N + 1; ++n) {
                auto an = alpha(n);
                if (!an)
                    break;
                prod = alg.mul(prod, alg.inv(*an));
                Quat rhs = (n % 2 ? Rational(-1) : Rational(1)) * prod;
                r.record(n, table.V(n - 1) == rhs, [&] { return pair_witness(table.V(n - 1), rhs); });
            }
            report.checks.push_back(r.take());
        }
        {
            Recorder r("v_abs");
            HalfIntVal sum = HalfIntVal::from_twice(0);
            for (long n = 1; n <= N; ++n) {
                sum = sum + w(a[n]);
                HalfIntVal lhs = w(table.V(n - 1));
                r.record(n, lhs == -sum, [&] { return pair_witness(lhs, -sum); });
            }
            report.checks.push_back(r.take());
        }
    }
    return report;
}

std::vector<HalfIntVal> convergence_profile(const Quat& x, const CFExpansion& exp, std::size_t count,
                                            const Algebra& alg)
{
    std::vector<HalfIntVal> out;
    auto q = exp.quotients(count);
    if (q.empty())
        return out;
    auto table = convergents(q, alg);
    for (std::size_t n = 0; n < q.size(); ++n)
        out.push_back(wp(x - table.Q(static_cast<long>(n)), exp.p, alg));
    return out;
}

}  // namespace quatcf
