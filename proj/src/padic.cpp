#include "quatcf/padic.hpp"

#include "quatcf/error.hpp"

namespace quatcf {

std::string HalfIntVal::to_string() const
{
    if (is_infinite())
        return "inf";
    return *twice_ % 2 == 0 ? std::to_string(*twice_ / 2) : std::to_string(*twice_) + "/2";
}

HalfIntVal operator+(const HalfIntVal& x, const HalfIntVal& y)
{
    if (x.is_infinite() || y.is_infinite())
        return HalfIntVal::infinite();
    return HalfIntVal::from_twice(x.twice() + y.twice());
}

HalfIntVal operator-(const HalfIntVal& x)
{
    if (x.is_infinite())
        throw Error(ErrorCode::PreconditionViolated, "negating an infinite valuation");
    return HalfIntVal::from_twice(-x.twice());
}

std::strong_ordering operator<=>(const HalfIntVal& x, const HalfIntVal& y)
{
    if (x.is_infinite() || y.is_infinite())
        return x.is_infinite() <=> y.is_infinite();
    return x.twice() <=> y.twice();
}

HalfIntVal wp(const Quat& x, const Integer& p, const Algebra& alg)
{
    if (!alg.is_ramified_at(p))
        throw Error(ErrorCode::NotRamified, "w_p is only a valuation at a ramified prime; p = " + to_string(p));
    if (x.is_zero())
        return HalfIntVal::infinite();
    return HalfIntVal::from_twice(valuation(alg.nrd(x), p));
}

SpecialType::SpecialType(Order order, Integer p) : order_(std::move(order)), p_(std::move(p))
{
    const Algebra& alg = algebra();
    if (p_ < 3 || !is_prime(p_))
        throw Error(ErrorCode::PreconditionViolated, "special type needs an odd prime p");
    if (!alg.is_ramified_at(p_))
        throw Error(ErrorCode::NotRamified, "B is not ramified at " + to_string(p_));
    if (abs(alg.b()) != Rational(p_))
        throw Error(ErrorCode::PreconditionViolated, "uniformizer j needs j^2 = +-p");
    Integer a_class = Integer(alg.a().get_num()) * Integer(alg.a().get_den());
    if (mpz_divisible_p(a_class.get_mpz_t(), p_.get_mpz_t()) || legendre(a_class, p_) != -1)
        throw Error(ErrorCode::PreconditionViolated, "i^2 must be a p-adic unit non-residue");
    pi_ = alg.j();
    if (!order_.contains(pi_))
        throw Error(ErrorCode::PreconditionViolated, "uniformizer j is not in the order");
    pi_inv_ = alg.inv(pi_);

    long half = static_cast<long>(mpz_get_si(p_.get_mpz_t()) - 1) / 2;
    for (long u = -half; u <= half; ++u)
        for (long v = -half; v <= half; ++v)
            digits_.emplace_back(Rational(u), Rational(v), Rational(0), Rational(0));
}

Quat SpecialType::digit_of(const Quat& y) const
{
    for (std::size_t k = 0; k < 4; ++k)
        if (mpz_divisible_p(y[k].get_den_mpz_t(), p_.get_mpz_t()))
            throw Error(ErrorCode::PreconditionViolated, "digit_of: " + y.to_string() + " is not in R_p");
    return Quat(Rational(centered_residue(y[0], p_)), Rational(centered_residue(y[1], p_)), Rational(0),
                Rational(0));
}

std::vector<std::pair<long, Quat>> SpecialType::digit_expand(const Quat& x, long upto_level) const
{
    std::vector<std::pair<long, Quat>> out;
    if (x.is_zero())
        return out;
    const Algebra& alg = algebra();
    const long r = val(x).twice();
    Quat rem = x;
    Quat shift = alg.pow(pi_inv_, r);  // j^{-l}
    Quat power = alg.pow(pi_, r);      // j^{l}
    for (long level = r; level <= upto_level; ++level) {
        Quat c = digit_of(alg.mul(rem, shift));
        out.emplace_back(level, c);
        if (!c.is_zero())
            rem = rem - alg.mul(c, power);
        shift = alg.mul(shift, pi_inv_);
        power = alg.mul(power, pi_);
    }
    return out;
}

Quat SpecialType::floor(const Quat& x) const
{
    if (x.is_zero() || val(x).twice() > 0)
        return Quat();
    const Algebra& alg = algebra();
    Quat s;
    for (const auto& [level, c] : digit_expand(x, 0))
        if (!c.is_zero())
            s = s + alg.mul(c, alg.pow(pi_, level));
    return s;
}

Quat FloorFunction::operator()(const Quat& x) const
{
    for (const auto& a : overrides_)
        if (base_.val(x - a) > HalfIntVal::from_twice(0))
            return a;
    return base_.floor(x);
}

std::string FloorFunction::descriptor() const
{
    if (overrides_.empty())
        return "special";
    return "override(" + std::to_string(overrides_.size()) + ")";
}

FloorFunction make_override_floor(const std::vector<Quat>& quotients, const SpecialType& base)
{
    const auto zero = HalfIntVal::from_twice(0);
    for (std::size_t k = 0; k < quotients.size(); ++k) {
        const Quat& a = quotients[k];
        HalfIntVal w = base.val(a);
        if (k >= 1 && w >= zero)
            throw Error(ErrorCode::NotAdmissible, "quotient " + std::to_string(k) + " = " + a.to_string() + " has |a|_p <= 1");
        if (!a.is_zero() && w > zero)
            throw Error(ErrorCode::NotAdmissible, "nonzero quotient " + a.to_string() + " lies in the unit ball of 0");
        if (!base.order().p_saturated_membership(a, base.p()))
            throw Error(ErrorCode::NotAdmissible, "quotient " + a.to_string() + " is not in R[1/p]");
    }
    FloorFunction f(base);
    for (const auto& a : quotients) {
        bool seen = false;
        for (const auto& b : f.overrides_) {
            if (a == b) {
                seen = true;
                break;
            }
            if (base.val(a - b) > zero)
                throw Error(ErrorCode::InconsistentQuotients,
                            a.to_string() + " and " + b.to_string() + " share a unit ball");
        }
        if (!seen)
            f.overrides_.push_back(a);
    }
    return f;
}

}  // namespace quatcf
