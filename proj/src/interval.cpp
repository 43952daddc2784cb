#include "quatcf/interval.hpp"

#include "quatcf/error.hpp"

#include <algorithm>

namespace quatcf {

RatInterval::RatInterval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi))
{
    if (lo_ > hi_)
        throw Error(ErrorCode::PreconditionViolated, "interval with lo > hi");
}

RatInterval RatInterval::rounded(unsigned bits) const
{
    Integer scale = ipow(Integer(2), bits);
    Integer l, h;
    Rational ls = lo_ * scale, hs = hi_ * scale;
    mpz_fdiv_q(l.get_mpz_t(), ls.get_num_mpz_t(), ls.get_den_mpz_t());
    mpz_cdiv_q(h.get_mpz_t(), hs.get_num_mpz_t(), hs.get_den_mpz_t());
    Rational nl(l, scale), nh(h, scale);
    nl.canonicalize();
    nh.canonicalize();
    // Keep exact endpoints when they are already no larger than the rounded ones.
    if (bit_size(lo_) <= bit_size(nl))
        nl = lo_;
    if (bit_size(hi_) <= bit_size(nh))
        nh = hi_;
    return RatInterval(nl, nh);
}

RatInterval operator+(const RatInterval& x, const RatInterval& y) { return {x.lo_ + y.lo_, x.hi_ + y.hi_}; }

RatInterval operator-(const RatInterval& x, const RatInterval& y) { return {x.lo_ - y.hi_, x.hi_ - y.lo_}; }

RatInterval operator*(const RatInterval& x, const RatInterval& y)
{
    Rational c[4] = {x.lo_ * y.lo_, x.lo_ * y.hi_, x.hi_ * y.lo_, x.hi_ * y.hi_};
    return {*std::min_element(c, c + 4), *std::max_element(c, c + 4)};
}

RatInterval operator/(const RatInterval& x, const RatInterval& y)
{
    if (y.contains(Rational(0)))
        throw Error(ErrorCode::ZeroDivisor, "interval division by an interval containing 0");
    Rational one(1);
    return x * RatInterval(one / y.hi_, one / y.lo_);
}

RatInterval hull_max(const RatInterval& x, const RatInterval& y)
{
    return {std::max(x.lo(), y.lo()), std::max(x.hi(), y.hi())};
}

RatInterval sqrt_enclosure(const Rational& r, unsigned bits)
{
    if (r < 0)
        throw Error(ErrorCode::NegativeInput, "square root of a negative rational");
    Rational root;
    if (rational_sqrt(r, root))
        return RatInterval(root);
    // sqrt(n/d) = sqrt(n d) / d
    Integer d(r.get_den());
    Integer s = ipow(Integer(2), bits);
    Integer big = Integer(r.get_num()) * d * s * s;
    Integer m;
    mpz_sqrt(m.get_mpz_t(), big.get_mpz_t());
    Rational lo(m, d * s), hi(m + 1, d * s);
    lo.canonicalize();
    hi.canonicalize();
    return {lo, hi};
}

RatInterval sqrt(const RatInterval& x, unsigned bits)
{
    if (x.hi() < 0)
        throw Error(ErrorCode::NegativeInput, "square root of a negative interval");
    Rational lo = x.lo() < 0 ? Rational(0) : x.lo();
    return {sqrt_enclosure(lo, bits).lo(), sqrt_enclosure(x.hi(), bits).hi()};
}

unsigned bits_for(const Rational& eps)
{
    if (eps <= 0)
        throw Error(ErrorCode::PreconditionViolated, "epsilon must be positive");
    unsigned bits = 0;
    Rational scale(1);
    while (scale > eps) {
        scale /= 2;
        ++bits;
    }
    return bits;
}

Rational default_epsilon()
{
    return Rational(Integer(1), ipow(Integer(2), 64));
}

}  // namespace quatcf
