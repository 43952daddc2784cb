#pragma once

#include "quatcf/quad.hpp"

#include <random>
#include <vector>

namespace oracle {

using quatcf::Integer;
using quatcf::Rational;

// Browkin's p-adic continued fraction on Q, written against raw GMP only:
// s(x) = sum_{m=-k}^{0} c_m p^m with digits in [-(p-1)/2, (p-1)/2].
inline Integer mod_inverse(Integer a, const Integer& m)
{
    Integer r0 = m, r1 = a % m, s0 = 0, s1 = 1;
    if (r1 < 0)
        r1 += m;
    while (r1 != 0) {
        Integer t = r0 / r1;
        Integer r2 = r0 - t * r1, s2 = s0 - t * s1;
        r0 = r1, r1 = r2, s0 = s1, s1 = s2;
    }
    Integer inv = s0 % m;
    return inv < 0 ? Integer(inv + m) : inv;
}

inline Rational browkin_floor(const Rational& x, long p)
{
    if (x == 0)
        return 0;
    Integer num = x.get_num(), den = x.get_den();
    long k = 0;
    while (den % p == 0) {
        den /= p;
        ++k;
    }
    // y = num / den is p-integral; peel k+1 base-p digits.
    Rational y(num, den);
    y.canonicalize();
    Rational s = 0, scale = 1;
    for (long m = 0; m < k; ++m)
        scale /= p;
    for (long m = 0; m <= k; ++m) {
        Integer d = (Integer(y.get_num()) * mod_inverse(y.get_den(), p)) % p;
        if (d < 0)
            d += p;
        if (d > (p - 1) / 2)
            d -= p;
        s += Rational(d) * scale;
        y = (y - Rational(d)) / p;
        scale *= p;
    }
    return s;
}

inline std::vector<Rational> browkin_expansion(Rational x, long p, std::size_t max_steps = 200)
{
    std::vector<Rational> out;
    while (out.size() < max_steps) {
        Rational a = browkin_floor(x, p);
        out.push_back(a);
        if (x == a)
            break;
        x = 1 / (x - a);
    }
    return out;
}

// (1 + sqrt 5) / 2 by bisection on t^2 - t - 1.
inline std::pair<Rational, Rational> golden_ratio(int iterations)
{
    Rational lo = 1, hi = 2;
    for (int k = 0; k < iterations; ++k) {
        Rational mid = (lo + hi) / 2;
        if (mid * mid - mid - 1 > 0)
            hi = mid;
        else
            lo = mid;
    }
    return {lo, hi};
}

}  // namespace oracle

namespace sample {

using quatcf::Quat;
using quatcf::Rational;

inline Rational rational(std::mt19937_64& rng, long bound)
{
    std::uniform_int_distribution<long> num(-bound, bound), den(1, bound);
    Rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

inline Quat quat(std::mt19937_64& rng, long bound)
{
    return Quat(rational(rng, bound), rational(rng, bound), rational(rng, bound), rational(rng, bound));
}

// Element of Z[1/p]<1, i, j, ij>, hence p-saturated for any order containing the standard one.
inline Quat p_saturated(std::mt19937_64& rng, long p, long bound, int max_power)
{
    std::uniform_int_distribution<long> c(-bound, bound);
    std::uniform_int_distribution<int> e(0, max_power);
    auto coord = [&] {
        Rational r(c(rng));
        for (int k = e(rng); k > 0; --k)
            r /= p;
        return r;
    };
    return Quat(coord(), coord(), coord(), coord());
}

inline Quat nonzero(std::mt19937_64& rng, long bound)
{
    Quat x;
    do
        x = quat(rng, bound);
    while (x.is_zero());
    return x;
}

}  // namespace sample
