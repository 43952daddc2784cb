#pragma once

#include "quatcf/rational.hpp"

#include <string>

namespace quatcf {

/* Closed interval [lo, hi] with rational endpoints.  Every operation
 * returns an enclosure of the exact real result.
 */
class RatInterval {
public:
    RatInterval() = default;
    RatInterval(const Rational& point) : lo_(point), hi_(point) {}  // NOLINT: implicit by intent
    RatInterval(Rational lo, Rational hi);

    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    Rational width() const { return hi_ - lo_; }
    bool is_point() const { return lo_ == hi_; }
    bool contains(const Rational& v) const { return lo_ <= v && v <= hi_; }
    bool contains(const RatInterval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
    bool overlaps(const RatInterval& o) const { return lo_ <= o.hi_ && o.lo_ <= hi_; }

    /// Endpoints pushed outward to multiples of 2^-bits.
    RatInterval rounded(unsigned bits) const;

    friend RatInterval operator+(const RatInterval& x, const RatInterval& y);
    friend RatInterval operator-(const RatInterval& x, const RatInterval& y);
    friend RatInterval operator*(const RatInterval& x, const RatInterval& y);
    /// y must not contain 0.
    friend RatInterval operator/(const RatInterval& x, const RatInterval& y);
    friend bool operator==(const RatInterval& x, const RatInterval& y) = default;

private:
    Rational lo_, hi_;
};

RatInterval hull_max(const RatInterval& x, const RatInterval& y);

/// Enclosure of sqrt(r), r >= 0, of width <= 2^-bits; a point when r is a square.
RatInterval sqrt_enclosure(const Rational& r, unsigned bits);
/// NegativeInput if x.hi() < 0; a negative lower end is clamped to 0.
RatInterval sqrt(const RatInterval& x, unsigned bits);

/* Calls enclose(bits) with increasing precision until the width is at most
 * eps (or the precision cap is reached) and returns the last enclosure.
 */
template <class Enclose>
RatInterval refine(Enclose&& enclose, const Rational& eps)
{
    RatInterval out;
    for (unsigned bits = 64; bits <= (1u << 14); bits *= 2) {
        out = enclose(bits);
        if (out.width() <= eps)
            break;
    }
    return out;
}

/// Precision in bits with 2^-bits <= eps.
unsigned bits_for(const Rational& eps);

/// 2^-64, the default certification width.
Rational default_epsilon();

}  // namespace quatcf
