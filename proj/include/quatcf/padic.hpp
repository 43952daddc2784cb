#pragma once

#include "quatcf/orders.hpp"

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace quatcf {

/// A value in (1/2)Z or +infinity, stored as twice its value.
class HalfIntVal {
public:
    HalfIntVal() = default;  // +infinity
    static HalfIntVal infinite() { return HalfIntVal(); }
    static HalfIntVal from_twice(long twice) { return HalfIntVal(twice); }

    bool is_infinite() const { return !twice_.has_value(); }
    long twice() const { return twice_.value(); }

    /// "k/2" for odd k, the integer otherwise, or "inf".
    std::string to_string() const;

    friend HalfIntVal operator+(const HalfIntVal& x, const HalfIntVal& y);
    friend HalfIntVal operator-(const HalfIntVal& x);
    friend bool operator==(const HalfIntVal& x, const HalfIntVal& y) = default;
    friend std::strong_ordering operator<=>(const HalfIntVal& x, const HalfIntVal& y);

private:
    explicit HalfIntVal(long twice) : twice_(twice) {}
    std::optional<long> twice_;
};

/* w_p(x) = v_p(nrd x) / 2, the valuation on B (x) Q_p at a ramified p.
 * NotRamified if p is not ramified in alg.
 */
HalfIntVal wp(const Quat& x, const Integer& p, const Algebra& alg);

/* Special continued-fraction type (B, R, pi, C) with pi = j and
 * C = {a + b i : |a|, |b| <= (p-1)/2}.
 *
 * Needs j^2 = +-p and i^2 a p-adic unit that is a non-residue mod p, so
 * that R_p = Z_p<1, i, j, ij>, Z_p[i] is the unramified quadratic ring and
 * C represents R_p / j R_p exactly.
 */
class SpecialType {
public:
    SpecialType(Order order, Integer p);

    const Algebra& algebra() const { return order_.algebra(); }
    const Order& order() const { return order_; }
    const Integer& p() const { return p_; }
    const Quat& uniformizer() const { return pi_; }
    const std::vector<Quat>& digit_set() const { return digits_; }

    /// Digit of C congruent to y modulo j R_p; y must lie in R_p.
    Quat digit_of(const Quat& y) const;

    /* Left-coefficient expansion x = sum_{l >= r} c_l j^l, levels r..upto
     * (zero digits included), r = 2 w_p(x).  Empty when r > upto or x = 0.
     */
    std::vector<std::pair<long, Quat>> digit_expand(const Quat& x, long upto_level) const;

    /// sum_{l=r}^{0} c_l j^l, or 0 if r > 0.
    Quat floor(const Quat& x) const;

    HalfIntVal val(const Quat& x) const { return wp(x, p_, algebra()); }

private:
    Order order_;
    Integer p_;
    Quat pi_;
    Quat pi_inv_;
    std::vector<Quat> digits_;
};

/* A p-adic floor function: the special-type floor, optionally overridden
 * on the open unit balls around a list of prescribed values.
 */
class FloorFunction {
public:
    explicit FloorFunction(SpecialType base) : base_(std::move(base)) {}

    Quat operator()(const Quat& x) const;

    const SpecialType& base() const { return base_; }
    const std::vector<Quat>& overrides() const { return overrides_; }
    const Algebra& algebra() const { return base_.algebra(); }
    const Integer& p() const { return base_.p(); }
    /// "special" or "override(n)".
    std::string descriptor() const;

private:
    friend FloorFunction make_override_floor(const std::vector<Quat>&, const SpecialType&);

    SpecialType base_;
    std::vector<Quat> overrides_;
};

/* Floor returning quotients[k] on the ball |x - quotients[k]|_p < 1.
 *
 * NotAdmissible if some quotient with index >= 1 has |a|_p <= 1, a nonzero
 * quotient lies in the unit ball of 0, or a quotient is outside R[1/p].
 * InconsistentQuotients if two distinct quotients share a unit ball.
 */
FloorFunction make_override_floor(const std::vector<Quat>& quotients, const SpecialType& base);

}  // namespace quatcf
