#pragma once

#include "quatcf/rational.hpp"

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace quatcf {

/* An element x0 + x1 i + x2 j + x3 ij of a rational quaternion algebra,
 * stored over the standard basis.  Coordinates are always in lowest terms,
 * so == is structural equality and the hash is stable.
 *
 * A Quat does not know its algebra; products go through Algebra.
 */
class Quat {
public:
    Quat() = default;
    Quat(Rational x0, Rational x1, Rational x2, Rational x3);
    explicit Quat(const Rational& scalar) : Quat(scalar, 0, 0, 0) {}
    explicit Quat(long scalar) : Quat(Rational(scalar)) {}

    /// "x0,x1,x2,x3" with each coordinate "n" or "n/d".
    static Quat parse(std::string_view text);

    const Rational& operator[](std::size_t k) const { return c_[k]; }
    const std::array<Rational, 4>& coords() const { return c_; }

    bool is_zero() const;
    bool is_scalar() const;
    Quat conj() const;
    Rational trd() const { return 2 * c_[0]; }
    Quat pure() const { return Quat(0, c_[1], c_[2], c_[3]); }

    std::string to_string() const;
    std::size_t hash() const;

    friend Quat operator+(const Quat& x, const Quat& y);
    friend Quat operator-(const Quat& x, const Quat& y);
    friend Quat operator-(const Quat& x);
    friend Quat operator*(const Rational& s, const Quat& x);
    friend Quat operator/(const Quat& x, const Rational& s);
    friend bool operator==(const Quat& x, const Quat& y) { return x.c_ == y.c_; }
    friend bool operator!=(const Quat& x, const Quat& y) { return !(x == y); }

private:
    std::array<Rational, 4> c_{};
};

struct QuatHash {
    std::size_t operator()(const Quat& x) const { return x.hash(); }
};

struct ReducedInvariants {
    Quat conj;
    Rational trd;
    Rational nrd;
};

/// Monic minimal polynomial over Q, coefficients from the constant term up.
struct MinPoly {
    std::vector<Rational> coeffs;

    std::size_t degree() const { return coeffs.size() - 1; }
};

/* The algebra B = (a, b / Q): i^2 = a, j^2 = b, ij = -ji.
 *
 * Ramification is computed once at construction from the Hilbert symbol
 * at the places dividing 2 * a * b (and infinity).
 */
class Algebra {
public:
    Algebra(Rational a, Rational b);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }

    Quat mul(const Quat& x, const Quat& y) const;
    Quat mul(std::initializer_list<Quat> factors) const;
    Quat sqr(const Quat& x) const { return mul(x, x); }
    /// Throws ZeroDivisor if nrd(x) = 0.
    Quat inv(const Quat& x) const;
    /// Integer power, negative exponents allowed for invertible x.
    Quat pow(const Quat& x, long e) const;

    Rational nrd(const Quat& x) const;
    ReducedInvariants invariants(const Quat& x) const;
    MinPoly min_poly(const Quat& x) const;
    bool is_integral(const Quat& x) const;
    /// Minimal polynomial coefficients lie in Z[1/p].
    bool is_p_integral(const Quat& x, const Integer& p) const;

    const std::vector<Integer>& ramified_primes() const { return ramified_; }
    bool ramified_at_infinity() const { return ramified_inf_; }
    bool is_ramified_at(const Integer& p) const;
    /// Product of the finite ramified primes.
    const Integer& discriminant() const { return disc_; }
    bool is_division() const { return ramified_inf_ || !ramified_.empty(); }

    Quat one() const { return Quat(1); }
    Quat i() const { return Quat(0, 1, 0, 0); }
    Quat j() const { return Quat(0, 0, 1, 0); }
    Quat ij() const { return Quat(0, 0, 0, 1); }

    friend bool operator==(const Algebra& x, const Algebra& y) { return x.a_ == y.a_ && x.b_ == y.b_; }

private:
    Rational a_, b_;
    std::vector<Integer> ramified_;
    bool ramified_inf_ = false;
    Integer disc_{1};
};

/// Evaluates a polynomial with rational coefficients at x (used for min_poly checks).
Quat evaluate(const Algebra& alg, const MinPoly& f, const Quat& x);

}  // namespace quatcf
