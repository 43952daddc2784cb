#pragma once

#include "quatcf/rational.hpp"

#include <string>

namespace quatcf {

/// A place of Q: a rational prime, or the archimedean place (prime == 0).
struct Place {
    Integer prime;

    static Place infinity() { return Place{Integer(0)}; }
    static Place finite(const Integer& p) { return Place{p}; }

    bool is_infinite() const { return prime == 0; }
    std::string to_string() const { return is_infinite() ? "inf" : prime.get_str(); }
};

/* Hilbert symbol (a, b)_v: +1 iff z^2 = a x^2 + b y^2 has a nontrivial
 * solution over Q_v.  a, b nonzero rationals; v must be prime or infinite.
 */
int hilbert_symbol(const Rational& a, const Rational& b, const Place& v);

}  // namespace quatcf
