#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace quatcf {

using Integer = mpz_class;
using Rational = mpq_class;

/* Exact base-10 rational syntax: "n" or "n/d", optional leading minus.
 * Anything else (spaces, '+', exponents, zero denominators) is a ParseError.
 */
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);
std::string to_string(const Integer& n);

Rational abs(const Rational& r);

/// v_p(n) for n != 0.
long valuation(const Integer& n, const Integer& p);
/// v_p(r) for r != 0.
long valuation(const Rational& r, const Integer& p);

/// |r|_p as an exact rational (p^{-v_p(r)}); 0 for r = 0.
Rational padic_abs(const Rational& r, const Integer& p);

/// Integer power p^e for e >= 0.
Integer ipow(const Integer& p, unsigned long e);
/// p^e for any sign of e.
Rational rpow(const Integer& p, long e);

/* Residue of r modulo m taken in the centered range
 * {-(m-1)/2, ..., (m-1)/2}.  Requires m odd and gcd(den(r), m) = 1.
 */
Integer centered_residue(const Rational& r, const Integer& m);

/// True iff n > 0 and n is a power of p (including p^0 = 1).
bool is_power_of(const Integer& n, const Integer& p);

/// If r is the square of a rational, stores the nonnegative root.
bool rational_sqrt(const Rational& r, Rational& root);

bool is_prime(const Integer& n);
int legendre(const Integer& a, const Integer& p);

/// Distinct prime factors of |n| in increasing order; empty for |n| <= 1.
std::vector<Integer> prime_factors(const Integer& n);

/// Bit length of the larger of numerator and denominator.
std::size_t bit_size(const Rational& r);

}  // namespace quatcf
