#include "quatcf/hilbert.hpp"

#include "quatcf/error.hpp"

namespace quatcf {

namespace {

// n/d and n*d differ by the square d^2, so the symbol only sees n*d.
Integer square_class_integer(const Rational& r) { return Integer(r.get_num()) * Integer(r.get_den()); }

// Splits n = p^e * u with p not dividing u.
long split_off(const Integer& n, const Integer& p, Integer& unit)
{
    return static_cast<long>(mpz_remove(unit.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

unsigned long mod8(const Integer& u) { return mpz_fdiv_ui(u.get_mpz_t(), 8); }

}  // namespace

int hilbert_symbol(const Rational& a, const Rational& b, const Place& v)
{
    if (a == 0 || b == 0)
        throw Error(ErrorCode::PreconditionViolated, "Hilbert symbol of zero");
    if (v.is_infinite())
        return (a < 0 && b < 0) ? -1 : 1;
    const Integer& p = v.prime;
    Integer u, w;
    long alpha = split_off(square_class_integer(a), p, u);
    long beta = split_off(square_class_integer(b), p, w);

    if (p == 2) {
        auto eps = [](const Integer& x) { return ((mod8(x) - 1) / 2) % 2; };
        auto omega = [](const Integer& x) {
            unsigned long r = mod8(x);
            return (r * r - 1) / 8 % 2;
        };
        unsigned long e = eps(u) * eps(w) + static_cast<unsigned long>(alpha & 1) * omega(w)
            + static_cast<unsigned long>(beta & 1) * omega(u);
        return (e % 2) ? -1 : 1;
    }

    int s = 1;
    // (-1)^{alpha beta (p-1)/2}
    if ((alpha & 1) && (beta & 1) && mpz_fdiv_ui(p.get_mpz_t(), 4) == 3)
        s = -s;
    if (beta & 1)
        s *= legendre(u, p);
    if (alpha & 1)
        s *= legendre(w, p);
    return s;
}

}  // namespace quatcf
