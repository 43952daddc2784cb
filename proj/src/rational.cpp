#include "quatcf/rational.hpp"

#include "quatcf/error.hpp"

#include <algorithm>

namespace quatcf {

std::string_view error_code_name(ErrorCode code)
{
    switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ZeroDivisor: return "ZeroDivisor";
    case ErrorCode::NotIntegral: return "NotIntegral";
    case ErrorCode::NotAnOrder: return "NotAnOrder";
    case ErrorCode::BadParameters: return "BadParameters";
    case ErrorCode::CannotSaturate: return "CannotSaturate";
    case ErrorCode::NotRamified: return "NotRamified";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::InconsistentQuotients: return "InconsistentQuotients";
    case ErrorCode::NotAdmissible: return "NotAdmissible";
    case ErrorCode::SingularBn: return "SingularBn";
    case ErrorCode::NegativeInput: return "NegativeInput";
    case ErrorCode::NotSplittable: return "NotSplittable";
    case ErrorCode::AdmissibilityFailure: return "AdmissibilityFailure";
    case ErrorCode::ScalarInput: return "ScalarInput";
    case ErrorCode::MismatchError: return "MismatchError";
    }
    return "Unknown";
}

namespace {

bool all_digits(std::string_view s)
{
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    std::string_view body = text;
    if (!body.empty() && body.front() == '-')
        body.remove_prefix(1);
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(text) + "'");
    Integer n(std::string(num), 10);
    Integer d(std::string(den), 10);
    if (d == 0)
        throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
    if (text.front() == '-')
        n = -n;
    Rational r(n, d);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(10); }
std::string to_string(const Integer& n) { return n.get_str(10); }

Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

long valuation(const Integer& n, const Integer& p)
{
    if (n == 0)
        throw Error(ErrorCode::PreconditionViolated, "valuation of zero");
    Integer rest;
    return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

long valuation(const Rational& r, const Integer& p)
{
    return valuation(Integer(r.get_num()), p) - valuation(Integer(r.get_den()), p);
}

Rational padic_abs(const Rational& r, const Integer& p)
{
    if (r == 0)
        return 0;
    return rpow(p, -valuation(r, p));
}

Integer ipow(const Integer& p, unsigned long e)
{
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), p.get_mpz_t(), e);
    return out;
}

Rational rpow(const Integer& p, long e)
{
    if (e >= 0)
        return Rational(ipow(p, static_cast<unsigned long>(e)));
    Rational out(Integer(1), ipow(p, static_cast<unsigned long>(-e)));
    out.canonicalize();
    return out;
}

Integer centered_residue(const Rational& r, const Integer& m)
{
    Integer inv;
    Integer den(r.get_den());
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t()) == 0)
        throw Error(ErrorCode::PreconditionViolated, "denominator not invertible modulo " + to_string(m));
    Integer x = Integer(r.get_num()) * inv;
    mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    if (2 * x > m)
        x -= m;
    return x;
}

bool is_power_of(const Integer& n, const Integer& p)
{
    if (n <= 0)
        return false;
    Integer rest;
    mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
    return rest == 1;
}

bool rational_sqrt(const Rational& r, Rational& root)
{
    if (r < 0)
        return false;
    Integer n(r.get_num()), d(r.get_den());
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
        return false;
    Integer sn, sd;
    mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
    root = Rational(sn, sd);
    root.canonicalize();
    return true;
}

bool is_prime(const Integer& n)
{
    if (n < 2)
        return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

int legendre(const Integer& a, const Integer& p) { return mpz_legendre(a.get_mpz_t(), p.get_mpz_t()); }

namespace {

// Pollard-Brent; n composite, odd, no small factors.
Integer find_factor(const Integer& n)
{
    for (unsigned long c = 1;; ++c) {
        Integer y = 2, x, g = 1, q = 1, ys;
        unsigned long r = 1;
        const unsigned long m = 64;
        auto f = [&](const Integer& v) {
            Integer t = v * v + c;
            mpz_mod(t.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
            return t;
        };
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i)
                y = f(y);
            unsigned long k = 0;
            do {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    Integer diff = x - y;
                    mpz_abs(diff.get_mpz_t(), diff.get_mpz_t());
                    q *= diff;
                    mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                Integer diff = x - ys;
                mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n)
            return g;
    }
}

void factor_into(Integer n, std::vector<Integer>& out)
{
    if (n == 1)
        return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    Integer d = find_factor(n);
    Integer rest = n / d;
    factor_into(d, out);
    factor_into(rest, out);
}

}  // namespace

std::vector<Integer> prime_factors(const Integer& n)
{
    std::vector<Integer> out;
    Integer m = n < 0 ? Integer(-n) : n;
    if (m <= 1)
        return out;
    for (unsigned long p = 2; p < 10000 && m > 1; p += (p == 2 ? 1 : 2)) {
        if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            out.emplace_back(p);
            while (mpz_divisible_ui_p(m.get_mpz_t(), p))
                mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        }
    }
    if (m > 1)
        factor_into(m, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::size_t bit_size(const Rational& r)
{
    return std::max(mpz_sizeinbase(r.get_num_mpz_t(), 2), mpz_sizeinbase(r.get_den_mpz_t(), 2));
}

}  // namespace quatcf
