#include "quatcf/quat.hpp"

#include "quatcf/error.hpp"
#include "quatcf/hilbert.hpp"

#include <algorithm>
#include <functional>

namespace quatcf {

Quat::Quat(Rational x0, Rational x1, Rational x2, Rational x3)
    : c_{std::move(x0), std::move(x1), std::move(x2), std::move(x3)}
{
    for (auto& v : c_)
        v.canonicalize();
}

Quat Quat::parse(std::string_view text)
{
    std::array<Rational, 4> c;
    std::size_t start = 0;
    for (std::size_t k = 0; k < 4; ++k) {
        std::size_t comma = text.find(',', start);
        bool last = k == 3;
        if (last != (comma == std::string_view::npos))
            throw Error(ErrorCode::ParseError, "expected four comma-separated rationals, got '" + std::string(text) + "'");
        c[k] = parse_rational(text.substr(start, last ? std::string_view::npos : comma - start));
        start = comma + 1;
    }
    return Quat(c[0], c[1], c[2], c[3]);
}

bool Quat::is_zero() const
{
    return std::all_of(c_.begin(), c_.end(), [](const Rational& v) { return v == 0; });
}

bool Quat::is_scalar() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }

Quat Quat::conj() const { return Quat(c_[0], -c_[1], -c_[2], -c_[3]); }

std::string Quat::to_string() const
{
    std::string out;
    for (std::size_t k = 0; k < 4; ++k) {
        if (k)
            out += ',';
        out += quatcf::to_string(c_[k]);
    }
    return out;
}

std::size_t Quat::hash() const
{
    std::size_t h = 0;
    for (const auto& v : c_) {
        std::size_t hv = std::hash<std::string>{}(v.get_str(16));
        h ^= hv + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

Quat operator+(const Quat& x, const Quat& y)
{
    return Quat(x[0] + y[0], x[1] + y[1], x[2] + y[2], x[3] + y[3]);
}

Quat operator-(const Quat& x, const Quat& y)
{
    return Quat(x[0] - y[0], x[1] - y[1], x[2] - y[2], x[3] - y[3]);
}

Quat operator-(const Quat& x) { return Quat(-x[0], -x[1], -x[2], -x[3]); }

Quat operator*(const Rational& s, const Quat& x) { return Quat(s * x[0], s * x[1], s * x[2], s * x[3]); }

Quat operator/(const Quat& x, const Rational& s)
{
    if (s == 0)
        throw Error(ErrorCode::ZeroDivisor, "division of a quaternion by zero");
    return Quat(x[0] / s, x[1] / s, x[2] / s, x[3] / s);
}

Algebra::Algebra(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b))
{
    a_.canonicalize();
    b_.canonicalize();
    if (a_ == 0 || b_ == 0)
        throw Error(ErrorCode::BadParameters, "quaternion algebra parameters must be nonzero");

    // Only primes dividing 2ab can ramify.
    Integer n = 2 * Integer(a_.get_num()) * Integer(a_.get_den()) * Integer(b_.get_num()) * Integer(b_.get_den());
    for (const auto& p : prime_factors(n)) {
        if (hilbert_symbol(a_, b_, Place::finite(p)) == -1) {
            ramified_.push_back(p);
            disc_ *= p;
        }
    }
    ramified_inf_ = hilbert_symbol(a_, b_, Place::infinity()) == -1;
}

Quat Algebra::mul(const Quat& x, const Quat& y) const
{
    const Rational ab = a_ * b_;
    return Quat(x[0] * y[0] + a_ * x[1] * y[1] + b_ * x[2] * y[2] - ab * x[3] * y[3],
                x[0] * y[1] + x[1] * y[0] - b_ * x[2] * y[3] + b_ * x[3] * y[2],
                x[0] * y[2] + x[2] * y[0] + a_ * x[1] * y[3] - a_ * x[3] * y[1],
                x[0] * y[3] + x[3] * y[0] + x[1] * y[2] - x[2] * y[1]);
}

Quat Algebra::mul(std::initializer_list<Quat> factors) const
{
    Quat out(1);
    for (const auto& f : factors)
        out = mul(out, f);
    return out;
}

Rational Algebra::nrd(const Quat& x) const
{
    return x[0] * x[0] - a_ * x[1] * x[1] - b_ * x[2] * x[2] + a_ * b_ * x[3] * x[3];
}

Quat Algebra::inv(const Quat& x) const
{
    Rational n = nrd(x);
    if (n == 0)
        throw Error(ErrorCode::ZeroDivisor, "element " + x.to_string() + " is not invertible");
    return x.conj() / n;
}

Quat Algebra::pow(const Quat& x, long e) const
{
    Quat base = e < 0 ? inv(x) : x;
    unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Quat out(1);
    while (k) {
        if (k & 1)
            out = mul(out, base);
        base = mul(base, base);
        k >>= 1;
    }
    return out;
}

ReducedInvariants Algebra::invariants(const Quat& x) const { return {x.conj(), x.trd(), nrd(x)}; }

MinPoly Algebra::min_poly(const Quat& x) const
{
    if (x.is_scalar())
        return MinPoly{{-x[0], Rational(1)}};
    return MinPoly{{nrd(x), -x.trd(), Rational(1)}};
}

bool Algebra::is_integral(const Quat& x) const
{
    auto f = min_poly(x);
    return std::all_of(f.coeffs.begin(), f.coeffs.end(), [](const Rational& c) { return c.get_den() == 1; });
}

bool Algebra::is_p_integral(const Quat& x, const Integer& p) const
{
    auto f = min_poly(x);
    return std::all_of(f.coeffs.begin(), f.coeffs.end(),
                       [&](const Rational& c) { return is_power_of(Integer(c.get_den()), p); });
}

bool Algebra::is_ramified_at(const Integer& p) const
{
    return std::find(ramified_.begin(), ramified_.end(), p) != ramified_.end();
}

Quat evaluate(const Algebra& alg, const MinPoly& f, const Quat& x)
{
    Quat acc;
    for (auto it = f.coeffs.rbegin(); it != f.coeffs.rend(); ++it)
        acc = alg.mul(acc, x) + Quat(*it);
    return acc;
}

}  // namespace quatcf
