#include "quatcf/orders.hpp"

#include "quatcf/error.hpp"

#include <algorithm>
#include <utility>

namespace quatcf {

namespace {

using Mat4 = std::array<std::array<Rational, 4>, 4>;

// Gauss-Jordan; returns false if singular.
bool invert(Mat4 m, Mat4& inv, Rational& det)
{
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c)
            inv[r][c] = r == c ? 1 : 0;
    det = 1;
    for (std::size_t col = 0; col < 4; ++col) {
        std::size_t piv = col;
        while (piv < 4 && m[piv][col] == 0)
            ++piv;
        if (piv == 4) {
            det = 0;
            return false;
        }
        if (piv != col) {
            std::swap(m[piv], m[col]);
            std::swap(inv[piv], inv[col]);
            det = -det;
        }
        Rational pv = m[col][col];
        det *= pv;
        for (std::size_t c = 0; c < 4; ++c) {
            m[col][c] /= pv;
            inv[col][c] /= pv;
        }
        for (std::size_t r = 0; r < 4; ++r) {
            if (r == col || m[r][col] == 0)
                continue;
            Rational f = m[r][col];
            for (std::size_t c = 0; c < 4; ++c) {
                m[r][c] -= f * m[col][c];
                inv[r][c] -= f * inv[col][c];
            }
        }
    }
    return true;
}

bool integral(const Coords& c)
{
    return std::all_of(c.begin(), c.end(), [](const Rational& v) { return v.get_den() == 1; });
}

}  // namespace

Order::Order(Algebra alg, std::array<Quat, 4> basis) : alg_(std::move(alg)), basis_(std::move(basis))
{
    Mat4 m;
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c)
            m[r][c] = basis_[r][c];
    if (!invert(m, inverse_, det_))
        throw Error(ErrorCode::NotAnOrder, "basis is not invertible over Q");
    if (!integral(coordinates(Quat(1))))
        throw Error(ErrorCode::NotAnOrder, "lattice does not contain 1");
    for (const auto& x : basis_)
        for (const auto& y : basis_)
            if (!integral(coordinates(alg_.mul(x, y))))
                throw Error(ErrorCode::NotAnOrder,
                            "lattice not closed under multiplication: " + x.to_string() + " * " + y.to_string());
}

Coords Order::coordinates(const Quat& x) const
{
    Coords c;
    for (std::size_t k = 0; k < 4; ++k) {
        Rational s = 0;
        for (std::size_t r = 0; r < 4; ++r)
            s += x[r] * inverse_[r][k];
        c[k] = s;
    }
    return c;
}

bool Order::contains(const Quat& x) const { return integral(coordinates(x)); }

Rational Order::local_lattice_norm(const Quat& x, const Integer& q) const
{
    Rational best = 0;
    for (const auto& c : coordinates(x))
        best = std::max(best, padic_abs(c, q));
    return best;
}

bool Order::p_saturated_membership(const Quat& x, const Integer& p) const
{
    auto c = coordinates(x);
    return std::all_of(c.begin(), c.end(), [&](const Rational& v) { return is_power_of(Integer(v.get_den()), p); });
}

Order standard_order(const Algebra& alg)
{
    if (alg.a().get_den() != 1 || alg.b().get_den() != 1)
        throw Error(ErrorCode::NotIntegral, "standard order needs integral a and b");
    return Order(alg, {alg.one(), alg.i(), alg.j(), alg.ij()});
}

Order maximal_order_pq(const Integer& p, const Integer& q)
{
    if (p < 3 || !is_prime(p))
        throw Error(ErrorCode::BadParameters, "p must be an odd prime, got " + to_string(p));
    if (!is_prime(q) || q == p)
        throw Error(ErrorCode::BadParameters, "q must be a prime different from p, got " + to_string(q));

    const Rational half(1, 2);
    if (q == 2) {
        if (mpz_fdiv_ui(p.get_mpz_t(), 8) != 3)
            throw Error(ErrorCode::BadParameters, "q = 2 requires p = 3 mod 8");
        Algebra alg{Rational(2), Rational(p)};
        return Order(alg, {Quat(1), Quat(0, 1, 0, 0), Quat(half, half, half, 0), Quat(0, half, 0, half)});
    }
    if (mpz_fdiv_ui(q.get_mpz_t(), 4) != 1)
        throw Error(ErrorCode::BadParameters, "odd q must be 1 mod 4");
    if (legendre(p, q) != -1)
        throw Error(ErrorCode::BadParameters, "(p|q) must be -1 for B = (q, p) to ramify exactly at p and q");
    Algebra alg{Rational(q), Rational(p)};
    return Order(alg, {Quat(1), Quat(half, half, 0, 0), Quat(0, 0, 1, 0), Quat(0, 0, half, half)});
}

Order order_containing(const Quat& x, const Algebra& alg)
{
    if (!alg.is_integral(x))
        throw Error(ErrorCode::NotIntegral, "element " + x.to_string() + " is not integral");
    if (x.is_scalar())
        return standard_order(alg);

    // For pure z, y: zy + yz = 2 (a z1 y1 + b z2 y2 - ab z3 y3).  We need an
    // integer y orthogonal to n = (a z1, b z2, -ab z3): take n x e_k.
    const Quat z = x.pure();
    std::array<Rational, 3> n{alg.a() * z[1], alg.b() * z[2], -alg.a() * alg.b() * z[3]};
    Integer scale = 1;
    for (const auto& v : n)
        mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), v.get_den_mpz_t());
    std::array<Integer, 3> ni;
    for (std::size_t k = 0; k < 3; ++k)
        ni[k] = Integer(n[k] * scale);

    std::array<Integer, 3> y{0, 0, 0};
    for (std::size_t k = 0; k < 3; ++k) {
        std::array<Integer, 3> e{0, 0, 0};
        e[k] = 1;
        y = {ni[1] * e[2] - ni[2] * e[1], ni[2] * e[0] - ni[0] * e[2], ni[0] * e[1] - ni[1] * e[0]};
        if (y[0] != 0 || y[1] != 0 || y[2] != 0)
            break;
    }
    // y^2 = a y1^2 + b y2^2 - ab y3^2 must be an integer.
    Integer d = Integer(alg.a().get_den()) * Integer(alg.b().get_den());
    Quat yq(0, Rational(y[0] * d), Rational(y[1] * d), Rational(y[2] * d));

    Quat xy = alg.mul(x, yq);
    try {
        return Order(alg, {Quat(1), x, yq, xy});
    } catch (const Error& e) {
        throw Error(ErrorCode::CannotSaturate, std::string("Z<1, x, y, xy> failed the ring check: ") + e.what());
    }
}

}  // namespace quatcf
