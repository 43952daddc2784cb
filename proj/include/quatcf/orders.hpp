#pragma once

#include "quatcf/quat.hpp"

#include <array>
#include <string>

namespace quatcf {

using Coords = std::array<Rational, 4>;

/* A Z-lattice in B that is a ring, given by four basis vectors written
 * over the standard basis {1, i, j, ij}.
 *
 * The constructor checks invertibility of the basis, that 1 lies in the
 * lattice, and that all 16 basis products have integral coordinates.
 */
class Order {
public:
    Order(Algebra alg, std::array<Quat, 4> basis);

    const Algebra& algebra() const { return alg_; }
    const std::array<Quat, 4>& basis() const { return basis_; }

    /// c with x = sum c_k basis[k]; exact.
    Coords coordinates(const Quat& x) const;
    bool contains(const Quat& x) const;

    /* max_k |c_k|_q over the order coordinates: the norm attached to the
     * Z_q-lattice R (x) Z_q.  A power of q, or 0 for x = 0.
     */
    Rational local_lattice_norm(const Quat& x, const Integer& q) const;

    /// x lies in R[1/p], i.e. in R_q for every prime q != p.
    bool p_saturated_membership(const Quat& x, const Integer& p) const;

    /// det of the basis matrix; its inverse is the index of the standard lattice in R.
    const Rational& basis_determinant() const { return det_; }

private:
    Algebra alg_;
    std::array<Quat, 4> basis_;
    std::array<std::array<Rational, 4>, 4> inverse_{};
    Rational det_;
};

/// Z + Zi + Zj + Zij.  Requires integral a and b (NotIntegral otherwise).
Order standard_order(const Algebra& alg);

/* Maximal order of B = (q, p / Q), the indefinite algebra ramified
 * exactly at {p, q}.
 *
 *   q = 2, p = 3 mod 8:            Z + Zi + Z(1+i+j)/2 + Z(i+ij)/2
 *   q = 1 mod 4, (p|q) = -1:       Z + Z(1+i)/2 + Zj + Z(j+ij)/2
 *
 * BadParameters when neither condition holds.
 */
Order maximal_order_pq(const Integer& p, const Integer& q);

/* An order containing the integral element x: for non-scalar x this is
 * Z<1, x, y, xy> with y a pure element anticommuting with the pure part of x
 * and y^2 integral.  NotIntegral if x is not integral.
 */
Order order_containing(const Quat& x, const Algebra& alg);

}  // namespace quatcf
