#pragma once

#include "quatcf/heights.hpp"

#include <cstddef>
#include <vector>

namespace quatcf {

/// X P X + X Q1 + Q2 X + S.
struct QuadPoly {
    Quat P, Q1, Q2, S;
    Quat eval(const Quat& x, const Algebra& alg) const;
};

/* X B_n X + X B_{n-1} - A_n X - A_{n-1} from the convergents of a_0..a_n,
 * together with the mu interval of the quotient list.  mu < 1 is not
 * enforced here: certify_no_root reports Inconclusive when it fails.
 */
struct PeriodicPoly {
    QuadPoly poly;
    std::vector<Quat> quotients;
    RatInterval mu;
};

/* AdmissibilityFailure when some |a_i|_p <= 1, some a_i is outside R[1/p],
 * or two distinct quotients share an open unit ball.
 */
PeriodicPoly build_periodic_cf_polynomial(const std::vector<Quat>& quotients, const SpecialType& type,
                                          const Rational& eps);

/* Certified when both roots in B_p, the limits of the period and of the
 * reversed period, are certified outside B by the mu criterion.
 */
MuCertificate certify_no_root(const PeriodicPoly& poly, const SpecialType& type, const Rational& eps);

/* All x in Q(a) with x^2 - a x - 1 = 0, by exact solution of the two
 * rational equations in x = u + v a.  ScalarInput for scalar a.
 */
std::vector<Quat> subfield_roots(const Quat& a, const Algebra& alg);

struct TraceStep {
    std::size_t n = 0;
    Integer k1, k2;
    long r = 0;
    Integer v, w;
    Quat alpha;
    Quat quotient;
};

struct CounterexampleTrace {
    Integer p, q;
    std::vector<TraceStep> steps;
    CFStatus status = CFStatus::Truncated;
    std::size_t preperiod = 0;
    std::size_t period = 0;
};

/* Expands alpha_0 = (1/q)(i + ij/p) in (q, p / Q) with the special floor
 * and replays the Bezout recursion alongside:
 *
 *   alpha_n = k1 / (k2 p^r) u,  u = i + ij/p,
 *   v p^(r+1) + w k2 = k1,  w centered mod p^(r+1),
 *   a_n = (w / p^r) u,  alpha_{n+1} = k2 / (q (p-1) v) u.
 *
 * MismatchError if engine and recursion disagree or a denominator is
 * divisible by neither q nor p-1.  BadParameters for inadmissible (p, q).
 */
CounterexampleTrace counterexample_trace(const Integer& p, const Integer& q, std::size_t steps);

}  // namespace quatcf
