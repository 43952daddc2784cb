#pragma once

#include "quatcf/cf.hpp"
#include "quatcf/interval.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace quatcf {

/// r + s * sqrt(c) for a radicand c fixed by the enclosing matrix.
struct Surd {
    Rational r, s;
    friend bool operator==(const Surd&, const Surd&) = default;
};

/* Image of x under the real splitting B (x) R = M_2(R), entries in Q(sqrt c).
 * With c = a > 0:  i -> diag(sqrt a, -sqrt a),  j -> [[0, 1], [b, 0]].
 * With a < 0 < b the roles of i and j are exchanged (c = b).
 */
struct SplitMatrix {
    Rational radicand;
    bool swapped = false;
    std::array<Surd, 4> e;  // row major

    SplitMatrix operator*(const SplitMatrix& o) const;
    Surd det() const;
    /// Squared Frobenius norm.
    Surd frobenius_sq() const;
    friend bool operator==(const SplitMatrix&, const SplitMatrix&) = default;
};

/// NotSplittable for definite algebras (a < 0 and b < 0).
SplitMatrix real_split(const Quat& x, const Algebra& alg);

/* x = scale * primitive with scale > 0 rational and primitive having
 * coprime integer coordinates, so N_inf(x) = scale * N_inf(primitive).
 */
struct ScaledElement {
    Rational scale;
    Quat primitive;
};
ScaledElement split_content(const Quat& x);

/// Largest singular value of real_split(x), enclosed at precision 2^-bits.
RatInterval ninf_at(const Quat& x, const Algebra& alg, unsigned bits);
/// Same, refined to width <= eps.
RatInterval ninf(const Quat& x, const Algebra& alg, const Rational& eps);

/// theta(t) = (t + sqrt(t^2 + 4)) / 2, monotone; NegativeInput if x.lo() < 0.
RatInterval theta(const RatInterval& x, unsigned bits);
RatInterval theta_refined(const RatInterval& x, const Rational& eps);

/// p^(-w) for the half-integer w, enclosed.
RatInterval padic_abs_enclosure(const HalfIntVal& w, const Integer& p, unsigned bits);

/// q^(twice/2): exact rational when twice is even.
struct PlaceNorm {
    Integer prime;
    long twice_exp = 0;
    bool ramified = false;
    std::string to_string() const;
};

struct HeightReport {
    std::vector<PlaceNorm> finite;  // norms different from 1, by prime
    RatInterval infinity;
    RatInterval height;

    /// prod over finite places as rational_part * sqrt(sqrt_part).
    Rational finite_rational_part() const;
    Integer finite_sqrt_part() const;
};

/* Adelic height: |.|_p = p^(-w_p) at ramified primes, the lattice norm of
 * unram at the other primes, the operator norm at infinity.
 */
HeightReport height(const Quat& x, const Order& unram, const Rational& eps);

/// theta(N_inf(a)) / |a|_p for one quotient.
RatInterval mu_ratio(const Quat& a, const Integer& p, const Algebra& alg, const Rational& eps);
/// max of mu_ratio over the list.
RatInterval mu_of_quotients(const std::vector<Quat>& quotients, const Integer& p, const Algebra& alg,
                            const Rational& eps);
/* max over n > skip (n >= 1) of mu_ratio(a_n); over one full period when
 * exp is Periodic.  PreconditionViolated if no index qualifies.
 */
RatInterval mu_of_expansion(const CFExpansion& exp, std::size_t skip, const Algebra& alg, const Rational& eps);

enum class Verdict { Certified, Inconclusive };
std::string to_string(Verdict v);

struct MuCertificate {
    Verdict verdict = Verdict::Inconclusive;
    RatInterval mu;
};

/* Certified iff mu < 1 on the period, which rules out a limit in B.
 * PreconditionViolated unless exp is Periodic; NotAdmissible if the
 * quotients cannot come from a floor function of type.
 */
MuCertificate certify_not_in_B(const CFExpansion& exp, const SpecialType& type, const Rational& eps);

struct GrowthBoundReport {
    RatInterval c;
    std::vector<bool> holds;  // index n = 0 .. N
    bool all_passed() const;
    std::optional<std::size_t> first_failure() const;
};

/* max(t_n, t_{n-1}) <= c * prod_{j=1}^{n} theta(N_inf(a_j)) with
 * t_n = N_inf(V_n) and c = sqrt(t_0^2 + t_{-1}^2).  Needs a table with a target.
 */
GrowthBoundReport growth_bound_check(const ConvergentTable& table, const Algebra& alg, const Rational& eps);

struct BoundedTypeReport {
    long K = 0;                                  // least K with C < sqrt(p)^K
    std::vector<std::size_t> small_indices;      // |a_i|_p <= sqrt(p)^K
    std::vector<std::size_t> bound_unverified;   // N_inf(a_i) < C not certified
};

BoundedTypeReport bounded_type_analysis(const CFExpansion& exp, const Rational& C, const Algebra& alg,
                                        const Rational& eps);

}  // namespace quatcf
