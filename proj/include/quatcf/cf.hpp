#pragma once

#include "quatcf/padic.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace quatcf {

enum class CFStatus { Finite, Periodic, Truncated };
enum class Truncation { None, MaxSteps, SizeBudget };

std::string to_string(CFStatus s);

struct ExpandLimits {
    std::size_t max_steps = 64;
    std::size_t coeff_bit_budget = 65536;
};

/* Result of the continued-fraction algorithm
 *
 *     a_n = s(alpha_n),   alpha_{n+1} = (alpha_n - a_n)^{-1},
 *
 * stopping when alpha_n = a_n.
 *
 * Finite:    partial and complete have the same length N+1 and alpha_N = a_N.
 * Periodic:  alpha_{preperiod + period} = alpha_{preperiod}; the lists hold
 *            indices 0 .. preperiod + period - 1.
 * Truncated: resource limit hit; the lists hold what was computed.
 *
 * An expansion built from a prescribed periodic quotient list has no
 * complete quotients (its limit need not lie in B).
 */
struct CFExpansion {
    std::string floor_kind;
    Integer p;
    std::vector<Quat> partial;
    std::vector<Quat> complete;
    std::vector<HalfIntVal> valuations;  // w_p(a_n)
    CFStatus status = CFStatus::Truncated;
    Truncation truncation = Truncation::None;
    std::size_t preperiod = 0;
    std::size_t period = 0;

    bool has_complete() const { return !complete.empty(); }
    /// Number of partial quotients known (infinite for Periodic).
    std::optional<std::size_t> length() const;
    /// a_n, unrolling the period; nullopt beyond a finite or truncated list.
    std::optional<Quat> quotient(std::size_t n) const;
    std::optional<Quat> complete_quotient(std::size_t n) const;
    /// a_0 .. a_{count-1} (shorter if the expansion ends first).
    std::vector<Quat> quotients(std::size_t count) const;
};

CFExpansion expand(const Quat& x, const FloorFunction& f, const ExpandLimits& limits = {});

/// [a_0, ..., a_{k-1}, overline(a_k, ..., a_{k+m-1})] with no complete quotients.
CFExpansion periodic_expansion(std::vector<Quat> preperiod, std::vector<Quat> period, const SpecialType& type);

/* A_n, B_n for n >= -1, Q_n = A_n B_n^{-1} for n >= 0, and, when a target
 * alpha is given, V_n = A_n - alpha B_n for n >= -1.
 */
class ConvergentTable {
public:
    std::size_t size() const { return quotients_.size(); }  // N + 1
    const std::vector<Quat>& quotients() const { return quotients_; }

    const Quat& A(long n) const { return A_.at(static_cast<std::size_t>(n + 1)); }
    const Quat& B(long n) const { return B_.at(static_cast<std::size_t>(n + 1)); }
    const Quat& Q(long n) const { return Q_.at(static_cast<std::size_t>(n)); }
    const Quat& V(long n) const { return V_.at(static_cast<std::size_t>(n + 1)); }
    bool has_target() const { return target_.has_value(); }
    const std::optional<Quat>& target() const { return target_; }

    /// Overwrites A_n (negative controls only).
    void tamper_A(long n, const Quat& value) { A_.at(static_cast<std::size_t>(n + 1)) = value; }

private:
    friend ConvergentTable convergents(const std::vector<Quat>&, const Algebra&, const std::optional<Quat>&);

    std::vector<Quat> quotients_;
    std::vector<Quat> A_, B_, Q_, V_;
    std::optional<Quat> target_;
};

/// SingularBn if some B_n is not invertible.
ConvergentTable convergents(const std::vector<Quat>& quotients, const Algebra& alg,
                            const std::optional<Quat>& target = std::nullopt);

struct IdentityCheck {
    std::string name;
    bool passed = true;
    std::size_t checked = 0;
    std::optional<long> first_failure;
    std::string witness;
};

struct IdentityReport {
    std::vector<IdentityCheck> checks;

    bool all_passed() const;
    const IdentityCheck* find(const std::string& name) const;
};

/* Exact checks of the convergent identities on every index the data allows:
 *
 *   matrix_product          [[A_n, A_{n-1}], [B_n, B_{n-1}]] = prod_{k<=n} [[a_k, 1], [1, 0]]
 *   convergent_quotient     A_n B_n^{-1} equals the nested fraction [a_0; ...; a_n]
 *   quotient_abs            |a_n|_p > 1 for n >= 1
 *   bn_abs                  |B_n|_p = prod_{j=1}^{n} |a_j|_p
 *   convergent_gap          |Q_n - Q_{n-1}|_p = 1 / (|B_n|_p |B_{n-1}|_p)
 *   complete_abs            |alpha_n|_p = |a_n|_p
 *   mobius_reconstruction   alpha_0 = (A_n alpha_{n+1} + A_{n-1})(B_n alpha_{n+1} + B_{n-1})^{-1}
 *   v_recurrence            V_n = V_{n-1} a_n + V_{n-2}
 *   v_annihilation          V_{n-1} alpha_n + V_{n-2} = 0
 *   v_product               V_{n-1} = (-1)^n alpha_1^{-1} ... alpha_n^{-1}
 *   v_abs                   |V_{n-1}|_p = prod_{j=1}^{n} |a_j|_p^{-1}
 *
 * The table must be built from exp's quotients (unrolled as needed).
 */
IdentityReport verify_identities(const Quat& x, const CFExpansion& exp, const ConvergentTable& table,
                                 const Algebra& alg);

/* w_p(x - Q_n) for n = 0 .. count-1; +infinity exactly where Q_n = x.
 * Each finite entry equals -(w_p(B_n) + w_p(B_{n+1})).
 */
std::vector<HalfIntVal> convergence_profile(const Quat& x, const CFExpansion& exp, std::size_t count,
                                            const Algebra& alg);

/// Bottom-up evaluation of [a_0; a_1, ..., a_n].
Quat evaluate_continued_fraction(const std::vector<Quat>& quotients, const Algebra& alg);

}  // namespace quatcf
