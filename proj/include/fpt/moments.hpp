#ifndef FPT_MOMENTS_HPP
#define FPT_MOMENTS_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "fpt/exact_rational.hpp"
#include "fpt/pgf_solver.hpp"
#include "fpt/stochastic_matrix.hpp"

namespace fpt {

/// A moment that is either an exact value or infinite (nullopt).
using MomentValue = std::optional<ExactRational>;

/// Moments of the passage time to one target, indexed by source state.
struct MomentReport {
    std::size_t target = 0;
    std::vector<MomentValue> means;
    /// E(X (X - 1)).
    std::vector<MomentValue> second_factorial;
    std::vector<MomentValue> variances;

    [[nodiscard]] bool finite(std::size_t source) const { return means.at(source).has_value(); }
};

/*
 * Differentiating the passage equations once and twice and setting z = 1
 * gives two real linear systems over the non-target states:
 *
 *   mu_i = 1 + sum_{k != j} p_ik mu_k
 *   s_i  = sum_{k != j} p_ik (2 mu_k + s_k)
 *
 * The source == target entries follow by substitution into the return
 * equation.  A source that reaches the target with probability < 1 has
 * infinite moments; the rest form a closed transient subsystem, which is
 * nonsingular.
 */
std::vector<MomentValue> mean_first_passage(const StochasticMatrix& matrix, std::size_t target);
std::vector<MomentValue> second_factorial_moment(const StochasticMatrix& matrix, std::size_t target);
/// Var = s + mu - mu^2.
std::vector<MomentValue> variance_first_passage(const StochasticMatrix& matrix, std::size_t target);
MomentReport moment_report(const StochasticMatrix& matrix, std::size_t target);

/// Derivative route: psi'(1), or nullopt for a defective PGF.
MomentValue mean_from_pgf(const RationalFunction& pgf);
/// Derivative route: psi''(1), or nullopt for a defective PGF.
MomentValue second_factorial_from_pgf(const RationalFunction& pgf);

} // namespace fpt

#endif // FPT_MOMENTS_HPP
