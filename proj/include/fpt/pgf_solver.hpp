#ifndef FPT_PGF_SOLVER_HPP
#define FPT_PGF_SOLVER_HPP

#include <cstddef>
#include <vector>

#include "fpt/exact_rational.hpp"
#include "fpt/polynomial.hpp"
#include "fpt/rational_function.hpp"
#include "fpt/stochastic_matrix.hpp"

namespace fpt {

/// Generating function of the first passage time from source to target.
struct PassagePgf {
    std::size_t source = 0;
    std::size_t target = 0;
    /// Canonical (fully reduced) form.
    RationalFunction pgf;
    /// The same function before reduction, as the solve produced it:
    /// numerator over det(I - zQ) of the target's system.
    PolynomialQuotient system_form;
    /// Probability the target is ever reached.
    ExactRational reach_mass;
    bool defective = false;
};

/*
 * PgfSystem
 *
 * Conditioning on the first step gives, for each source k != target,
 *
 *   psi_k(z) = p_{k,t} z + sum_{l != t} p_{k,l} z psi_l(z)
 *
 * which rearranges to (I - zQ) psi = z b, with Q the transition matrix with
 * the target's row and column removed and b the target column.  Row r of
 * the system belongs to state unknowns[r].
 */
struct PgfSystem {
    std::size_t target = 0;
    std::vector<std::size_t> unknowns;
    std::vector<std::vector<Polynomial>> matrix;
    std::vector<Polynomial> rhs;
};

PgfSystem build_system(const StochasticMatrix& matrix, std::size_t target);

/// x_r = numerators[r] / determinant.  determinant has constant term 1.
struct FractionFreeSolution {
    Polynomial determinant;
    std::vector<Polynomial> numerators;
};

/// Bareiss elimination over Q[z] followed by fraction-free back
/// substitution; every intermediate is a polynomial and every division is
/// exact.  Throws MathError if the system is singular (it never is for a
/// system from build_system).
FractionFreeSolution solve_fraction_free(const PgfSystem& system);

/// PGFs of the passage time to `target` from every source, indexed by
/// source; one elimination serves all of them.  The return-time PGF comes
/// from substituting the solved psi_k into the source == target equation.
std::vector<PassagePgf> solve_pgf_all(const StochasticMatrix& matrix, std::size_t target);

PassagePgf solve_pgf(const StochasticMatrix& matrix, std::size_t source, std::size_t target);

/// Explicit two-unknown solution for 3-state chains: with states relabelled
/// so that source -> 1, target -> 3 and the remaining state -> 2,
///
///   psi(z) = (p13 z + (p12 p23 - p13 p22) z^2)
///          / (1 - (p11 + p22) z + (p11 p22 - p12 p21) z^2)
///
/// Throws ArgumentError unless the chain has 3 states and source != target.
PassagePgf pgf_3state_closed_form(const StochasticMatrix& matrix, std::size_t source, std::size_t target);

} // namespace fpt

#endif // FPT_PGF_SOLVER_HPP
