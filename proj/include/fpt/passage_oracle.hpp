#ifndef FPT_PASSAGE_ORACLE_HPP
#define FPT_PASSAGE_ORACLE_HPP

#include <cstddef>
#include <vector>

#include "fpt/exact_rational.hpp"
#include "fpt/stochastic_matrix.hpp"

namespace fpt {

/// First passage probabilities f(1..K) for one (source, target) pair.
struct PmfPrefix {
    std::size_t source = 0;
    std::size_t target = 0;
    /// values[k - 1] = P(X = k).
    std::vector<ExactRational> values;
    /// Sum of values.
    ExactRational mass;

    /// Probability of exactly k steps, k >= 1; zero past the prefix.
    [[nodiscard]] ExactRational at(std::size_t k) const {
        return k >= 1 && k <= values.size() ? values[k - 1] : ExactRational();
    }
};

/*
 * Brute-force first passage law, independent of any generating-function
 * algebra.  Conditions on the first step:
 *
 *   f_ij(1) = p_ij,   f_ij(k) = sum_{l != j} p_il * f_lj(k - 1)
 *
 * O(K * n^2) rational operations.  i == j gives the first return time.
 * Throws IndexError for bad states and ArgumentError for depth 0.
 */
PmfPrefix first_passage_pmf_oracle(const StochasticMatrix& matrix, std::size_t source, std::size_t target,
                                   std::size_t depth);

/// Same recursion, every source at once: result[i] is the prefix for (i, target).
std::vector<PmfPrefix> first_passage_pmf_table(const StochasticMatrix& matrix, std::size_t target,
                                               std::size_t depth);

/// Probability that `target` is ever hit (at time >= 1) from each source:
/// the minimal nonnegative solution of h_i = p_ij + sum_{k != j} p_ik h_k.
/// States with no path to the target get 0 and drop out of the solve, which
/// leaves a nonsingular system.
std::vector<ExactRational> reach_probabilities(const StochasticMatrix& matrix, std::size_t target);

ExactRational reach_probability(const StochasticMatrix& matrix, std::size_t source, std::size_t target);

} // namespace fpt

#endif // FPT_PASSAGE_ORACLE_HPP
