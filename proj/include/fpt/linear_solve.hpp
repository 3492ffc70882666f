#ifndef FPT_LINEAR_SOLVE_HPP
#define FPT_LINEAR_SOLVE_HPP

#include <optional>
#include <vector>

#include "fpt/exact_rational.hpp"

namespace fpt {

/// Solves a * x = b over the rationals by Gaussian elimination with exact
/// pivots.  Returns nullopt when a is singular.  An empty system has the
/// empty solution.
std::optional<std::vector<ExactRational>> solve_linear_system(std::vector<std::vector<ExactRational>> a,
                                                              std::vector<ExactRational> b);

} // namespace fpt

#endif // FPT_LINEAR_SOLVE_HPP
