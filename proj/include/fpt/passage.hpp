#ifndef FPT_PASSAGE_HPP
#define FPT_PASSAGE_HPP

#include <cstddef>

#include "fpt/passage_oracle.hpp"
#include "fpt/rational_function.hpp"
#include "fpt/stochastic_matrix.hpp"

namespace fpt {

/// Generating function of the time of the order-th visit to target.
struct RthPassagePgf {
    std::size_t source = 0;
    std::size_t target = 0;
    unsigned order = 1;
    RationalFunction pgf;
    /// Unreduced product of the solver's system forms.
    PolynomialQuotient product_form;
};

/// The r-th passage time is the first passage time plus r - 1 independent
/// return times (strong Markov property), so its PGF is
/// psi_ij(z) * psi_jj(z)^(r-1).  Throws ArgumentError for order 0.
RthPassagePgf rth_passage_pgf(const StochasticMatrix& matrix, std::size_t source, std::size_t target,
                              unsigned order);

/// P(Y = k) for k = 1..depth, read off the series of rth_passage_pgf.
PmfPrefix rth_passage_pmf(const StochasticMatrix& matrix, std::size_t source, std::size_t target,
                          unsigned order, std::size_t depth);

/// Coefficients 1..depth of a PGF as a pmf prefix.
PmfPrefix pmf_from_pgf(const RationalFunction& pgf, std::size_t source, std::size_t target, std::size_t depth);

} // namespace fpt

#endif // FPT_PASSAGE_HPP
