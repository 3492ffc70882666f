#ifndef FPT_RANDOM_CHAIN_HPP
#define FPT_RANDOM_CHAIN_HPP

#include <cstddef>
#include <cstdint>
#include <random>

#include "fpt/stochastic_matrix.hpp"

namespace fpt {

/// Random chain with small-integer weights per row (about a third of them
/// zero), each row divided by its sum.  With `irreducible` set, a cycle
/// 1 -> 2 -> ... -> n -> 1 is forced positive.  Uses only raw mt19937_64
/// output so a seed yields the same matrix on every platform.
StochasticMatrix random_stochastic_matrix(std::mt19937_64& rng, std::size_t states, bool irreducible = false);

/// True when every state reaches every other state.
bool is_irreducible(const StochasticMatrix& matrix);

} // namespace fpt

#endif // FPT_RANDOM_CHAIN_HPP
