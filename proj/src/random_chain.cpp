#include "fpt/random_chain.hpp"

#include <vector>

#include "fpt/errors.hpp"

namespace fpt {

StochasticMatrix random_stochastic_matrix(std::mt19937_64& rng, std::size_t states, bool irreducible) {
    if (states == 0) throw ArgumentError("random chain needs at least one state");
    std::vector<std::vector<ExactRational>> rows(states, std::vector<ExactRational>(states));
    for (std::size_t r = 0; r < states; ++r) {
        std::vector<long> weights(states);
        long total = 0;
        while (total == 0) {
            for (std::size_t c = 0; c < states; ++c) {
                const auto draw = rng();
                weights[c] = draw % 3 == 0 ? 0 : static_cast<long>((draw >> 8) % 9) + 1;
            }
            if (irreducible) {
                auto& w = weights[(r + 1) % states];
                if (w == 0) w = static_cast<long>(rng() % 9) + 1;
            }
            total = 0;
            for (long w : weights) total += w;
        }
        for (std::size_t c = 0; c < states; ++c) rows[r][c] = ExactRational(weights[c], total);
    }
    return StochasticMatrix::from_rows(std::move(rows));
}

bool is_irreducible(const StochasticMatrix& matrix) {
    const std::size_t n = matrix.size();
    for (std::size_t start = 0; start < n; ++start) {
        std::vector<bool> seen(n, false);
        std::vector<std::size_t> stack{start};
        seen[start] = true;
        std::size_t count = 1;
        while (!stack.empty()) {
            const std::size_t s = stack.back();
            stack.pop_back();
            for (std::size_t t = 0; t < n; ++t) {
                if (!seen[t] && !matrix(s, t).is_zero()) {
                    seen[t] = true;
                    ++count;
                    stack.push_back(t);
                }
            }
        }
        if (count != n) return false;
    }
    return true;
}

} // namespace fpt
