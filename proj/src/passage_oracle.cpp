#include "fpt/passage_oracle.hpp"

#include <deque>

#include "fpt/errors.hpp"
#include "fpt/linear_solve.hpp"

namespace fpt {

std::vector<PmfPrefix> first_passage_pmf_table(const StochasticMatrix& matrix, std::size_t target,
                                               std::size_t depth) {
    matrix.check_state(target);
    if (depth == 0) throw ArgumentError("pmf depth must be at least 1");
    const std::size_t n = matrix.size();

    std::vector<PmfPrefix> table(n);
    std::vector<ExactRational> current(n);
    for (std::size_t i = 0; i < n; ++i) {
        table[i].source = i;
        table[i].target = target;
        table[i].values.reserve(depth);
        current[i] = matrix(i, target);
    }
    for (std::size_t k = 1;; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            table[i].mass += current[i];
            table[i].values.push_back(current[i]);
        }
        if (k == depth) break;
        std::vector<ExactRational> next(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t l = 0; l < n; ++l) {
                if (l == target || matrix(i, l).is_zero() || current[l].is_zero()) continue;
                next[i] += matrix(i, l) * current[l];
            }
        }
        current = std::move(next);
    }
    return table;
}

PmfPrefix first_passage_pmf_oracle(const StochasticMatrix& matrix, std::size_t source, std::size_t target,
                                   std::size_t depth) {
    matrix.check_state(source);
    return first_passage_pmf_table(matrix, target, depth)[source];
}

std::vector<ExactRational> reach_probabilities(const StochasticMatrix& matrix, std::size_t target) {
    matrix.check_state(target);
    const std::size_t n = matrix.size();

    // Non-target states with a path to the target avoiding it until the end.
    std::vector<bool> reaches(n, false);
    std::deque<std::size_t> frontier;
    for (std::size_t l = 0; l < n; ++l) {
        if (l != target && !matrix(l, target).is_zero()) {
            reaches[l] = true;
            frontier.push_back(l);
        }
    }
    while (!frontier.empty()) {
        const std::size_t m = frontier.front();
        frontier.pop_front();
        for (std::size_t l = 0; l < n; ++l) {
            if (l != target && !reaches[l] && !matrix(l, m).is_zero()) {
                reaches[l] = true;
                frontier.push_back(l);
            }
        }
    }

    std::vector<std::size_t> active;
    for (std::size_t l = 0; l < n; ++l) {
        if (reaches[l]) active.push_back(l);
    }
    std::vector<std::vector<ExactRational>> a(active.size(), std::vector<ExactRational>(active.size()));
    std::vector<ExactRational> b(active.size());
    for (std::size_t r = 0; r < active.size(); ++r) {
        for (std::size_t c = 0; c < active.size(); ++c) {
            a[r][c] = (r == c ? ExactRational(1) : ExactRational()) - matrix(active[r], active[c]);
        }
        b[r] = matrix(active[r], target);
    }
    auto solved = solve_linear_system(std::move(a), std::move(b));
    if (!solved) throw InternalError("reach system singular on the transient set");

    std::vector<ExactRational> h(n);
    for (std::size_t r = 0; r < active.size(); ++r) h[active[r]] = (*solved)[r];
    ExactRational ret = matrix(target, target);
    for (std::size_t k = 0; k < n; ++k) {
        if (k != target) ret += matrix(target, k) * h[k];
    }
    h[target] = ret;
    return h;
}

ExactRational reach_probability(const StochasticMatrix& matrix, std::size_t source, std::size_t target) {
    matrix.check_state(source);
    return reach_probabilities(matrix, target)[source];
}

} // namespace fpt
