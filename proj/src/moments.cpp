#include "fpt/moments.hpp"

#include "fpt/errors.hpp"
#include "fpt/linear_solve.hpp"
#include "fpt/passage_oracle.hpp"

namespace fpt {

namespace {

struct Subsystem {
    std::vector<std::size_t> states; // non-target states reaching the target surely
    bool return_finite = false;
};

Subsystem certain_states(const StochasticMatrix& matrix, std::size_t target) {
    const auto reach = reach_probabilities(matrix, target);
    Subsystem sub;
    for (std::size_t s = 0; s < matrix.size(); ++s) {
        if (s != target && reach[s].is_one()) sub.states.push_back(s);
    }
    sub.return_finite = reach[target].is_one();
    return sub;
}

// Solves (I - Q_S) x = rhs over the subsystem; rhs(state) is the
// inhomogeneous term of that state's equation.  Entries outside S stay infinite.
template <typename Rhs>
std::vector<MomentValue> solve_moment_system(const StochasticMatrix& matrix, const Subsystem& sub, Rhs rhs) {
    const std::size_t m = sub.states.size();
    std::vector<std::vector<ExactRational>> a(m, std::vector<ExactRational>(m));
    std::vector<ExactRational> b(m);
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t c = 0; c < m; ++c) {
            a[r][c] = (r == c ? ExactRational(1) : ExactRational()) - matrix(sub.states[r], sub.states[c]);
        }
        b[r] = rhs(sub.states[r]);
    }
    std::vector<MomentValue> out(matrix.size());
    auto solved = solve_linear_system(std::move(a), std::move(b));
    if (!solved) return out;
    for (std::size_t r = 0; r < m; ++r) out[sub.states[r]] = (*solved)[r];
    return out;
}

std::vector<MomentValue> means_on(const StochasticMatrix& matrix, std::size_t target, const Subsystem& sub) {
    auto mu = solve_moment_system(matrix, sub, [](std::size_t) { return ExactRational(1); });
    if (sub.return_finite) {
        ExactRational ret(1);
        for (std::size_t k = 0; k < matrix.size(); ++k) {
            if (k == target || matrix(target, k).is_zero()) continue;
            if (!mu[k]) return mu;
            ret += matrix(target, k) * *mu[k];
        }
        mu[target] = ret;
    }
    return mu;
}

std::vector<MomentValue> second_on(const StochasticMatrix& matrix, std::size_t target, const Subsystem& sub,
                                   const std::vector<MomentValue>& mu) {
    auto drift = [&](std::size_t i) {
        ExactRational acc;
        for (std::size_t k = 0; k < matrix.size(); ++k) {
            if (k == target || matrix(i, k).is_zero()) continue;
            if (!mu[k]) throw InternalError("finite state leads to an infinite-mean state");
            acc += matrix(i, k) * ExactRational(2) * *mu[k];
        }
        return acc;
    };
    auto s = solve_moment_system(matrix, sub, drift);
    if (mu[target]) {
        ExactRational ret = drift(target);
        for (std::size_t k = 0; k < matrix.size(); ++k) {
            if (k == target || matrix(target, k).is_zero()) continue;
            ret += matrix(target, k) * *s[k];
        }
        s[target] = ret;
    }
    return s;
}

std::vector<MomentValue> variances_of(const std::vector<MomentValue>& mu, const std::vector<MomentValue>& s) {
    std::vector<MomentValue> var(mu.size());
    for (std::size_t k = 0; k < mu.size(); ++k) {
        if (mu[k] && s[k]) var[k] = *s[k] + *mu[k] - *mu[k] * *mu[k];
    }
    return var;
}

} // namespace

std::vector<MomentValue> mean_first_passage(const StochasticMatrix& matrix, std::size_t target) {
    matrix.check_state(target);
    return means_on(matrix, target, certain_states(matrix, target));
}

std::vector<MomentValue> second_factorial_moment(const StochasticMatrix& matrix, std::size_t target) {
    return moment_report(matrix, target).second_factorial;
}

std::vector<MomentValue> variance_first_passage(const StochasticMatrix& matrix, std::size_t target) {
    return moment_report(matrix, target).variances;
}

MomentReport moment_report(const StochasticMatrix& matrix, std::size_t target) {
    matrix.check_state(target);
    const Subsystem sub = certain_states(matrix, target);
    MomentReport report;
    report.target = target;
    report.means = means_on(matrix, target, sub);
    report.second_factorial = second_on(matrix, target, sub, report.means);
    report.variances = variances_of(report.means, report.second_factorial);
    return report;
}

MomentValue mean_from_pgf(const RationalFunction& pgf) {
    if (!pgf.evaluate(ExactRational(1)).is_one()) return std::nullopt;
    return pgf.derivative().evaluate(ExactRational(1));
}

MomentValue second_factorial_from_pgf(const RationalFunction& pgf) {
    if (!pgf.evaluate(ExactRational(1)).is_one()) return std::nullopt;
    return pgf.derivative().derivative().evaluate(ExactRational(1));
}

} // namespace fpt
