#include "fpt/pgf_solver.hpp"

#include <utility>

#include "fpt/errors.hpp"
#include "fpt/passage_oracle.hpp"

namespace fpt {

namespace {

// c0 + c1 z
Polynomial linear(const ExactRational& c0, const ExactRational& c1) {
    return Polynomial({c0, c1});
}

PassagePgf make_pgf(std::size_t source, std::size_t target, Polynomial numerator, Polynomial denominator,
                    ExactRational reach) {
    PassagePgf out;
    out.source = source;
    out.target = target;
    out.pgf = RationalFunction::normalize(numerator, denominator);
    out.system_form = {std::move(numerator), std::move(denominator)};
    out.defective = reach < ExactRational(1);
    out.reach_mass = std::move(reach);
    return out;
}

} // namespace

PgfSystem build_system(const StochasticMatrix& matrix, std::size_t target) {
    matrix.check_state(target);
    PgfSystem sys;
    sys.target = target;
    for (std::size_t s = 0; s < matrix.size(); ++s) {
        if (s != target) sys.unknowns.push_back(s);
    }
    const std::size_t m = sys.unknowns.size();
    sys.matrix.assign(m, std::vector<Polynomial>(m));
    sys.rhs.resize(m);
    for (std::size_t r = 0; r < m; ++r) {
        const std::size_t from = sys.unknowns[r];
        for (std::size_t c = 0; c < m; ++c) {
            const ExactRational diag = r == c ? ExactRational(1) : ExactRational();
            sys.matrix[r][c] = linear(diag, -matrix(from, sys.unknowns[c]));
        }
        sys.rhs[r] = linear(ExactRational(), matrix(from, target));
    }
    return sys;
}

FractionFreeSolution solve_fraction_free(const PgfSystem& system) {
    const std::size_t m = system.rhs.size();
    if (m == 0) return {Polynomial::constant(ExactRational(1)), {}};

    // augmented [A | b]
    std::vector<std::vector<Polynomial>> a(m);
    for (std::size_t r = 0; r < m; ++r) {
        a[r] = system.matrix[r];
        a[r].push_back(system.rhs[r]);
    }

    Polynomial previous = Polynomial::constant(ExactRational(1));
    for (std::size_t k = 0; k + 1 < m; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < m && a[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == m) throw MathError("singular passage system");
            std::swap(a[k], a[swap_row]);
        }
        const Polynomial& pivot = a[k][k];
        for (std::size_t i = k + 1; i < m; ++i) {
            for (std::size_t j = k + 1; j <= m; ++j) {
                a[i][j] = exact_divide(a[i][j] * pivot - a[i][k] * a[k][j], previous);
            }
            a[i][k] = Polynomial();
        }
        previous = pivot;
    }
    Polynomial det = a[m - 1][m - 1];
    if (det.is_zero()) throw MathError("singular passage system");

    // y_i = det * x_i, all polynomials by Cramer's rule
    std::vector<Polynomial> y(m);
    for (std::size_t i = m; i-- > 0;) {
        Polynomial acc = det * a[i][m];
        for (std::size_t k = i + 1; k < m; ++k) acc -= a[i][k] * y[k];
        y[i] = exact_divide(acc, a[i][i]);
    }

    // Row swaps can flip the sign of det; restore constant term +1.
    const ExactRational c0 = det.constant_term();
    if (c0.is_zero()) throw InternalError("passage system determinant vanishes at z=0");
    if (!c0.is_one()) {
        const ExactRational inv = ExactRational(1) / c0;
        det *= inv;
        for (auto& p : y) p *= inv;
    }
    return {std::move(det), std::move(y)};
}

std::vector<PassagePgf> solve_pgf_all(const StochasticMatrix& matrix, std::size_t target) {
    const PgfSystem sys = build_system(matrix, target);
    FractionFreeSolution sol = solve_fraction_free(sys);
    const std::vector<ExactRational> reach = reach_probabilities(matrix, target);
    const Polynomial z = Polynomial::z();

    std::vector<PassagePgf> out(matrix.size());
    // psi_tt = p_tt z + sum_{k != t} p_tk z psi_k, over the common denominator
    Polynomial ret = Polynomial::monomial(matrix(target, target), 1) * sol.determinant;
    for (std::size_t r = 0; r < sys.unknowns.size(); ++r) {
        const std::size_t k = sys.unknowns[r];
        if (!matrix(target, k).is_zero()) ret += (z * sol.numerators[r]) * matrix(target, k);
    }
    out[target] = make_pgf(target, target, std::move(ret), sol.determinant, reach[target]);
    for (std::size_t r = 0; r < sys.unknowns.size(); ++r) {
        const std::size_t k = sys.unknowns[r];
        out[k] = make_pgf(k, target, std::move(sol.numerators[r]), sol.determinant, reach[k]);
    }
    return out;
}

PassagePgf solve_pgf(const StochasticMatrix& matrix, std::size_t source, std::size_t target) {
    matrix.check_state(source);
    return std::move(solve_pgf_all(matrix, target)[source]);
}

PassagePgf pgf_3state_closed_form(const StochasticMatrix& matrix, std::size_t source, std::size_t target) {
    if (matrix.size() != 3) throw ArgumentError("closed form requires a 3-state chain");
    matrix.check_state(source);
    matrix.check_state(target);
    if (source == target) throw ArgumentError("closed form covers only source != target");

    const std::size_t a = source;
    const std::size_t c = target;
    const std::size_t b = 3 - a - c;
    auto p = [&](std::size_t from, std::size_t to) -> const ExactRational& { return matrix(from, to); };

    Polynomial numerator({ExactRational(), p(a, c), p(a, b) * p(b, c) - p(a, c) * p(b, b)});
    Polynomial denominator({ExactRational(1), -(p(a, a) + p(b, b)), p(a, a) * p(b, b) - p(a, b) * p(b, a)});
    return make_pgf(source, target, std::move(numerator), std::move(denominator),
                    reach_probability(matrix, source, target));
}

} // namespace fpt
