#include "fpt/passage.hpp"

#include "fpt/errors.hpp"
#include "fpt/pgf_solver.hpp"

namespace fpt {

RthPassagePgf rth_passage_pgf(const StochasticMatrix& matrix, std::size_t source, std::size_t target,
                              unsigned order) {
    if (order == 0) throw ArgumentError("passage order must be at least 1");
    matrix.check_state(source);
    const auto all = solve_pgf_all(matrix, target);
    const PassagePgf& first = all[source];
    const PassagePgf& ret = all[target];

    RthPassagePgf out;
    out.source = source;
    out.target = target;
    out.order = order;
    out.pgf = first.pgf * ret.pgf.pow(order - 1);
    out.product_form = {first.system_form.numerator * ret.system_form.numerator.pow(order - 1),
                        first.system_form.denominator * ret.system_form.denominator.pow(order - 1)};
    return out;
}

PmfPrefix pmf_from_pgf(const RationalFunction& pgf, std::size_t source, std::size_t target, std::size_t depth) {
    if (depth == 0) throw ArgumentError("pmf depth must be at least 1");
    auto coeffs = pgf.series(depth + 1);
    PmfPrefix out;
    out.source = source;
    out.target = target;
    out.values.assign(std::make_move_iterator(coeffs.begin() + 1), std::make_move_iterator(coeffs.end()));
    for (const auto& v : out.values) out.mass += v;
    return out;
}

PmfPrefix rth_passage_pmf(const StochasticMatrix& matrix, std::size_t source, std::size_t target,
                          unsigned order, std::size_t depth) {
    return pmf_from_pgf(rth_passage_pgf(matrix, source, target, order).pgf, source, target, depth);
}

} // namespace fpt
