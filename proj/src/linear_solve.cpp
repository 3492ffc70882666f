#include "fpt/linear_solve.hpp"

#include <utility>

namespace fpt {

std::optional<std::vector<ExactRational>> solve_linear_system(std::vector<std::vector<ExactRational>> a,
                                                              std::vector<ExactRational> b) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col].is_zero()) ++pivot;
        if (pivot == n) return std::nullopt;
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            std::swap(b[pivot], b[col]);
        }
        const ExactRational inv = ExactRational(1) / a[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a[r][col].is_zero()) continue;
            const ExactRational factor = a[r][col] * inv;
            for (std::size_t c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
            b[r] -= factor * b[col];
        }
    }
    std::vector<ExactRational> x(n);
    for (std::size_t r = n; r-- > 0;) {
        ExactRational acc = b[r];
        for (std::size_t c = r + 1; c < n; ++c) acc -= a[r][c] * x[c];
        x[r] = acc / a[r][r];
    }
    return x;
}

} // namespace fpt
