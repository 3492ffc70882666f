#ifndef FPT_STOCHASTIC_MATRIX_HPP
#define FPT_STOCHASTIC_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fpt/exact_rational.hpp"

namespace fpt {

/*
 * StochasticMatrix
 *
 * Validated n x n transition matrix over exact rationals.  Entry (i, k) is
 * the one-step probability of moving from state i to state k.
 *
 * Indices are 0-based in this API.  User-facing text (labels, messages,
 * CLI arguments) is 1-based; the conversion happens in resolve_state() and
 * in the error messages here, nowhere else.
 */
class StochasticMatrix {
public:
    /// Validates every entry in [0, 1] and every row summing to 1 exactly.
    /// With normalize_rows set, a row whose sum is positive but not 1 is
    /// rescaled instead and rows_normalized() reports it.  Throws ParseError.
    static StochasticMatrix from_rows(std::vector<std::vector<ExactRational>> rows,
                                      std::vector<std::string> labels = {},
                                      bool normalize_rows = false);

    [[nodiscard]] std::size_t size() const noexcept { return m_n; }
    [[nodiscard]] const ExactRational& operator()(std::size_t from, std::size_t to) const {
        return m_entries[from * m_n + to];
    }
    [[nodiscard]] std::span<const ExactRational> row(std::size_t from) const {
        return {m_entries.data() + from * m_n, m_n};
    }
    /// Optional external names.  Empty when the input carried none.
    [[nodiscard]] const std::vector<std::string>& labels() const noexcept { return m_labels; }
    /// Label for display: the given name, else the 1-based index.
    [[nodiscard]] std::string state_name(std::size_t state) const;
    [[nodiscard]] bool rows_normalized() const noexcept { return m_rows_normalized; }

    /// Maps a 1-based index ("3") or a label to a 0-based state.
    /// Throws IndexError when out of range or unknown.
    [[nodiscard]] std::size_t resolve_state(std::string_view token) const;
    /// Throws IndexError unless state < size(); the message is 1-based.
    void check_state(std::size_t state) const;

    friend bool operator==(const StochasticMatrix&, const StochasticMatrix&) = default;

private:
    StochasticMatrix() = default;

    std::size_t m_n = 0;
    std::vector<ExactRational> m_entries;
    std::vector<std::string> m_labels;
    bool m_rows_normalized = false;
};

enum class MatrixFormat { csv, json, whitespace };

/// Parses matrix text.  CSV and whitespace grids hold one row per line;
/// blank lines and lines starting with '#' are skipped.  JSON is
/// {"n": int, "rows": [[...]], "labels": [...]} with "n" and "labels"
/// optional.  Entries are integers, decimals or fractions ("2/5"); JSON
/// entries may be numbers or strings.  Throws ParseError.
StochasticMatrix parse_matrix(std::string_view text, MatrixFormat format, bool normalize_rows = false);

/// Picks a format from a file extension, falling back to the content.
MatrixFormat guess_format(std::string_view path, std::string_view text);

/// Exact-fraction rendering that parse_matrix reads back unchanged.
std::string render_matrix(const StochasticMatrix& matrix, MatrixFormat format);

} // namespace fpt

#endif // FPT_STOCHASTIC_MATRIX_HPP
