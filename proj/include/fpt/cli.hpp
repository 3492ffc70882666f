#ifndef FPT_CLI_HPP
#define FPT_CLI_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "fpt/exact_rational.hpp"

namespace fpt::cli {

enum class Command { pgf, series, moments, passage, check };

/// Process exit statuses.  defective_target still prints the full report.
enum class ExitCode : int {
    ok = 0,
    usage = 1,
    parse_error = 2,
    index_error = 3,
    defective_target = 4,
    check_mismatch = 5,
    internal_error = 6,
};

struct AnalysisRequest {
    Command command = Command::pgf;
    /// Matrix file; "-" reads standard input.  Optional only for `check`,
    /// which then generates a random chain.
    std::string matrix_path;
    /// 1-based index or state label.
    std::optional<std::string> source;
    std::optional<std::string> target;
    unsigned order = 1;
    std::size_t terms = 10;
    OutputMode output_mode = OutputMode::decimal;
    bool normalize_rows = false;
    /// Print the fully reduced canonical PGF instead of the system form.
    bool reduced = false;
    std::uint64_t seed = 0;
    /// State count for a generated `check` chain; drawn from 2..6 when unset.
    std::optional<std::size_t> states;
};

std::optional<Command> command_from_name(const std::string& name);

/// Executes one request.  Reports go to `out`; warnings and errors to `err`.
ExitCode run(const AnalysisRequest& request, std::ostream& out, std::ostream& err);

} // namespace fpt::cli

#endif // FPT_CLI_HPP
