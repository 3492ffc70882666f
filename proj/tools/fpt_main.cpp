#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "fpt/cli.hpp"

int main(int argc, char** argv) {
    using fpt::cli::AnalysisRequest;

    CLI::App app{"Exact first passage time analysis for finite discrete-time Markov chains"};
    app.set_help_flag("-h,--help");

    AnalysisRequest req;
    std::string command;
    std::string source;
    std::string target;
    std::size_t states = 0;
    bool exact = false;
    bool decimal = false;

    app.add_option("command", command, "pgf | series | moments | passage | check")
        ->required()
        ->check(CLI::IsMember({"pgf", "series", "moments", "passage", "check"}));
    app.add_option("--matrix", req.matrix_path, "transition matrix file (.csv, .json or whitespace grid; - for stdin)");
    auto* from_opt = app.add_option("--from", source, "source state (1-based index or label)");
    auto* to_opt = app.add_option("--to", target, "target state (1-based index or label)");
    app.add_option("--order", req.order, "passage order r (passage)")->check(CLI::PositiveNumber);
    app.add_option("--terms", req.terms, "number of pmf terms K")->check(CLI::PositiveNumber);
    auto* exact_flag = app.add_flag("--exact", exact, "print exact fractions");
    app.add_flag("--decimal", decimal, "print decimals where exact (default)")->excludes(exact_flag);
    app.add_flag("--normalize-rows", req.normalize_rows, "rescale rows that do not sum to 1");
    app.add_flag("--reduced", req.reduced, "print the fully reduced PGF instead of the system form");
    app.add_option("--seed", req.seed, "seed for the random chain used by check");
    auto* states_opt = app.add_option("--states", states, "state count of the random chain used by check")
                           ->check(CLI::Range(1, 64));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : static_cast<int>(fpt::cli::ExitCode::usage);
    }

    req.command = *fpt::cli::command_from_name(command);
    if (*from_opt) req.source = source;
    if (*to_opt) req.target = target;
    if (*states_opt) req.states = states;
    req.output_mode = exact ? fpt::OutputMode::exact : fpt::OutputMode::decimal;

    return static_cast<int>(fpt::cli::run(req, std::cout, std::cerr));
}
