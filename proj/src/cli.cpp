#include "fpt/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>

#include "fpt/errors.hpp"
#include "fpt/moments.hpp"
#include "fpt/passage.hpp"
#include "fpt/passage_oracle.hpp"
#include "fpt/pgf_solver.hpp"
#include "fpt/random_chain.hpp"
#include "fpt/stochastic_matrix.hpp"

namespace fpt::cli {

namespace {

std::string read_all(const std::string& path) {
    if (path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read matrix file '" + path + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

StochasticMatrix load_matrix(const AnalysisRequest& req) {
    if (req.matrix_path.empty()) throw ArgumentError("--matrix is required");
    const std::string text = read_all(req.matrix_path);
    return parse_matrix(text, guess_format(req.matrix_path, text), req.normalize_rows);
}

std::size_t require_state(const StochasticMatrix& m, const std::optional<std::string>& token, const char* flag) {
    if (!token) throw ArgumentError(std::string(flag) + " is required");
    return m.resolve_state(*token);
}

std::string moment_text(const MomentValue& v, OutputMode mode) {
    return v ? v->to_string(mode) : "inf";
}

ExitCode warn_defective(const StochasticMatrix& m, std::size_t source, std::size_t target,
                        const ExactRational& reach, std::ostream& err) {
    err << "warning: state " << m.state_name(target) << " is reached from state " << m.state_name(source)
        << " with probability " << reach.to_string(OutputMode::exact) << " < 1\n";
    return ExitCode::defective_target;
}

void print_pmf(const PmfPrefix& pmf, OutputMode mode, std::ostream& out) {
    for (std::size_t k = 1; k <= pmf.values.size(); ++k) out << k << ' ' << pmf.at(k).to_string(mode) << '\n';
}

ExitCode run_pgf(const StochasticMatrix& m, const AnalysisRequest& req, std::ostream& out, std::ostream& err) {
    const std::size_t i = require_state(m, req.source, "--from");
    const std::size_t j = require_state(m, req.target, "--to");
    const PassagePgf p = solve_pgf(m, i, j);
    out << (req.reduced ? p.pgf.to_string(req.output_mode)
                        : render_quotient(p.system_form.numerator, p.system_form.denominator, req.output_mode))
        << '\n';
    return p.defective ? warn_defective(m, i, j, p.reach_mass, err) : ExitCode::ok;
}

ExitCode run_series(const StochasticMatrix& m, const AnalysisRequest& req, std::ostream& out, std::ostream& err) {
    const std::size_t i = require_state(m, req.source, "--from");
    const std::size_t j = require_state(m, req.target, "--to");
    const PassagePgf p = solve_pgf(m, i, j);
    print_pmf(pmf_from_pgf(p.pgf, i, j, req.terms), req.output_mode, out);
    return p.defective ? warn_defective(m, i, j, p.reach_mass, err) : ExitCode::ok;
}

ExitCode run_moments(const StochasticMatrix& m, const AnalysisRequest& req, std::ostream& out, std::ostream& err) {
    const std::size_t j = require_state(m, req.target, "--to");
    std::vector<std::size_t> sources;
    if (req.source) {
        sources.push_back(m.resolve_state(*req.source));
    } else {
        for (std::size_t s = 0; s < m.size(); ++s) sources.push_back(s);
    }
    const MomentReport report = moment_report(m, j);
    const auto reach = reach_probabilities(m, j);
    ExitCode code = ExitCode::ok;
    for (std::size_t s : sources) {
        out << "from " << m.state_name(s) << " to " << m.state_name(j)
            << ": mean=" << moment_text(report.means[s], req.output_mode)
            << " second_factorial=" << moment_text(report.second_factorial[s], req.output_mode)
            << " variance=" << moment_text(report.variances[s], req.output_mode) << '\n';
        if (!report.finite(s)) code = warn_defective(m, s, j, reach[s], err);
    }
    return code;
}

ExitCode run_passage(const StochasticMatrix& m, const AnalysisRequest& req, std::ostream& out, std::ostream& err) {
    const std::size_t i = require_state(m, req.source, "--from");
    const std::size_t j = require_state(m, req.target, "--to");
    if (req.order == 0) throw ArgumentError("--order must be at least 1");
    const RthPassagePgf p = rth_passage_pgf(m, i, j, req.order);
    out << (req.reduced
                ? p.pgf.to_string(req.output_mode)
                : render_quotient(p.product_form.numerator, p.product_form.denominator, req.output_mode))
        << '\n';
    print_pmf(pmf_from_pgf(p.pgf, i, j, req.terms), req.output_mode, out);
    const auto reach_all = reach_probabilities(m, j);
    ExactRational reach = reach_all[i];
    for (unsigned r = 1; r < req.order; ++r) reach *= reach_all[j];
    return reach < ExactRational(1) ? warn_defective(m, i, j, reach, err) : ExitCode::ok;
}

ExitCode run_check(const AnalysisRequest& req, std::ostream& out, std::ostream& err) {
    std::optional<StochasticMatrix> loaded;
    if (!req.matrix_path.empty()) {
        loaded = load_matrix(req);
        if (loaded->rows_normalized()) out << "# rows normalized to sum to 1\n";
    } else {
        std::mt19937_64 rng(req.seed);
        const std::size_t n = req.states ? *req.states : 2 + static_cast<std::size_t>(rng() % 5);
        loaded = random_stochastic_matrix(rng, n);
        out << "# random " << n << "-state chain, seed " << req.seed << '\n';
        std::istringstream rendered(render_matrix(*loaded, MatrixFormat::csv));
        for (std::string line; std::getline(rendered, line);) out << "#   " << line << '\n';
    }
    const StochasticMatrix& m = *loaded;
    for (std::size_t j = 0; j < m.size(); ++j) {
        const auto solved = solve_pgf_all(m, j);
        const auto oracle = first_passage_pmf_table(m, j, req.terms);
        for (std::size_t i = 0; i < m.size(); ++i) {
            const auto coeffs = solved[i].pgf.series(req.terms + 1);
            if (!coeffs[0].is_zero()) {
                out << "FAIL pair (" << m.state_name(i) << "," << m.state_name(j)
                    << ") step 0: solver=" << coeffs[0].to_fraction_string() << " oracle=0\n";
                return ExitCode::check_mismatch;
            }
            for (std::size_t k = 1; k <= req.terms; ++k) {
                if (coeffs[k] != oracle[i].at(k)) {
                    out << "FAIL pair (" << m.state_name(i) << "," << m.state_name(j) << ") step " << k
                        << ": solver=" << coeffs[k].to_fraction_string()
                        << " oracle=" << oracle[i].at(k).to_fraction_string() << '\n';
                    return ExitCode::check_mismatch;
                }
            }
        }
    }
    (void)err;
    out << "PASS " << m.size() * m.size() << " pairs, " << req.terms << " terms\n";
    return ExitCode::ok;
}

} // namespace

std::optional<Command> command_from_name(const std::string& name) {
    if (name == "pgf") return Command::pgf;
    if (name == "series") return Command::series;
    if (name == "moments") return Command::moments;
    if (name == "passage") return Command::passage;
    if (name == "check") return Command::check;
    return std::nullopt;
}

ExitCode run(const AnalysisRequest& request, std::ostream& out, std::ostream& err) {
    try {
        if (request.terms == 0) throw ArgumentError("--terms must be at least 1");
        if (request.command == Command::check) return run_check(request, out, err);

        const StochasticMatrix m = load_matrix(request);
        if (m.rows_normalized()) out << "# rows normalized to sum to 1\n";
        switch (request.command) {
        case Command::pgf: return run_pgf(m, request, out, err);
        case Command::series: return run_series(m, request, out, err);
        case Command::moments: return run_moments(m, request, out, err);
        case Command::passage: return run_passage(m, request, out, err);
        case Command::check: break;
        }
        return ExitCode::usage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return ExitCode::parse_error;
    } catch (const IndexError& e) {
        err << "error: " << e.what() << '\n';
        return ExitCode::index_error;
    } catch (const ArgumentError& e) {
        err << "error: " << e.what() << '\n';
        return ExitCode::usage;
    } catch (const Error& e) {
        err << "internal error: " << e.what() << '\n';
        return ExitCode::internal_error;
    }
}

} // namespace fpt::cli
