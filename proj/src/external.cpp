// SPDX-License-Identifier: MIT
#include "argsat/external.hpp"

#include "argsat/af_io.hpp"
#include "argsat/process.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <unistd.h>

namespace argsat {

void ExternalSolverConfig::validate() const {
    std::error_code ec;
    if (executable.empty() || !std::filesystem::is_regular_file(executable, ec))
        throw ExternalSolverError("solver executable not found: " + executable.string());
    if (::access(executable.c_str(), X_OK) != 0)
        throw ExternalSolverError("solver is not executable: " + executable.string());
    if (time_budget_seconds < 0) throw ExternalSolverError("negative time budget");
}

ExternalSolverConfig ExternalSolverConfig::for_executable(std::filesystem::path executable) {
    ExternalSolverConfig cfg;
    cfg.executable = std::move(executable);
    cfg.validate();
    return cfg;
}

sat::SolveOutcome parse_solver_output(std::string_view output, const CnfFormula& f) {
    std::optional<sat::SolveStatus> status;
    std::vector<int> values;

    std::istringstream in{std::string(output)};
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.rfind("s ", 0) == 0) {
            const auto word = line.substr(2);
            if (word == "SATISFIABLE")
                status = sat::SolveStatus::Sat;
            else if (word == "UNSATISFIABLE")
                status = sat::SolveStatus::Unsat;
            else if (word == "UNKNOWN")
                status = sat::SolveStatus::Budget;
            else
                throw ExternalSolverError("unrecognized status line: " + line);
        } else if (line.rfind("v ", 0) == 0 || line == "v") {
            std::istringstream vs(line.substr(1));
            std::string tok;
            while (vs >> tok) {
                char* end = nullptr;
                const long v = std::strtol(tok.c_str(), &end, 10);
                if (*end != '\0') throw ExternalSolverError("malformed value token: " + tok);
                if (v == 0) continue;
                if (std::labs(v) > f.num_vars())
                    throw ExternalSolverError("value for undeclared variable " + tok);
                values.push_back(static_cast<int>(v));
            }
        }
    }
    if (!status) throw ExternalSolverError("solver output has no status line");

    sat::SolveOutcome out;
    out.status = *status;
    if (out.status != sat::SolveStatus::Sat) return out;

    out.model.assign(static_cast<std::size_t>(f.num_vars()), false);
    for (int v : values) out.model[static_cast<std::size_t>(std::abs(v)) - 1] = v > 0;
    if (!f.satisfied_by(out.model))
        throw ExternalSolverError("reported model does not satisfy the formula");
    return out;
}

sat::SolveOutcome solve_external(const ExternalSolverConfig& cfg, const CnfFormula& f,
                                 std::optional<sat::Clock::time_point> deadline) {
    double budget = cfg.time_budget_seconds;
    if (deadline) {
        const double left = std::chrono::duration<double>(*deadline - sat::Clock::now()).count();
        if (left <= 0) return {sat::SolveStatus::Budget, {}};
        budget = budget > 0 ? std::min(budget, left) : left;
    }

    TempFile input("argsat-cnf");
    TempFile output("argsat-out");
    write_text_file(input.path(), to_dimacs(f));

    std::vector<std::string> argv{cfg.executable.string()};
    for (const auto& a : cfg.arguments) {
        std::string arg = a;
        for (auto pos = arg.find("{input}"); pos != std::string::npos; pos = arg.find("{input}"))
            arg.replace(pos, 7, input.path().string());
        argv.push_back(std::move(arg));
    }
    SpawnOptions opts;
    opts.working_directory = cfg.working_directory;
    opts.stdout_path = output.path();

    const ProcessResult r = run_process(argv, opts, budget);
    if (r.timed_out) return {sat::SolveStatus::Budget, {}};

    const std::string text = read_text_file(output.path());
    try {
        return parse_solver_output(text, f);
    } catch (const ExternalSolverError& e) {
        std::string why = e.what();
        if (r.exited)
            why += " (exit code " + std::to_string(r.exit_code) + ")";
        else
            why += " (killed by signal " + std::to_string(r.signal) + ")";
        throw ExternalSolverError(why);
    }
}

ExternalSession::ExternalSession(ExternalSolverConfig cfg, CnfFormula f,
                                 std::optional<sat::Clock::time_point> deadline)
    : cfg_(std::move(cfg)), formula_(std::move(f)), deadline_(deadline) {}

void ExternalSession::add_clause(std::span<const int> lits) {
    for (int l : lits)
        if (l == 0 || std::abs(l) > formula_.num_vars())
            throw std::out_of_range("literal " + std::to_string(l) + " outside declared variables");
    if (lits.empty()) {
        has_empty_clause_ = true;
        return;
    }
    formula_.add_clause(std::vector<int>(lits.begin(), lits.end()));
}

sat::SolveOutcome ExternalSession::solve() {
    if (has_empty_clause_) return {sat::SolveStatus::Unsat, {}};
    return solve_external(cfg_, formula_, deadline_);
}

std::unique_ptr<SatSession> ExternalSession::clone() const {
    return std::make_unique<ExternalSession>(*this);
}

SessionFactory external_sessions(ExternalSolverConfig cfg,
                                 std::optional<sat::Clock::time_point> deadline) {
    cfg.validate();
    return [cfg = std::move(cfg), deadline](const CnfFormula& f) -> std::unique_ptr<SatSession> {
        return std::make_unique<ExternalSession>(cfg, f, deadline);
    };
}

} // namespace argsat
