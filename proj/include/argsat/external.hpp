// SPDX-License-Identifier: MIT
#pragma once

#include "argsat/cnf.hpp"
#include "argsat/sat/session.hpp"
#include "argsat/sat/solver.hpp"

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace argsat {

class ExternalSolverError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// How to run a DIMACS solver that reports in SAT-competition format.
struct ExternalSolverConfig {
    std::filesystem::path executable;
    /// Command-line arguments; the token `{input}` becomes the DIMACS path.
    std::vector<std::string> arguments{"{input}"};
    std::filesystem::path working_directory;
    /// Per-call wall-clock budget in seconds; 0 disables it.
    double time_budget_seconds = 0.0;

    /// Throws ExternalSolverError unless `executable` is a runnable file.
    void validate() const;

    static ExternalSolverConfig for_executable(std::filesystem::path executable);
};

/// Interprets `s`/`v` output against `f`. Unlisted variables default to
/// false; the resulting model must satisfy `f`. Throws ExternalSolverError
/// on a missing status line, malformed values or a model that fails `f`.
sat::SolveOutcome parse_solver_output(std::string_view output, const CnfFormula& f);

/// One solver run on `f`: write DIMACS, execute, parse, verify.
/// `deadline` further caps the call's budget.
sat::SolveOutcome solve_external(const ExternalSolverConfig& cfg, const CnfFormula& f,
                                 std::optional<sat::Clock::time_point> deadline = std::nullopt);

/// Session that keeps the accumulated formula and re-submits all of it on
/// every solve().
class ExternalSession final : public SatSession {
public:
    ExternalSession(ExternalSolverConfig cfg, CnfFormula f,
                    std::optional<sat::Clock::time_point> deadline = std::nullopt);

    void add_clause(std::span<const int> lits) override;
    sat::SolveOutcome solve() override;
    std::unique_ptr<SatSession> clone() const override;

    const CnfFormula& formula() const noexcept { return formula_; }

private:
    ExternalSolverConfig cfg_;
    CnfFormula formula_;
    std::optional<sat::Clock::time_point> deadline_;
    bool has_empty_clause_ = false;
};

SessionFactory external_sessions(ExternalSolverConfig cfg,
                                 std::optional<sat::Clock::time_point> deadline = std::nullopt);

} // namespace argsat
