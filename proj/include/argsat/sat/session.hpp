// SPDX-License-Identifier: MIT
#pragma once

#include "argsat/cnf.hpp"
#include "argsat/sat/solver.hpp"

#include <functional>
#include <memory>
#include <span>

namespace argsat {

/// A monotone clause store that can be asked for a model.
///
/// This is the solver abstraction the enumeration algorithms are written
/// against. Cloning gives an independent session with the same logical
/// content.
class SatSession {
public:
    virtual ~SatSession() = default;

    virtual void add_clause(std::span<const int> lits) = 0;
    virtual sat::SolveOutcome solve() = 0;
    virtual std::unique_ptr<SatSession> clone() const = 0;

    void add_clause(std::initializer_list<int> lits) {
        add_clause(std::span<const int>(lits.begin(), lits.size()));
    }
};

using SessionFactory = std::function<std::unique_ptr<SatSession>(const CnfFormula&)>;

/// Sessions backed by the built-in CDCL solver.
class BuiltinSession final : public SatSession {
public:
    BuiltinSession(const CnfFormula& f, sat::SolverOptions opts) : solver_(f, opts) {}

    void add_clause(std::span<const int> lits) override { solver_.add_clause(lits); }
    sat::SolveOutcome solve() override { return solver_.solve(); }
    std::unique_ptr<SatSession> clone() const override {
        return std::make_unique<BuiltinSession>(*this);
    }

    const sat::Solver& solver() const noexcept { return solver_; }

private:
    sat::Solver solver_;
};

SessionFactory builtin_sessions(sat::SolverOptions opts = {});

} // namespace argsat
