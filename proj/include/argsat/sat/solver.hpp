// SPDX-License-Identifier: MIT
#pragma once

#include "argsat/cnf.hpp"

#include <chrono>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <random>
#include <span>
#include <string_view>
#include <vector>

namespace argsat::sat {

enum class SolveStatus { Sat, Unsat, Budget };

std::string_view to_string(SolveStatus s) noexcept;

struct SolveOutcome {
    SolveStatus status = SolveStatus::Budget;
    /// Total assignment when status is Sat, empty otherwise.
    Model model;

    bool sat() const noexcept { return status == SolveStatus::Sat; }
    bool unsat() const noexcept { return status == SolveStatus::Unsat; }
};

using Clock = std::chrono::steady_clock;

struct SolverOptions {
    /// 0 keeps branching fully deterministic (lowest index wins ties, false
    /// phase first). Any other value perturbs initial activities and phases.
    std::uint64_t seed = 0;
    /// Conflicts allowed per solve() call; negative means unlimited.
    std::int64_t conflict_limit = -1;
    std::optional<Clock::time_point> deadline;
    /// Off switches to chronological backtracking without learned clauses.
    bool learning = true;
};

struct SolverStats {
    std::uint64_t solves = 0;
    std::uint64_t decisions = 0;
    std::uint64_t propagations = 0;
    std::uint64_t conflicts = 0;
    std::uint64_t restarts = 0;
    std::uint64_t learned = 0;
    std::uint64_t reductions = 0;
};

/// Incremental CDCL solver over DIMACS-numbered variables.
///
/// Clauses are only ever added. Copying a solver yields an independent
/// session with the same clause database (learned clauses included).
class Solver {
public:
    explicit Solver(int num_vars, SolverOptions opts = {});
    explicit Solver(const CnfFormula& f, SolverOptions opts = {});

    int num_vars() const noexcept { return num_vars_; }

    /// Throws std::out_of_range for a zero literal or one above num_vars().
    /// An empty clause makes the solver permanently unsatisfiable.
    void add_clause(std::span<const int> lits);
    void add_clause(std::initializer_list<int> lits) {
        add_clause(std::span<const int>(lits.begin(), lits.size()));
    }

    SolveOutcome solve();

    /// False once unsatisfiability has been established.
    bool okay() const noexcept { return ok_; }

    const SolverStats& stats() const noexcept { return stats_; }
    const SolverOptions& options() const noexcept { return opts_; }
    void set_deadline(std::optional<Clock::time_point> deadline) { opts_.deadline = deadline; }
    void set_conflict_limit(std::int64_t limit) { opts_.conflict_limit = limit; }

private:
    using Lit = std::uint32_t;
    using CRef = std::uint32_t;
    static constexpr CRef kNoReason = 0xFFFFFFFFu;
    static constexpr Lit kNoLit = 0xFFFFFFFFu;
    static constexpr std::int8_t kUndef = -1;

    struct Watcher {
        CRef cref;
        Lit blocker;
    };

    static Lit make_lit(int dimacs) noexcept {
        const auto v = static_cast<Lit>((dimacs > 0 ? dimacs : -dimacs) - 1);
        return 2 * v + (dimacs < 0 ? 1U : 0U);
    }
    static Lit negate(Lit l) noexcept { return l ^ 1U; }
    static std::uint32_t var_of(Lit l) noexcept { return l >> 1; }
    static bool is_negative(Lit l) noexcept { return (l & 1U) != 0; }

    // 1 true, 0 false, kUndef unassigned.
    std::int8_t value(Lit l) const noexcept {
        const auto a = assign_[var_of(l)];
        return a == kUndef ? kUndef : static_cast<std::int8_t>(a ^ static_cast<std::int8_t>(l & 1U));
    }

    // Clause arena: [size][flags][activity bits][lits...]
    static constexpr std::uint32_t kLearnt = 1;
    static constexpr std::uint32_t kDeleted = 2;
    static constexpr std::uint32_t kHeader = 3;
    std::uint32_t clause_size(CRef c) const noexcept { return arena_[c]; }
    bool is_learnt(CRef c) const noexcept { return (arena_[c + 1] & kLearnt) != 0; }
    Lit* lits(CRef c) noexcept { return &arena_[c + kHeader]; }
    const Lit* lits(CRef c) const noexcept { return &arena_[c + kHeader]; }
    float clause_activity(CRef c) const noexcept;
    void set_clause_activity(CRef c, float a) noexcept;

    CRef alloc_clause(std::span<const Lit> lits, bool learnt);
    void attach(CRef c);
    bool locked(CRef c) const noexcept;

    int decision_level() const noexcept { return static_cast<int>(trail_lim_.size()); }
    void new_decision_level(bool flipped);
    void enqueue(Lit l, CRef reason);
    CRef propagate();
    void analyze(CRef confl, std::vector<Lit>& learnt, int& backtrack_level);
    void cancel_until(int level);
    Lit pick_branch();
    SolveStatus search();
    bool budget_exhausted();

    void bump_var(std::uint32_t v);
    void bump_clause(CRef c);
    void reduce_db();
    void collect_garbage();

    // Binary max-heap over activity; ties go to the lower variable index.
    bool heap_before(std::uint32_t a, std::uint32_t b) const noexcept;
    void heap_insert(std::uint32_t v);
    std::uint32_t heap_pop();
    void heap_up(std::size_t i);
    void heap_down(std::size_t i);

    int num_vars_;
    SolverOptions opts_;
    bool ok_ = true;

    std::vector<Lit> arena_;
    std::size_t wasted_ = 0;
    std::vector<CRef> problem_;
    std::vector<CRef> learnts_;
    std::vector<std::vector<Watcher>> watches_;

    std::vector<std::int8_t> assign_;
    std::vector<int> level_;
    std::vector<CRef> reason_;
    std::vector<char> phase_;
    std::vector<Lit> trail_;
    std::vector<std::size_t> trail_lim_;
    std::vector<char> flipped_;
    std::size_t qhead_ = 0;

    std::vector<double> activity_;
    double var_inc_ = 1.0;
    double clause_inc_ = 1.0;
    std::vector<std::uint32_t> heap_;
    std::vector<int> heap_pos_;

    std::vector<char> seen_;
    std::vector<Lit> analyze_stack_;

    double max_learnts_ = 0;
    std::int64_t solve_conflicts_ = 0;
    std::mt19937_64 rng_;
    SolverStats stats_;
};

} // namespace argsat::sat
