// SPDX-License-Identifier: MIT
#include "argsat/sat/solver.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace argsat::sat {

namespace {
constexpr double kVarDecay = 0.95;
constexpr double kClauseDecay = 0.999;
constexpr std::int64_t kFirstRestart = 100;
constexpr double kRestartGrowth = 1.5;
constexpr double kLearntGrowth = 1.1;
} // namespace

std::string_view to_string(SolveStatus s) noexcept {
    switch (s) {
    case SolveStatus::Sat: return "SAT";
    case SolveStatus::Unsat: return "UNSAT";
    case SolveStatus::Budget: return "BUDGET";
    }
    return "?";
}

Solver::Solver(int num_vars, SolverOptions opts)
    : num_vars_(num_vars), opts_(opts), rng_(opts.seed) {
    if (num_vars < 0) throw std::invalid_argument("negative variable count");
    const auto n = static_cast<std::size_t>(num_vars);
    watches_.resize(2 * n);
    assign_.assign(n, kUndef);
    level_.assign(n, 0);
    reason_.assign(n, kNoReason);
    phase_.assign(n, 0);
    activity_.assign(n, 0.0);
    seen_.assign(n, 0);
    heap_pos_.assign(n, -1);
    if (opts_.seed != 0) {
        std::uniform_real_distribution<double> jitter(0.0, 1e-5);
        for (std::size_t v = 0; v < n; ++v) {
            activity_[v] = jitter(rng_);
            phase_[v] = static_cast<char>(rng_() & 1U);
        }
    }
    for (std::uint32_t v = 0; v < n; ++v) heap_insert(v);
}

Solver::Solver(const CnfFormula& f, SolverOptions opts) : Solver(f.num_vars(), opts) {
    for (const auto& c : f.clauses()) {
        add_clause(c);
        if (!ok_) break;
    }
}

float Solver::clause_activity(CRef c) const noexcept {
    return std::bit_cast<float>(arena_[c + 2]);
}

void Solver::set_clause_activity(CRef c, float a) noexcept {
    arena_[c + 2] = std::bit_cast<std::uint32_t>(a);
}

Solver::CRef Solver::alloc_clause(std::span<const Lit> ls, bool learnt) {
    const auto c = static_cast<CRef>(arena_.size());
    arena_.push_back(static_cast<std::uint32_t>(ls.size()));
    arena_.push_back(learnt ? kLearnt : 0U);
    arena_.push_back(std::bit_cast<std::uint32_t>(0.0f));
    arena_.insert(arena_.end(), ls.begin(), ls.end());
    return c;
}

void Solver::attach(CRef c) {
    const Lit* l = lits(c);
    watches_[negate(l[0])].push_back({c, l[1]});
    watches_[negate(l[1])].push_back({c, l[0]});
}

bool Solver::locked(CRef c) const noexcept {
    const Lit first = lits(c)[0];
    return reason_[var_of(first)] == c && value(first) == 1;
}

void Solver::add_clause(std::span<const int> dimacs) {
    for (int l : dimacs)
        if (l == 0 || std::abs(l) > num_vars_)
            throw std::out_of_range("literal " + std::to_string(l) + " outside declared variables");
    if (!ok_) return;

    std::vector<Lit> ls;
    ls.reserve(dimacs.size());
    for (int l : dimacs) ls.push_back(make_lit(l));
    std::sort(ls.begin(), ls.end());
    ls.erase(std::unique(ls.begin(), ls.end()), ls.end());

    // Level-0 simplification: drop false literals, skip satisfied or
    // tautological clauses.
    std::size_t j = 0;
    for (std::size_t i = 0; i < ls.size(); ++i) {
        if (i + 1 < ls.size() && ls[i + 1] == negate(ls[i])) return;
        const auto v = value(ls[i]);
        if (v == 1) return;
        if (v == 0) continue;
        ls[j++] = ls[i];
    }
    ls.resize(j);

    if (ls.empty()) {
        ok_ = false;
        return;
    }
    if (ls.size() == 1) {
        enqueue(ls[0], kNoReason);
        if (propagate() != kNoReason) ok_ = false;
        return;
    }
    const CRef c = alloc_clause(ls, false);
    problem_.push_back(c);
    attach(c);
}

void Solver::new_decision_level(bool flipped) {
    trail_lim_.push_back(trail_.size());
    flipped_.push_back(static_cast<char>(flipped));
}

void Solver::enqueue(Lit l, CRef reason) {
    const auto v = var_of(l);
    assign_[v] = is_negative(l) ? 0 : 1;
    level_[v] = decision_level();
    reason_[v] = reason;
    trail_.push_back(l);
}

Solver::CRef Solver::propagate() {
    CRef confl = kNoReason;
    while (qhead_ < trail_.size()) {
        const Lit p = trail_[qhead_++];
        const Lit false_lit = negate(p);
        auto& ws = watches_[p];
        ++stats_.propagations;

        std::size_t i = 0;
        std::size_t j = 0;
        const std::size_t end = ws.size();
        while (i < end) {
            const Lit blocker = ws[i].blocker;
            if (value(blocker) == 1) {
                ws[j++] = ws[i++];
                continue;
            }
            const CRef cr = ws[i].cref;
            Lit* c = lits(cr);
            if (c[0] == false_lit) std::swap(c[0], c[1]);
            ++i;

            const Lit first = c[0];
            const Watcher w{cr, first};
            if (first != blocker && value(first) == 1) {
                ws[j++] = w;
                continue;
            }

            const std::uint32_t size = clause_size(cr);
            bool moved = false;
            for (std::uint32_t k = 2; k < size; ++k) {
                if (value(c[k]) != 0) {
                    c[1] = c[k];
                    c[k] = false_lit;
                    watches_[negate(c[1])].push_back(w);
                    moved = true;
                    break;
                }
            }
            if (moved) continue;

            ws[j++] = w;
            if (value(first) == 0) {
                confl = cr;
                qhead_ = trail_.size();
                while (i < end) ws[j++] = ws[i++];
            } else {
                enqueue(first, cr);
            }
        }
        ws.resize(j);
        if (confl != kNoReason) break;
    }
    return confl;
}

void Solver::analyze(CRef confl, std::vector<Lit>& learnt, int& backtrack_level) {
    learnt.clear();
    learnt.push_back(kNoLit);
    int path = 0;
    Lit p = kNoLit;
    auto index = static_cast<std::ptrdiff_t>(trail_.size()) - 1;

    do {
        if (is_learnt(confl)) bump_clause(confl);
        const Lit* c = lits(confl);
        const std::uint32_t size = clause_size(confl);
        for (std::uint32_t k = (p == kNoLit ? 0U : 1U); k < size; ++k) {
            const Lit q = c[k];
            const auto v = var_of(q);
            if (seen_[v] || level_[v] == 0) continue;
            bump_var(v);
            seen_[v] = 1;
            if (level_[v] >= decision_level())
                ++path;
            else
                learnt.push_back(q);
        }
        while (!seen_[var_of(trail_[static_cast<std::size_t>(index)])]) --index;
        p = trail_[static_cast<std::size_t>(index)];
        --index;
        confl = reason_[var_of(p)];
        seen_[var_of(p)] = 0;
        --path;
    } while (path > 0);
    learnt[0] = negate(p);

    // Drop literals implied by the rest of the clause through their reason.
    analyze_stack_.assign(learnt.begin(), learnt.end());
    std::size_t j = 1;
    for (std::size_t i = 1; i < learnt.size(); ++i) {
        const CRef r = reason_[var_of(learnt[i])];
        bool keep = r == kNoReason;
        if (!keep) {
            const Lit* c = lits(r);
            for (std::uint32_t k = 1; k < clause_size(r); ++k) {
                const auto v = var_of(c[k]);
                if (!seen_[v] && level_[v] > 0) {
                    keep = true;
                    break;
                }
            }
        }
        if (keep) learnt[j++] = learnt[i];
    }
    learnt.resize(j);
    for (Lit l : analyze_stack_) seen_[var_of(l)] = 0;

    backtrack_level = 0;
    if (learnt.size() > 1) {
        std::size_t max_i = 1;
        for (std::size_t i = 2; i < learnt.size(); ++i)
            if (level_[var_of(learnt[i])] > level_[var_of(learnt[max_i])]) max_i = i;
        std::swap(learnt[1], learnt[max_i]);
        backtrack_level = level_[var_of(learnt[1])];
    }
}

void Solver::cancel_until(int level) {
    if (decision_level() <= level) return;
    const std::size_t stop = trail_lim_[static_cast<std::size_t>(level)];
    for (std::size_t c = trail_.size(); c-- > stop;) {
        const auto v = var_of(trail_[c]);
        phase_[v] = static_cast<char>(assign_[v] == 1);
        assign_[v] = kUndef;
        reason_[v] = kNoReason;
        if (heap_pos_[v] < 0) heap_insert(v);
    }
    trail_.resize(stop);
    qhead_ = stop;
    trail_lim_.resize(static_cast<std::size_t>(level));
    flipped_.resize(static_cast<std::size_t>(level));
}

Solver::Lit Solver::pick_branch() {
    while (!heap_.empty()) {
        const auto v = heap_pop();
        if (assign_[v] == kUndef) return 2 * v + (phase_[v] ? 0U : 1U);
    }
    return kNoLit;
}

bool Solver::budget_exhausted() {
    if (opts_.conflict_limit >= 0 && solve_conflicts_ >= opts_.conflict_limit) return true;
    return opts_.deadline && Clock::now() >= *opts_.deadline;
}

SolveStatus Solver::search() {
    std::vector<Lit> learnt;
    std::int64_t restart_limit = kFirstRestart;
    std::int64_t since_restart = 0;
    std::uint64_t steps = 0;

    for (;;) {
        const CRef confl = propagate();
        if (confl != kNoReason) {
            ++stats_.conflicts;
            ++solve_conflicts_;
            ++since_restart;
            if (decision_level() == 0) return SolveStatus::Unsat;

            if (opts_.learning) {
                int bt = 0;
                analyze(confl, learnt, bt);
                cancel_until(bt);
                if (learnt.size() == 1) {
                    enqueue(learnt[0], kNoReason);
                } else {
                    const CRef c = alloc_clause(learnt, true);
                    learnts_.push_back(c);
                    attach(c);
                    bump_clause(c);
                    enqueue(learnt[0], c);
                }
                ++stats_.learned;
                var_inc_ /= kVarDecay;
                clause_inc_ /= kClauseDecay;
            } else {
                // Flip the deepest decision whose other branch is unexplored.
                int lvl = decision_level();
                while (lvl > 0 && flipped_[static_cast<std::size_t>(lvl - 1)]) --lvl;
                if (lvl == 0) return SolveStatus::Unsat;
                const Lit d = trail_[trail_lim_[static_cast<std::size_t>(lvl - 1)]];
                cancel_until(lvl - 1);
                new_decision_level(true);
                enqueue(negate(d), kNoReason);
            }
            if (opts_.conflict_limit >= 0 && solve_conflicts_ >= opts_.conflict_limit)
                return SolveStatus::Budget;
            if ((solve_conflicts_ & 127) == 0 && budget_exhausted()) return SolveStatus::Budget;
            continue;
        }

        if ((++steps & 4095) == 0 && budget_exhausted()) return SolveStatus::Budget;

        if (opts_.learning && since_restart >= restart_limit) {
            cancel_until(0);
            since_restart = 0;
            restart_limit = static_cast<std::int64_t>(static_cast<double>(restart_limit) * kRestartGrowth);
            max_learnts_ *= kLearntGrowth;
            ++stats_.restarts;
            continue;
        }
        if (opts_.learning &&
            static_cast<double>(learnts_.size()) - static_cast<double>(trail_.size()) >= max_learnts_)
            reduce_db();

        const Lit next = pick_branch();
        if (next == kNoLit) return SolveStatus::Sat;
        ++stats_.decisions;
        new_decision_level(false);
        enqueue(next, kNoReason);
    }
}

SolveOutcome Solver::solve() {
    ++stats_.solves;
    SolveOutcome out;
    if (!ok_) {
        out.status = SolveStatus::Unsat;
        return out;
    }
    solve_conflicts_ = 0;
    if (opts_.deadline && Clock::now() >= *opts_.deadline) {
        out.status = SolveStatus::Budget;
        return out;
    }
    max_learnts_ = std::max(2000.0, static_cast<double>(problem_.size()) / 3.0);

    out.status = search();
    if (out.status == SolveStatus::Sat) {
        out.model.resize(static_cast<std::size_t>(num_vars_));
        for (std::size_t v = 0; v < out.model.size(); ++v) out.model[v] = assign_[v] == 1;
    } else if (out.status == SolveStatus::Unsat) {
        ok_ = false;
    }
    cancel_until(0);
    return out;
}

void Solver::bump_var(std::uint32_t v) {
    activity_[v] += var_inc_;
    if (activity_[v] > 1e100) {
        for (auto& a : activity_) a *= 1e-100;
        var_inc_ *= 1e-100;
    }
    if (heap_pos_[v] >= 0) heap_up(static_cast<std::size_t>(heap_pos_[v]));
}

void Solver::bump_clause(CRef c) {
    const float a = clause_activity(c) + static_cast<float>(clause_inc_);
    set_clause_activity(c, a);
    if (a > 1e20f) {
        for (CRef l : learnts_) set_clause_activity(l, clause_activity(l) * 1e-20f);
        clause_inc_ *= 1e-20;
    }
}

void Solver::reduce_db() {
    ++stats_.reductions;
    std::sort(learnts_.begin(), learnts_.end(), [this](CRef a, CRef b) {
        const bool a_bin = clause_size(a) == 2;
        const bool b_bin = clause_size(b) == 2;
        if (a_bin != b_bin) return b_bin;
        return clause_activity(a) < clause_activity(b);
    });
    const std::size_t half = learnts_.size() / 2;
    std::size_t j = 0;
    for (std::size_t i = 0; i < learnts_.size(); ++i) {
        const CRef c = learnts_[i];
        if (i < half && clause_size(c) > 2 && !locked(c)) {
            arena_[c + 1] |= kDeleted;
            wasted_ += kHeader + clause_size(c);
        } else {
            learnts_[j++] = c;
        }
    }
    learnts_.resize(j);
    collect_garbage();
}

void Solver::collect_garbage() {
    std::vector<Lit> fresh;
    fresh.reserve(arena_.size() - wasted_);
    // Live clauses get their new offset stored over their activity word;
    // the flags word marks them as moved.
    constexpr std::uint32_t kMoved = 4;
    auto relocate = [&](CRef c) -> CRef {
        if (arena_[c + 1] & kMoved) return arena_[c + 2];
        const auto to = static_cast<CRef>(fresh.size());
        fresh.insert(fresh.end(), arena_.begin() + c, arena_.begin() + c + kHeader + clause_size(c));
        arena_[c + 1] |= kMoved;
        arena_[c + 2] = to;
        return to;
    };

    for (auto& ws : watches_) {
        std::size_t j = 0;
        for (auto& w : ws) {
            if (arena_[w.cref + 1] & kDeleted) continue;
            ws[j++] = {relocate(w.cref), w.blocker};
        }
        ws.resize(j);
    }
    for (Lit l : trail_) {
        auto& r = reason_[var_of(l)];
        if (r != kNoReason) r = relocate(r);
    }
    for (auto& c : problem_) c = relocate(c);
    for (auto& c : learnts_) c = relocate(c);
    arena_ = std::move(fresh);
    wasted_ = 0;
}

bool Solver::heap_before(std::uint32_t a, std::uint32_t b) const noexcept {
    return activity_[a] > activity_[b] || (activity_[a] == activity_[b] && a < b);
}

void Solver::heap_insert(std::uint32_t v) {
    heap_pos_[v] = static_cast<int>(heap_.size());
    heap_.push_back(v);
    heap_up(heap_.size() - 1);
}

std::uint32_t Solver::heap_pop() {
    const auto top = heap_.front();
    heap_pos_[top] = -1;
    heap_.front() = heap_.back();
    heap_.pop_back();
    if (!heap_.empty()) {
        heap_pos_[heap_.front()] = 0;
        heap_down(0);
    }
    return top;
}

void Solver::heap_up(std::size_t i) {
    const auto v = heap_[i];
    while (i > 0) {
        const std::size_t parent = (i - 1) / 2;
        if (!heap_before(v, heap_[parent])) break;
        heap_[i] = heap_[parent];
        heap_pos_[heap_[i]] = static_cast<int>(i);
        i = parent;
    }
    heap_[i] = v;
    heap_pos_[v] = static_cast<int>(i);
}

void Solver::heap_down(std::size_t i) {
    const auto v = heap_[i];
    for (;;) {
        std::size_t child = 2 * i + 1;
        if (child >= heap_.size()) break;
        if (child + 1 < heap_.size() && heap_before(heap_[child + 1], heap_[child])) ++child;
        if (!heap_before(heap_[child], v)) break;
        heap_[i] = heap_[child];
        heap_pos_[heap_[i]] = static_cast<int>(i);
        i = child;
    }
    heap_[i] = v;
    heap_pos_[v] = static_cast<int>(i);
}

} // namespace argsat::sat
