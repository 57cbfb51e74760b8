// SPDX-License-Identifier: MIT
#include "argsat/enumerate.hpp"

#include <algorithm>
#include <chrono>
#include <optional>

namespace argsat {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Clause "some argument outside `s` is in".
std::vector<int> outside_clause(std::size_t k, const Extension& s) {
    std::vector<int> c;
    for (ArgIndex a = 0; a < k; ++a)
        if (!s.contains(a)) c.push_back(VarLayout::in_var(a));
    return c;
}

} // namespace

std::vector<std::string> member_names(const ArgumentationFramework& af, const Extension& e) {
    std::vector<std::string> names;
    names.reserve(e.size());
    for (ArgIndex a : e) names.push_back(af.name(a));
    std::sort(names.begin(), names.end());
    return names;
}

void sort_for_output(const ArgumentationFramework& af, std::vector<Extension>& exts) {
    std::vector<std::pair<std::vector<std::string>, Extension>> keyed;
    keyed.reserve(exts.size());
    for (auto& e : exts) keyed.emplace_back(member_names(af, e), std::move(e));
    std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) {
        if (x.first.size() != y.first.size()) return x.first.size() > y.first.size();
        return x.first < y.first;
    });
    exts.clear();
    for (auto& [names, e] : keyed) exts.push_back(std::move(e));
}

EnumerationResult enumerate_preferred(const ArgumentationFramework& af, EncodingId enc,
                                      const SessionFactory& factory,
                                      const EnumerationOptions& opts) {
    const auto t0 = Clock::now();
    const VarLayout layout{af.size()};
    EnumerationResult result;
    auto& stats = result.stats;

    auto cnf = factory(encode(af, enc));
    for (;;) {
        ++stats.outer_iterations;
        auto cnfdf = cnf->clone();
        std::optional<Extension> prefcand;
        if (opts.record_chains) result.chains.emplace_back();

        for (;;) {
            ++stats.inner_iterations;
            ++stats.sat_calls;
            const auto found = cnfdf->solve();
            if (found.status == sat::SolveStatus::Budget) {
                result.complete = false;
                break;
            }
            if (!found.sat()) break;

            Extension in = in_arguments(layout, found.model);
            if (opts.record_chains) result.chains.back().push_back(in);
            for (ArgIndex a : in) cnfdf->add_clause({VarLayout::in_var(a)});
            const bool covers_all = in.size() == af.size();
            if (!covers_all) cnfdf->add_clause(outside_clause(af.size(), in));
            prefcand = std::move(in);
            if (covers_all) break;
        }
        if (!result.complete || !prefcand) break;

        result.extensions.push_back(*prefcand);
        const auto block = outside_clause(af.size(), *prefcand);
        if (block.empty()) break; // everything is in; no other extension can exist
        cnf->add_clause(block);
    }

    if (result.complete && result.extensions.empty()) result.extensions.emplace_back();
    sort_for_output(af, result.extensions);
    stats.seconds = since(t0);
    return result;
}

EnumerationResult enumerate_complete(const ArgumentationFramework& af, EncodingId enc,
                                     const SessionFactory& factory) {
    const auto t0 = Clock::now();
    const VarLayout layout{af.size()};
    EnumerationResult result;

    std::vector<int> formulas;
    for (int n : encoding_formulas(enc))
        if (n != 9) formulas.push_back(n);
    auto session = factory(encode_formulas(af, formulas));

    for (;;) {
        ++result.stats.sat_calls;
        ++result.stats.inner_iterations;
        const auto found = session->solve();
        if (found.status == sat::SolveStatus::Budget) {
            result.complete = false;
            break;
        }
        if (!found.sat()) break;
        Extension in = in_arguments(layout, found.model);
        // Not exactly this in-set again.
        std::vector<int> block;
        for (ArgIndex a = 0; a < af.size(); ++a)
            block.push_back(in.contains(a) ? -VarLayout::in_var(a) : VarLayout::in_var(a));
        session->add_clause(block);
        result.extensions.push_back(std::move(in));
    }
    result.stats.outer_iterations = 1;
    sort_for_output(af, result.extensions);
    result.stats.seconds = since(t0);
    return result;
}

bool credulous_accept(const ArgumentationFramework& af, EncodingId enc, ArgIndex a,
                      const SessionFactory& factory) {
    (void)af.name(a);
    auto session = factory(encode(af, enc));
    session->add_clause({VarLayout::in_var(a)});
    const auto r = session->solve();
    if (r.status == sat::SolveStatus::Budget)
        throw BudgetExhausted("solver budget exhausted during credulous query");
    return r.sat();
}

bool skeptical_accept(const ArgumentationFramework& af, EncodingId enc, ArgIndex a,
                      const SessionFactory& factory) {
    (void)af.name(a);
    const auto r = enumerate_preferred(af, enc, factory);
    if (!r.complete) throw BudgetExhausted("solver budget exhausted during skeptical query");
    return std::all_of(r.extensions.begin(), r.extensions.end(),
                       [a](const Extension& e) { return e.contains(a); });
}

} // namespace argsat
