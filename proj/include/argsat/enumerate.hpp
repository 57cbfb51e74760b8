// SPDX-License-Identifier: MIT
#pragma once

#include "argsat/af.hpp"
#include "argsat/cnf.hpp"
#include "argsat/sat/session.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace argsat {

struct EnumerationStats {
    std::uint64_t sat_calls = 0;
    std::uint64_t outer_iterations = 0;
    std::uint64_t inner_iterations = 0;
    double seconds = 0.0;
};

struct EnumerationOptions {
    /// Keep every in-set found, grouped per outer iteration.
    bool record_chains = false;
};

struct EnumerationResult {
    /// Sorted by size descending, then by member names.
    std::vector<Extension> extensions;
    EnumerationStats stats;
    /// False when the solver ran out of budget; `extensions` then holds only
    /// what was established before that.
    bool complete = true;
    /// With record_chains: the successive in-sets of each inner search.
    std::vector<std::vector<Extension>> chains;
};

class BudgetExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// All preferred extensions by depth-first search over complete extensions.
///
/// Each outer round copies the base session and grows a non-empty complete
/// extension until no strict superset exists; the result is recorded and
/// the base session gets a clause forcing any later candidate to contain
/// an argument outside it. If no non-empty complete extension exists the
/// answer is the single empty extension.
EnumerationResult enumerate_preferred(const ArgumentationFramework& af, EncodingId enc,
                                      const SessionFactory& factory,
                                      const EnumerationOptions& opts = {});

/// All complete extensions (including the empty one, when complete), by
/// blocking each found in-set.
EnumerationResult enumerate_complete(const ArgumentationFramework& af, EncodingId enc,
                                     const SessionFactory& factory);

/// Some complete (hence some preferred) extension contains `a`.
/// Throws BudgetExhausted if the solver gives up.
bool credulous_accept(const ArgumentationFramework& af, EncodingId enc, ArgIndex a,
                      const SessionFactory& factory);

/// Every preferred extension contains `a`. Throws BudgetExhausted if the
/// enumeration is incomplete.
bool skeptical_accept(const ArgumentationFramework& af, EncodingId enc, ArgIndex a,
                      const SessionFactory& factory);

/// Reporting order: larger first, ties broken by the sorted member names.
void sort_for_output(const ArgumentationFramework& af, std::vector<Extension>& exts);

/// Member names of `e`, sorted.
std::vector<std::string> member_names(const ArgumentationFramework& af, const Extension& e);

} // namespace argsat
