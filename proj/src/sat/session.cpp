// SPDX-License-Identifier: MIT
#include "argsat/sat/session.hpp"

namespace argsat {

SessionFactory builtin_sessions(sat::SolverOptions opts) {
    return [opts](const CnfFormula& f) -> std::unique_ptr<SatSession> {
        return std::make_unique<BuiltinSession>(f, opts);
    };
}

} // namespace argsat
