// SPDX-License-Identifier: MIT
#include "argsat/enumerate.hpp"
#include "argsat/external.hpp"
#include "argsat/oracle.hpp"
#include "argsat/process.hpp"
#include "test_support.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <chrono>

using namespace argsat;
using argsat::sat::SolveStatus;
using argsat::test::af_of;

namespace {

const std::filesystem::path kTools = ARGSAT_TEST_TOOLS_DIR;

ExternalSolverConfig tool(const char* name) {
    return ExternalSolverConfig::for_executable(kTools / name);
}

CnfFormula sat_formula() {
    CnfFormula f(3);
    f.add_clause({1, 2});
    f.add_clause({-1});
    f.add_clause({3, -2});
    return f;
}

CnfFormula unsat_formula() {
    CnfFormula f(1);
    f.add_clause({1});
    f.add_clause({-1});
    return f;
}

std::optional<ExternalSolverConfig> real_solver() {
    const std::string path = ARGSAT_EXTERNAL_SOLVER;
    if (path.empty()) return std::nullopt;
    return ExternalSolverConfig::for_executable(path);
}

} // namespace

TEST_CASE("solver output parsing", "[external]") {
    const auto f = sat_formula();
    const auto r = parse_solver_output("c hello\ns SATISFIABLE\nv -1 2\nv 3 0\n", f);
    REQUIRE(r.sat());
    CHECK(r.model == Model{false, true, true});

    CHECK(parse_solver_output("s UNSATISFIABLE\n", f).unsat());
    CHECK(parse_solver_output("s UNKNOWN\n", f).status == SolveStatus::Budget);

    // Missing variables default to false, then the model is checked.
    const auto partial = parse_solver_output("s SATISFIABLE\nv 2 3 0\n", f);
    CHECK(partial.model == Model{false, true, true});
    CHECK_THROWS_AS(parse_solver_output("s SATISFIABLE\nv 2 0\n", f), ExternalSolverError);

    CHECK_THROWS_AS(parse_solver_output("garbage\n", f), ExternalSolverError);
    CHECK_THROWS_AS(parse_solver_output("s MAYBE\n", f), ExternalSolverError);
    CHECK_THROWS_AS(parse_solver_output("s SATISFIABLE\nv 9 0\n", f), ExternalSolverError);
    CHECK_THROWS_AS(parse_solver_output("s SATISFIABLE\nv 2x 0\n", f), ExternalSolverError);
}

TEST_CASE("configuration is validated", "[external]") {
    CHECK_THROWS_AS(ExternalSolverConfig::for_executable("/nonexistent/solver"), ExternalSolverError);
    CHECK_THROWS_AS(ExternalSolverConfig::for_executable(kTools), ExternalSolverError);
    CHECK_NOTHROW(tool("brute_solver.py"));
}

TEST_CASE("fake solvers", "[external]") {
    const auto f = sat_formula();
    SECTION("partial value lines are completed and verified") {
        const auto r = solve_external(tool("brute_solver.py"), f);
        REQUIRE(r.sat());
        CHECK(f.satisfied_by(r.model));
        CHECK(solve_external(tool("brute_solver.py"), unsat_formula()).unsat());
    }
    SECTION("garbage is a protocol error") {
        CHECK_THROWS_AS(solve_external(tool("garbage_solver.sh"), f), ExternalSolverError);
    }
    SECTION("a crash without status reports the exit code") {
        try {
            solve_external(tool("crash_solver.sh"), f);
            FAIL("expected an error");
        } catch (const ExternalSolverError& e) {
            CHECK(std::string(e.what()).find("exit code 139") != std::string::npos);
        }
    }
    SECTION("an unverifiable model is rejected") {
        CHECK_THROWS_AS(solve_external(tool("lying_solver.sh"), f), ExternalSolverError);
    }
    SECTION("unknown maps to the budget outcome") {
        CHECK(solve_external(tool("unknown_solver.sh"), f).status == SolveStatus::Budget);
    }
    SECTION("a hung solver is killed at the budget") {
        auto cfg = tool("sleepy_solver.sh");
        cfg.time_budget_seconds = 0.3;
        const auto t0 = std::chrono::steady_clock::now();
        CHECK(solve_external(cfg, f).status == SolveStatus::Budget);
        CHECK(std::chrono::steady_clock::now() - t0 < std::chrono::seconds(5));
    }
    SECTION("an expired deadline skips the call") {
        CHECK(solve_external(tool("sleepy_solver.sh"), f, sat::Clock::now()).status == SolveStatus::Budget);
    }
}

TEST_CASE("temporary files are removed", "[external]") {
    std::filesystem::path seen;
    {
        TempFile t("argsat-test");
        seen = t.path();
        CHECK(std::filesystem::exists(seen));
    }
    CHECK_FALSE(std::filesystem::exists(seen));
}

TEST_CASE("external sessions", "[external]") {
    ExternalSession s(tool("brute_solver.py"), sat_formula());
    auto copy = s.clone();
    const std::vector<int> not3{-3}, seven{7};
    copy->add_clause(not3);
    CHECK(copy->solve().unsat());
    CHECK(s.solve().sat());
    s.add_clause(std::span<const int>{});
    CHECK(s.solve().unsat());
    CHECK_THROWS_AS(s.add_clause(seven), std::out_of_range);
}

TEST_CASE("enumeration through the bridge", "[external]") {
    const auto factory = external_sessions(tool("brute_solver.py"));
    const auto af = af_of(3, "ab ba bc");
    CHECK(test::sorted(enumerate_preferred(af, EncodingId::C2, factory).extensions) == oracle_preferred(af));
}

TEST_CASE("agreement with a real solver", "[external]") {
    const auto cfg = real_solver();
    if (!cfg) SKIP("no external solver configured");
    const auto factory = external_sessions(*cfg);
    for (const auto& af : test::random_battery(25, 8, 606)) {
        for (auto e : {EncodingId::C1, EncodingId::C2, EncodingId::C3}) {
            const auto f = encode(af, e);
            const auto ext = solve_external(*cfg, f);
            const auto own = sat::Solver(f).solve();
            CHECK(ext.status == own.status);
            if (ext.sat()) CHECK(f.satisfied_by(ext.model));
        }
        CHECK(test::sorted(enumerate_preferred(af, EncodingId::C2, factory).extensions) == oracle_preferred(af));
    }
}

TEST_CASE("child processes", "[external]") {
    const auto r = run_process({"sh", "-c", "exit 7"}, {});
    CHECK(r.exited);
    CHECK(r.exit_code == 7);
    CHECK_FALSE(r.timed_out);

    const auto killed = run_process({"sh", "-c", "kill -9 $$"}, {});
    CHECK_FALSE(killed.exited);
    CHECK(killed.signal == 9);

    // The grandchild shares the group and dies with it.
    const auto t0 = std::chrono::steady_clock::now();
    const auto slow = run_process({"sh", "-c", "sleep 20 & wait"}, {}, 0.2);
    CHECK(slow.timed_out);
    CHECK(std::chrono::steady_clock::now() - t0 < std::chrono::seconds(5));

    const auto missing = run_process({"/definitely/not/here"}, {});
    CHECK((missing.exited && missing.exit_code != 0));
}
