// SPDX-License-Identifier: MIT
#include "argsat/sat/session.hpp"
#include "argsat/sat/solver.hpp"
#include "test_support.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <set>

using namespace argsat;
using argsat::sat::Solver;
using argsat::sat::SolverOptions;
using argsat::sat::SolveStatus;
using argsat::test::af_of;

namespace {

// n+1 pigeons into n holes; variable p*n + h + 1 means pigeon p sits in hole h.
CnfFormula pigeonhole(int holes) {
    const int pigeons = holes + 1;
    CnfFormula f(pigeons * holes);
    auto var = [&](int p, int h) { return p * holes + h + 1; };
    for (int p = 0; p < pigeons; ++p) {
        std::vector<int> c;
        for (int h = 0; h < holes; ++h) c.push_back(var(p, h));
        f.add_clause(c);
    }
    for (int h = 0; h < holes; ++h)
        for (int p = 0; p < pigeons; ++p)
            for (int q = p + 1; q < pigeons; ++q) f.add_clause({-var(p, h), -var(q, h)});
    return f;
}

CnfFormula random_cnf(Rng& rng, int vars, int clauses, int width) {
    CnfFormula f(vars);
    while (static_cast<int>(f.num_clauses()) < clauses) {
        std::vector<int> c;
        for (int i = 0; i < width; ++i) {
            const int v = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(vars)));
            c.push_back(rng.below(2) ? v : -v);
        }
        f.add_clause(c);
    }
    return f;
}

std::set<Model> enumerate_models(const CnfFormula& f, SolverOptions opts) {
    Solver s(f, opts);
    std::set<Model> out;
    for (;;) {
        const auto r = s.solve();
        REQUIRE(r.status != SolveStatus::Budget);
        if (r.unsat()) return out;
        REQUIRE(f.satisfied_by(r.model));
        out.insert(r.model);
        std::vector<int> block;
        for (int v = 1; v <= f.num_vars(); ++v) block.push_back(r.model[static_cast<std::size_t>(v - 1)] ? -v : v);
        s.add_clause(block);
    }
}

} // namespace

TEST_CASE("trivial sessions", "[solver]") {
    CnfFormula unit(1);
    unit.add_clause({1});
    const auto r = Solver(unit).solve();
    REQUIRE(r.sat());
    CHECK(r.model == Model{true});

    Solver contra(1);
    contra.add_clause({1});
    contra.add_clause({-1});
    CHECK(contra.solve().unsat());
    CHECK_FALSE(contra.okay());

    Solver empty(2);
    empty.add_clause(std::span<const int>{});
    CHECK(empty.solve().unsat());

    Solver none(3);
    const auto any = none.solve();
    REQUIRE(any.sat());
    CHECK(any.model.size() == 3);
}

TEST_CASE("encoded frameworks", "[solver]") {
    CHECK(Solver(encode(af_of(3, "ab bc ca"), EncodingId::C2)).solve().unsat());

    const auto mutual = af_of(2, "ab ba");
    const auto r = Solver(encode(mutual, EncodingId::C2)).solve();
    REQUIRE(r.sat());
    const auto lab = model_to_labelling(VarLayout{2}, r.model);
    CHECK((lab == Labelling{Label::In, Label::Out} || lab == Labelling{Label::Out, Label::In}));

    const auto free4 = af_of(4, "");
    const auto all = Solver(encode(free4, EncodingId::C2)).solve();
    REQUIRE(all.sat());
    CHECK(in_arguments(VarLayout{4}, all.model).size() == 4);
}

TEST_CASE("pigeonhole formulas are refuted", "[solver]") {
    for (int holes = 2; holes <= 7; ++holes) {
        INFO("holes " << holes);
        CHECK(Solver(pigeonhole(holes)).solve().unsat());
        SolverOptions dpll;
        dpll.learning = false;
        if (holes <= 5) CHECK(Solver(pigeonhole(holes), dpll).solve().unsat());
    }
}

TEST_CASE("clause addition validates literals", "[solver]") {
    Solver s(2);
    CHECK_THROWS_AS(s.add_clause({3}), std::out_of_range);
    CHECK_THROWS_AS(s.add_clause({0}), std::out_of_range);
    CHECK_THROWS_AS(s.add_clause({-3, 1}), std::out_of_range);
}

TEST_CASE("blocking a model yields a new one or unsat", "[solver]") {
    CnfFormula f(2);
    f.add_clause({1, 2});
    Solver s(f);
    std::set<Model> seen;
    for (int i = 0; i < 4; ++i) {
        const auto r = s.solve();
        if (r.unsat()) break;
        CHECK(seen.insert(r.model).second);
        s.add_clause({r.model[0] ? -1 : 1, r.model[1] ? -2 : 2});
    }
    CHECK(seen.size() == 3);
    CHECK(s.solve().unsat());
}

TEST_CASE("unit clauses constrain later models", "[solver]") {
    const auto af = af_of(3, "ab ba bc cb");
    Solver s(encode(af, EncodingId::C1));
    s.add_clause({VarLayout::in_var(2)});
    for (int i = 0; i < 3; ++i) {
        const auto r = s.solve();
        REQUIRE(r.sat());
        CHECK(r.model[static_cast<std::size_t>(VarLayout::in_var(2) - 1)]);
        s.add_clause({-VarLayout::in_var(0), -VarLayout::in_var(1)});
    }
}

TEST_CASE("copies are independent sessions", "[solver]") {
    CnfFormula f(3);
    f.add_clause({1, 2, 3});
    Solver base(f);
    REQUIRE(base.solve().sat());
    Solver copy = base;
    copy.add_clause({-1});
    copy.add_clause({-2});
    copy.add_clause({-3});
    CHECK(copy.solve().unsat());
    CHECK(base.solve().sat());

    BuiltinSession session(f, {});
    auto clone = session.clone();
    clone->add_clause({-1});
    clone->add_clause({-2});
    clone->add_clause({-3});
    CHECK(clone->solve().unsat());
    CHECK(session.solve().sat());
}

TEST_CASE("conflict budget yields a distinct outcome", "[solver]") {
    SolverOptions opts;
    opts.conflict_limit = 5;
    Solver s(pigeonhole(8), opts);
    CHECK(s.solve().status == SolveStatus::Budget);
    CHECK(s.okay());
    s.set_conflict_limit(-1);
    CHECK(s.solve().unsat());

    SolverOptions late;
    late.deadline = sat::Clock::now() - std::chrono::seconds(1);
    Solver t(pigeonhole(9), late);
    CHECK(t.solve().status == SolveStatus::Budget);
}

TEST_CASE("agrees with truth tables on small random formulas", "[solver][property]") {
    Rng rng(2024);
    for (int round = 0; round < 400; ++round) {
        const int vars = 1 + static_cast<int>(rng.below(12));
        const int clauses = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(5 * vars)));
        const int width = 1 + static_cast<int>(rng.below(3));
        const auto f = random_cnf(rng, vars, clauses, width);
        const auto truth = test::all_models(f);
        for (bool learning : {true, false}) {
            SolverOptions o;
            o.learning = learning;
            o.seed = rng.below(3);
            const auto r = Solver(f, o).solve();
            REQUIRE(r.status != SolveStatus::Budget);
            CHECK(r.sat() == !truth.empty());
            if (r.sat()) CHECK(f.satisfied_by(r.model));
        }
    }
}

TEST_CASE("learning does not change the model set", "[solver][property]") {
    Rng rng(77);
    for (int round = 0; round < 60; ++round) {
        const int vars = 4 + static_cast<int>(rng.below(7));
        const auto f = random_cnf(rng, vars, 2 * vars, 3);
        SolverOptions learn;
        SolverOptions plain;
        plain.learning = false;
        const auto a = enumerate_models(f, learn);
        const auto b = enumerate_models(f, plain);
        CHECK(a == b);
        const auto truth = test::all_models(f);
        CHECK(a == std::set<Model>(truth.begin(), truth.end()));
    }
}

TEST_CASE("seeds change the search but not the answer", "[solver]") {
    Rng rng(5);
    for (int round = 0; round < 30; ++round) {
        const auto f = random_cnf(rng, 60, 250, 3);
        std::optional<bool> verdict;
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            SolverOptions o;
            o.seed = seed;
            const auto r = Solver(f, o).solve();
            if (!verdict) verdict = r.sat();
            CHECK(r.sat() == *verdict);
            if (r.sat()) CHECK(f.satisfied_by(r.model));
        }
    }
}

TEST_CASE("seed zero is deterministic", "[solver]") {
    Rng rng(9);
    const auto f = random_cnf(rng, 80, 300, 3);
    const auto a = Solver(f).solve();
    const auto b = Solver(f).solve();
    CHECK(a.status == b.status);
    CHECK(a.model == b.model);
}
