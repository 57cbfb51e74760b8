// SPDX-License-Identifier: MIT
#include "argsat/enumerate.hpp"
#include "argsat/oracle.hpp"
#include "test_support.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace argsat;
using argsat::test::af_of;
using argsat::test::sorted;

namespace {

SessionFactory seeded(std::uint64_t seed) {
    sat::SolverOptions o;
    o.seed = seed;
    return builtin_sessions(o);
}

} // namespace

TEST_CASE("mutual attack", "[enumerate]") {
    const auto af = af_of(2, "ab ba");
    for (auto e : kAllEncodings) {
        const auto r = enumerate_preferred(af, e, builtin_sessions());
        CHECK(r.complete);
        CHECK(r.extensions == std::vector<Extension>{{0}, {1}});
        CHECK(r.stats.outer_iterations == 3);
    }
}

TEST_CASE("self-attacker takes the first-unsat branch", "[enumerate]") {
    const auto r = enumerate_preferred(af_of(1, "aa"), EncodingId::C2, builtin_sessions());
    CHECK(r.extensions == std::vector<Extension>{{}});
    CHECK(r.stats.sat_calls == 1);
    CHECK(r.stats.outer_iterations == 1);
}

TEST_CASE("no attacks: inner loop stops on full coverage", "[enumerate]") {
    EnumerationOptions opts;
    opts.record_chains = true;
    const auto r = enumerate_preferred(af_of(3, ""), EncodingId::C2, builtin_sessions(), opts);
    CHECK(r.extensions == std::vector<Extension>{{0, 1, 2}});
    CHECK(r.stats.sat_calls == 1);
    REQUIRE(r.chains.size() == 1);
    CHECK(r.chains[0] == std::vector<Extension>{{0, 1, 2}});
}

TEST_CASE("3-cycle with an extra target", "[enumerate]") {
    const auto af = af_of(4, "ab bc ca ad");
    for (auto e : kAllEncodings)
        CHECK(enumerate_preferred(af, e, builtin_sessions()).extensions == std::vector<Extension>{{}});
}

TEST_CASE("output order is size descending then by names", "[enumerate]") {
    // c is unattacked; a and b fight, d and e fight.
    const auto af = af_of(5, "ab ba de ed");
    const auto r = enumerate_preferred(af, EncodingId::C2, builtin_sessions());
    REQUIRE(r.extensions.size() == 4);
    CHECK(member_names(af, r.extensions[0]) == std::vector<std::string>{"a", "c", "d"});
    CHECK(member_names(af, r.extensions[3]) == std::vector<std::string>{"b", "c", "e"});

    std::vector<Extension> v{{0}, {0, 1}, {2}, {}};
    sort_for_output(af, v);
    CHECK(v == std::vector<Extension>{{0, 1}, {0}, {2}, {}});
}

TEST_CASE("complete enumeration", "[enumerate]") {
    CHECK(sorted(enumerate_complete(af_of(2, "ab ba"), EncodingId::C2, builtin_sessions()).extensions) ==
          std::vector<Extension>{{}, {0}, {1}});
    CHECK(enumerate_complete(af_of(1, "aa"), EncodingId::C1, builtin_sessions()).extensions ==
          std::vector<Extension>{{}});
    CHECK(enumerate_complete(af_of(3, ""), EncodingId::C3, builtin_sessions()).extensions ==
          std::vector<Extension>{{0, 1, 2}});
}

TEST_CASE("acceptance queries", "[enumerate]") {
    const auto mutual = af_of(2, "ab ba");
    const auto self = af_of(1, "aa");
    const auto lone = af_of(1, "");
    for (auto e : kAllEncodings) {
        CHECK(credulous_accept(mutual, e, 0, builtin_sessions()));
        CHECK_FALSE(credulous_accept(self, e, 0, builtin_sessions()));
        CHECK(credulous_accept(lone, e, 0, builtin_sessions()));
        CHECK_FALSE(skeptical_accept(mutual, e, 0, builtin_sessions()));
        CHECK(skeptical_accept(lone, e, 0, builtin_sessions()));
        CHECK_FALSE(skeptical_accept(self, e, 0, builtin_sessions()));
    }
    CHECK_THROWS_AS(credulous_accept(lone, EncodingId::C2, 4, builtin_sessions()), std::out_of_range);
}

TEST_CASE("budget exhaustion is reported as incomplete", "[enumerate]") {
    sat::SolverOptions o;
    o.deadline = sat::Clock::now() - std::chrono::seconds(1);
    // Needs real search: many mutually attacking pairs.
    const auto af = gen_probability(60, 0.1, 3);
    const auto r = enumerate_preferred(af, EncodingId::C2, builtin_sessions(o));
    CHECK_FALSE(r.complete);
    CHECK_THROWS_AS(skeptical_accept(af, EncodingId::C2, 0, builtin_sessions(o)), BudgetExhausted);
    CHECK_THROWS_AS(credulous_accept(af, EncodingId::C2, 0, builtin_sessions(o)), BudgetExhausted);
}

TEST_CASE("matches the oracle on a random battery", "[enumerate][property]") {
    for (const auto& af : test::random_battery(120, 10, 4242)) {
        const auto pref = oracle_preferred(af);
        const auto comp = oracle_complete(af);
        for (auto e : kAllEncodings) {
            INFO(to_apx(af) << to_string(e));
            CHECK(sorted(enumerate_preferred(af, e, builtin_sessions()).extensions) == pref);
            CHECK(sorted(enumerate_complete(af, e, builtin_sessions()).extensions) == comp);
        }
    }
}

TEST_CASE("results do not depend on the model order", "[enumerate][property]") {
    for (const auto& af : test::random_battery(60, 12, 8)) {
        const auto base = enumerate_preferred(af, EncodingId::C2, seeded(0)).extensions;
        for (std::uint64_t seed = 1; seed <= 5; ++seed)
            CHECK(enumerate_preferred(af, EncodingId::C2, seeded(seed)).extensions == base);
    }
}

TEST_CASE("inner loops climb strict chains; results form an antichain", "[enumerate][property]") {
    EnumerationOptions opts;
    opts.record_chains = true;
    for (const auto& af : test::random_battery(80, 12, 17)) {
        for (std::uint64_t seed : {0, 3}) {
            const auto r = enumerate_preferred(af, EncodingId::C1, seeded(seed), opts);
            for (const auto& chain : r.chains) {
                CHECK(chain.size() <= af.size());
                for (std::size_t i = 1; i < chain.size(); ++i) {
                    CHECK(chain[i - 1].is_subset_of(chain[i]));
                    CHECK(chain[i - 1] != chain[i]);
                }
            }
            for (const auto& a : r.extensions)
                for (const auto& b : r.extensions)
                    if (a != b) CHECK_FALSE(a.is_subset_of(b));
            const bool empty_only = r.extensions == std::vector<Extension>{{}};
            const auto comp = oracle_complete(af);
            const bool nonempty_complete = std::any_of(comp.begin(), comp.end(),
                                                       [](const Extension& e) { return !e.empty(); });
            CHECK(empty_only == !nonempty_complete);
        }
    }
}
