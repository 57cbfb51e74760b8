// SPDX-License-Identifier: MIT
#include "argsat/oracle.hpp"
#include "test_support.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace argsat;
using argsat::test::af_of;
using argsat::test::ext;
using T = argsat::ConstraintTerm;

TEST_CASE("oracle complete extensions", "[oracle]") {
    const auto mutual = af_of(2, "ab ba");
    CHECK(oracle_complete(mutual) == std::vector<Extension>{{}, {0}, {1}});
    CHECK(oracle_complete(af_of(3, "")) == std::vector<Extension>{{0, 1, 2}});
    CHECK(oracle_complete(af_of(3, "ab bc ca")) == std::vector<Extension>{{}});
    CHECK_THROWS_AS(oracle_complete(gen_empty(21)), SizeCapExceeded);
}

TEST_CASE("oracle preferred extensions", "[oracle]") {
    CHECK(oracle_preferred(af_of(2, "ab ba")) == std::vector<Extension>{{0}, {1}});
    CHECK(oracle_preferred(af_of(1, "aa")) == std::vector<Extension>{{}});
    for (std::size_t k = 1; k <= 6; ++k) CHECK(oracle_preferred(gen_full(k)) == std::vector<Extension>{{}});
}

TEST_CASE("preferred are the maximal complete extensions", "[oracle][property]") {
    for (std::size_t k = 1; k <= 3; ++k)
        for (const auto& af : all_frameworks(k))
            CHECK(oracle_preferred(af) == maximal_elements(oracle_complete(af)));
    for (const auto& af : test::random_battery(150, 10, 31))
        CHECK(oracle_preferred(af) == maximal_elements(oracle_complete(af)));
}

TEST_CASE("semantics predicates form a chain", "[oracle][property]") {
    for (const auto& af : test::random_battery(80, 8, 12)) {
        const std::uint64_t count = std::uint64_t{1} << af.size();
        for (std::uint64_t m = 0; m < count; ++m) {
            const auto s = Extension::from_mask(m);
            const bool pr = is_preferred(af, s);
            const bool co = is_complete(af, s);
            const bool ad = is_admissible(af, s);
            const bool cf = is_conflict_free(af, s);
            CHECK((!pr || co));
            CHECK((!co || ad));
            CHECK((!ad || cf));
        }
    }
}

TEST_CASE("framework and labelling batteries", "[oracle]") {
    CHECK(all_frameworks(1).size() == 2);
    CHECK(all_frameworks(2).size() == 16);
    CHECK(all_frameworks(3).size() == 512);
    CHECK(all_labellings(3).size() == 27);
    CHECK_THROWS(all_frameworks(5));
}

TEST_CASE("constraint terms", "[oracle]") {
    for (auto t : kAllTerms) CHECK(parse_constraint_term(to_string(t)) == t);
    CHECK_FALSE(parse_constraint_term("in<->"));
    const ConstraintSubset c{T::InTo, T::OutFrom};
    CHECK(c.size() == 2);
    CHECK(c.to_string() == "{in->, out<-}");
    CHECK(c.is_subset_of(ConstraintSubset{T::InTo, T::OutFrom, T::UndecTo}));
    CHECK(ConstraintSubset{}.to_string() == "{}");
}

TEST_CASE("satisfies_terms", "[oracle]") {
    const auto self = af_of(1, "aa");
    const auto any = af_of(3, "ab bc");
    for (const auto& lab : all_labellings(3)) CHECK(satisfies_terms(any, lab, ConstraintSubset{}));

    CHECK(satisfies_terms(self, Labelling{Label::Out},
                          ConstraintSubset{T::UndecTo, T::UndecFrom, T::InTo, T::OutFrom}));
    CHECK_FALSE(is_complete_labelling(self, Labelling{Label::Out}));

    const ConstraintSubset all(0x3F);
    for (const auto& lab : all_labellings(3))
        CHECK(satisfies_terms(any, lab, all) == is_complete_labelling(any, lab));
    CHECK_THROWS(satisfies_terms(any, Labelling{Label::In}, all));
}

TEST_CASE("classification of all 64 subsets", "[oracle]") {
    const auto verdicts = classify_all();
    REQUIRE(verdicts.size() == 64);
    int weak = 0, cnr = 0, red = 0;
    for (const auto& v : verdicts) {
        switch (v.verdict) {
        case Verdict::Weak:
            ++weak;
            REQUIRE(v.witness);
            CHECK(v.witness->af.size() <= 3);
            CHECK_FALSE(v.escalated);
            CHECK(satisfies_terms(v.witness->af, v.witness->labelling, v.subset));
            CHECK_FALSE(is_complete_labelling(v.witness->af, v.witness->labelling));
            break;
        case Verdict::CorrectNonRedundant: ++cnr; break;
        case Verdict::Redundant: ++red; break;
        }
        if (v.subset.size() <= 2) CHECK(v.verdict == Verdict::Weak);
        if (v.subset.size() >= 5) CHECK(v.verdict == Verdict::Redundant);
    }
    CHECK(weak == 46);
    CHECK(cnr == 5);
    CHECK(red == 13);

    CHECK(classify_subset({T::InTo, T::OutTo, T::UndecTo}).verdict == Verdict::CorrectNonRedundant);
    const auto w = classify_subset({T::UndecTo, T::UndecFrom, T::InTo, T::OutFrom});
    CHECK(w.verdict == Verdict::Weak);
    CHECK(w.witness);
}

TEST_CASE("correct subsets match complete labellings exhaustively", "[oracle][property]") {
    for (const auto& v : classify_all()) {
        if (v.verdict == Verdict::Weak) continue;
        for (std::size_t k = 1; k <= 3; ++k) {
            const auto labs = all_labellings(k);
            for (const auto& af : all_frameworks(k))
                for (const auto& lab : labs)
                    if (satisfies_terms(af, lab, v.subset) != is_complete_labelling(af, lab))
                        FAIL(v.subset.to_string() << " disagrees on " << to_apx(af));
        }
    }
}

TEST_CASE("witness search escalates only when needed", "[oracle]") {
    const auto v = classify_subset({T::InTo}, 1);
    CHECK(v.verdict == Verdict::Weak);
    REQUIRE(v.witness);
    CHECK(v.witness->af.size() == 1);
    CHECK_FALSE(v.escalated);
}
