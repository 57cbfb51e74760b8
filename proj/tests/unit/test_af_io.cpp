// SPDX-License-Identifier: MIT
#include "test_support.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace argsat;

TEST_CASE("apx parsing", "[io]") {
    const auto af = parse_apx("arg(a).\narg(b).\natt(a,b).");
    CHECK(af.names() == std::vector<std::string>{"a", "b"});
    CHECK(af.attacks() == std::vector<Attack>{{0, 1}});

    const auto self = parse_apx("arg(a).\natt(a,a).");
    CHECK(self.attacks(0, 0));

    const auto spaced = parse_apx("% header\n  arg( x1 ) .\r\n arg(y_2).  % trailing\n\natt ( y_2 , x1 ).\n");
    CHECK(spaced.names() == std::vector<std::string>{"x1", "y_2"});
    CHECK(spaced.attacks(1, 0));
}

TEST_CASE("apx errors carry line numbers", "[io]") {
    try {
        parse_apx("arg(a).\n\natt(a,b).");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(std::string(e.what()).find("undeclared") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_apx("att(a,b)."), ParseError);
    CHECK_THROWS_AS(parse_apx("arg(a).\narg(a)."), ParseError);
    CHECK_THROWS_AS(parse_apx("arg(a)"), ParseError);
    CHECK_THROWS_AS(parse_apx("arg(a). arg(b)."), ParseError);
    CHECK_THROWS_AS(parse_apx("argument(a)."), ParseError);
    CHECK_THROWS_AS(parse_apx("% nothing\n"), ParseError);
    CHECK_THROWS_AS(parse_apx(""), ParseError);
}

TEST_CASE("tgf parsing", "[io]") {
    const auto af = parse_tgf("a\nb\n#\na b");
    CHECK(af.names() == std::vector<std::string>{"a", "b"});
    CHECK(af.attacks() == std::vector<Attack>{{0, 1}});

    const auto lone = parse_tgf("a\n#\n");
    CHECK(lone.size() == 1);
    CHECK(lone.num_attacks() == 0);

    CHECK_THROWS_AS(parse_tgf("a\nb\n#\nb c"), ParseError);
    CHECK_THROWS_AS(parse_tgf("a\nb\n"), ParseError);
    CHECK_THROWS_AS(parse_tgf("a b\n#\n"), ParseError);
}

TEST_CASE("serializers are canonical", "[io]") {
    const ArgumentationFramework af({"p", "q", "r"}, {{2, 0}, {0, 1}, {0, 0}});
    CHECK(to_apx(af) == "arg(p).\narg(q).\narg(r).\natt(p,p).\natt(p,q).\natt(r,p).\n");
    CHECK(to_tgf(af) == "p\nq\nr\n#\np p\np q\nr p\n");
    CHECK(parse_apx(to_apx(af)) == af);
    CHECK(parse_tgf(to_tgf(af)) == af);
}

TEST_CASE("format names", "[io]") {
    CHECK(parse_af_format("apx") == AfFormat::Apx);
    CHECK(parse_af_format("tgf") == AfFormat::Tgf);
    CHECK_FALSE(parse_af_format("dimacs"));
    CHECK(to_string(AfFormat::Tgf) == "tgf");
}
