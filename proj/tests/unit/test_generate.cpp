// SPDX-License-Identifier: MIT
#include "argsat/generate.hpp"
#include "argsat/af_io.hpp"
#include "argsat/process.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <map>
#include <set>
#include <unistd.h>

using namespace argsat;

TEST_CASE("rng", "[generate]") {
    Rng a(1), b(1);
    for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
    Rng r(3);
    for (int i = 0; i < 10000; ++i) {
        const double u = r.unit();
        CHECK(u > 0.0);
        CHECK(u <= 1.0);
        CHECK(r.below(7) < 7);
    }
    CHECK_THROWS(r.below(0));
    CHECK(mix_seed(1) != mix_seed(2));
    // std::mt19937_64's 10000th output is fixed by the standard.
    std::mt19937_64 ref;
    ref.discard(9999);
    CHECK(ref() == 9981545732273789042ULL);
}

TEST_CASE("probability method extremes", "[generate]") {
    CHECK(gen_probability(12, 0.0, 5).num_attacks() == 0);
    const auto full = gen_probability(12, 1.0, 5);
    CHECK(full.num_attacks() == 144);
    CHECK(full == gen_full(12));
    for (ArgIndex i = 0; i < 12; ++i) CHECK(full.attacks(i, i));
    CHECK_THROWS(gen_probability(3, 1.5, 1));
    CHECK_THROWS(gen_probability(0, 0.5, 1));
}

TEST_CASE("probability method attack counts are binomial", "[generate][property]") {
    const std::size_t k = 100;
    const double p = 0.25;
    double sum = 0;
    for (std::uint64_t s = 0; s < 50; ++s) sum += static_cast<double>(gen_probability(k, p, s).num_attacks());
    const double mean = sum / 50;
    const double sigma = std::sqrt(k * k * p * (1 - p));
    CHECK(std::abs(mean - 2500.0) <= 3 * sigma);
    // The mean of 50 samples should actually sit within 3 sigma / sqrt(50).
    CHECK(std::abs(mean - 2500.0) <= 3 * sigma / std::sqrt(50.0));
}

TEST_CASE("probability method passes a chi-square test", "[generate][property]") {
    // k = 4: 16 pairs, p = 0.5. Counts 0..16 binned into [0,5], 6, 7, 8, 9, 10, [11,16].
    const int n = 4000;
    const int k = 4;
    const double p = 0.5;
    auto binom = [&](int m) {
        double c = 1;
        for (int i = 0; i < m; ++i) c = c * (16 - i) / (i + 1);
        return c * std::pow(p, m) * std::pow(1 - p, 16 - m);
    };
    const std::vector<std::pair<int, int>> bins{{0, 5}, {6, 6}, {7, 7}, {8, 8}, {9, 9}, {10, 10}, {11, 16}};
    std::vector<int> observed(bins.size(), 0);
    for (int s = 0; s < n; ++s) {
        const int a = static_cast<int>(gen_probability(k, p, mix_seed(static_cast<std::uint64_t>(s))).num_attacks());
        for (std::size_t b = 0; b < bins.size(); ++b)
            if (a >= bins[b].first && a <= bins[b].second) ++observed[b];
    }
    double chi2 = 0;
    for (std::size_t b = 0; b < bins.size(); ++b) {
        double prob = 0;
        for (int m = bins[b].first; m <= bins[b].second; ++m) prob += binom(m);
        const double expected = prob * n;
        chi2 += (observed[b] - expected) * (observed[b] - expected) / expected;
    }
    // 6 degrees of freedom; 22.46 is the 0.999 quantile.
    CHECK(chi2 < 22.46);
}

TEST_CASE("count method", "[generate]") {
    CHECK(gen_count(10, 100, 1) == gen_full(10));
    CHECK(gen_count(10, 0, 1).num_attacks() == 0);
    for (std::uint64_t s = 0; s < 20; ++s) CHECK(gen_count(10, 30, s).num_attacks() == 30);
    CHECK_THROWS(gen_count(10, 101, 1));

    std::uint64_t drawn = 0;
    const auto af = gen_count_random(6, 11, &drawn);
    CHECK(drawn <= 36);
    CHECK(af.num_attacks() == drawn);
}

TEST_CASE("count method draws pairs uniformly", "[generate][property]") {
    // Every one of the 9 pairs of k = 3 should be picked about n*2/9 times.
    std::map<Attack, int> hits;
    const int n = 9000;
    for (int s = 0; s < n; ++s) {
        const auto af = gen_count(3, 2, static_cast<std::uint64_t>(s));
        for (const auto& a : af.attacks()) ++hits[a];
    }
    REQUIRE(hits.size() == 9);
    for (const auto& [pair, h] : hits) CHECK(std::abs(h - 2000) < 200);
}

TEST_CASE("generation is deterministic per seed", "[generate]") {
    CHECK(to_apx(gen_probability(30, 0.3, 77)) == to_apx(gen_probability(30, 0.3, 77)));
    CHECK(to_apx(gen_count_random(30, 77)) == to_apx(gen_count_random(30, 77)));
    CHECK_FALSE(to_apx(gen_probability(30, 0.3, 77)) == to_apx(gen_probability(30, 0.3, 78)));
    CHECK(gen_empty(3).names() == std::vector<std::string>{"a1", "a2", "a3"});
}

TEST_CASE("suite structure", "[generate]") {
    CHECK(plan_suite(SuiteOptions{}).size() == 2816);

    SuiteOptions tenth;
    tenth.scale = 0.1;
    const auto small = plan_suite(tenth);
    std::map<std::string, int> per_class;
    for (const auto& e : small) ++per_class[e.class_id];
    CHECK(per_class["prob_k025_p0.25"] == 5);
    CHECK(per_class["count_k200"] == 20);
    CHECK(per_class["empty_k050"] == 1);
    CHECK(per_class["full_k200"] == 1);

    SuiteOptions tiny;
    tiny.scale = 0.0001;
    CHECK(plan_suite(tiny).size() == 8 * 3 + 8 + 16);

    const auto desk = plan_suite(SuiteOptions::desk());
    CHECK(desk.size() == 4 * 3 * 10 + 4 * 10 + 8);

    std::set<std::string> paths;
    for (const auto& e : small) CHECK(paths.insert(e.path).second);
}

TEST_CASE("count entries record the drawn attack count", "[generate]") {
    SuiteOptions o;
    o.ks = {20};
    o.per_class = 5;
    for (const auto& e : plan_suite(o))
        if (e.method == GenMethod::Count)
            CHECK(static_cast<double>(generate_entry(e).num_attacks()) == e.param);
}

TEST_CASE("suites on disk and manifests round-trip", "[generate]") {
    SuiteOptions o;
    o.ks = {5, 10};
    o.per_class = 2;
    o.seed = 4;
    const auto base = std::filesystem::temp_directory_path() / ("argsat-gen-" + std::to_string(::getpid()));
    std::filesystem::remove_all(base);
    const auto m1 = write_suite(o, base / "one");
    const auto m2 = write_suite(o, base / "two");
    CHECK(m1.count_method_includes_self_attacks);
    CHECK(read_text_file(base / "one/manifest.json") == read_text_file(base / "two/manifest.json"));
    for (const auto& e : m1.instances) {
        CHECK(read_text_file(base / "one" / e.path) == read_text_file(base / "two" / e.path));
        CHECK(parse_apx(read_text_file(base / "one" / e.path)) == generate_entry(e));
    }
    const auto back = read_manifest(base / "one/manifest.json");
    REQUIRE(back.instances.size() == m1.instances.size());
    for (std::size_t i = 0; i < back.instances.size(); ++i) {
        CHECK(back.instances[i].path == m1.instances[i].path);
        CHECK(back.instances[i].seed == m1.instances[i].seed);
        CHECK(back.instances[i].param == m1.instances[i].param);
    }
    CHECK_THROWS(manifest_from_json("{\"instances\": [{\"k\": 1}]}"));
    std::filesystem::remove_all(base);
}
