// SPDX-License-Identifier: MIT
#include "argsat/generate.hpp"

#include "argsat/af_io.hpp"

#include "json.hpp"

#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>

namespace argsat {

double Rng::unit() {
    return static_cast<double>((engine_() >> 11) + 1) * 0x1p-53;
}

std::uint64_t Rng::below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("Rng::below(0)");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    for (;;) {
        const std::uint64_t x = engine_();
        if (x < limit) return x % n;
    }
}

std::uint64_t mix_seed(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::vector<std::string> generated_names(std::size_t k) {
    std::vector<std::string> names;
    names.reserve(k);
    for (std::size_t i = 1; i <= k; ++i) names.push_back("a" + std::to_string(i));
    return names;
}

namespace {

void check_k(std::size_t k) {
    if (k == 0) throw std::invalid_argument("argument count must be at least 1");
}

Attack pair_at(std::size_t k, std::uint64_t p) {
    return {static_cast<ArgIndex>(p / k), static_cast<ArgIndex>(p % k)};
}

} // namespace

ArgumentationFramework gen_probability(std::size_t k, double p, std::uint64_t seed) {
    check_k(k);
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("attack probability outside [0,1]");
    Rng rng(seed);
    std::vector<Attack> attacks;
    for (std::uint64_t pair = 0; pair < k * k; ++pair)
        if (rng.unit() <= p) attacks.push_back(pair_at(k, pair));
    return {generated_names(k), std::move(attacks)};
}

namespace {

ArgumentationFramework count_with(std::size_t k, std::uint64_t n, Rng& rng) {
    const std::uint64_t total = std::uint64_t{k} * k;
    if (n > total) throw std::invalid_argument("attack count exceeds k*k");
    std::vector<std::uint64_t> pairs(total);
    std::iota(pairs.begin(), pairs.end(), std::uint64_t{0});
    for (std::uint64_t i = 0; i < n; ++i) std::swap(pairs[i], pairs[i + rng.below(total - i)]);
    std::vector<Attack> attacks;
    attacks.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) attacks.push_back(pair_at(k, pairs[i]));
    return {generated_names(k), std::move(attacks)};
}

} // namespace

ArgumentationFramework gen_count(std::size_t k, std::uint64_t n, std::uint64_t seed) {
    check_k(k);
    Rng rng(seed);
    return count_with(k, n, rng);
}

ArgumentationFramework gen_count_random(std::size_t k, std::uint64_t seed, std::uint64_t* drawn) {
    check_k(k);
    Rng rng(seed);
    const std::uint64_t n = rng.below(std::uint64_t{k} * k + 1);
    if (drawn) *drawn = n;
    return count_with(k, n, rng);
}

ArgumentationFramework gen_empty(std::size_t k) {
    check_k(k);
    return {generated_names(k), {}};
}

ArgumentationFramework gen_full(std::size_t k) {
    check_k(k);
    std::vector<Attack> attacks;
    for (std::uint64_t pair = 0; pair < k * k; ++pair) attacks.push_back(pair_at(k, pair));
    return {generated_names(k), std::move(attacks)};
}

std::string_view to_string(GenMethod m) noexcept {
    switch (m) {
    case GenMethod::Probability: return "probability";
    case GenMethod::Count: return "count";
    case GenMethod::Empty: return "empty";
    case GenMethod::Full: return "full";
    }
    return "?";
}

std::optional<GenMethod> parse_gen_method(std::string_view s) {
    for (GenMethod m : {GenMethod::Probability, GenMethod::Count, GenMethod::Empty, GenMethod::Full})
        if (to_string(m) == s) return m;
    return std::nullopt;
}

SuiteOptions SuiteOptions::desk() {
    SuiteOptions o;
    o.ks = {25, 50, 75, 100};
    o.per_class = 10;
    return o;
}

std::size_t scaled_class_size(std::size_t base, double scale) {
    if (!(scale > 0)) throw std::invalid_argument("scale must be positive");
    const long long n = std::llround(static_cast<double>(base) * scale);
    return n < 1 ? 1 : static_cast<std::size_t>(n);
}

namespace {

std::string pad(std::size_t v, int width) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%0*zu", width, v);
    return buf;
}

std::string prob_label(double p) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", p);
    return buf;
}

} // namespace

std::vector<ManifestEntry> plan_suite(const SuiteOptions& opts) {
    std::vector<ManifestEntry> out;
    const std::size_t n_prob = opts.per_class ? *opts.per_class
                                              : scaled_class_size(opts.per_probability_class, opts.scale);
    const std::size_t n_count = opts.per_class ? *opts.per_class
                                               : scaled_class_size(opts.per_count_class, opts.scale);
    std::uint64_t counter = 0;
    auto next_seed = [&] { return mix_seed(opts.seed ^ mix_seed(counter++)); };
    auto add = [&](std::string class_id, std::size_t k, GenMethod m, double param, std::uint64_t seed,
                   std::size_t idx) {
        ManifestEntry e;
        e.path = "instances/" + class_id + "_" + pad(idx, 3) + ".apx";
        e.class_id = std::move(class_id);
        e.k = k;
        e.method = m;
        e.param = param;
        e.seed = seed;
        out.push_back(std::move(e));
    };

    if (opts.include_probability)
        for (std::size_t k : opts.ks)
            for (double p : opts.probabilities) {
                const std::string id = "prob_k" + pad(k, 3) + "_p" + prob_label(p);
                for (std::size_t i = 0; i < n_prob; ++i) add(id, k, GenMethod::Probability, p, next_seed(), i);
            }
    if (opts.include_count)
        for (std::size_t k : opts.ks) {
            const std::string id = "count_k" + pad(k, 3);
            for (std::size_t i = 0; i < n_count; ++i) {
                const auto seed = next_seed();
                // Same first draw as gen_count_random.
                const auto drawn = Rng(seed).below(std::uint64_t{k} * k + 1);
                add(id, k, GenMethod::Count, static_cast<double>(drawn), seed, i);
            }
        }
    if (opts.include_extremes)
        for (std::size_t k : opts.ks) {
            add("empty_k" + pad(k, 3), k, GenMethod::Empty, 0.0, 0, 0);
            add("full_k" + pad(k, 3), k, GenMethod::Full, 1.0, 0, 0);
        }
    return out;
}

ArgumentationFramework generate_entry(const ManifestEntry& e) {
    switch (e.method) {
    case GenMethod::Probability: return gen_probability(e.k, e.param, e.seed);
    case GenMethod::Count: return gen_count_random(e.k, e.seed);
    case GenMethod::Empty: return gen_empty(e.k);
    case GenMethod::Full: return gen_full(e.k);
    }
    throw std::invalid_argument("unknown generation method");
}

Manifest write_suite(const SuiteOptions& opts, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir / "instances");
    Manifest m;
    m.instances = plan_suite(opts);
    for (const auto& e : m.instances) write_text_file(dir / e.path, to_apx(generate_entry(e)));
    write_text_file(dir / "manifest.json", manifest_to_json(m));
    return m;
}

std::string manifest_to_json(const Manifest& m) {
    nlohmann::ordered_json j;
    j["count_method_includes_self_attacks"] = m.count_method_includes_self_attacks;
    auto& arr = j["instances"] = nlohmann::ordered_json::array();
    for (const auto& e : m.instances) {
        nlohmann::ordered_json x;
        x["class_id"] = e.class_id;
        x["k"] = e.k;
        x["method"] = std::string(to_string(e.method));
        x["param"] = e.param;
        x["seed"] = e.seed;
        x["path"] = e.path;
        arr.push_back(std::move(x));
    }
    return j.dump(2) + "\n";
}

Manifest manifest_from_json(std::string_view text) {
    Manifest m;
    try {
        const auto j = nlohmann::json::parse(text);
        m.count_method_includes_self_attacks = j.value("count_method_includes_self_attacks", true);
        for (const auto& x : j.at("instances")) {
            ManifestEntry e;
            e.class_id = x.at("class_id").get<std::string>();
            e.k = x.at("k").get<std::size_t>();
            const auto method = parse_gen_method(x.at("method").get<std::string>());
            if (!method) throw std::invalid_argument("unknown method in manifest");
            e.method = *method;
            e.param = x.at("param").get<double>();
            e.seed = x.at("seed").get<std::uint64_t>();
            e.path = x.at("path").get<std::string>();
            m.instances.push_back(std::move(e));
        }
    } catch (const nlohmann::json::exception& ex) {
        throw std::invalid_argument(std::string("malformed manifest: ") + ex.what());
    }
    return m;
}

Manifest read_manifest(const std::filesystem::path& path) {
    return manifest_from_json(read_text_file(path));
}

} // namespace argsat
