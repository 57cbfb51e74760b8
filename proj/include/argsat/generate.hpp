// SPDX-License-Identifier: MIT
#pragma once

#include "argsat/af.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace argsat {

/// Instance RNG: std::mt19937_64, whose output sequence is fixed by the
/// standard, with uniform doubles built by hand so the stream does not
/// depend on the library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform on (0, 1]: ((x >> 11) + 1) * 2^-53.
    double unit();
    /// Uniform on {0, ..., n - 1}; n > 0. Rejection sampling, no modulo bias.
    std::uint64_t below(std::uint64_t n);

private:
    std::mt19937_64 engine_;
};

/// splitmix64 step, used to derive per-instance seeds from a suite seed.
std::uint64_t mix_seed(std::uint64_t x) noexcept;

/// Names a1..ak.
std::vector<std::string> generated_names(std::size_t k);

/// Each of the k*k ordered pairs (self-attacks included, row-major) is an
/// attack iff its draw is <= p.
ArgumentationFramework gen_probability(std::size_t k, double p, std::uint64_t seed);

/// Exactly n distinct ordered pairs, uniformly without replacement.
ArgumentationFramework gen_count(std::size_t k, std::uint64_t n, std::uint64_t seed);

/// As gen_count with n drawn uniformly from 0..k*k first. The drawn n is
/// returned through `drawn` when given.
ArgumentationFramework gen_count_random(std::size_t k, std::uint64_t seed,
                                        std::uint64_t* drawn = nullptr);

ArgumentationFramework gen_empty(std::size_t k);
ArgumentationFramework gen_full(std::size_t k);

enum class GenMethod { Probability, Count, Empty, Full };

std::string_view to_string(GenMethod m) noexcept;
std::optional<GenMethod> parse_gen_method(std::string_view s);

struct ManifestEntry {
    std::string class_id;
    std::size_t k = 0;
    GenMethod method = GenMethod::Probability;
    /// Probability for the probability method, the attack count for the
    /// count method (as drawn), unused otherwise.
    double param = 0.0;
    std::uint64_t seed = 0;
    /// Relative to the manifest's directory.
    std::string path;
};

struct Manifest {
    /// The count method draws from all k*k ordered pairs.
    bool count_method_includes_self_attacks = true;
    std::vector<ManifestEntry> instances;
};

struct SuiteOptions {
    std::vector<std::size_t> ks{25, 50, 75, 100, 125, 150, 175, 200};
    std::vector<double> probabilities{0.25, 0.5, 0.75};
    std::size_t per_probability_class = 50;
    std::size_t per_count_class = 200;
    /// Multiplies both class sizes (rounded, at least 1). Extremes are
    /// always one instance each.
    double scale = 1.0;
    /// When set, replaces both scaled class sizes.
    std::optional<std::size_t> per_class;
    bool include_probability = true;
    bool include_count = true;
    bool include_extremes = true;
    std::uint64_t seed = 1;

    /// k in {25,50,75,100}, 10 instances per class.
    static SuiteOptions desk();
};

std::size_t scaled_class_size(std::size_t base, double scale);

/// The suite's entries in a fixed order: probability classes (by k, then
/// p), count classes (by k), then empty and full per k. Paths are
/// `instances/<class_id>_<nnn>.apx`. Nothing is generated yet.
std::vector<ManifestEntry> plan_suite(const SuiteOptions& opts);

/// The framework an entry describes (regenerated from its seed).
ArgumentationFramework generate_entry(const ManifestEntry& e);

/// Writes the APX files and `manifest.json` under `dir`; returns the manifest.
Manifest write_suite(const SuiteOptions& opts, const std::filesystem::path& dir);

std::string manifest_to_json(const Manifest& m);
Manifest manifest_from_json(std::string_view text);
Manifest read_manifest(const std::filesystem::path& path);

} // namespace argsat
