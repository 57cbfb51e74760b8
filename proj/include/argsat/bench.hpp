// SPDX-License-Identifier: MIT
#pragma once

#include "argsat/cnf.hpp"
#include "argsat/generate.hpp"

#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace argsat {

/// An encoding plus a solver backend, written "C2:builtin" or
/// "C2:ext:/path/to/solver".
struct SystemSpec {
    EncodingId encoding = EncodingId::C2;
    /// "builtin" or "ext:<path>", passed verbatim to `--solver`.
    std::string solver = "builtin";

    std::string id() const;
};

SystemSpec parse_system(std::string_view text);
/// Comma-separated list.
std::vector<SystemSpec> parse_systems(std::string_view text);

enum class Outcome { Solved, Timeout, Error };

std::string_view to_string(Outcome o) noexcept;
std::optional<Outcome> parse_outcome(std::string_view s);

struct BenchRecord {
    std::string instance_id;
    std::string system_id;
    Outcome outcome = Outcome::Error;
    /// Timeouts carry the budget.
    double seconds = 0.0;
};

/// `# argsat version ...` line, the header, then one record per line.
std::string bench_csv_header();
std::string to_csv_line(const BenchRecord& r);
std::vector<BenchRecord> parse_bench_csv(std::string_view text);
std::vector<BenchRecord> read_bench_csv(const std::filesystem::path& path);

struct BenchOptions {
    std::filesystem::path manifest;
    std::vector<SystemSpec> systems;
    double budget_seconds = 900.0;
    unsigned jobs = 1;
    /// Each instance runs this many times per system; the median time is
    /// kept, and any failed run decides the outcome.
    unsigned repetitions = 1;
    std::filesystem::path out_csv;
    /// The argsat executable that solves one instance per process.
    std::filesystem::path exe;
    /// Called after every record is written (from the writer, serialized).
    std::function<void(const BenchRecord&)> on_record;
};

/// Runs every (instance, system) pair not yet present in `out_csv`, one
/// fresh process per run, killed at the budget. Records are appended to the
/// CSV as they complete. Returns all records of the CSV afterwards.
std::vector<BenchRecord> run_bench(const BenchOptions& opts);

/// Score of one solved run given the fastest solved time of its case.
/// Times under one second score 1.
double ipc_case_score(double seconds, double best_seconds);

struct IpcRow {
    std::string group;
    std::string system;
    double raw = 0.0;
    std::size_t valid_cases = 0;
    /// raw / valid_cases * 100; 0 when the group has no valid case.
    double normalized = 0.0;
};

/// Maps an instance id to the groups it belongs to.
using Grouping = std::function<std::vector<std::string>(const std::string& instance_id)>;

/// IPC speed scores per (group, system). A case no system solved is not
/// valid and counts nowhere. Systems are those appearing in `records`.
/// Throws std::invalid_argument for an empty record set.
std::vector<IpcRow> ipc_score(const std::vector<BenchRecord>& records, const Grouping& groups = {});

struct SuccessRow {
    std::string group;
    std::string system;
    std::size_t solved = 0;
    std::size_t total = 0;
    double rate = 0.0;
};

std::vector<SuccessRow> success_rate(const std::vector<BenchRecord>& records,
                                     const Grouping& groups = {});

/// Groups derived from the manifest: "all", "k=<k>", "method=<m>",
/// "density=<lo>-<hi>" (attack density in quarters) and "<m>/k=<k>".
Grouping manifest_grouping(const Manifest& m);

/// Instance id used in records: the file stem of the manifest path.
std::string instance_id_of(const ManifestEntry& e);

std::string ipc_to_csv(const std::vector<IpcRow>& rows);
/// Whitespace table: one row per group, one normalized-score column per
/// system, with a commented header line.
std::string ipc_to_gnuplot(const std::vector<IpcRow>& rows);
std::string success_to_csv(const std::vector<SuccessRow>& rows);

/// Mean of the normalized scores per system over the given group.
std::map<std::string, double> normalized_by_system(const std::vector<IpcRow>& rows,
                                                   const std::string& group = "all");

} // namespace argsat
