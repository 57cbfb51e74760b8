// SPDX-License-Identifier: MIT
#include "argsat/bench.hpp"

#include "argsat/af_io.hpp"
#include "argsat/process.hpp"
#include "argsat/version.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

namespace argsat {

std::string SystemSpec::id() const {
    return std::string(to_string(encoding)) + ":" + solver;
}

SystemSpec parse_system(std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw std::invalid_argument("system must look like ENC:builtin or ENC:ext:PATH");
    const auto enc = parse_encoding_id(text.substr(0, colon));
    if (!enc) throw std::invalid_argument("unknown encoding in system '" + std::string(text) + "'");
    SystemSpec s;
    s.encoding = *enc;
    s.solver = std::string(text.substr(colon + 1));
    if (s.solver != "builtin" && (s.solver.rfind("ext:", 0) != 0 || s.solver.size() == 4))
        throw std::invalid_argument("unknown solver in system '" + std::string(text) + "'");
    return s;
}

std::vector<SystemSpec> parse_systems(std::string_view text) {
    std::vector<SystemSpec> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const auto part = text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                              : comma - start);
        if (!part.empty()) out.push_back(parse_system(part));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    if (out.empty()) throw std::invalid_argument("no systems given");
    return out;
}

std::string_view to_string(Outcome o) noexcept {
    switch (o) {
    case Outcome::Solved: return "solved";
    case Outcome::Timeout: return "timeout";
    case Outcome::Error: return "error";
    }
    return "?";
}

std::optional<Outcome> parse_outcome(std::string_view s) {
    for (Outcome o : {Outcome::Solved, Outcome::Timeout, Outcome::Error})
        if (to_string(o) == s) return o;
    return std::nullopt;
}

std::string bench_csv_header() {
    return std::string("# argsat version ") + kVersion + "\ninstance_id,system_id,outcome,seconds\n";
}

std::string to_csv_line(const BenchRecord& r) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", r.seconds);
    return r.instance_id + "," + r.system_id + "," + std::string(to_string(r.outcome)) + "," + buf + "\n";
}

std::vector<BenchRecord> parse_bench_csv(std::string_view text) {
    std::vector<BenchRecord> out;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#' || line.rfind("instance_id,", 0) == 0) continue;
        // The system id may itself contain ':' but not ','; the path of an
        // external solver could, so split from both ends.
        const auto c1 = line.find(',');
        const auto c3 = line.rfind(',');
        const auto c2 = c3 == std::string::npos ? c3 : line.rfind(',', c3 - 1);
        if (c1 == std::string::npos || c2 == std::string::npos || c2 <= c1)
            throw ParseError(lineno, "expected 4 CSV fields");
        BenchRecord r;
        r.instance_id = line.substr(0, c1);
        r.system_id = line.substr(c1 + 1, c2 - c1 - 1);
        const auto outcome = parse_outcome(line.substr(c2 + 1, c3 - c2 - 1));
        if (!outcome) throw ParseError(lineno, "unknown outcome");
        r.outcome = *outcome;
        try {
            r.seconds = std::stod(line.substr(c3 + 1));
        } catch (const std::exception&) {
            throw ParseError(lineno, "bad seconds field");
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<BenchRecord> read_bench_csv(const std::filesystem::path& path) {
    return parse_bench_csv(read_text_file(path));
}

std::string instance_id_of(const ManifestEntry& e) {
    return std::filesystem::path(e.path).stem().string();
}

namespace {

struct Run {
    Outcome outcome;
    double seconds;
};

Run run_once(const BenchOptions& opts, const SystemSpec& sys, const std::filesystem::path& instance) {
    const std::vector<std::string> argv{opts.exe.string(), "enumerate", "--format", "apx",
                                        "--encoding", std::string(to_string(sys.encoding)),
                                        "--solver", sys.solver, "--quiet", instance.string()};
    const ProcessResult r = run_process(argv, {}, opts.budget_seconds);
    if (r.timed_out) return {Outcome::Timeout, opts.budget_seconds};
    if (r.exited && r.exit_code == 0) return {Outcome::Solved, std::min(r.seconds, opts.budget_seconds)};
    if (r.exited && r.exit_code == 3) return {Outcome::Timeout, opts.budget_seconds};
    return {Outcome::Error, r.seconds};
}

BenchRecord run_pair(const BenchOptions& opts, const SystemSpec& sys, const std::string& id,
                     const std::filesystem::path& instance) {
    BenchRecord rec{id, sys.id(), Outcome::Solved, 0.0};
    if (!std::filesystem::is_regular_file(instance)) {
        rec.outcome = Outcome::Error;
        return rec;
    }
    std::vector<double> times;
    for (unsigned i = 0; i < std::max(1U, opts.repetitions); ++i) {
        const Run r = run_once(opts, sys, instance);
        if (r.outcome != Outcome::Solved) {
            rec.outcome = r.outcome;
            rec.seconds = r.seconds;
            return rec;
        }
        times.push_back(r.seconds);
    }
    std::sort(times.begin(), times.end());
    const std::size_t n = times.size();
    rec.seconds = n % 2 ? times[n / 2] : 0.5 * (times[n / 2 - 1] + times[n / 2]);
    return rec;
}

} // namespace

std::vector<BenchRecord> run_bench(const BenchOptions& opts) {
    if (opts.systems.empty()) throw std::invalid_argument("no systems to benchmark");
    if (!(opts.budget_seconds > 0)) throw std::invalid_argument("budget must be positive");
    if (opts.out_csv.empty()) throw std::invalid_argument("no output path");
    const Manifest manifest = read_manifest(opts.manifest);
    const auto base = opts.manifest.parent_path();

    std::set<std::pair<std::string, std::string>> done;
    const bool resuming = std::filesystem::exists(opts.out_csv);
    if (resuming)
        for (const auto& r : read_bench_csv(opts.out_csv)) done.emplace(r.instance_id, r.system_id);

    struct Task {
        std::string id;
        std::filesystem::path path;
        const SystemSpec* sys;
    };
    std::vector<Task> tasks;
    for (const auto& e : manifest.instances)
        for (const auto& sys : opts.systems) {
            const auto id = instance_id_of(e);
            if (!done.count({id, sys.id()})) tasks.push_back({id, base / e.path, &sys});
        }

    std::ofstream out(opts.out_csv, std::ios::app | std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + opts.out_csv.string());
    if (!resuming) out << bench_csv_header() << std::flush;

    std::mutex writer;
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            const auto rec = run_pair(opts, *tasks[i].sys, tasks[i].id, tasks[i].path);
            const std::lock_guard lock(writer);
            out << to_csv_line(rec) << std::flush;
            if (opts.on_record) opts.on_record(rec);
        }
    };
    const unsigned jobs = std::max(1U, opts.jobs);
    std::vector<std::thread> pool;
    for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    out.close();
    return read_bench_csv(opts.out_csv);
}

double ipc_case_score(double seconds, double best_seconds) {
    if (seconds < 1.0) return 1.0;
    return 1.0 / (1.0 + std::log10(seconds / best_seconds));
}

namespace {

std::vector<std::string> all_group(const std::string&) { return {"all"}; }

template <typename Row>
Row& row_for(std::map<std::pair<std::string, std::string>, Row>& rows, const std::string& g,
             const std::string& s) {
    auto& r = rows[{g, s}];
    r.group = g;
    r.system = s;
    return r;
}

} // namespace

std::vector<IpcRow> ipc_score(const std::vector<BenchRecord>& records, const Grouping& groups) {
    if (records.empty()) throw std::invalid_argument("no benchmark records to score");
    const Grouping& grouping = groups ? groups : Grouping(all_group);

    std::set<std::string> systems;
    std::map<std::string, std::vector<const BenchRecord*>> cases;
    for (const auto& r : records) {
        systems.insert(r.system_id);
        cases[r.instance_id].push_back(&r);
    }

    std::map<std::pair<std::string, std::string>, IpcRow> rows;
    for (const auto& [id, recs] : cases) {
        const auto gs = grouping(id);
        for (const auto& g : gs)
            for (const auto& s : systems) row_for(rows, g, s);

        double best = INFINITY;
        for (const auto* r : recs)
            if (r->outcome == Outcome::Solved) best = std::min(best, r->seconds);
        if (std::isinf(best)) continue;

        for (const auto& g : gs)
            for (const auto& s : systems) ++row_for(rows, g, s).valid_cases;
        for (const auto* r : recs) {
            if (r->outcome != Outcome::Solved) continue;
            const double score = ipc_case_score(r->seconds, best);
            for (const auto& g : gs) row_for(rows, g, r->system_id).raw += score;
        }
    }

    std::vector<IpcRow> out;
    for (auto& [key, row] : rows) {
        row.normalized = row.valid_cases ? row.raw / static_cast<double>(row.valid_cases) * 100.0 : 0.0;
        out.push_back(row);
    }
    return out;
}

std::vector<SuccessRow> success_rate(const std::vector<BenchRecord>& records, const Grouping& groups) {
    const Grouping& grouping = groups ? groups : Grouping(all_group);
    std::map<std::pair<std::string, std::string>, SuccessRow> rows;
    for (const auto& r : records)
        for (const auto& g : grouping(r.instance_id)) {
            auto& row = row_for(rows, g, r.system_id);
            ++row.total;
            if (r.outcome == Outcome::Solved) ++row.solved;
        }
    std::vector<SuccessRow> out;
    for (auto& [key, row] : rows) {
        row.rate = row.total ? static_cast<double>(row.solved) / static_cast<double>(row.total) : 0.0;
        out.push_back(row);
    }
    return out;
}

namespace {

std::string density_bucket(double d) {
    static const char* names[] = {"density=0.00-0.25", "density=0.25-0.50", "density=0.50-0.75",
                                  "density=0.75-1.00"};
    int b = static_cast<int>(d * 4);
    return names[std::clamp(b, 0, 3)];
}

} // namespace

Grouping manifest_grouping(const Manifest& m) {
    std::map<std::string, std::vector<std::string>> table;
    for (const auto& e : m.instances) {
        const std::string method(to_string(e.method));
        double density = e.param;
        if (e.method == GenMethod::Count) density = e.param / static_cast<double>(e.k * e.k);
        const std::string k = "k=" + std::to_string(e.k);
        table[instance_id_of(e)] = {"all", k, "method=" + method, density_bucket(density),
                                    method + "/" + k};
    }
    return [table = std::move(table)](const std::string& id) -> std::vector<std::string> {
        const auto it = table.find(id);
        if (it == table.end()) return {"all"};
        return it->second;
    };
}

std::string ipc_to_csv(const std::vector<IpcRow>& rows) {
    std::string out = "group,system,raw,valid_cases,normalized\n";
    char buf[128];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, ",%.6f,%zu,%.4f\n", r.raw, r.valid_cases, r.normalized);
        out += r.group + "," + r.system + buf;
    }
    return out;
}

std::string ipc_to_gnuplot(const std::vector<IpcRow>& rows) {
    std::vector<std::string> systems;
    std::vector<std::string> groups;
    std::map<std::pair<std::string, std::string>, double> score;
    for (const auto& r : rows) {
        if (std::find(systems.begin(), systems.end(), r.system) == systems.end())
            systems.push_back(r.system);
        if (std::find(groups.begin(), groups.end(), r.group) == groups.end()) groups.push_back(r.group);
        score[{r.group, r.system}] = r.normalized;
    }
    std::string out = "# group";
    for (const auto& s : systems) out += " " + s;
    out += "\n";
    char buf[64];
    for (const auto& g : groups) {
        out += g;
        for (const auto& s : systems) {
            const auto it = score.find({g, s});
            std::snprintf(buf, sizeof buf, " %.4f", it == score.end() ? 0.0 : it->second);
            out += buf;
        }
        out += "\n";
    }
    return out;
}

std::string success_to_csv(const std::vector<SuccessRow>& rows) {
    std::string out = "group,system,solved,total,rate\n";
    char buf[128];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, ",%zu,%zu,%.4f\n", r.solved, r.total, r.rate);
        out += r.group + "," + r.system + buf;
    }
    return out;
}

std::map<std::string, double> normalized_by_system(const std::vector<IpcRow>& rows,
                                                   const std::string& group) {
    std::map<std::string, double> out;
    for (const auto& r : rows)
        if (r.group == group) out[r.system] = r.normalized;
    return out;
}

} // namespace argsat
