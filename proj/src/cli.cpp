// SPDX-License-Identifier: MIT
#include "argsat/cli.hpp"

#include "argsat/af_io.hpp"
#include "argsat/bench.hpp"
#include "argsat/enumerate.hpp"
#include "argsat/external.hpp"
#include "argsat/generate.hpp"
#include "argsat/oracle.hpp"
#include "argsat/version.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>

namespace argsat {

namespace {

using json = nlohmann::ordered_json;

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SolverFlags {
    std::string solver = "builtin";
    std::uint64_t seed = 0;
    std::int64_t conflict_limit = -1;
    double time_limit = 0.0;
};

void add_solver_flags(CLI::App* cmd, SolverFlags& f) {
    cmd->add_option("--solver", f.solver, "builtin or ext:PATH (DIMACS solver, SAT-competition output)")
        ->capture_default_str();
    cmd->add_option("--seed", f.seed, "Branching seed for the built-in solver (0 = deterministic)")
        ->capture_default_str();
    cmd->add_option("--conflict-limit", f.conflict_limit,
                    "Conflicts per SAT call before giving up (negative = unlimited)")
        ->capture_default_str();
    cmd->add_option("--time-limit", f.time_limit, "Wall-clock limit in seconds (0 = none)")
        ->capture_default_str();
}

SessionFactory make_factory(const SolverFlags& f) {
    std::optional<sat::Clock::time_point> deadline;
    if (f.time_limit > 0)
        deadline = sat::Clock::now() + std::chrono::duration_cast<sat::Clock::duration>(
                                           std::chrono::duration<double>(f.time_limit));
    if (f.solver == "builtin") {
        sat::SolverOptions o;
        o.seed = f.seed;
        o.conflict_limit = f.conflict_limit;
        o.deadline = deadline;
        return builtin_sessions(o);
    }
    if (f.solver.rfind("ext:", 0) == 0) {
        ExternalSolverConfig cfg;
        cfg.executable = f.solver.substr(4);
        try {
            return external_sessions(cfg, deadline);
        } catch (const ExternalSolverError& e) {
            throw InputError(e.what());
        }
    }
    throw InputError("unknown solver '" + f.solver + "' (expected builtin or ext:PATH)");
}

struct InputFlags {
    std::string path = "-";
    std::string format;
};

void add_input_flags(CLI::App* cmd, InputFlags& f) {
    cmd->add_option("input", f.path, "Framework file, or - for stdin")->capture_default_str();
    cmd->add_option("--format", f.format, "apx or tgf (default: from the file extension, else apx)")
        ->check(CLI::IsMember({"apx", "tgf"}));
}

struct LoadedAf {
    ArgumentationFramework af;
    std::string name;
};

LoadedAf load_af(const InputFlags& f, std::istream& in) {
    std::string text;
    std::string name;
    if (f.path == "-") {
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
        name = "stdin";
    } else {
        try {
            text = read_text_file(f.path);
        } catch (const std::exception& e) {
            throw InputError(e.what());
        }
        name = std::filesystem::path(f.path).filename().string();
    }
    AfFormat format = AfFormat::Apx;
    if (!f.format.empty())
        format = *parse_af_format(f.format);
    else if (std::filesystem::path(f.path).extension() == ".tgf")
        format = AfFormat::Tgf;
    return {parse_af(text, format), name};
}

ArgIndex lookup_argument(const ArgumentationFramework& af, const std::string& name) {
    const auto i = af.index_of(name);
    if (!i) throw InputError("no argument named '" + name + "'");
    return *i;
}

EncodingId encoding_of(const std::string& s) {
    return *parse_encoding_id(s);
}

const std::vector<std::string> kEncodingNames{"C1", "C1a", "C1b", "C1c", "C2", "C3"};

json extensions_json(const ArgumentationFramework& af, const std::vector<Extension>& exts) {
    json arr = json::array();
    for (const auto& e : exts) arr.push_back(member_names(af, e));
    return arr;
}

std::string text_extension(const ArgumentationFramework& af, const Extension& e) {
    std::string s = "{";
    bool first = true;
    for (const auto& n : member_names(af, e)) {
        if (!first) s += ", ";
        s += n;
        first = false;
    }
    return s + "}";
}

// ---- subcommand state ----

struct ParseCmd {
    InputFlags input;
    std::string to = "apx";
};

struct EncodeCmd {
    InputFlags input;
    std::string encoding = "C2";
    std::string output;
};

struct EnumerateCmd {
    InputFlags input;
    SolverFlags solver;
    std::string semantics = "preferred";
    std::string encoding = "C2";
    std::string credulous;
    std::string skeptical;
    bool text = false;
    bool timing = false;
    bool quiet = false;
};

struct QueryCmd {
    InputFlags input;
    SolverFlags solver;
    std::string encoding = "C2";
    std::string argument;
    std::string mode = "credulous";
    bool text = false;
};

struct GenerateCmd {
    std::string method = "probability";
    std::size_t k = 10;
    double p = 0.5;
    std::string n = "random";
    std::uint64_t seed = 1;
    std::string format = "apx";
    std::string output;
    std::string suite;
    std::string profile;
    double scale = 1.0;
    std::size_t per_class = 0;
    std::vector<std::size_t> ks;
};

struct ClassifyCmd {
    bool as_json = false;
    std::size_t max_witness_args = 3;
};

struct BenchCmd {
    std::string manifest;
    std::string systems;
    double budget = 0.0;
    unsigned jobs = 1;
    std::string out = "bench.csv";
    unsigned repetitions = 1;
    std::string profile;
    std::string exe;
    bool score_only = false;
    std::uint64_t seed = 1;
};

void emit(std::ostream& out, const std::string& output, const std::string& text) {
    if (output.empty() || output == "-")
        out << text;
    else
        write_text_file(output, text);
}

int do_parse(const ParseCmd& c, std::ostream& out, std::istream& in) {
    const auto loaded = load_af(c.input, in);
    const auto& af = loaded.af;
    if (c.to == "json") {
        json j;
        j["arguments"] = af.names();
        json atts = json::array();
        for (const auto& [a, b] : af.attacks()) atts.push_back({af.name(a), af.name(b)});
        j["attacks"] = std::move(atts);
        out << j.dump(2) << "\n";
    } else {
        out << serialize(af, *parse_af_format(c.to));
    }
    return kExitOk;
}

int do_encode(const EncodeCmd& c, std::ostream& out, std::istream& in) {
    const auto loaded = load_af(c.input, in);
    const auto enc = encoding_of(c.encoding);
    const auto f = encode(loaded.af, enc);
    emit(out, c.output, to_dimacs(f, dimacs_comments(loaded.af, enc, loaded.name)));
    return kExitOk;
}

json stats_json(const EnumerationStats& s, bool timing) {
    json j;
    j["sat_calls"] = s.sat_calls;
    j["outer_iterations"] = s.outer_iterations;
    j["inner_iterations"] = s.inner_iterations;
    if (timing) j["seconds"] = s.seconds;
    return j;
}

int print_query(std::ostream& out, bool text, const std::string& mode, const std::string& arg,
                const std::string& encoding, bool accepted) {
    if (text) {
        out << (accepted ? "YES" : "NO") << "\n";
    } else {
        json j;
        j["query"] = mode;
        j["argument"] = arg;
        j["encoding"] = encoding;
        j["accepted"] = accepted;
        out << j.dump(2) << "\n";
    }
    return kExitOk;
}

int do_enumerate(const EnumerateCmd& c, std::ostream& out, std::ostream& err, std::istream& in) {
    const auto loaded = load_af(c.input, in);
    const auto& af = loaded.af;
    const auto enc = encoding_of(c.encoding);
    const auto factory = make_factory(c.solver);

    if (!c.credulous.empty() && !c.skeptical.empty())
        throw CLI::ValidationError("--query-credulous and --query-skeptical are exclusive");
    if (!c.credulous.empty() || !c.skeptical.empty()) {
        const bool cred = !c.credulous.empty();
        const auto& name = cred ? c.credulous : c.skeptical;
        const ArgIndex a = lookup_argument(af, name);
        const bool yes = cred ? credulous_accept(af, enc, a, factory) : skeptical_accept(af, enc, a, factory);
        if (c.quiet) return kExitOk;
        return print_query(out, c.text, cred ? "credulous" : "skeptical", name, c.encoding, yes);
    }

    const auto r = c.semantics == "complete" ? enumerate_complete(af, enc, factory)
                                             : enumerate_preferred(af, enc, factory);
    if (!c.quiet) {
        if (c.text) {
            for (const auto& e : r.extensions) out << text_extension(af, e) << "\n";
        } else {
            json j;
            j["semantics"] = c.semantics;
            j["encoding"] = c.encoding;
            j["complete"] = r.complete;
            j["extensions"] = extensions_json(af, r.extensions);
            j["stats"] = stats_json(r.stats, c.timing);
            out << j.dump(2) << "\n";
        }
    }
    if (!r.complete) {
        err << "argsat: solver budget exhausted; " << r.extensions.size()
            << " extension(s) found before stopping\n";
        return kExitBudget;
    }
    return kExitOk;
}

int do_query(const QueryCmd& c, std::ostream& out, std::istream& in) {
    const auto loaded = load_af(c.input, in);
    const auto& af = loaded.af;
    const auto enc = encoding_of(c.encoding);
    const auto factory = make_factory(c.solver);
    const ArgIndex a = lookup_argument(af, c.argument);
    const bool cred = c.mode == "credulous";
    const bool yes = cred ? credulous_accept(af, enc, a, factory) : skeptical_accept(af, enc, a, factory);
    return print_query(out, c.text, c.mode, c.argument, c.encoding, yes);
}

int do_generate(const GenerateCmd& c, std::ostream& out) {
    if (!c.suite.empty()) {
        SuiteOptions o = c.profile == "desk" ? SuiteOptions::desk() : SuiteOptions{};
        o.seed = c.seed;
        o.scale = c.scale;
        if (c.per_class > 0) o.per_class = c.per_class;
        if (!c.ks.empty()) o.ks = c.ks;
        const auto m = write_suite(o, c.suite);
        out << "wrote " << m.instances.size() << " instances to " << c.suite << "\n";
        return kExitOk;
    }
    if (c.k == 0) throw CLI::ValidationError("-k must be at least 1");
    const auto method = *parse_gen_method(c.method);
    ArgumentationFramework af = gen_empty(c.k);
    switch (method) {
    case GenMethod::Probability: af = gen_probability(c.k, c.p, c.seed); break;
    case GenMethod::Count:
        if (c.n == "random") {
            af = gen_count_random(c.k, c.seed);
        } else {
            std::uint64_t n = 0;
            try {
                std::size_t used = 0;
                n = std::stoull(c.n, &used);
                if (used != c.n.size()) throw std::invalid_argument(c.n);
            } catch (const std::exception&) {
                throw CLI::ValidationError("-n must be a count or 'random'");
            }
            if (n > c.k * c.k) throw CLI::ValidationError("-n exceeds k*k");
            af = gen_count(c.k, n, c.seed);
        }
        break;
    case GenMethod::Empty: af = gen_empty(c.k); break;
    case GenMethod::Full: af = gen_full(c.k); break;
    }
    emit(out, c.output, serialize(af, *parse_af_format(c.format)));
    return kExitOk;
}

std::string witness_text(const Witness& w) {
    std::string s = "args=";
    for (std::size_t i = 0; i < w.af.size(); ++i) s += (i ? "," : "") + w.af.name(static_cast<ArgIndex>(i));
    s += " att=";
    bool first = true;
    for (const auto& [a, b] : w.af.attacks()) {
        s += (first ? "" : ",") + w.af.name(a) + ">" + w.af.name(b);
        first = false;
    }
    if (first) s += "-";
    s += " lab=";
    for (std::size_t i = 0; i < w.af.size(); ++i)
        s += (i ? "," : "") + w.af.name(static_cast<ArgIndex>(i)) + ":" +
             std::string(to_string(w.labelling[static_cast<ArgIndex>(i)]));
    return s;
}

int do_classify(const ClassifyCmd& c, std::ostream& out) {
    const auto verdicts = classify_all(c.max_witness_args);
    std::map<std::string, int> counts{{"weak", 0}, {"correct_non_redundant", 0}, {"redundant", 0}};
    for (const auto& v : verdicts) ++counts[std::string(to_string(v.verdict))];

    if (c.as_json) {
        json rows = json::array();
        for (const auto& v : verdicts) {
            json r;
            json terms = json::array();
            for (auto t : v.subset.terms()) terms.push_back(std::string(to_string(t)));
            r["terms"] = std::move(terms);
            r["cardinality"] = v.subset.size();
            r["verdict"] = std::string(to_string(v.verdict));
            if (v.witness) {
                json w;
                w["arguments"] = v.witness->af.names();
                json atts = json::array();
                for (const auto& [a, b] : v.witness->af.attacks())
                    atts.push_back({v.witness->af.name(a), v.witness->af.name(b)});
                w["attacks"] = std::move(atts);
                json lab;
                for (std::size_t i = 0; i < v.witness->af.size(); ++i)
                    lab[v.witness->af.name(static_cast<ArgIndex>(i))] =
                        std::string(to_string(v.witness->labelling[static_cast<ArgIndex>(i)]));
                w["labelling"] = std::move(lab);
                w["escalated"] = v.escalated;
                r["witness"] = std::move(w);
            } else {
                r["witness"] = nullptr;
            }
            rows.push_back(std::move(r));
        }
        json j;
        j["rows"] = std::move(rows);
        j["counts"] = counts;
        out << j.dump(2) << "\n";
        return kExitOk;
    }

    out << std::left << std::setw(52) << "terms" << std::setw(5) << "card" << std::setw(23)
        << "verdict" << "witness\n";
    for (const auto& v : verdicts)
        out << std::setw(52) << v.subset.to_string() << std::setw(5) << v.subset.size() << std::setw(23)
            << to_string(v.verdict) << (v.witness ? witness_text(*v.witness) : "") << "\n";
    out << "weak " << counts["weak"] << ", correct_non_redundant " << counts["correct_non_redundant"]
        << ", redundant " << counts["redundant"] << "\n";
    return kExitOk;
}

std::filesystem::path with_suffix(const std::filesystem::path& csv, const std::string& suffix) {
    auto p = csv;
    p.replace_extension();
    return p.string() + suffix;
}

int do_bench(const BenchCmd& c, std::ostream& out, std::ostream& err) {
    const bool desk = c.profile == "desk";
    if (!c.profile.empty() && !desk) throw CLI::ValidationError("unknown profile '" + c.profile + "'");

    BenchOptions o;
    o.out_csv = c.out;
    o.budget_seconds = c.budget > 0 ? c.budget : (desk ? 60.0 : 900.0);
    o.jobs = c.jobs;
    o.repetitions = c.repetitions;

    std::vector<BenchRecord> records;
    Manifest manifest;
    if (!c.score_only) {
        if (c.systems.empty()) {
            for (const auto& e : kEncodingNames) o.systems.push_back(parse_system(e + ":builtin"));
        } else {
            o.systems = parse_systems(c.systems);
        }
        if (!c.manifest.empty()) {
            o.manifest = c.manifest;
        } else if (desk) {
            const auto dir = with_suffix(o.out_csv, ".suite");
            SuiteOptions so = SuiteOptions::desk();
            so.seed = c.seed;
            write_suite(so, dir);
            o.manifest = dir / "manifest.json";
            err << "argsat: generated desk suite in " << dir.string() << "\n";
        } else {
            throw CLI::ValidationError("--manifest is required unless --profile desk is given");
        }
        o.exe = c.exe.empty() ? std::filesystem::read_symlink("/proc/self/exe") : std::filesystem::path(c.exe);
        records = run_bench(o);
        manifest = read_manifest(o.manifest);
    } else {
        records = read_bench_csv(o.out_csv);
        if (!c.manifest.empty()) manifest = read_manifest(c.manifest);
    }
    if (records.empty()) throw InputError("no benchmark records");

    const Grouping grouping = manifest.instances.empty() ? Grouping{} : manifest_grouping(manifest);
    const auto ipc = ipc_score(records, grouping);
    write_text_file(with_suffix(o.out_csv, ".ipc.csv"), ipc_to_csv(ipc));
    write_text_file(with_suffix(o.out_csv, ".ipc.dat"), ipc_to_gnuplot(ipc));
    write_text_file(with_suffix(o.out_csv, ".success.csv"), success_to_csv(success_rate(records, grouping)));

    out << "system normalized_ipc\n";
    for (const auto& [sys, score] : normalized_by_system(ipc))
        out << sys << " " << std::fixed << std::setprecision(2) << score << "\n";
    return kExitOk;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            std::istream& in) {
    CLI::App app{"Preferred-extension enumeration for abstract argumentation frameworks via SAT",
                 "argsat"};
    app.set_version_flag("--version", std::string("argsat ") + kVersion);
    app.require_subcommand(1);

    const auto encodings = CLI::IsMember(kEncodingNames);

    ParseCmd parse_c;
    auto* parse = app.add_subcommand("parse", "Read a framework and print it in canonical form");
    add_input_flags(parse, parse_c.input);
    parse->add_option("--to", parse_c.to, "Output format: apx, tgf or json")
        ->check(CLI::IsMember({"apx", "tgf", "json"}))
        ->capture_default_str();

    EncodeCmd encode_c;
    auto* enc = app.add_subcommand("encode", "Write the CNF encoding of a framework as DIMACS");
    add_input_flags(enc, encode_c.input);
    enc->add_option("--encoding", encode_c.encoding, "C1, C1a, C1b, C1c, C2 or C3")
        ->check(encodings)
        ->capture_default_str();
    enc->add_option("-o,--output", encode_c.output, "Output file (default stdout)");

    EnumerateCmd enum_c;
    auto* en = app.add_subcommand("enumerate", "Enumerate preferred or complete extensions");
    add_input_flags(en, enum_c.input);
    add_solver_flags(en, enum_c.solver);
    en->add_option("--semantics", enum_c.semantics, "preferred or complete")
        ->check(CLI::IsMember({"preferred", "complete"}))
        ->capture_default_str();
    en->add_option("--encoding", enum_c.encoding, "C1, C1a, C1b, C1c, C2 or C3")
        ->check(encodings)
        ->capture_default_str();
    en->add_option("--query-credulous", enum_c.credulous, "Decide credulous acceptance of ARG instead");
    en->add_option("--query-skeptical", enum_c.skeptical, "Decide skeptical acceptance of ARG instead");
    en->add_flag("--text", enum_c.text, "One extension per line instead of JSON");
    en->add_flag("--timing", enum_c.timing, "Include wall time in the JSON stats");
    en->add_flag("-q,--quiet", enum_c.quiet, "Print nothing; only the exit code matters");

    QueryCmd query_c;
    auto* q = app.add_subcommand("query", "Decide credulous or skeptical acceptance of one argument");
    add_input_flags(q, query_c.input);
    add_solver_flags(q, query_c.solver);
    q->add_option("--encoding", query_c.encoding, "C1, C1a, C1b, C1c, C2 or C3")
        ->check(encodings)
        ->capture_default_str();
    q->add_option("-a,--argument", query_c.argument, "Argument name")->required();
    q->add_option("--mode", query_c.mode, "credulous or skeptical")
        ->check(CLI::IsMember({"credulous", "skeptical"}))
        ->capture_default_str();
    q->add_flag("--text", query_c.text, "Print YES or NO instead of JSON");

    GenerateCmd gen_c;
    auto* gen = app.add_subcommand("generate", "Generate a random framework or a benchmark suite");
    gen->add_option("--method", gen_c.method, "probability, count, empty or full")
        ->check(CLI::IsMember({"probability", "count", "empty", "full"}))
        ->capture_default_str();
    gen->add_option("-k", gen_c.k, "Number of arguments")->capture_default_str();
    gen->add_option("-p", gen_c.p, "Attack probability per ordered pair")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    gen->add_option("-n", gen_c.n, "Attack count, or 'random'")->capture_default_str();
    gen->add_option("--seed", gen_c.seed, "Generator seed")->capture_default_str();
    gen->add_option("--format", gen_c.format, "apx or tgf")
        ->check(CLI::IsMember({"apx", "tgf"}))
        ->capture_default_str();
    gen->add_option("-o,--output", gen_c.output, "Output file (default stdout)");
    gen->add_option("--suite", gen_c.suite, "Write a whole suite with manifest.json into DIR");
    gen->add_option("--profile", gen_c.profile, "Suite preset: desk")->check(CLI::IsMember({"desk"}));
    gen->add_option("--scale", gen_c.scale, "Suite class-size factor")->capture_default_str();
    gen->add_option("--per-class", gen_c.per_class, "Suite instances per class (overrides --scale)");
    gen->add_option("--ks", gen_c.ks, "Suite argument counts")->delimiter(',');

    ClassifyCmd cls_c;
    auto* cls = app.add_subcommand("classify", "Classify all 64 subsets of the six labelling constraints");
    cls->add_flag("--json", cls_c.as_json, "JSON instead of an aligned table");
    cls->add_option("--max-witness-args", cls_c.max_witness_args, "Witness search bound (1..4)")
        ->check(CLI::Range(1, 4))
        ->capture_default_str();

    BenchCmd bench_c;
    auto* bench = app.add_subcommand("bench", "Time systems over a suite and compute IPC scores");
    bench->add_option("--manifest", bench_c.manifest, "Suite manifest.json");
    bench->add_option("--systems", bench_c.systems,
                      "Comma-separated ENC:builtin or ENC:ext:PATH (default: all encodings, builtin)");
    bench->add_option("--budget", bench_c.budget, "Seconds per run (default 900, desk profile 60)");
    bench->add_option("--jobs", bench_c.jobs, "Parallel runs")->capture_default_str();
    bench->add_option("--out", bench_c.out, "Result CSV; scores go next to it")->capture_default_str();
    bench->add_option("--repetitions", bench_c.repetitions, "Runs per pair (median time kept)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    bench->add_option("--profile", bench_c.profile, "desk: 60 s budget and, without --manifest, a desk suite");
    bench->add_option("--exe", bench_c.exe, "argsat executable used per run (default: this one)");
    bench->add_option("--seed", bench_c.seed, "Seed for a generated desk suite")->capture_default_str();
    bench->add_flag("--score-only", bench_c.score_only, "Only recompute scores from an existing CSV");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*parse) return do_parse(parse_c, out, in);
        if (*enc) return do_encode(encode_c, out, in);
        if (*en) return do_enumerate(enum_c, out, err, in);
        if (*q) return do_query(query_c, out, in);
        if (*gen) return do_generate(gen_c, out);
        if (*cls) return do_classify(cls_c, out);
        if (*bench) return do_bench(bench_c, out, err);
    } catch (const CLI::ValidationError& e) {
        err << "argsat: " << e.what() << "\n";
        return kExitUsage;
    } catch (const BudgetExhausted& e) {
        err << "argsat: " << e.what() << "\n";
        return kExitBudget;
    } catch (const ParseError& e) {
        err << "argsat: input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const ExternalSolverError& e) {
        err << "argsat: external solver: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        err << "argsat: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitUsage;
}

} // namespace argsat
