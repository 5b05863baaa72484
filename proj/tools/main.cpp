#include <CLI11.hpp>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>

#include "radiole/election.hpp"
#include "radiole/serialize.hpp"

namespace {

using nlohmann::json;
using namespace radiole;

// Exit codes: 0 success / Yes / all-match, 1 usage or I/O error,
// 2 infeasible (elect) or No (classify with --strict-exit), 3 oracle mismatch.
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitMismatch = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path + "'");
    out << content;
}

// Parse, validate, and normalize with a notice; the library itself insists on
// already-normalized input.
Configuration load_configuration(const std::string& path) {
    Configuration c = parse_configuration(read_file(path));
    require_valid(c);
    if (c.min_tag() != 0) {
        std::cerr << "note: tags normalized (subtracted minimum tag " << c.min_tag() << ")\n";
        c = normalize_tags(std::move(c));
    }
    return c;
}

struct CommonOptions {
    std::string trace_path;
    std::string format = "text";
    long round_cap = 0;
};

void add_common(CLI::App* cmd, CommonOptions& opt, bool with_cap = true) {
    cmd->add_option("--trace", opt.trace_path, "write the result document to this path");
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "doc", "dot"}));
    if (with_cap)
        cmd->add_option("--round-cap", opt.round_cap, "override the simulator round cap");
}

void emit_document(const CommonOptions& opt, const json& doc) {
    if (!opt.trace_path.empty()) write_file(opt.trace_path, doc.dump(2) + "\n");
    if (opt.format == "doc") std::cout << doc.dump(2) << "\n";
}

std::string verdict_line(const PartitionTrace& trace) {
    if (trace.verdict.kind == VerdictKind::Yes)
        return "YES class=" + std::to_string(trace.verdict.winning_class) +
               " iteration=" + std::to_string(trace.verdict.iteration);
    return "NO iteration=" + std::to_string(trace.verdict.iteration);
}

int cmd_classify(const std::string& path, const CommonOptions& opt, bool strict_exit) {
    Configuration c = load_configuration(path);
    PartitionTrace trace = classify(c);
    CanonicalProtocol protocol = build_canonical(trace, c.span());
    if (opt.format != "doc") std::cout << verdict_line(trace) << "\n";
    emit_document(opt, json{{"trace", trace_to_json(trace)}, {"protocol", protocol_to_json(protocol)}});
    if (strict_exit && trace.verdict.kind == VerdictKind::No) return kExitInfeasible;
    return kExitOk;
}

int cmd_elect(const std::string& path, const CommonOptions& opt) {
    Configuration c = load_configuration(path);
    PartitionTrace trace = classify(c);
    if (trace.verdict.kind == VerdictKind::No) {
        std::cerr << "infeasible: " << verdict_line(trace) << "\n";
        return kExitInfeasible;
    }
    CanonicalProtocol protocol = build_canonical(trace, c.span());
    ExecutionTrace execution = run(c, canonical_drip(protocol), {opt.round_cap});
    ElectionResult result = elect_from(c, trace, protocol, execution);
    if (opt.format != "doc")
        std::cout << "LEADER node=" << result.leader << " class=" << trace.verdict.winning_class
                  << " iteration=" << trace.verdict.iteration
                  << " rounds_used=" << result.rounds_used << "\n";
    emit_document(opt, json{{"trace", trace_to_json(trace)},
                            {"protocol", protocol_to_json(protocol)},
                            {"execution", execution_to_json(execution)},
                            {"election", election_to_json(result)}});
    return kExitOk;
}

int cmd_simulate(const std::string& path, const CommonOptions& opt) {
    Configuration c = load_configuration(path);
    PartitionTrace trace = classify(c);
    CanonicalProtocol protocol = build_canonical(trace, c.span());
    ExecutionTrace execution = run(c, canonical_drip(protocol), {opt.round_cap});
    std::size_t transmissions = 0;
    for (const RoundRecord& r : execution.rounds) transmissions += r.transmitters.size();
    if (opt.format == "dot") {
        std::cout << execution_to_dot(execution, c);
    } else if (opt.format != "doc") {
        std::cout << "SIMULATED global_rounds=" << execution.total_global_rounds
                  << " transmissions=" << transmissions
                  << " done_round=" << execution.nodes.front().done_round << "\n";
    }
    emit_document(opt, json{{"trace", trace_to_json(trace)},
                            {"protocol", protocol_to_json(protocol)},
                            {"execution", execution_to_json(execution)}});
    return kExitOk;
}

int cmd_gen(const std::string& family, const std::vector<std::string>& params,
            const std::string& out_path, std::uint64_t seed) {
    Configuration c;
    std::string header;
    auto param_int = [&](std::size_t i) { return std::stoi(params.at(i)); };
    if (family == "gm" || family == "hm" || family == "sm") {
        if (params.size() != 1)
            throw CLI::ValidationError("gen " + family + " takes exactly one parameter: m");
        const int m = param_int(0);
        c = family == "gm" ? gen_gm(m) : family == "hm" ? gen_hm(m) : gen_sm(m);
    } else if (family == "random") {
        if (params.size() != 3)
            throw CLI::ValidationError("gen random takes: <n> <edge_prob> <max_tag> (seed via --seed)");
        const int n = param_int(0);
        const double p = std::stod(params.at(1));
        const int max_tag = param_int(2);
        c = gen_random(n, p, max_tag, seed);
        std::ostringstream h;
        h << "generator: " << random_generator_id() << " seed=" << seed << " n=" << n
          << " edge_prob=" << p << " max_tag=" << max_tag;
        header = h.str();
    } else {
        throw CLI::ValidationError("unknown family '" + family + "' (expected gm, hm, sm, random)");
    }
    const std::string text = serialize_configuration(c, header);
    if (out_path.empty())
        std::cout << text;
    else
        write_file(out_path, text);
    return kExitOk;
}

int cmd_check(const std::string& path, const std::vector<std::string>& random_spec,
              const CommonOptions& opt) {
    std::vector<Configuration> configs;
    if (!random_spec.empty()) {
        if (random_spec.size() != 4)
            throw CLI::ValidationError("--random takes: <n_max> <tag_max> <count> <seed>");
        configs = gen_batch(std::stoi(random_spec[0]), std::stoi(random_spec[1]),
                            std::stoi(random_spec[2]),
                            static_cast<std::uint64_t>(std::stoull(random_spec[3])));
    } else if (!path.empty()) {
        configs.push_back(load_configuration(path));
    } else {
        throw CLI::ValidationError("check needs a configuration file or --random");
    }

    std::size_t total_mismatches = 0;
    std::size_t inconsistent = 0;
    json reports = json::array();
    for (std::size_t i = 0; i < configs.size(); ++i) {
        CrossCheckReport report = cross_check(configs[i]);
        total_mismatches += report.mismatches.size();
        if (!report.verdict_consistent) ++inconsistent;
        for (const Mismatch& m : report.mismatches)
            std::cerr << "mismatch: config " << i << " iteration " << m.iteration << " nodes "
                      << m.v << "/" << m.w << "\n";
        if (!report.verdict_consistent)
            std::cerr << "mismatch: config " << i << " verdict inconsistent with history uniqueness\n";
        if (!opt.trace_path.empty() || opt.format == "doc")
            reports.push_back(report_to_json(report));
    }
    emit_document(opt, json{{"reports", reports}});
    if (opt.format != "doc")
        std::cout << configs.size() << " configurations checked: " << total_mismatches
                  << " mismatches, " << inconsistent << " inconsistent verdicts\n";
    return total_mismatches == 0 && inconsistent == 0 ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Feasibility classification, protocol construction, and leader election "
                 "for anonymous radio networks"};
    app.require_subcommand(1);
#ifdef RADIOLE_VERSION
    app.set_version_flag("--version", RADIOLE_VERSION);
#endif

    std::string path;
    std::string family;
    std::vector<std::string> gen_params;
    std::string out_path;
    std::uint64_t seed = 0;
    std::vector<std::string> random_spec;
    bool strict_exit = false;
    CommonOptions classify_opt, elect_opt, simulate_opt, check_opt;

    auto* classify_cmd =
        app.add_subcommand("classify", "decide whether a leader can be elected at all");
    classify_cmd->add_option("path", path, "configuration file")->required();
    classify_cmd->add_flag("--strict-exit", strict_exit, "exit 2 on a No verdict");
    add_common(classify_cmd, classify_opt, /*with_cap=*/false);

    auto* elect_cmd = app.add_subcommand("elect", "run the election end to end");
    elect_cmd->add_option("path", path, "configuration file")->required();
    add_common(elect_cmd, elect_opt);

    auto* simulate_cmd =
        app.add_subcommand("simulate", "execute the configuration's protocol round by round");
    simulate_cmd->add_option("path", path, "configuration file")->required();
    add_common(simulate_cmd, simulate_opt);

    auto* gen_cmd = app.add_subcommand("gen", "emit a configuration file");
    gen_cmd->add_option("family", family, "gm | hm | sm | random")->required();
    gen_cmd->add_option("params", gen_params, "family parameters");
    gen_cmd->add_option("--out", out_path, "output file (stdout otherwise)");
    gen_cmd->add_option("--seed", seed, "seed for random instances");

    auto* check_cmd =
        app.add_subcommand("check", "cross-validate classifier partitions against simulated histories");
    check_cmd->add_option("path", path, "configuration file");
    check_cmd->add_option("--random", random_spec, "<n_max> <tag_max> <count> <seed> batch mode")
        ->expected(4);
    add_common(check_cmd, check_opt, /*with_cap=*/false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (classify_cmd->parsed()) return cmd_classify(path, classify_opt, strict_exit);
        if (elect_cmd->parsed()) return cmd_elect(path, elect_opt);
        if (simulate_cmd->parsed()) return cmd_simulate(path, simulate_opt);
        if (gen_cmd->parsed()) return cmd_gen(family, gen_params, out_path, seed);
        if (check_cmd->parsed()) return cmd_check(path, random_spec, check_opt);
    } catch (const InfeasibleConfiguration& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
