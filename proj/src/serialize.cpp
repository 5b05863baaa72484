#include "radiole/serialize.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>
#include <sstream>

namespace radiole {

using nlohmann::json;

nlohmann::json entry_to_json(const HistoryEntry& e) {
    switch (e.kind) {
    case EntryKind::Silence: return nullptr;
    case EntryKind::Message: return json{{"msg", e.payload}};
    case EntryKind::Noise: return "*";
    }
    return nullptr;
}

HistoryEntry entry_from_json(const json& j) {
    if (j.is_null()) return silence();
    if (j.is_string() && j.get<std::string>() == "*") return noise();
    if (j.is_object() && j.contains("msg")) return message(j.at("msg").get<std::string>());
    throw Error("entry_from_json: unrecognized history entry " + j.dump());
}

namespace {

json history_to_json(const History& h) {
    json arr = json::array();
    for (const HistoryEntry& e : h) arr.push_back(entry_to_json(e));
    return arr;
}

History history_from_json(const json& j) {
    History h;
    for (const auto& e : j) h.push_back(entry_from_json(e));
    return h;
}

}  // namespace

nlohmann::json label_to_json(const Label& label) {
    json arr = json::array();
    for (const Triple& t : label)
        arr.push_back(json::array({t.cls, t.block_round, t.mult == Mult::One ? "1" : "*"}));
    return arr;
}

Label label_from_json(const json& j) {
    Label label;
    for (const auto& t : j) {
        const std::string mult = t.at(2).get<std::string>();
        if (mult != "1" && mult != "*")
            throw Error("label_from_json: bad multiplicity flag '" + mult + "'");
        label.push_back({t.at(0).get<int>(), t.at(1).get<int>(),
                         mult == "1" ? Mult::One : Mult::Star});
    }
    return label;
}

nlohmann::json trace_to_json(const PartitionTrace& trace) {
    json iterations = json::array();
    for (const IterationSnapshot& snap : trace.snapshots) {
        json labels = json::array();
        for (const Label& label : snap.labels) labels.push_back(label_to_json(label));
        iterations.push_back(json{{"classes", snap.classes},
                                  {"labels", labels},
                                  {"reps", snap.reps},
                                  {"num_classes", snap.num_classes}});
    }
    json out{{"iterations", iterations},
             {"verdict", trace.verdict.kind == VerdictKind::Yes ? "YES" : "NO"},
             {"verdict_iteration", trace.verdict.iteration}};
    if (trace.verdict.kind == VerdictKind::Yes)
        out["winning_class"] = trace.verdict.winning_class;
    else
        out["winning_class"] = nullptr;
    return out;
}

PartitionTrace trace_from_json(const json& j) {
    PartitionTrace trace;
    for (const auto& it : j.at("iterations")) {
        IterationSnapshot snap;
        snap.classes = it.at("classes").get<std::vector<int>>();
        for (const auto& label : it.at("labels")) snap.labels.push_back(label_from_json(label));
        snap.reps = it.at("reps").get<std::vector<int>>();
        snap.num_classes = it.at("num_classes").get<int>();
        trace.snapshots.push_back(std::move(snap));
    }
    const std::string verdict = j.at("verdict").get<std::string>();
    if (verdict != "YES" && verdict != "NO")
        throw Error("trace_from_json: bad verdict '" + verdict + "'");
    trace.verdict.kind = verdict == "YES" ? VerdictKind::Yes : VerdictKind::No;
    trace.verdict.iteration = j.at("verdict_iteration").get<int>();
    if (trace.verdict.kind == VerdictKind::Yes)
        trace.verdict.winning_class = j.at("winning_class").get<int>();
    return trace;
}

nlohmann::json protocol_to_json(const CanonicalProtocol& protocol) {
    json lists = json::array();
    for (const ProtocolList& list : protocol.lists) {
        if (list.is_terminate) {
            lists.push_back("terminate");
            continue;
        }
        json entries = json::array();
        for (const ProtocolEntry& e : list.entries)
            entries.push_back(json::array({e.old_class, label_to_json(e.label)}));
        lists.push_back(entries);
    }
    return json{{"lists", lists}, {"sigma", protocol.sigma}, {"phase_ends", protocol.phase_ends}};
}

CanonicalProtocol protocol_from_json(const json& j) {
    CanonicalProtocol protocol;
    protocol.sigma = j.at("sigma").get<int>();
    protocol.phase_ends = j.at("phase_ends").get<std::vector<long>>();
    for (const auto& list : j.at("lists")) {
        if (list.is_string()) {
            if (list.get<std::string>() != "terminate")
                throw Error("protocol_from_json: bad list sentinel " + list.dump());
            protocol.lists.push_back({true, {}});
            continue;
        }
        ProtocolList out;
        for (const auto& e : list)
            out.entries.push_back({e.at(0).get<int>(), label_from_json(e.at(1))});
        protocol.num_classes_per_phase.push_back(static_cast<int>(out.entries.size()));
        protocol.lists.push_back(std::move(out));
    }
    return protocol;
}

nlohmann::json execution_to_json(const ExecutionTrace& trace) {
    json rounds = json::array();
    for (const RoundRecord& r : trace.rounds) {
        json transmitters = json::array();
        for (const auto& [node, payload] : r.transmitters)
            transmitters.push_back(json{{"node", node}, {"payload", payload}});
        json deliveries = json::array();
        for (const auto& [node, entry] : r.deliveries)
            deliveries.push_back(json{{"node", node}, {"entry", entry_to_json(entry)}});
        rounds.push_back(json{{"global_round", r.global_round},
                              {"transmitters", transmitters},
                              {"deliveries", deliveries}});
    }
    json nodes = json::array();
    for (std::size_t v = 0; v < trace.nodes.size(); ++v) {
        const NodeOutcome& node = trace.nodes[v];
        nodes.push_back(json{{"node", static_cast<int>(v)},
                             {"wake_global_round", node.wake_global_round},
                             {"done_round", node.done_round},
                             {"history", history_to_json(node.history)}});
    }
    json suppressed = json::array();
    for (const auto& [round, node] : trace.suppressed_wakeups)
        suppressed.push_back(json{{"global_round", round}, {"node", node}});
    return json{{"rounds", rounds},
                {"nodes", nodes},
                {"total_global_rounds", trace.total_global_rounds},
                {"suppressed_wakeups", suppressed}};
}

ExecutionTrace execution_from_json(const json& j) {
    ExecutionTrace trace;
    for (const auto& r : j.at("rounds")) {
        RoundRecord record;
        record.global_round = r.at("global_round").get<long>();
        for (const auto& t : r.at("transmitters"))
            record.transmitters.emplace_back(t.at("node").get<int>(),
                                             t.at("payload").get<std::string>());
        for (const auto& d : r.at("deliveries"))
            record.deliveries.emplace_back(d.at("node").get<int>(), entry_from_json(d.at("entry")));
        trace.rounds.push_back(std::move(record));
    }
    for (const auto& v : j.at("nodes")) {
        NodeOutcome node;
        node.wake_global_round = v.at("wake_global_round").get<long>();
        node.done_round = v.at("done_round").get<long>();
        node.history = history_from_json(v.at("history"));
        trace.nodes.push_back(std::move(node));
    }
    trace.total_global_rounds = j.at("total_global_rounds").get<long>();
    for (const auto& s : j.at("suppressed_wakeups"))
        trace.suppressed_wakeups.emplace_back(s.at("global_round").get<long>(),
                                              s.at("node").get<int>());
    return trace;
}

nlohmann::json election_to_json(const ElectionResult& result) {
    return json{{"leader", result.leader},
                {"leader_history", history_to_json(result.leader_history)},
                {"rounds_used", result.rounds_used},
                {"per_node_decision", result.per_node_decision}};
}

ElectionResult election_from_json(const json& j) {
    ElectionResult result;
    result.leader = j.at("leader").get<int>();
    result.leader_history = history_from_json(j.at("leader_history"));
    result.rounds_used = j.at("rounds_used").get<long>();
    result.per_node_decision = j.at("per_node_decision").get<std::vector<int>>();
    return result;
}

nlohmann::json report_to_json(const CrossCheckReport& report) {
    json mismatches = json::array();
    for (const Mismatch& m : report.mismatches)
        mismatches.push_back(json{{"iteration", m.iteration}, {"v", m.v}, {"w", m.w}});
    return json{{"mismatches", mismatches},
                {"verdict", report.classifier_verdict == VerdictKind::Yes ? "YES" : "NO"},
                {"unique_history_exists", report.unique_history_exists},
                {"verdict_consistent", report.verdict_consistent}};
}

CrossCheckReport report_from_json(const json& j) {
    CrossCheckReport report;
    for (const auto& m : j.at("mismatches"))
        report.mismatches.push_back(
            {m.at("iteration").get<int>(), m.at("v").get<int>(), m.at("w").get<int>()});
    report.classifier_verdict =
        j.at("verdict").get<std::string>() == "YES" ? VerdictKind::Yes : VerdictKind::No;
    report.unique_history_exists = j.at("unique_history_exists").get<bool>();
    report.verdict_consistent = j.at("verdict_consistent").get<bool>();
    return report;
}

std::string execution_to_dot(const ExecutionTrace& trace, const Configuration& c) {
    std::ostringstream out;
    for (const RoundRecord& record : trace.rounds) {
        const long g = record.global_round;
        out << "graph round_" << g << " {\n";
        out << "  graph [label=\"global round " << g << "\"];\n";
        for (int v = 0; v < c.n(); ++v) {
            const NodeOutcome& node = trace.nodes[static_cast<std::size_t>(v)];
            const bool transmitting =
                std::any_of(record.transmitters.begin(), record.transmitters.end(),
                            [v](const auto& t) { return t.first == v; });
            const bool asleep = node.wake_global_round < 0 || g < node.wake_global_round;
            const bool done =
                node.done_round >= 0 && !asleep && g - node.wake_global_round >= node.done_round;
            out << "  n" << v << " [label=\"" << v << " tag=" << c.tags[static_cast<std::size_t>(v)]
                << "\"";
            if (transmitting)
                out << ", style=filled, fillcolor=gray";
            else if (asleep)
                out << ", style=dotted";
            else if (done)
                out << ", style=dashed";
            out << "];\n";
        }
        for (const auto& [a, b] : c.edges) out << "  n" << a << " -- n" << b << ";\n";
        out << "}\n";
    }
    return out.str();
}

}  // namespace radiole
