#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>
#include <sstream>

#include "radiole/election.hpp"
#include "radiole/serialize.hpp"

namespace py = pybind11;
using namespace radiole;

namespace {

std::string entry_kind_name(EntryKind kind) {
    switch (kind) {
    case EntryKind::Silence: return "silence";
    case EntryKind::Message: return "message";
    case EntryKind::Noise: return "noise";
    }
    return "silence";
}

std::string verdict_name(VerdictKind kind) {
    return kind == VerdictKind::Yes ? "YES" : "NO";
}

}  // namespace

PYBIND11_MODULE(_radiole, m) {
    m.doc() = "Feasibility classification, protocol construction, and leader election "
              "for anonymous radio networks";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<InvalidConfiguration>(m, "InvalidConfigurationError", PyExc_ValueError);
    py::register_exception<InfeasibleConfiguration>(m, "InfeasibleError", PyExc_RuntimeError);
    py::register_exception<ProtocolMismatch>(m, "ProtocolMismatchError", PyExc_RuntimeError);
    py::register_exception<SimulationLimit>(m, "SimulationLimitError", PyExc_RuntimeError);

    py::class_<Configuration>(m, "Configuration")
        .def(py::init<>())
        .def(py::init([](std::vector<int> tags, std::vector<std::pair<int, int>> edges) {
                 Configuration c;
                 c.tags = std::move(tags);
                 c.edges = std::move(edges);
                 return c;
             }),
             py::arg("tags"), py::arg("edges"))
        .def_readwrite("tags", &Configuration::tags)
        .def_readwrite("edges", &Configuration::edges)
        .def_property_readonly("n", &Configuration::n)
        .def_property_readonly("sigma", &Configuration::span)
        .def("__eq__", [](const Configuration& a, const Configuration& b) { return a == b; })
        .def("__repr__", [](const Configuration& c) {
            std::ostringstream out;
            out << "Configuration(n=" << c.n() << ", sigma=" << c.span()
                << ", edges=" << c.edges.size() << ")";
            return out.str();
        });

    m.def("parse_configuration",
          [](const std::string& text) { return parse_configuration(text); }, py::arg("text"));
    m.def("serialize_configuration", &serialize_configuration, py::arg("config"),
          py::arg("header") = std::string_view{});
    m.def("validate", [](const Configuration& c) { return validate(c).violations; },
          py::arg("config"), "Returns the list of invariant violations (empty when valid).");
    m.def("normalize_tags", [](const Configuration& c) { return normalize_tags(c); },
          py::arg("config"));
    m.def("gen_gm", &gen_gm, py::arg("m"));
    m.def("gen_hm", &gen_hm, py::arg("m"));
    m.def("gen_sm", &gen_sm, py::arg("m"));
    m.def("gen_random", &gen_random, py::arg("n"), py::arg("edge_prob"), py::arg("max_tag"),
          py::arg("seed"));
    m.def("gen_batch", &gen_batch, py::arg("n_max"), py::arg("tag_max"), py::arg("count"),
          py::arg("seed"));

    py::class_<HistoryEntry>(m, "HistoryEntry")
        .def_property_readonly("kind",
                               [](const HistoryEntry& e) { return entry_kind_name(e.kind); })
        .def_readonly("payload", &HistoryEntry::payload)
        .def("__eq__", [](const HistoryEntry& a, const HistoryEntry& b) { return a == b; })
        .def("__repr__", [](const HistoryEntry& e) {
            if (e.kind == EntryKind::Message) return "HistoryEntry(message, '" + e.payload + "')";
            return "HistoryEntry(" + entry_kind_name(e.kind) + ")";
        });
    m.def("silence", &silence);
    m.def("message", &message, py::arg("payload"));
    m.def("noise", &noise);

    py::class_<Action>(m, "Action")
        .def_static("listen", &Action::listen)
        .def_static("transmit", &Action::transmit, py::arg("payload"))
        .def_static("terminate", &Action::terminate)
        .def("__repr__", [](const Action& a) {
            switch (a.kind) {
            case ActionKind::Listen: return std::string("Action.listen()");
            case ActionKind::Transmit: return "Action.transmit('" + a.payload + "')";
            case ActionKind::Terminate: return std::string("Action.terminate()");
            }
            return std::string("Action()");
        });

    py::class_<PartitionTrace>(m, "PartitionTrace")
        .def_property_readonly("verdict",
                               [](const PartitionTrace& t) { return verdict_name(t.verdict.kind); })
        .def_property_readonly("winning_class",
                               [](const PartitionTrace& t) -> py::object {
                                   if (t.verdict.kind == VerdictKind::Yes)
                                       return py::int_(t.verdict.winning_class);
                                   return py::none();
                               })
        .def_property_readonly("verdict_iteration",
                               [](const PartitionTrace& t) { return t.verdict.iteration; })
        .def_property_readonly("iterations",
                               [](const PartitionTrace& t) { return static_cast<int>(t.snapshots.size()); })
        .def_property_readonly("basic_ops", [](const PartitionTrace& t) { return t.basic_ops; })
        .def("classes", [](const PartitionTrace& t, int j) { return t.snapshot(j).classes; },
             py::arg("j"), "Class assignment at the start of phase j (1-based).")
        .def("num_classes", [](const PartitionTrace& t, int j) { return t.snapshot(j).num_classes; },
             py::arg("j"))
        .def("to_json", [](const PartitionTrace& t) { return trace_to_json(t).dump(2); });
    m.def("classify", &classify, py::arg("config"));

    py::class_<CanonicalProtocol>(m, "CanonicalProtocol")
        .def_readonly("sigma", &CanonicalProtocol::sigma)
        .def_readonly("phase_ends", &CanonicalProtocol::phase_ends)
        .def_readonly("num_classes_per_phase", &CanonicalProtocol::num_classes_per_phase)
        .def_property_readonly("num_phases", &CanonicalProtocol::num_phases)
        .def_property_readonly("terminate_round", &CanonicalProtocol::terminate_round)
        .def("to_json", [](const CanonicalProtocol& p) { return protocol_to_json(p).dump(2); });
    m.def("build_canonical", &build_canonical, py::arg("trace"), py::arg("sigma"));
    m.def("canonical_decision", &canonical_decision, py::arg("history"), py::arg("protocol"));
    m.def("match_tblock", &match_tblock, py::arg("history"), py::arg("protocol"), py::arg("phase"),
          py::arg("prev_tblock"));
    m.def("local_to_global", &local_to_global, py::arg("local_round"), py::arg("tag"));
    m.def("global_to_local", &global_to_local, py::arg("global_round"), py::arg("tag"));

    py::class_<NodeOutcome>(m, "NodeOutcome")
        .def_readonly("history", &NodeOutcome::history)
        .def_readonly("wake_global_round", &NodeOutcome::wake_global_round)
        .def_readonly("done_round", &NodeOutcome::done_round);

    py::class_<ExecutionTrace>(m, "ExecutionTrace")
        .def_readonly("nodes", &ExecutionTrace::nodes)
        .def_readonly("total_global_rounds", &ExecutionTrace::total_global_rounds)
        .def_readonly("suppressed_wakeups", &ExecutionTrace::suppressed_wakeups)
        .def_property_readonly("transmissions",
                               [](const ExecutionTrace& t) {
                                   std::vector<std::tuple<long, int, std::string>> out;
                                   for (const auto& r : t.rounds)
                                       for (const auto& [node, payload] : r.transmitters)
                                           out.emplace_back(r.global_round, node, payload);
                                   return out;
                               },
                               "All transmissions as (global_round, node, payload) tuples.")
        .def("to_json", [](const ExecutionTrace& t) { return execution_to_json(t).dump(2); })
        .def("to_dot", [](const ExecutionTrace& t, const Configuration& c) {
            return execution_to_dot(t, c);
        }, py::arg("config"));

    m.def("run",
          [](const Configuration& c, const DecisionFn& decision, long round_cap) {
              return run(c, decision, {round_cap});
          },
          py::arg("config"), py::arg("decision"), py::arg("round_cap") = 0,
          "Execute an arbitrary protocol: decision maps a history to an Action.");
    m.def("simulate_canonical",
          [](const Configuration& c, long round_cap) {
              auto trace = classify(c);
              auto protocol = build_canonical(trace, c.span());
              return run(c, canonical_drip(protocol), {round_cap});
          },
          py::arg("config"), py::arg("round_cap") = 0);

    py::class_<ElectionResult>(m, "ElectionResult")
        .def_readonly("leader", &ElectionResult::leader)
        .def_readonly("leader_history", &ElectionResult::leader_history)
        .def_readonly("rounds_used", &ElectionResult::rounds_used)
        .def_readonly("per_node_decision", &ElectionResult::per_node_decision)
        .def("to_json", [](const ElectionResult& r) { return election_to_json(r).dump(2); });
    m.def("elect", &elect, py::arg("config"));

    py::class_<CrossCheckReport>(m, "CrossCheckReport")
        .def_property_readonly("ok", &CrossCheckReport::ok)
        .def_property_readonly("mismatches",
                               [](const CrossCheckReport& r) {
                                   std::vector<std::tuple<int, int, int>> out;
                                   for (const auto& mm : r.mismatches)
                                       out.emplace_back(mm.iteration, mm.v, mm.w);
                                   return out;
                               })
        .def_property_readonly("verdict",
                               [](const CrossCheckReport& r) { return verdict_name(r.classifier_verdict); })
        .def_readonly("unique_history_exists", &CrossCheckReport::unique_history_exists)
        .def_readonly("verdict_consistent", &CrossCheckReport::verdict_consistent)
        .def("to_json", [](const CrossCheckReport& r) { return report_to_json(r).dump(2); });
    m.def("cross_check", &cross_check, py::arg("config"));

#ifdef RADIOLE_VERSION
    m.attr("__version__") = RADIOLE_VERSION;
#else
    m.attr("__version__") = "dev";
#endif
}
