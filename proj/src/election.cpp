#include "radiole/election.hpp"

#include <algorithm>
#include <stdexcept>

namespace radiole {

ElectionResult elect_from(const Configuration& c, const PartitionTrace& trace,
                          const CanonicalProtocol& protocol, const ExecutionTrace& execution) {
    if (trace.verdict.kind == VerdictKind::No)
        throw InfeasibleConfiguration("no protocol can elect a leader for this configuration (verdict No at iteration " +
                                      std::to_string(trace.verdict.iteration) + ")");

    const int n = c.n();
    const IterationSnapshot& final_snapshot = trace.snapshots.back();

    int leader = -1;
    for (int v = 0; v < n; ++v) {
        if (final_snapshot.classes[static_cast<std::size_t>(v)] == trace.verdict.winning_class) {
            if (leader != -1)
                throw std::logic_error("elect: winning class holds more than one node");
            leader = v;
        }
    }
    if (leader == -1) throw std::logic_error("elect: winning class holds no node");

    ElectionResult result;
    result.leader = leader;
    result.leader_history = execution.nodes[static_cast<std::size_t>(leader)].history;
    result.rounds_used = execution.total_global_rounds - 1;
    result.per_node_decision.resize(static_cast<std::size_t>(n), 0);
    int ones = 0;
    for (int v = 0; v < n; ++v) {
        const bool is_leader_history =
            execution.nodes[static_cast<std::size_t>(v)].history == result.leader_history;
        result.per_node_decision[static_cast<std::size_t>(v)] = is_leader_history ? 1 : 0;
        ones += is_leader_history ? 1 : 0;
    }
    if (ones != 1)
        throw std::logic_error("elect: designated leader's history is not unique (" +
                               std::to_string(ones) + " nodes share it)");
    (void)protocol;
    return result;
}

ElectionResult elect(const Configuration& c) {
    PartitionTrace trace = classify(c);
    if (trace.verdict.kind == VerdictKind::No)
        throw InfeasibleConfiguration("no protocol can elect a leader for this configuration (verdict No at iteration " +
                                      std::to_string(trace.verdict.iteration) + ")");
    CanonicalProtocol protocol = build_canonical(trace, c.span());
    ExecutionTrace execution = run(c, canonical_drip(protocol));
    return elect_from(c, trace, protocol, execution);
}

namespace {

bool prefix_equal(const History& x, const History& y, long length) {
    for (long i = 0; i < length; ++i)
        if (x[static_cast<std::size_t>(i)] != y[static_cast<std::size_t>(i)]) return false;
    return true;
}

}  // namespace

CrossCheckReport cross_check(const Configuration& c) {
    PartitionTrace trace = classify(c);
    CanonicalProtocol protocol = build_canonical(trace, c.span());
    ExecutionTrace execution = run(c, canonical_drip(protocol));

    CrossCheckReport report;
    report.classifier_verdict = trace.verdict.kind;

    const int n = c.n();
    const int num_phases = protocol.num_phases();
    for (int j = 1; j <= num_phases; ++j) {
        // History through local round r_{j-1} against the classes of snapshot j.
        const long prefix = protocol.phase_ends[static_cast<std::size_t>(j) - 1] + 1;
        const IterationSnapshot& snap = trace.snapshot(j);
        for (int v = 0; v < n; ++v) {
            for (int w = v + 1; w < n; ++w) {
                const bool same_history =
                    prefix_equal(execution.nodes[static_cast<std::size_t>(v)].history,
                                 execution.nodes[static_cast<std::size_t>(w)].history, prefix);
                const bool same_class = snap.classes[static_cast<std::size_t>(v)] ==
                                        snap.classes[static_cast<std::size_t>(w)];
                if (same_history != same_class) report.mismatches.push_back({j, v, w});
            }
        }
    }

    bool unique_exists = false;
    for (int v = 0; v < n && !unique_exists; ++v) {
        bool unique = true;
        for (int w = 0; w < n; ++w) {
            if (w == v) continue;
            if (execution.nodes[static_cast<std::size_t>(v)].history ==
                execution.nodes[static_cast<std::size_t>(w)].history) {
                unique = false;
                break;
            }
        }
        unique_exists = unique;
    }
    report.unique_history_exists = unique_exists;
    report.verdict_consistent = (trace.verdict.kind == VerdictKind::Yes) == unique_exists;
    return report;
}

}  // namespace radiole
