#pragma once

#include <vector>

#include "radiole/classifier.hpp"
#include "radiole/config.hpp"
#include "radiole/drip.hpp"
#include "radiole/simulator.hpp"

namespace radiole {

// Outcome of a full election. The leader is identified by its unique history;
// the node index is only the simulator-side handle for it.
struct ElectionResult {
    int leader = -1;
    History leader_history;
    long rounds_used = 0;              // last global round of the execution
    std::vector<int> per_node_decision;  // 0/1, exactly one 1
};

// Picks the leader out of an already-simulated canonical execution: the node
// in the smallest single-member class of the final snapshot. Verifies that
// its full history differs from every other node's; the decision function is
// exactly that comparison. Throws InfeasibleConfiguration on a No verdict.
ElectionResult elect_from(const Configuration& c, const PartitionTrace& trace,
                          const CanonicalProtocol& protocol, const ExecutionTrace& execution);

// Classifies, builds the canonical protocol, simulates it, and elects.
ElectionResult elect(const Configuration& c);

struct Mismatch {
    int iteration = 0;
    int v = 0;
    int w = 0;

    bool operator==(const Mismatch&) const = default;
};

// Empirical check of the equivalence the whole construction rests on:
// grouping nodes by classifier class must coincide with grouping them by
// simulated history at every phase boundary, and a Yes verdict must coincide
// with some node ending up with a one-of-a-kind history.
struct CrossCheckReport {
    std::vector<Mismatch> mismatches;
    VerdictKind classifier_verdict = VerdictKind::No;
    bool unique_history_exists = false;
    bool verdict_consistent = false;

    bool ok() const noexcept { return mismatches.empty() && verdict_consistent; }
};

// Runs the classifier and, independently, a simulation of the canonical
// protocol; compares the two partitions at every phase boundary and the
// verdicts at the end. Any mismatch reported is an implementation bug.
CrossCheckReport cross_check(const Configuration& c);

}  // namespace radiole
