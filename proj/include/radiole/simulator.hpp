#pragma once

#include <string>
#include <utility>
#include <vector>

#include "radiole/config.hpp"
#include "radiole/drip.hpp"

namespace radiole {

// What a node does on the channel in one global round. Inactive covers
// sleeping and terminated nodes: they neither transmit nor listen, but a
// clean single transmission still reaches a sleeper (it wakes it up).
enum class ChannelRole { Inactive, Listening, Transmitting };

struct RoundAction {
    ChannelRole role = ChannelRole::Inactive;
    std::string payload;
};

// Resolves one synchronous round: every decision is fixed before any
// delivery. Per node, the returned entry is
//   - Silence for a transmitter (own transmissions are inaudible),
//   - Message(payload) when exactly one neighbour transmits,
//   - Noise when two or more neighbours transmit,
//   - Silence otherwise.
// For Inactive nodes the entry is advisory: the caller decides whether a
// Message wakes the node.
std::vector<HistoryEntry> resolve_round(const std::vector<RoundAction>& actions,
                                        const std::vector<std::vector<int>>& adjacency);

struct NodeOutcome {
    History history;
    long wake_global_round = -1;
    long done_round = -1;  // local round of the first terminate decision
};

struct RoundRecord {
    long global_round = 0;
    std::vector<std::pair<int, std::string>> transmitters;       // node, payload
    std::vector<std::pair<int, HistoryEntry>> deliveries;        // entries appended this round
};

struct ExecutionTrace {
    std::vector<RoundRecord> rounds;
    std::vector<NodeOutcome> nodes;
    long total_global_rounds = 0;
    // Rounds in which a sleeping node had two or more transmitting
    // neighbours: noise is not a message, so the node was not woken.
    std::vector<std::pair<long, int>> suppressed_wakeups;
};

struct RunOptions {
    long round_cap = 0;  // 0 selects default_round_cap(n, sigma)
};

// Four times the worst-case length of a canonical execution.
long default_round_cap(int n, int sigma);

// Executes the decision function on the configuration. Global rounds advance
// from 0; node v wakes spontaneously in round tags[v] (wakeup record Silence)
// or earlier when a clean message reaches it (wakeup record Message). From
// local round 1 on, every awake node acts on its history each round; all
// decisions in a round precede all deliveries. Runs until every node has
// terminated, or throws SimulationLimit at the round cap.
ExecutionTrace run(const Configuration& c, const DecisionFn& drip, RunOptions options = {});

}  // namespace radiole
