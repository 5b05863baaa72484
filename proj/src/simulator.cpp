#include "radiole/simulator.hpp"

#include <algorithm>
#include <stdexcept>

namespace radiole {

std::vector<HistoryEntry> resolve_round(const std::vector<RoundAction>& actions,
                                        const std::vector<std::vector<int>>& adjacency) {
    const std::size_t n = actions.size();
    if (adjacency.size() != n)
        throw std::logic_error("resolve_round: action and adjacency sizes differ");

    std::vector<HistoryEntry> entries(n);
    for (std::size_t v = 0; v < n; ++v) {
        if (actions[v].role == ChannelRole::Transmitting) {
            entries[v] = silence();
            continue;
        }
        int transmitting_neighbours = 0;
        const std::string* payload = nullptr;
        for (int w : adjacency[v]) {
            if (actions[static_cast<std::size_t>(w)].role == ChannelRole::Transmitting) {
                ++transmitting_neighbours;
                payload = &actions[static_cast<std::size_t>(w)].payload;
            }
        }
        if (transmitting_neighbours == 0)
            entries[v] = silence();
        else if (transmitting_neighbours == 1)
            entries[v] = message(*payload);
        else
            entries[v] = noise();
    }
    return entries;
}

long default_round_cap(int n, int sigma) {
    const long half = (n + 1) / 2;
    return 4 * (half * (static_cast<long>(n) * (2L * sigma + 1) + sigma) + 1);
}

ExecutionTrace run(const Configuration& c, const DecisionFn& drip, RunOptions options) {
    require_valid(c);
    if (c.min_tag() != 0)
        throw InvalidConfiguration("run: tags are not normalized (minimum tag must be 0)");

    const int n = c.n();
    const auto adjacency = c.adjacency();
    const long cap = options.round_cap > 0 ? options.round_cap : default_round_cap(n, c.span());

    ExecutionTrace trace;
    trace.nodes.resize(static_cast<std::size_t>(n));
    std::vector<char> awake(static_cast<std::size_t>(n), 0);
    std::vector<char> terminated(static_cast<std::size_t>(n), 0);

    for (long g = 0;; ++g) {
        if (g > cap)
            throw SimulationLimit("round cap of " + std::to_string(cap) +
                                  " global rounds exceeded; the protocol did not terminate");

        // Phase one: every awake, non-terminated node decides from the
        // history it accumulated through the previous round.
        std::vector<RoundAction> actions(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            auto& node = trace.nodes[static_cast<std::size_t>(v)];
            if (!awake[v] || terminated[v]) continue;
            Action a;
            try {
                a = drip(node.history);
            } catch (const ProtocolMismatch& e) {
                throw ProtocolMismatch(std::string(e.what()) + " (node " + std::to_string(v) +
                                       ", global round " + std::to_string(g) + ")");
            } catch (const Error& e) {
                throw Error(std::string(e.what()) + " (node " + std::to_string(v) +
                            ", global round " + std::to_string(g) + ")");
            }
            switch (a.kind) {
            case ActionKind::Listen:
                actions[static_cast<std::size_t>(v)].role = ChannelRole::Listening;
                break;
            case ActionKind::Transmit:
                if (a.payload.empty())
                    throw Error("run: transmit payload must be nonempty (node " +
                                std::to_string(v) + ", global round " + std::to_string(g) + ")");
                actions[static_cast<std::size_t>(v)] = {ChannelRole::Transmitting, a.payload};
                break;
            case ActionKind::Terminate:
                terminated[v] = 1;
                node.done_round = g - node.wake_global_round;
                break;
            }
        }

        // Phase two: resolve the channel and commit this round's entries.
        const auto entries = resolve_round(actions, adjacency);
        RoundRecord record;
        record.global_round = g;
        for (int v = 0; v < n; ++v)
            if (actions[static_cast<std::size_t>(v)].role == ChannelRole::Transmitting)
                record.transmitters.emplace_back(v, actions[static_cast<std::size_t>(v)].payload);

        for (int v = 0; v < n; ++v) {
            auto& node = trace.nodes[static_cast<std::size_t>(v)];
            const auto role = actions[static_cast<std::size_t>(v)].role;
            if (role != ChannelRole::Inactive) {
                node.history.push_back(entries[static_cast<std::size_t>(v)]);
                record.deliveries.emplace_back(v, entries[static_cast<std::size_t>(v)]);
            } else if (!awake[v]) {
                // Wakeups. A clean message forces the node awake in this
                // round; simultaneous transmissions by several neighbours do
                // not (noise is not a message) and are logged. Failing both,
                // the node wakes spontaneously once its tag round arrives.
                if (entries[static_cast<std::size_t>(v)].kind == EntryKind::Message) {
                    awake[v] = 1;
                    node.wake_global_round = g;
                    node.history.push_back(entries[static_cast<std::size_t>(v)]);
                    record.deliveries.emplace_back(v, entries[static_cast<std::size_t>(v)]);
                } else {
                    if (entries[static_cast<std::size_t>(v)].kind == EntryKind::Noise)
                        trace.suppressed_wakeups.emplace_back(g, v);
                    if (c.tags[static_cast<std::size_t>(v)] == g) {
                        awake[v] = 1;
                        node.wake_global_round = g;
                        node.history.push_back(silence());
                        record.deliveries.emplace_back(v, silence());
                    }
                }
            }
        }
        trace.rounds.push_back(std::move(record));

        if (std::all_of(terminated.begin(), terminated.end(), [](char t) { return t != 0; }))
            break;
    }

    trace.total_global_rounds = static_cast<long>(trace.rounds.size());
    return trace;
}

}  // namespace radiole
