#pragma once

#include <functional>
#include <string>
#include <vector>

#include "radiole/classifier.hpp"

namespace radiole {

enum class EntryKind { Silence, Message, Noise };

// One channel observation. Entry 0 of a history is the wakeup record:
// Silence for a spontaneous wakeup, Message for a forced one.
struct HistoryEntry {
    EntryKind kind = EntryKind::Silence;
    std::string payload;  // nonempty exactly when kind == Message

    bool operator==(const HistoryEntry&) const = default;
};

inline HistoryEntry silence() { return {EntryKind::Silence, {}}; }
inline HistoryEntry message(std::string payload) { return {EntryKind::Message, std::move(payload)}; }
inline HistoryEntry noise() { return {EntryKind::Noise, {}}; }

// Indexed by local round, starting at the wakeup record in position 0.
using History = std::vector<HistoryEntry>;

enum class ActionKind { Listen, Transmit, Terminate };

struct Action {
    ActionKind kind = ActionKind::Listen;
    std::string payload;

    static Action listen() { return {ActionKind::Listen, {}}; }
    static Action transmit(std::string payload) { return {ActionKind::Transmit, std::move(payload)}; }
    static Action terminate() { return {ActionKind::Terminate, {}}; }

    bool operator==(const Action&) const = default;
};

// A protocol is a pure function of the history alone: in local round i every
// node evaluates it on entries 0..i-1 and performs the resulting action.
// Nodes carry no identity, so this is the only shape a protocol can take.
using DecisionFn = std::function<Action(const History&)>;

// One matchable item of a protocol list: the transmission block the class
// representative used in the previous phase, and everything it heard there.
struct ProtocolEntry {
    int old_class = 0;
    Label label;

    bool operator==(const ProtocolEntry&) const = default;
};

struct ProtocolList {
    bool is_terminate = false;
    std::vector<ProtocolEntry> entries;  // empty when is_terminate

    bool operator==(const ProtocolList&) const = default;
};

// The program installed identically at every node: one list per phase (the
// last one being the terminate marker), the span, and the closed-form phase
// boundaries r_0..r_J with r_j = r_{j-1} + |L_j|*(2*sigma+1) + sigma for
// non-terminal phases and r_J = r_{J-1} + 1.
struct CanonicalProtocol {
    int sigma = 0;
    std::vector<ProtocolList> lists;          // lists[j-1] holds the list for phase j
    std::vector<int> num_classes_per_phase;   // |L_j| for each non-terminal phase
    std::vector<long> phase_ends;             // phase_ends[j] = r_j, j in [0, J]

    int num_phases() const noexcept { return static_cast<int>(lists.size()); }
    long block_length() const noexcept { return 2L * sigma + 1; }
    long terminate_round() const { return phase_ends[lists.size() - 1] + 1; }  // r_{J-1} + 1

    bool operator==(const CanonicalProtocol&) const = default;
};

// Derives the per-configuration protocol from a finished partition trace.
// Phase 1 always carries the single seed entry (class 1, empty label); each
// later list holds one entry per class of its snapshot, and the phase right
// after the verdict is the terminate marker.
CanonicalProtocol build_canonical(const PartitionTrace& trace, int sigma);

// Finds the smallest k whose entry in the list for `phase` matches the
// history: the entry's old class must equal prev_tblock, and (for phase >= 2)
// every block-section round of the previous phase must agree with the entry's
// label, slot by slot. Throws ProtocolMismatch when nothing matches.
int match_tblock(const History& history, const CanonicalProtocol& protocol, int phase,
                 int prev_tblock);

// The node automaton: terminate from local round r_{J-1}+1 on; otherwise
// locate the current phase, re-derive the transmission block by matching
// every completed phase in order, and transmit "1" exactly at round sigma+1
// of that block, listening everywhere else (including each phase's trailing
// sigma rounds).
Action canonical_decision(const History& history, const CanonicalProtocol& protocol);

// Wraps a protocol as a DecisionFn for the simulator.
DecisionFn canonical_drip(CanonicalProtocol protocol);

// Clock conversions, exact whenever every wakeup is spontaneous (no node
// transmits in global rounds 0..sigma).
long local_to_global(long local_round, int tag);
long global_to_local(long global_round, int tag);  // throws Error when global_round < tag

}  // namespace radiole
