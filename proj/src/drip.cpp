#include "radiole/drip.hpp"

#include <stdexcept>

namespace radiole {

CanonicalProtocol build_canonical(const PartitionTrace& trace, int sigma) {
    if (trace.verdict.iteration < 1)
        throw std::logic_error("build_canonical: trace carries no verdict");
    const int num_phases = trace.verdict.iteration + 1;
    if (static_cast<int>(trace.snapshots.size()) != num_phases)
        throw std::logic_error("build_canonical: snapshot count does not match verdict iteration");

    CanonicalProtocol p;
    p.sigma = sigma;
    p.lists.reserve(static_cast<std::size_t>(num_phases));

    // Phase 1: everyone starts in class 1 with nothing heard yet.
    p.lists.push_back({false, {ProtocolEntry{1, {}}}});

    for (int j = 2; j < num_phases; ++j) {
        const IterationSnapshot& snap = trace.snapshot(j);
        const IterationSnapshot& prev = trace.snapshot(j - 1);
        ProtocolList list;
        list.entries.reserve(static_cast<std::size_t>(snap.num_classes));
        for (int k = 1; k <= snap.num_classes; ++k) {
            const int rep = snap.reps[static_cast<std::size_t>(k) - 1];
            list.entries.push_back({prev.classes[rep], snap.labels[rep]});
        }
        p.lists.push_back(std::move(list));
    }

    p.lists.push_back({true, {}});

    for (const ProtocolList& list : p.lists) {
        if (list.is_terminate) continue;
        p.num_classes_per_phase.push_back(static_cast<int>(list.entries.size()));
        for (const ProtocolEntry& e : list.entries)
            for (const Triple& t : e.label)
                if (t.block_round < 1 || t.block_round > 2 * sigma + 1)
                    throw std::logic_error(
                        "build_canonical: label slot out of range for the given span");
    }

    p.phase_ends.push_back(0);
    for (int j = 1; j < num_phases; ++j)
        p.phase_ends.push_back(p.phase_ends.back() +
                               static_cast<long>(p.lists[static_cast<std::size_t>(j) - 1].entries.size()) *
                                   p.block_length() +
                               sigma);
    p.phase_ends.push_back(p.phase_ends.back() + 1);
    return p;
}

namespace {

// The unique triple with the given class/slot key, if present.
const Triple* find_triple(const Label& label, int cls, int block_round) {
    for (const Triple& t : label)
        if (t.cls == cls && t.block_round == block_round) return &t;
    return nullptr;
}

}  // namespace

int match_tblock(const History& history, const CanonicalProtocol& protocol, int phase,
                 int prev_tblock) {
    if (phase < 1 || phase > protocol.num_phases())
        throw std::logic_error("match_tblock: phase out of range");
    const ProtocolList& list = protocol.lists[static_cast<std::size_t>(phase) - 1];
    if (list.is_terminate)
        throw std::logic_error("match_tblock: list for this phase is the terminate marker");
    if (static_cast<long>(history.size()) <= protocol.phase_ends[static_cast<std::size_t>(phase) - 1])
        throw std::logic_error("match_tblock: history does not cover the previous phase");

    const long block = protocol.block_length();
    for (int k = 1; k <= static_cast<int>(list.entries.size()); ++k) {
        const ProtocolEntry& entry = list.entries[static_cast<std::size_t>(k) - 1];
        if (entry.old_class != prev_tblock) continue;

        bool matches = true;
        if (phase >= 2) {
            // Replay the block section of the previous phase slot by slot.
            const ProtocolList& prev_list = protocol.lists[static_cast<std::size_t>(phase) - 2];
            const long base = protocol.phase_ends[static_cast<std::size_t>(phase) - 2];
            for (int a = 1; matches && a <= static_cast<int>(prev_list.entries.size()); ++a) {
                for (long b = 1; b <= block; ++b) {
                    const long t = base + static_cast<long>(a - 1) * block + b;
                    const HistoryEntry& heard = history[static_cast<std::size_t>(t)];
                    const Triple* triple = find_triple(entry.label, a, static_cast<int>(b));
                    bool ok = false;
                    switch (heard.kind) {
                    case EntryKind::Message:
                        ok = triple && triple->mult == Mult::One && heard.payload == "1";
                        break;
                    case EntryKind::Noise:
                        ok = triple && triple->mult == Mult::Star;
                        break;
                    case EntryKind::Silence:
                        ok = triple == nullptr;
                        break;
                    }
                    if (!ok) {
                        matches = false;
                        break;
                    }
                }
            }
        }
        if (matches) return k;
    }
    throw ProtocolMismatch("match_tblock: history matches no entry of phase " +
                           std::to_string(phase));
}

Action canonical_decision(const History& history, const CanonicalProtocol& protocol) {
    const long round = static_cast<long>(history.size());  // the local round being decided
    if (round < 1)
        throw std::logic_error("canonical_decision: history must include the wakeup record");

    if (round >= protocol.terminate_round()) return Action::terminate();

    // r_{j-1} < round <= r_j; the guard above keeps j below the terminal phase.
    int phase = 1;
    while (round > protocol.phase_ends[static_cast<std::size_t>(phase)]) ++phase;

    int tblock = 1;
    for (int q = 1; q <= phase; ++q) tblock = match_tblock(history, protocol, q, tblock);

    const long pos = round - protocol.phase_ends[static_cast<std::size_t>(phase) - 1];
    const long block = protocol.block_length();
    const long section =
        static_cast<long>(protocol.lists[static_cast<std::size_t>(phase) - 1].entries.size()) * block;
    if (pos > section) return Action::listen();  // trailing listening rounds of the phase

    const int k = static_cast<int>((pos - 1) / block) + 1;
    const long in_block = pos - static_cast<long>(k - 1) * block;
    if (k == tblock && in_block == protocol.sigma + 1) return Action::transmit("1");
    return Action::listen();
}

DecisionFn canonical_drip(CanonicalProtocol protocol) {
    return [p = std::move(protocol)](const History& history) {
        return canonical_decision(history, p);
    };
}

long local_to_global(long local_round, int tag) { return local_round + tag; }

long global_to_local(long global_round, int tag) {
    if (global_round < tag)
        throw Error("global_to_local: round " + std::to_string(global_round) +
                    " precedes the wakeup tag " + std::to_string(tag));
    return global_round - tag;
}

}  // namespace radiole
