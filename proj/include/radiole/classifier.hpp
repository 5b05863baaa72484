#pragma once

#include <cstdint>
#include <vector>

#include "radiole/config.hpp"

namespace radiole {

// Whether exactly one neighbour transmitted in a slot (One) or several did,
// producing noise (Star).
enum class Mult { One, Star };

// One audible event in a phase: class `cls` was heard at round `block_round`
// of its transmission block (1 .. 2*sigma+1), with the given multiplicity.
struct Triple {
    int cls;
    int block_round;
    Mult mult;

    bool operator==(const Triple&) const = default;
};

enum class TripleOrder { Less, EqualKey, Greater };

// Total order on triples: by class, then block round, then One before Star.
// EqualKey only when all three components coincide; within one node's label
// equal (cls, block_round) pairs never coexist, so this is a strict order on
// the triples that actually appear together.
TripleOrder compare_triples(const Triple& x, const Triple& y) noexcept;

inline bool triple_less(const Triple& x, const Triple& y) noexcept {
    return compare_triples(x, y) == TripleOrder::Less;
}

// A node's record of everything it heard during one phase, sorted ascending
// by the triple order. Empty means the node heard only silence.
using Label = std::vector<Triple>;

// Working state of the partition refinement: the configuration plus per-node
// class numbers and labels, the class count, and one representative per class.
struct AugConfig {
    Configuration base;
    std::vector<std::vector<int>> adjacency;  // cached, neighbour lists sorted
    int sigma = 0;

    std::vector<int> classes;   // 1-based class number per node
    std::vector<Label> labels;
    int num_classes = 0;
    std::vector<int> reps;      // reps[k-1] = first node ever assigned class k

    std::uint64_t ops = 0;      // instrumented basic-operation counter
};

enum class VerdictKind { Yes, No };

struct Verdict {
    VerdictKind kind = VerdictKind::No;
    int winning_class = 0;  // smallest singleton class (Yes only)
    int iteration = 0;      // refinement iteration at which the verdict fired
};

// State at the start of phase j: snapshot(j) holds the classes and labels as
// they stand after j-1 refinement iterations (snapshot(1) is the initial
// single-class state).
struct IterationSnapshot {
    std::vector<int> classes;
    std::vector<Label> labels;
    std::vector<int> reps;
    int num_classes = 0;
};

struct PartitionTrace {
    std::vector<IterationSnapshot> snapshots;  // index i holds snapshot(i+1)
    Verdict verdict;
    std::uint64_t basic_ops = 0;

    // 1-based access matching the phase numbering; j in [1, snapshots.size()].
    const IterationSnapshot& snapshot(int j) const { return snapshots.at(static_cast<std::size_t>(j) - 1); }
};

// All nodes into class 1 with empty labels; the first node represents it.
// Requires a valid configuration with minimum tag 0.
AugConfig init_aug(const Configuration& c);

// Splits classes by label equality: a node keeps class k exactly when some
// existing representative of k had the same class before this call and
// carries an equal label; otherwise the node opens a new class and becomes
// its representative. Nodes are scanned in index order and all previous
// class numbers are snapshotted before any update.
AugConfig refine(AugConfig a);

// Computes every node's label for the current phase (what it would hear,
// given the present classes and the tag offsets), then refines once.
AugConfig partitioner(AugConfig a);

// Runs the full refinement loop: up to ceil(n/2) partitioner iterations,
// stopping with Yes as soon as some class shrinks to a single node (the
// smallest such class wins) and with No when an iteration changes nothing.
// Yes is checked first. Every iteration's state is snapshotted.
PartitionTrace classify(const Configuration& c);

}  // namespace radiole
