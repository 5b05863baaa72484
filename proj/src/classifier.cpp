#include "radiole/classifier.hpp"

#include <algorithm>
#include <stdexcept>

namespace radiole {

TripleOrder compare_triples(const Triple& x, const Triple& y) noexcept {
    if (x.cls != y.cls) return x.cls < y.cls ? TripleOrder::Less : TripleOrder::Greater;
    if (x.block_round != y.block_round)
        return x.block_round < y.block_round ? TripleOrder::Less : TripleOrder::Greater;
    if (x.mult == y.mult) return TripleOrder::EqualKey;
    return x.mult == Mult::One ? TripleOrder::Less : TripleOrder::Greater;
}

AugConfig init_aug(const Configuration& c) {
    require_valid(c);
    if (c.min_tag() != 0)
        throw InvalidConfiguration("tags are not normalized (minimum tag is " +
                                   std::to_string(c.min_tag()) + ", expected 0)");
    AugConfig a;
    a.base = c;
    a.adjacency = c.adjacency();
    a.sigma = c.span();
    a.classes.assign(c.tags.size(), 1);
    a.labels.assign(c.tags.size(), Label{});
    a.num_classes = 1;
    a.reps = {0};
    return a;
}

namespace {

bool labels_equal(const Label& x, const Label& y, std::uint64_t& ops) {
    ops += std::max(x.size(), y.size()) + 1;
    return x == y;
}

}  // namespace

AugConfig refine(AugConfig a) {
    const int n = a.base.n();
    const std::vector<int> old_class = a.classes;  // everyone's class before any update

    for (int v = 0; v < n; ++v) {
        bool assigned = false;
        // Compare against every representative visible when v is scanned,
        // including classes opened earlier in this same pass. A node can
        // match at most one of them (two matching reps would themselves have
        // been merged), so there is no break.
        const int visible = a.num_classes;
        for (int k = 1; k <= visible; ++k) {
            ++a.ops;
            const int rep = a.reps[static_cast<std::size_t>(k) - 1];
            if (old_class[v] == old_class[rep] && labels_equal(a.labels[v], a.labels[rep], a.ops)) {
                a.classes[v] = k;
                assigned = true;
            }
        }
        if (!assigned) {
            a.num_classes += 1;
            a.classes[v] = a.num_classes;
            a.reps.push_back(v);
        }
    }
    return a;
}

AugConfig partitioner(AugConfig a) {
    const int n = a.base.n();
    const int sigma = a.sigma;

    // Labels for all nodes are computed from one consistent view of the
    // classes; the refinement below runs only after every label is in place.
    for (int v = 0; v < n; ++v) {
        Label heard;
        for (int w : a.adjacency[v]) {
            ++a.ops;
            // A neighbour in the same class with the same tag transmits at
            // the same instant as v itself, so v can never hear it.
            if (a.classes[w] == a.classes[v] && a.base.tags[w] == a.base.tags[v]) continue;
            const int cls = a.classes[w];
            const int round = sigma + 1 + a.base.tags[w] - a.base.tags[v];
            bool fresh = true;
            for (Triple& t : heard) {
                ++a.ops;
                if (t.cls == cls && t.block_round == round) {
                    t.mult = Mult::Star;  // a second transmitter in the same slot: collision
                    fresh = false;
                }
            }
            if (fresh) heard.push_back({cls, round, Mult::One});
        }
        std::sort(heard.begin(), heard.end(), [&a](const Triple& x, const Triple& y) {
            ++a.ops;
            return triple_less(x, y);
        });
        a.labels[v] = std::move(heard);
    }

    return refine(std::move(a));
}

namespace {

IterationSnapshot snapshot_of(const AugConfig& a) {
    return {a.classes, a.labels, a.reps, a.num_classes};
}

// Smallest class containing exactly one node, or 0 if none exists.
int smallest_singleton(const AugConfig& a) {
    std::vector<int> size(static_cast<std::size_t>(a.num_classes), 0);
    for (int cls : a.classes) ++size[static_cast<std::size_t>(cls) - 1];
    for (int k = 1; k <= a.num_classes; ++k)
        if (size[static_cast<std::size_t>(k) - 1] == 1) return k;
    return 0;
}

// Loose upper bound on the instrumented operation count of one full run;
// exceeding it means the cubic complexity guarantee was broken somewhere.
std::uint64_t ops_bound(int n, int max_degree) {
    const std::uint64_t nn = static_cast<std::uint64_t>(n);
    const std::uint64_t dd = static_cast<std::uint64_t>(std::max(max_degree, 1));
    return 512 * (nn * nn * nn * dd + nn + 16);
}

}  // namespace

PartitionTrace classify(const Configuration& c) {
    AugConfig aug = init_aug(c);
    PartitionTrace trace;
    trace.snapshots.push_back(snapshot_of(aug));

    const int n = c.n();
    const int max_iterations = (n + 1) / 2;
    bool decided = false;

    for (int iteration = 1; iteration <= max_iterations; ++iteration) {
        const int old_count = aug.num_classes;
        aug = partitioner(std::move(aug));
        trace.snapshots.push_back(snapshot_of(aug));

        if (int winner = smallest_singleton(aug); winner != 0) {
            trace.verdict = {VerdictKind::Yes, winner, iteration};
            decided = true;
            break;
        }
        if (aug.num_classes == old_count) {
            trace.verdict = {VerdictKind::No, 0, iteration};
            decided = true;
            break;
        }
    }

    if (!decided)
        throw std::logic_error("classify: no verdict within ceil(n/2) iterations");

    trace.basic_ops = aug.ops;
    if (trace.basic_ops > ops_bound(n, c.max_degree()))
        throw std::logic_error("classify: operation count exceeded the cubic bound");
    return trace;
}

}  // namespace radiole
