#include <doctest.h>

#include "radiole/drip.hpp"
#include "radiole/simulator.hpp"

using namespace radiole;

namespace {

CanonicalProtocol protocol_for(const Configuration& c) {
    return build_canonical(classify(c), c.span());
}

}  // namespace

TEST_CASE("build_canonical for the stalling four-node family") {
    auto c = gen_sm(1);
    auto protocol = protocol_for(c);

    REQUIRE(protocol.num_phases() == 3);
    CHECK(protocol.lists[0].entries == std::vector<ProtocolEntry>{{1, {}}});
    CHECK_FALSE(protocol.lists[1].is_terminate);
    REQUIRE(protocol.lists[1].entries.size() == 2);
    CHECK(protocol.lists[1].entries[0] == ProtocolEntry{1, {{1, 1, Mult::One}}});
    CHECK(protocol.lists[1].entries[1] == ProtocolEntry{1, {{1, 3, Mult::One}}});
    CHECK(protocol.lists[2].is_terminate);
    CHECK(protocol.lists[2].entries.empty());

    CHECK(protocol.sigma == 1);
    CHECK(protocol.num_classes_per_phase == std::vector<int>{1, 2});
    CHECK(protocol.phase_ends == std::vector<long>{0, 4, 11, 12});
    CHECK(protocol.terminate_round() == 12);
}

TEST_CASE("build_canonical terminates right after a first-iteration verdict") {
    auto protocol = protocol_for(gen_hm(1));
    REQUIRE(protocol.num_phases() == 2);
    CHECK(protocol.lists[0].entries == std::vector<ProtocolEntry>{{1, {}}});
    CHECK(protocol.lists[1].is_terminate);
    CHECK(protocol.phase_ends == std::vector<long>{0, 7, 8});  // sigma 2: 1*5 + 2
    CHECK(protocol.terminate_round() == 8);

    Configuration single;
    single.tags = {0};
    auto p1 = protocol_for(single);
    REQUIRE(p1.num_phases() == 2);
    CHECK(p1.lists[1].is_terminate);
    CHECK(p1.phase_ends == std::vector<long>{0, 1, 2});
}

TEST_CASE("protocol structure invariants across families") {
    std::vector<Configuration> samples = {gen_sm(2), gen_sm(4), gen_gm(2), gen_gm(3), gen_hm(3)};
    for (const auto& c : samples) {
        auto trace = classify(c);
        auto protocol = build_canonical(trace, c.span());
        const int J = protocol.num_phases();
        for (int j = 1; j <= J; ++j) CHECK(protocol.lists[j - 1].is_terminate == (j == J));
        for (int j = 1; j < J; ++j)
            CHECK(static_cast<int>(protocol.lists[j - 1].entries.size()) ==
                  trace.snapshot(j).num_classes);
        REQUIRE(protocol.phase_ends.size() == static_cast<std::size_t>(J) + 1);
        CHECK(protocol.phase_ends[0] == 0);
        for (int j = 1; j < J; ++j)
            CHECK(protocol.phase_ends[j] ==
                  protocol.phase_ends[j - 1] +
                      static_cast<long>(protocol.lists[j - 1].entries.size()) *
                          (2 * protocol.sigma + 1) +
                      protocol.sigma);
        CHECK(protocol.phase_ends[J] == protocol.phase_ends[J - 1] + 1);
    }
}

TEST_CASE("match_tblock in phase 1 always lands on the seed entry") {
    auto protocol = protocol_for(gen_hm(1));
    History spontaneous{silence()};
    CHECK(match_tblock(spontaneous, protocol, 1, 1) == 1);
}

// A continuation list built from the classifier state, as it would look had
// the run not stopped: matching each node's simulated phase-1 history against
// it must recover exactly the class the refinement assigned to that node.
TEST_CASE("match_tblock recovers classifier classes from simulated histories") {
    auto c = gen_hm(1);
    auto trace = classify(c);
    auto protocol = protocol_for(c);
    auto execution = run(c, canonical_drip(protocol));

    const auto& snap = trace.snapshot(2);
    CanonicalProtocol synthetic;
    synthetic.sigma = protocol.sigma;
    synthetic.lists.push_back(protocol.lists[0]);
    ProtocolList continuation;
    for (int k = 1; k <= snap.num_classes; ++k) {
        const int rep = snap.reps[k - 1];
        continuation.entries.push_back({trace.snapshot(1).classes[rep], snap.labels[rep]});
    }
    synthetic.lists.push_back(continuation);
    synthetic.lists.push_back({true, {}});
    synthetic.num_classes_per_phase = {1, snap.num_classes};
    const long block = 2L * synthetic.sigma + 1;
    synthetic.phase_ends = {0, 1 * block + synthetic.sigma};
    synthetic.phase_ends.push_back(synthetic.phase_ends[1] + snap.num_classes * block +
                                   synthetic.sigma);
    synthetic.phase_ends.push_back(synthetic.phase_ends[2] + 1);

    for (int v = 0; v < c.n(); ++v) {
        const History& h = execution.nodes[v].history;
        CHECK(match_tblock(h, synthetic, 2, 1) == snap.classes[v]);
    }

    SUBCASE("a corrupted history matches nothing") {
        History h = execution.nodes[1].history;
        for (HistoryEntry& e : h)
            if (e.kind == EntryKind::Message) e = noise();  // every label here carries One
        CHECK_THROWS_AS(match_tblock(h, synthetic, 2, 1), ProtocolMismatch);
    }
}

TEST_CASE("canonical_decision over one phase") {
    auto protocol = protocol_for(gen_hm(1));  // sigma 2, one block of 5, tail of 2
    History h{silence()};
    // rounds 1 and 2: listen
    CHECK(canonical_decision(h, protocol) == Action::listen());
    h.push_back(silence());
    CHECK(canonical_decision(h, protocol) == Action::listen());
    h.push_back(silence());
    // round 3 = sigma + 1: the single transmission of the phase
    CHECK(canonical_decision(h, protocol) == Action::transmit("1"));
    // rounds 4..7: rest of the block, then the listening tail
    for (int round = 4; round <= 7; ++round) {
        h.push_back(silence());
        CHECK(canonical_decision(h, protocol) == Action::listen());
    }
    // round 8 = r_1 + 1 and everything after: terminate
    h.push_back(silence());
    CHECK(canonical_decision(h, protocol) == Action::terminate());
    h.push_back(silence());
    CHECK(canonical_decision(h, protocol) == Action::terminate());
}

TEST_CASE("canonical executions transmit once per node per phase, in the class block") {
    for (const auto& c : {gen_sm(2), gen_hm(2), gen_gm(2)}) {
        auto trace = classify(c);
        auto protocol = build_canonical(trace, c.span());
        auto execution = run(c, canonical_drip(protocol));
        const long block = protocol.block_length();
        const int J = protocol.num_phases();

        // per node and phase: number of transmissions and the block they fall in
        std::vector<std::vector<int>> count(static_cast<std::size_t>(c.n()),
                                            std::vector<int>(static_cast<std::size_t>(J), 0));
        for (const auto& record : execution.rounds) {
            for (const auto& [v, payload] : record.transmitters) {
                CHECK(payload == "1");
                const long local =
                    record.global_round - execution.nodes[static_cast<std::size_t>(v)].wake_global_round;
                int j = 1;
                while (local > protocol.phase_ends[static_cast<std::size_t>(j)]) ++j;
                ++count[static_cast<std::size_t>(v)][static_cast<std::size_t>(j - 1)];
                const long pos = local - protocol.phase_ends[static_cast<std::size_t>(j) - 1];
                REQUIRE(pos <= static_cast<long>(protocol.lists[static_cast<std::size_t>(j) - 1]
                                                     .entries.size()) *
                                   block);
                const int k = static_cast<int>((pos - 1) / block) + 1;
                CHECK(k == trace.snapshot(j).classes[static_cast<std::size_t>(v)]);
            }
        }
        for (int v = 0; v < c.n(); ++v)
            for (int j = 1; j < J; ++j)
                CHECK(count[static_cast<std::size_t>(v)][static_cast<std::size_t>(j - 1)] == 1);
    }
}

TEST_CASE("clock conversions") {
    CHECK(local_to_global(3, 2) == 5);
    CHECK(global_to_local(5, 2) == 3);
    // local round i at one node is local round i - (t_w - t_v) at another
    const int t_v = 0, t_w = 1;
    CHECK(global_to_local(local_to_global(4, t_v), t_w) == 3);
    CHECK_THROWS_AS(global_to_local(1, 2), Error);
}
