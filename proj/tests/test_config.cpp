#include <doctest.h>

#include <random>

#include "radiole/config.hpp"

using namespace radiole;

namespace {

Configuration two_path(int t0, int t1) {
    Configuration c;
    c.tags = {t0, t1};
    c.edges = {{0, 1}};
    return c;
}

}  // namespace

TEST_CASE("parse smallest nontrivial instance") {
    auto c = parse_configuration("nodes 2\ntags 0 1\nedge 0 1\n");
    CHECK(c.n() == 2);
    CHECK(c.tags == std::vector<int>{0, 1});
    CHECK(c.edges == std::vector<std::pair<int, int>>{{0, 1}});
}

TEST_CASE("parse four-node path with tags 1 0 0 2") {
    auto c = parse_configuration("nodes 4\ntags 1 0 0 2\nedge 0 1\nedge 1 2\nedge 2 3\n");
    CHECK(c.n() == 4);
    CHECK(c.span() == 2);
    CHECK(c == gen_hm(1));
}

TEST_CASE("parse tolerates comments, blank lines, and unordered edges") {
    auto c = parse_configuration(
        "# a comment\n\nnodes 3  # inline\ntags 0 0 1\nedge 1 0\n\nedge 2 1\n");
    CHECK(c.edges == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
}

TEST_CASE("parse errors carry line information") {
    CHECK_THROWS_WITH_AS(parse_configuration("nodes 2\ntags 0 1\nedge 0 0\n"),
                         doctest::Contains("self-loop"), ParseError);
    CHECK_THROWS_WITH_AS(parse_configuration("nodes 2\ntags 0 1\nedge 0 1\nedge 1 0\n"),
                         doctest::Contains("duplicate edge"), ParseError);
    CHECK_THROWS_WITH_AS(parse_configuration("nodes 2\ntags 0 1\nedge 0 2\n"),
                         doctest::Contains("out of range"), ParseError);
    CHECK_THROWS_WITH_AS(parse_configuration("nodes 2\ntags 0 -1\n"),
                         doctest::Contains("negative tag"), ParseError);
    CHECK_THROWS_WITH_AS(parse_configuration("nodes 2\ntags 0\n"),
                         doctest::Contains("exactly 2 tags"), ParseError);
    CHECK_THROWS_WITH_AS(parse_configuration("frobnicate\n"), doctest::Contains("nodes"),
                         ParseError);
    CHECK_THROWS_AS(parse_configuration(""), ParseError);
    CHECK_THROWS_AS(parse_configuration("nodes 0\n"), ParseError);

    try {
        parse_configuration("nodes 2\ntags 0 1\nedge 0 0\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(e.column() == 6);
    }
}

TEST_CASE("validate flags disconnection and structural defects") {
    Configuration c;
    c.tags = {0, 0, 0, 0};
    c.edges = {{0, 1}, {2, 3}};
    auto report = validate(c);
    CHECK_FALSE(report.ok());
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0].find("disconnected") != std::string::npos);

    Configuration bad;
    bad.tags = {0, 1};
    bad.edges = {{0, 0}, {0, 1}, {1, 0}, {1, 5}};
    auto r2 = validate(bad);
    CHECK(r2.violations.size() == 3);  // self-loop, parallel, missing node
}

TEST_CASE("validate accepts a lone node and generator outputs") {
    Configuration single;
    single.tags = {0};
    CHECK(validate(single).ok());
    CHECK(validate(gen_hm(3)).ok());
    CHECK(validate(gen_gm(4)).ok());
    CHECK(validate(gen_sm(2)).ok());
}

TEST_CASE("normalize_tags subtracts the minimum and is idempotent") {
    Configuration c;
    c.tags = {5, 7, 5};
    c.edges = {{0, 1}, {1, 2}};
    auto norm = normalize_tags(c);
    CHECK(norm.tags == std::vector<int>{0, 2, 0});
    CHECK(normalize_tags(norm) == norm);
    CHECK(norm.span() == 2);

    CHECK(normalize_tags(two_path(0, 1)).tags == std::vector<int>{0, 1});

    Configuration uniform;
    uniform.tags = {3, 3, 3};
    uniform.edges = {{0, 1}, {1, 2}};
    auto u = normalize_tags(uniform);
    CHECK(u.tags == std::vector<int>{0, 0, 0});
    CHECK(u.span() == 0);
}

TEST_CASE("normalize_tags preserves structure and tag differences") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        auto c = gen_random(1 + static_cast<int>(rng() % 7), 0.6, 4, rng());
        for (int& t : c.tags) t += 3;  // denormalize
        auto norm = normalize_tags(c);
        CHECK(norm.edges == c.edges);
        REQUIRE(norm.n() == c.n());
        for (int v = 0; v < c.n(); ++v)
            for (int w = 0; w < c.n(); ++w)
                CHECK(norm.tags[v] - norm.tags[w] == c.tags[v] - c.tags[w]);
    }
}

TEST_CASE("gen_gm shape") {
    auto g2 = gen_gm(2);
    CHECK(g2.tags == std::vector<int>{0, 0, 1, 1, 1, 1, 1, 0, 0});
    CHECK(g2.n() == 9);
    for (int m = 2; m <= 6; ++m) {
        auto g = gen_gm(m);
        CHECK(g.n() == 4 * m + 1);
        CHECK(g.span() == 1);
        CHECK(g.edges.size() == static_cast<std::size_t>(g.n() - 1));
    }
    CHECK(gen_gm(3).n() == 13);
    CHECK_THROWS_AS(gen_gm(1), std::invalid_argument);
}

TEST_CASE("gen_hm shape") {
    CHECK(gen_hm(1).tags == std::vector<int>{1, 0, 0, 2});
    for (int m = 1; m <= 6; ++m) {
        auto h = gen_hm(m);
        CHECK(h.n() == 4);
        CHECK(h.span() == m + 1);
    }
    CHECK(gen_hm(5).span() == 6);
    CHECK_THROWS_AS(gen_hm(0), std::invalid_argument);
}

TEST_CASE("gen_sm shape") {
    CHECK(gen_sm(1).tags == std::vector<int>{1, 0, 0, 1});
    for (int m = 1; m <= 6; ++m) {
        auto s = gen_sm(m);
        CHECK(s.n() == 4);
        CHECK(s.span() == m);
    }
    CHECK(gen_sm(4).span() == 4);
    CHECK_THROWS_AS(gen_sm(0), std::invalid_argument);
}

TEST_CASE("gen_random is deterministic in the seed") {
    auto a = gen_random(5, 0.5, 3, 42);
    auto b = gen_random(5, 0.5, 3, 42);
    CHECK(a == b);
    CHECK(a.n() == 5);
    CHECK(validate(a).ok());
}

TEST_CASE("gen_random degenerate instances") {
    auto single = gen_random(1, 0.1, 7, 99);
    CHECK(single.n() == 1);
    CHECK(single.tags == std::vector<int>{0});
    CHECK(single.edges.empty());

    auto pair = gen_random(2, 1.0, 0, 5);
    CHECK(pair.edges == std::vector<std::pair<int, int>>{{0, 1}});
    CHECK(pair.tags == std::vector<int>{0, 0});
}

TEST_CASE("gen_random output is always valid and normalized") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto c = gen_random(1 + static_cast<int>(seed % 8), 0.4, 3, seed);
        CHECK(validate(c).ok());
        CHECK(c.min_tag() == 0);
    }
}

TEST_CASE("gen_batch is deterministic and in range") {
    auto batch = gen_batch(8, 3, 30, 7);
    auto again = gen_batch(8, 3, 30, 7);
    CHECK(batch == again);
    REQUIRE(batch.size() == 30);
    for (const auto& c : batch) {
        CHECK(c.n() >= 1);
        CHECK(c.n() <= 8);
        CHECK(c.max_tag() <= 3);
        CHECK(validate(c).ok());
    }
}

TEST_CASE("serialize then parse is the identity on valid configurations") {
    std::vector<Configuration> samples = {gen_hm(1), gen_hm(4),     gen_sm(3),
                                          gen_gm(2), two_path(0, 1)};
    for (std::uint64_t seed = 0; seed < 20; ++seed)
        samples.push_back(gen_random(1 + static_cast<int>(seed % 6), 0.5, 3, seed));
    for (const auto& c : samples) {
        CHECK(parse_configuration(serialize_configuration(c)) == c);
        // header comments do not disturb the round trip
        CHECK(parse_configuration(serialize_configuration(c, "generated for a test")) == c);
    }
}

TEST_CASE("serialized form matches the documented layout") {
    CHECK(serialize_configuration(gen_hm(3)) ==
          "nodes 4\ntags 3 0 0 4\nedge 0 1\nedge 1 2\nedge 2 3\n");
}
