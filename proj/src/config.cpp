#include "radiole/config.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <random>
#include <set>
#include <sstream>

namespace radiole {

int Configuration::min_tag() const {
    return tags.empty() ? 0 : *std::min_element(tags.begin(), tags.end());
}

int Configuration::max_tag() const {
    return tags.empty() ? 0 : *std::max_element(tags.begin(), tags.end());
}

int Configuration::span() const { return max_tag() - min_tag(); }

int Configuration::max_degree() const {
    std::vector<int> deg(tags.size(), 0);
    for (const auto& [a, b] : edges) {
        if (a >= 0 && a < n()) ++deg[a];
        if (b >= 0 && b < n()) ++deg[b];
    }
    return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

std::vector<std::vector<int>> Configuration::adjacency() const {
    std::vector<std::vector<int>> adj(tags.size());
    for (const auto& [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());
    return adj;
}

namespace {

struct Token {
    std::string text;
    int column;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return out;
}

int parse_int(const Token& tok, int line, const char* what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), value);
    if (ec != std::errc() || ptr != tok.text.data() + tok.text.size())
        throw ParseError(std::string("expected ") + what + ", got '" + tok.text + "'", line, tok.column);
    return value;
}

}  // namespace

Configuration parse_configuration(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    int lineno = 0;
    enum class Stage { Nodes, Tags, Edges } stage = Stage::Nodes;

    Configuration c;
    int n = 0;
    std::set<std::pair<int, int>> seen;

    while (std::getline(in, raw)) {
        ++lineno;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        auto toks = tokenize(raw);
        if (toks.empty()) continue;

        switch (stage) {
        case Stage::Nodes:
            if (toks[0].text != "nodes")
                throw ParseError("expected 'nodes <n>'", lineno, toks[0].column);
            if (toks.size() != 2)
                throw ParseError("'nodes' takes exactly one argument", lineno, toks[0].column);
            n = parse_int(toks[1], lineno, "node count");
            if (n < 1) throw ParseError("node count must be >= 1", lineno, toks[1].column);
            stage = Stage::Tags;
            break;

        case Stage::Tags: {
            if (toks[0].text != "tags")
                throw ParseError("expected 'tags <t_0> ... <t_{n-1}>'", lineno, toks[0].column);
            if (static_cast<int>(toks.size()) != n + 1)
                throw ParseError("expected exactly " + std::to_string(n) + " tags", lineno, toks[0].column);
            for (int i = 1; i <= n; ++i) {
                int tag = parse_int(toks[i], lineno, "tag");
                if (tag < 0) throw ParseError("negative tag", lineno, toks[i].column);
                c.tags.push_back(tag);
            }
            stage = Stage::Edges;
            break;
        }

        case Stage::Edges: {
            if (toks[0].text != "edge")
                throw ParseError("expected 'edge <i> <j>'", lineno, toks[0].column);
            if (toks.size() != 3)
                throw ParseError("'edge' takes exactly two arguments", lineno, toks[0].column);
            int a = parse_int(toks[1], lineno, "node index");
            int b = parse_int(toks[2], lineno, "node index");
            if (a < 0 || a >= n) throw ParseError("node index out of range", lineno, toks[1].column);
            if (b < 0 || b >= n) throw ParseError("node index out of range", lineno, toks[2].column);
            if (a == b) throw ParseError("self-loop", lineno, toks[1].column);
            auto e = std::minmax(a, b);
            if (!seen.insert({e.first, e.second}).second)
                throw ParseError("duplicate edge", lineno, toks[1].column);
            c.edges.emplace_back(e.first, e.second);
            break;
        }
        }
    }

    if (stage == Stage::Nodes) throw ParseError("missing 'nodes' line", lineno + 1, 0);
    if (stage == Stage::Tags) throw ParseError("missing 'tags' line", lineno + 1, 0);
    std::sort(c.edges.begin(), c.edges.end());
    return c;
}

std::string serialize_configuration(const Configuration& c, std::string_view header) {
    std::ostringstream out;
    if (!header.empty()) out << "# " << header << "\n";
    out << "nodes " << c.n() << "\n";
    out << "tags";
    for (int t : c.tags) out << ' ' << t;
    out << "\n";
    auto edges = c.edges;
    for (auto& [a, b] : edges)
        if (a > b) std::swap(a, b);
    std::sort(edges.begin(), edges.end());
    for (const auto& [a, b] : edges) out << "edge " << a << ' ' << b << "\n";
    return out.str();
}

ValidationReport validate(const Configuration& c) {
    ValidationReport report;
    auto add = [&](std::string msg) { report.violations.push_back(std::move(msg)); };

    const int n = c.n();
    if (n == 0) {
        add("configuration has no nodes");
        return report;
    }
    for (int v = 0; v < n; ++v)
        if (c.tags[v] < 0)
            add("node " + std::to_string(v) + " has negative tag " + std::to_string(c.tags[v]));

    std::set<std::pair<int, int>> seen;
    std::vector<std::vector<int>> adj(n);
    for (const auto& [a, b] : c.edges) {
        if (a < 0 || a >= n || b < 0 || b >= n) {
            add("edge (" + std::to_string(a) + ", " + std::to_string(b) + ") references a missing node");
            continue;
        }
        if (a == b) {
            add("self-loop at node " + std::to_string(a));
            continue;
        }
        auto e = std::minmax(a, b);
        if (!seen.insert({e.first, e.second}).second) {
            add("parallel edge (" + std::to_string(e.first) + ", " + std::to_string(e.second) + ")");
            continue;
        }
        adj[a].push_back(b);
        adj[b].push_back(a);
    }

    // connectivity over the well-formed edges
    std::vector<char> visited(n, 0);
    std::vector<int> stack{0};
    visited[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (!visited[w]) {
                visited[w] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    if (reached < n)
        add("graph is disconnected (" + std::to_string(reached) + " of " + std::to_string(n) +
            " nodes reachable from node 0)");
    return report;
}

void require_valid(const Configuration& c) {
    auto report = validate(c);
    if (report.ok()) return;
    std::string msg = "invalid configuration:";
    for (const auto& v : report.violations) msg += "\n  - " + v;
    throw InvalidConfiguration(msg);
}

Configuration normalize_tags(Configuration c) {
    const int low = c.min_tag();
    for (int& t : c.tags) t -= low;
    return c;
}

namespace {

Configuration path_with_tags(std::vector<int> tags) {
    Configuration c;
    c.tags = std::move(tags);
    for (int i = 0; i + 1 < c.n(); ++i) c.edges.emplace_back(i, i + 1);
    return c;
}

}  // namespace

Configuration gen_gm(int m) {
    if (m < 2) throw std::invalid_argument("gen_gm: m must be >= 2");
    std::vector<int> tags;
    tags.insert(tags.end(), m, 0);           // a_1 .. a_m
    tags.insert(tags.end(), 2 * m + 1, 1);   // b_1 .. b_{2m+1}
    tags.insert(tags.end(), m, 0);           // c_m .. c_1
    return path_with_tags(std::move(tags));
}

Configuration gen_hm(int m) {
    if (m < 1) throw std::invalid_argument("gen_hm: m must be >= 1");
    return path_with_tags({m, 0, 0, m + 1});
}

Configuration gen_sm(int m) {
    if (m < 1) throw std::invalid_argument("gen_sm: m must be >= 1");
    return path_with_tags({m, 0, 0, m});
}

namespace {

// Raw mt19937_64 outputs are specified exactly by the standard, so rejection
// sampling on them reproduces across implementations (distributions do not).
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - max % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

double draw_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

bool is_connected(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<int>> adj(n);
    for (const auto& [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<char> visited(n, 0);
    std::vector<int> stack{0};
    visited[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (!visited[w]) {
                visited[w] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == n;
}

constexpr int kConnectAttemptCap = 4096;

}  // namespace

std::string_view random_generator_id() { return "mt19937_64/rejection"; }

Configuration gen_random(int n, double edge_prob, int max_tag, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("gen_random: n must be >= 1");
    if (!(edge_prob > 0.0) || edge_prob > 1.0)
        throw std::invalid_argument("gen_random: edge_prob must be in (0, 1]");
    if (max_tag < 0) throw std::invalid_argument("gen_random: max_tag must be >= 0");

    std::mt19937_64 rng(seed);
    Configuration c;
    for (int attempt = 0;; ++attempt) {
        if (attempt == kConnectAttemptCap)
            throw Error("gen_random: no connected graph found within " +
                        std::to_string(kConnectAttemptCap) + " attempts");
        c.edges.clear();
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (draw_unit(rng) < edge_prob) c.edges.emplace_back(i, j);
        if (is_connected(n, c.edges)) break;
    }
    c.tags.resize(n);
    for (int v = 0; v < n; ++v)
        c.tags[v] = static_cast<int>(draw_below(rng, static_cast<std::uint64_t>(max_tag) + 1));
    return normalize_tags(std::move(c));
}

std::vector<Configuration> gen_batch(int n_max, int tag_max, int count, std::uint64_t seed) {
    if (n_max < 1) throw std::invalid_argument("gen_batch: n_max must be >= 1");
    if (tag_max < 0) throw std::invalid_argument("gen_batch: tag_max must be >= 0");
    std::mt19937_64 master(seed);
    std::vector<Configuration> out;
    out.reserve(static_cast<std::size_t>(std::max(count, 0)));
    for (int i = 0; i < count; ++i) {
        int n = 1 + static_cast<int>(draw_below(master, static_cast<std::uint64_t>(n_max)));
        int mt = static_cast<int>(draw_below(master, static_cast<std::uint64_t>(tag_max) + 1));
        std::uint64_t instance_seed = master();
        out.push_back(gen_random(n, 0.5, mt, instance_seed));
    }
    return out;
}

}  // namespace radiole
