#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "radiole/errors.hpp"

namespace radiole {

// A problem instance: a simple undirected connected graph whose nodes carry
// non-negative wakeup tags. Node identity is the position in `tags`; the
// declaration order doubles as the fixed iteration order used everywhere.
// Indices are simulation bookkeeping only; protocols never see them.
struct Configuration {
    std::vector<int> tags;                      // wakeup tag per node
    std::vector<std::pair<int, int>> edges;     // canonical: first < second, sorted

    int n() const noexcept { return static_cast<int>(tags.size()); }
    int min_tag() const;
    int max_tag() const;
    int span() const;                           // max tag - min tag
    int max_degree() const;

    // Neighbour lists sorted by node index.
    std::vector<std::vector<int>> adjacency() const;

    bool operator==(const Configuration&) const = default;
};

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const noexcept { return violations.empty(); }
};

// Parses the line-oriented configuration format (see serialize_configuration).
// Tags are returned exactly as declared, not normalized.
Configuration parse_configuration(std::string_view text);

// Emits:
//   nodes <n>
//   tags <t_0> ... <t_{n-1}>
//   edge <i> <j>          (one line per edge, sorted by min then max endpoint)
// A nonempty header is prepended as a '#' comment line.
std::string serialize_configuration(const Configuration& c, std::string_view header = {});

// Checks every structural invariant and reports all violations found.
ValidationReport validate(const Configuration& c);

// Throws InvalidConfiguration listing every violation.
void require_valid(const Configuration& c);

// Shifts all tags so the smallest becomes 0. Idempotent; preserves structure
// and every pairwise tag difference.
Configuration normalize_tags(Configuration c);

// Path a_1..a_m b_1..b_{2m+1} c_m..c_1 with a/c nodes tagged 0 and b nodes
// tagged 1; n = 4m+1, span 1. Requires m >= 2.
Configuration gen_gm(int m);

// Path a-b-c-d with tags m, 0, 0, m+1; span m+1. Requires m >= 1.
Configuration gen_hm(int m);

// Path a-b-c-d with tags m, 0, 0, m; span m. Requires m >= 1.
Configuration gen_sm(int m);

// Random connected graph: every pair becomes an edge with probability
// edge_prob, resampled until connected (bounded attempts); tags drawn
// uniformly from [0, max_tag]; result is normalized. Deterministic in seed:
// all draws come from one mt19937_64 consumed by rejection sampling, so the
// output is reproducible across platforms.
Configuration gen_random(int n, double edge_prob, int max_tag, std::uint64_t seed);

// Identifier of the pseudorandom scheme above, recorded in emitted file headers.
std::string_view random_generator_id();

// Seed schedule for batch checking: count instances with n uniform in
// [1, n_max], per-instance max tag uniform in [0, tag_max], edge
// probability 0.5, instance seeds drawn from a master mt19937_64(seed).
std::vector<Configuration> gen_batch(int n_max, int tag_max, int count, std::uint64_t seed);

}  // namespace radiole
