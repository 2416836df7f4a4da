#pragma once

#include <cstdint>
#include <vector>

#include "gcr/constructions.hpp"
#include "gcr/graph.hpp"

namespace fixtures {

/// Deterministic LCG so generated fixtures are identical on every run.
struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed) : state(seed * 6364136223846793005ull + 1442695040888963407ull) {}
    uint32_t next() {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return static_cast<uint32_t>(state >> 33);
    }
    int below(int n) { return static_cast<int>(next() % static_cast<uint32_t>(n)); }
};

/// Random labelled tree: vertex v attaches to a uniformly random earlier vertex.
inline gcr::Graph random_tree(int n, uint64_t seed) {
    Rng rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int v = 2; v <= n; ++v) edges.emplace_back(rng.below(v - 1) + 1, v);
    return gcr::Graph(n, edges);
}

/// Tree corpus used across the acceptance criteria: paths, the 3-star, a
/// spider, and seeded random trees up to max_vertices.
inline std::vector<gcr::Graph> tree_corpus(int max_vertices) {
    std::vector<gcr::Graph> out;
    for (int n = 2; n <= std::min(6, max_vertices); ++n) out.push_back(gcr::Graph::path(n));
    if (max_vertices >= 4) out.push_back(gcr::Graph::star(3));
    if (max_vertices >= 7)
        out.push_back(gcr::Graph(7, {{1, 2}, {2, 3}, {1, 4}, {4, 5}, {1, 6}, {6, 7}})); // 3-leg spider
    for (int n = 4; n <= max_vertices; ++n)
        for (uint64_t seed = 1; seed <= 3; ++seed) out.push_back(random_tree(n, seed * 97 + static_cast<uint64_t>(n)));
    return out;
}

/// All nonterminal states of a spec, in enumeration order.
inline std::vector<gcr::State> all_states(const gcr::GameSpec& spec) {
    gcr::StateSpace space(spec);
    std::vector<gcr::State> out;
    out.reserve(space.size());
    for (uint32_t i = 0; i < space.size(); ++i) out.push_back(space.state_of(i));
    return out;
}

} // namespace fixtures
