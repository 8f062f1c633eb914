#pragma once

// Shared test fixtures: the small colored graphs and graph generators.

#include <cstdint>
#include <random>
#include <vector>

#include "rainbow_planar/graph.hpp"

namespace rpt::testing {

// Colored K4: center 0, outer 1, 2, 3.
inline ColoredGraph colored_k4() {
    return ColoredGraph::from_triples(4, {{0, 1, 1}, {0, 2, 2}, {0, 3, 3}, {1, 2, 3}, {1, 3, 2}, {2, 3, 1}});
}

// G5, 7 edges: a1..a5 -> 0..4.
inline ColoredGraph colored_g5() {
    return ColoredGraph::from_triples(
        5, {{0, 1, 1}, {0, 2, 2}, {0, 3, 3}, {2, 3, 4}, {4, 1, 4}, {4, 2, 3}, {4, 3, 2}});
}

// G7, 10 edges: a1..a7 -> 0..6.
inline ColoredGraph colored_g7() {
    return ColoredGraph::from_triples(7, {{0, 1, 1},
                                          {0, 3, 2},
                                          {0, 4, 3},
                                          {0, 5, 4},
                                          {1, 2, 3},
                                          {2, 3, 4},
                                          {6, 1, 2},
                                          {6, 3, 1},
                                          {6, 4, 4},
                                          {6, 5, 3}});
}

// Bow tie: u = 0, u1..u4 = 1..4, triangles u u1 u2 and u u3 u4.
inline Graph bow_tie() { return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}}); }

inline Graph cycle(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) {
        e.push_back({i, (i + 1) % n});
    }
    return Graph(n, e);
}

inline Graph path(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) {
        e.push_back({i, i + 1});
    }
    return Graph(n, e);
}

inline Graph complete_bipartite(int a, int b) {
    std::vector<Edge> e;
    for (int i = 0; i < a; ++i) {
        for (int j = 0; j < b; ++j) {
            e.push_back({i, a + j});
        }
    }
    return Graph(a + b, e);
}

inline std::vector<Edge> all_pairs(int n) {
    std::vector<Edge> pairs;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            pairs.push_back({u, v});
        }
    }
    return pairs;
}

// Labeled graph selected by bit i of mask <-> i-th pair in lexicographic order.
inline Graph graph_from_mask(int n, std::uint64_t mask) {
    std::vector<Edge> edges;
    auto pairs = all_pairs(n);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (mask >> i & 1) {
            edges.push_back(pairs[i]);
        }
    }
    return Graph(n, edges);
}

inline Graph random_graph(std::mt19937& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (const auto& e : all_pairs(n)) {
        if (coin(rng)) {
            edges.push_back(e);
        }
    }
    return Graph(n, edges);
}

inline ColoredGraph random_coloring(std::mt19937& rng, const Graph& g, int palette) {
    std::uniform_int_distribution<int> pick(1, palette);
    std::vector<Color> colors(g.size());
    for (auto& c : colors) {
        c = pick(rng);
    }
    return ColoredGraph(g, colors);
}

}  // namespace rpt::testing
