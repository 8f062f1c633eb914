#include <doctest.h>

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "rainbow_planar/rainbow.hpp"

using namespace rpt;
using namespace rpt::testing;

namespace {

// Brute force: every sequence of k distinct vertices, in lexicographic order.
std::optional<std::vector<Vertex>> brute_force(const ColoredGraph& cg, int k) {
    const int n = cg.order();
    if (k > n) {
        return std::nullopt;
    }
    std::vector<Vertex> seq(k);
    std::function<bool(int, std::vector<bool>&)> rec = [&](int depth, std::vector<bool>& used) {
        if (depth == k) {
            std::set<Color> colors;
            for (int i = 0; i + 1 < k; ++i) {
                auto idx = cg.graph().edge_index(seq[i], seq[i + 1]);
                if (!idx) {
                    return false;
                }
                colors.insert(cg.color(*idx));
            }
            return static_cast<int>(colors.size()) == k - 1;
        }
        for (Vertex v = 0; v < n; ++v) {
            if (!used[v]) {
                used[v] = true;
                seq[depth] = v;
                if (rec(depth + 1, used)) {
                    return true;
                }
                used[v] = false;
            }
        }
        return false;
    };
    std::vector<bool> used(n, false);
    if (rec(0, used)) {
        return seq;
    }
    return std::nullopt;
}

void for_each_rgs(std::size_t m, const std::function<void(const std::vector<Color>&)>& f) {
    std::vector<Color> colors(m);
    std::function<void(std::size_t, Color)> rec = [&](std::size_t i, Color mx) {
        if (i == m) {
            f(colors);
            return;
        }
        for (Color c = 1; c <= mx + 1; ++c) {
            colors[i] = c;
            rec(i + 1, std::max(mx, c));
        }
    };
    rec(0, 0);
}

}  // namespace

TEST_CASE("rainbow path examples") {
    auto p5 = ColoredGraph::from_triples(5, {{0, 1, 1}, {1, 2, 2}, {2, 3, 3}, {3, 4, 4}});
    auto w = find_rainbow_path(p5, PathSpec(5));
    REQUIRE(w);
    CHECK(w->vertices == std::vector<Vertex>{0, 1, 2, 3, 4});
    CHECK(w->colors == std::vector<Color>{1, 2, 3, 4});

    CHECK_FALSE(find_rainbow_path(colored_k4(), PathSpec(4)));
    CHECK(find_rainbow_path(colored_k4(), PathSpec(3)));
    CHECK_FALSE(find_rainbow_path(colored_g5(), PathSpec(5)));
    CHECK_FALSE(find_rainbow_path(colored_g7(), PathSpec(5)));
}

TEST_CASE("witness colors use the caller's ids") {
    auto cg = ColoredGraph::from_triples(3, {{0, 1, 70}, {1, 2, 12}});
    auto w = find_rainbow_path(cg, PathSpec(3));
    REQUIRE(w);
    CHECK(w->colors == std::vector<Color>{70, 12});
    CHECK(replays(*w, cg));
}

TEST_CASE("rainbow path through an edge") {
    auto p5 = ColoredGraph::from_triples(5, {{0, 1, 1}, {1, 2, 2}, {2, 3, 3}, {3, 4, 4}});
    auto w = find_rainbow_path_through(p5, {1, 2}, PathSpec(5));
    REQUIRE(w);
    CHECK(w->vertices == std::vector<Vertex>{0, 1, 2, 3, 4});
    const auto k4 = colored_k4();
    for (const Edge& e : k4.graph().edges()) {
        CHECK_FALSE(find_rainbow_path_through(k4, e, PathSpec(4)));
    }
    CHECK(find_rainbow_path_through(colored_k4(), {0, 1}, PathSpec(2)));
    CHECK_THROWS_AS(find_rainbow_path_through(colored_k4(), {0, 0}, PathSpec(3)), GraphError);
    CHECK_THROWS_AS(find_rainbow_path_through(p5, {0, 4}, PathSpec(3)), GraphError);
}

TEST_CASE("exhaustive agreement with brute force on small colored graphs") {
    // all labeled graphs on 5 vertices with <= 6 edges, all colorings up to renaming
    std::size_t checked = 0;
    std::size_t disagreements = 0;
    for (std::uint64_t mask = 0; mask < (1u << 10); ++mask) {
        if (std::popcount(mask) > 6) {
            continue;
        }
        Graph g = graph_from_mask(5, mask);
        for_each_rgs(g.size(), [&](const std::vector<Color>& colors) {
            ColoredGraph cg(g, colors);
            for (int k = 2; k <= 5; ++k) {
                auto expected = brute_force(cg, k);
                auto got = find_rainbow_path(cg, PathSpec(k));
                ++checked;
                if (expected.has_value() != got.has_value() || (got && got->vertices != *expected) ||
                    (got && !replays(*got, cg))) {
                    ++disagreements;
                }
                for (const Edge& e : g.edges()) {
                    auto through = find_rainbow_path_through(cg, e, PathSpec(k));
                    if (through && !replays(*through, cg)) {
                        ++disagreements;
                    }
                    if (through) {
                        bool contains = false;
                        for (std::size_t i = 0; i + 1 < through->vertices.size(); ++i) {
                            Edge step{std::min(through->vertices[i], through->vertices[i + 1]),
                                      std::max(through->vertices[i], through->vertices[i + 1])};
                            contains = contains || step == e;
                        }
                        disagreements += contains ? 0 : 1;
                    }
                    if (through && !got) {
                        ++disagreements;
                    }
                }
            }
        });
    }
    CHECK(checked > 10000);
    CHECK(disagreements == 0);
}

TEST_CASE("through agrees with whole-graph detection restricted to the edge") {
    // A rainbow P_k through e exists iff deleting e changes nothing only when
    // no witness used it; compare against brute force on the paths using e.
    std::mt19937 rng(41);
    for (int trial = 0; trial < 300; ++trial) {
        Graph g = random_graph(rng, 7, 0.35);
        if (g.size() == 0) {
            continue;
        }
        auto cg = random_coloring(rng, g, 5);
        for (int k = 2; k <= 6; ++k) {
            bool any = false;
            for (const Edge& e : g.edges()) {
                any = any || find_rainbow_path_through(cg, e, PathSpec(k)).has_value();
            }
            CHECK(any == find_rainbow_path(cg, PathSpec(k)).has_value());
        }
    }
}

TEST_CASE("rainbow properties") {
    std::mt19937 rng(43);
    for (int trial = 0; trial < 300; ++trial) {
        Graph g = random_graph(rng, 7, 0.4);
        auto cg = random_coloring(rng, g, 6);
        for (int k = 2; k <= 7; ++k) {
            auto w = find_rainbow_path(cg, PathSpec(k));
            if (w) {
                CHECK(replays(*w, cg));
                CHECK(static_cast<int>(w->vertices.size()) == k);
            } else {
                // k-monotonicity
                for (int longer = k + 1; longer <= 8; ++longer) {
                    CHECK_FALSE(find_rainbow_path(cg, PathSpec(longer)));
                }
                // deleting an edge never creates a rainbow path
                for (std::size_t i = 0; i < g.size(); ++i) {
                    auto rest = cg.colors();
                    rest.erase(rest.begin() + static_cast<long>(i));
                    CHECK_FALSE(find_rainbow_path(ColoredGraph(g.without_edge(i), rest), PathSpec(k)));
                }
            }
            // color permutation invariance
            std::vector<Color> image(6);
            std::iota(image.begin(), image.end(), 1);
            std::shuffle(image.begin(), image.end(), rng);
            std::map<Color, Color> pi;
            for (int c = 1; c <= 6; ++c) {
                pi[c] = image[c - 1] * 3;
            }
            CHECK(find_rainbow_path(permute_colors(cg, pi), PathSpec(k)).has_value() == w.has_value());
        }
    }
}

TEST_CASE("many colors") {
    // star with 100 leaves, all distinct colors: rainbow P3 but no P4
    std::vector<ColoredGraph::Triple> t;
    for (int i = 1; i <= 100; ++i) {
        t.push_back({0, i, 1000 + i});
    }
    auto star = ColoredGraph::from_triples(101, t);
    CHECK(find_rainbow_path(star, PathSpec(3)));
    CHECK_FALSE(find_rainbow_path(star, PathSpec(4)));
}
