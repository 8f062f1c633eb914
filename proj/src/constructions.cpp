#include "rainbow_planar/constructions.hpp"

#include <array>
#include <vector>

#include "rainbow_planar/planarity.hpp"

namespace rpt {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 9> kNames{{
    {Family::k4_blocks, "k4-blocks"},
    {Family::g5, "g5"},
    {Family::g7, "g7"},
    {Family::gn, "gn"},
    {Family::double_wheel, "double-wheel"},
    {Family::k2_path, "k2-path"},
    {Family::octahedron, "octahedron"},
    {Family::icosahedron, "icosahedron"},
    {Family::disjoint_copies, "disjoint-copies"},
}};

ColoredGraph k4_block() {
    return ColoredGraph::from_triples(4, {{0, 1, 1}, {0, 2, 2}, {0, 3, 3}, {1, 2, 3}, {1, 3, 2}, {2, 3, 1}});
}

ColoredGraph g5() {
    return ColoredGraph::from_triples(5, {{0, 1, 1}, {0, 2, 2}, {0, 3, 3}, {2, 3, 4}, {4, 1, 4}, {4, 2, 3}, {4, 3, 2}});
}

ColoredGraph g7() {
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

// Proper 4- and 5-edge-colorings found by find_coloring(g, delta + 2, delta)
// and frozen; antipodal octahedron pairs are (0,1), (2,3), (4,5).
ColoredGraph octahedron() {
    return ColoredGraph::from_triples(6, {{0, 2, 1},
                                          {0, 3, 2},
                                          {0, 4, 3},
                                          {0, 5, 4},
                                          {1, 2, 3},
                                          {1, 3, 4},
                                          {1, 4, 2},
                                          {1, 5, 1},
                                          {2, 4, 4},
                                          {2, 5, 2},
                                          {3, 4, 1},
                                          {3, 5, 3}});
}

// Poles 0 and 11, upper ring 1..5, lower ring 6..10; upper i meets lower
// 5 + i and 5 + (i mod 5) + 1.
ColoredGraph icosahedron() {
    return ColoredGraph::from_triples(
        12, {{0, 1, 1},  {0, 2, 2},  {0, 3, 3},  {0, 4, 4},   {0, 5, 5},   {1, 2, 3},  {1, 5, 2},  {1, 6, 4},
             {1, 7, 5},  {2, 3, 1},  {2, 7, 4},  {2, 8, 5},   {3, 4, 2},   {3, 8, 4},  {3, 9, 5},  {4, 5, 1},
             {4, 9, 3},  {4, 10, 5}, {5, 6, 3},  {5, 10, 4},  {6, 7, 1},   {6, 10, 2}, {6, 11, 5}, {7, 8, 3},
             {7, 11, 2}, {8, 9, 2},  {8, 11, 1}, {9, 10, 1},  {9, 11, 4},  {10, 11, 3}});
}

// Prism on a_1..a_h (ids 0..h-1) and b_1..b_h (ids h..2h-1) colored as in
// the two variants of the 3-edge-coloring keyed on the parity of h.
ColoredGraph prism(int n) {
    const int h = n / 2;
    std::vector<ColoredGraph::Triple> triples;
    for (int side = 0; side < 2; ++side) {
        const int base = side * h;
        for (int i = 0; i + 1 < h; ++i) {
            triples.push_back({base + i, base + i + 1, i % 2 == 0 ? 1 : 2});
        }
        triples.push_back({base, base + h - 1, h % 2 == 0 ? 2 : 3});
    }
    for (int i = 0; i < h; ++i) {
        int color = 3;
        if (h % 2 == 1 && i == 0) {
            color = 2;
        } else if (h % 2 == 1 && i == h - 1) {
            color = 1;
        }
        triples.push_back({i, h + i, color});
    }
    return ColoredGraph::from_triples(n, triples);
}

ColoredGraph gn(int n) {
    if (n < 4) {
        throw ConstructionError("gn needs n >= 4");
    }
    if (n == 4) {
        return k4_block();
    }
    if (n == 5) {
        return g5();
    }
    if (n == 7) {
        return g7();
    }
    if (n % 2 == 0) {
        return prism(n);
    }
    const std::array<ColoredGraph, 2> parts{gn(n - 5), g5()};
    return disjoint_union(parts);
}

ColoredGraph k4_blocks(int n) {
    if (n < 4 || n % 4 != 0) {
        throw ConstructionError("k4-blocks needs n to be a positive multiple of 4");
    }
    std::vector<ColoredGraph::Triple> triples;
    const ColoredGraph block = k4_block();
    for (int offset = 0; offset < n; offset += 4) {
        for (std::size_t i = 0; i < block.graph().size(); ++i) {
            const Edge& e = block.graph().edge(i);
            triples.push_back({offset + e.u, offset + e.v, block.color(i)});
        }
    }
    return ColoredGraph::from_triples(n, triples);
}

// Hubs u = n-2 and w = n-1 over the cycle v_1..v_{n-2} (ids 0..n-3); the
// cycle alternates colors 1 and 2, spokes get private colors.
ColoredGraph double_wheel(int n) {
    if (n < 6 || n % 2 != 0) {
        throw ConstructionError("double-wheel needs even n >= 6");
    }
    const int ring = n - 2;
    const int u = n - 2;
    const int w = n - 1;
    std::vector<ColoredGraph::Triple> triples;
    int next = 3;
    for (int i = 0; i < ring; ++i) {
        triples.push_back({i, (i + 1) % ring, i % 2 == 0 ? 1 : 2});
        triples.push_back({u, i, next++});
        triples.push_back({w, i, next++});
    }
    return ColoredGraph::from_triples(n, triples);
}

// K2 + P_{n-2}: path v_1..v_{n-2} (ids 0..n-3), u = n-2, w = n-1. The even
// cycle u v_1 ... v_{n-2} u alternates a = 1 and b = 2 starting at uv_1;
// uw = 3, uv_i for 2 <= i <= n-3 and every wv_i get private colors.
ColoredGraph k2_path(int n) {
    if (n < 5 || n % 2 == 0) {
        throw ConstructionError("k2-path needs odd n >= 5");
    }
    const int len = n - 2;
    const int u = n - 2;
    const int w = n - 1;
    std::vector<ColoredGraph::Triple> triples{{u, 0, 1}, {u, len - 1, 2}, {u, w, 3}};
    for (int i = 0; i + 1 < len; ++i) {
        triples.push_back({i, i + 1, i % 2 == 0 ? 2 : 1});
    }
    int next = 4;
    for (int i = 1; i + 1 < len; ++i) {
        triples.push_back({u, i, next++});
    }
    for (int i = 0; i < len; ++i) {
        triples.push_back({w, i, next++});
    }
    return ColoredGraph::from_triples(n, triples);
}

}  // namespace

std::string to_string(Family family) {
    for (const auto& [f, name] : kNames) {
        if (f == family) {
            return std::string(name);
        }
    }
    return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
    for (const auto& [f, known] : kNames) {
        if (known == name) {
            return f;
        }
    }
    return std::nullopt;
}

ColoredGraph make(const ConstructionSpec& spec) {
    switch (spec.family) {
        case Family::k4_blocks:
            return k4_blocks(spec.n);
        case Family::g5:
            return g5();
        case Family::g7:
            return g7();
        case Family::gn:
            return gn(spec.n);
        case Family::double_wheel:
            return double_wheel(spec.n);
        case Family::k2_path:
            return k2_path(spec.n);
        case Family::octahedron:
            return octahedron();
        case Family::icosahedron:
            return icosahedron();
        case Family::disjoint_copies: {
            if (spec.copies < 1) {
                throw ConstructionError("disjoint-copies needs at least one copy");
            }
            if (spec.base == Family::disjoint_copies) {
                throw ConstructionError("disjoint-copies cannot nest");
            }
            ConstructionSpec part = spec;
            part.family = spec.base;
            const std::vector<ColoredGraph> parts(spec.copies, make(part));
            return disjoint_union(parts);
        }
    }
    throw ConstructionError("unknown family");
}

int expected_edges(const ConstructionSpec& spec) {
    switch (spec.family) {
        case Family::k4_blocks:
        case Family::gn:
            return 3 * spec.n / 2;
        case Family::g5:
            return 7;
        case Family::g7:
            return 10;
        case Family::double_wheel:
        case Family::k2_path:
            return 3 * spec.n - 6;
        case Family::octahedron:
            return 12;
        case Family::icosahedron:
            return 30;
        case Family::disjoint_copies: {
            ConstructionSpec part = spec;
            part.family = spec.base;
            return spec.copies * expected_edges(part);
        }
    }
    return 0;
}

int declared_k(const ConstructionSpec& spec) {
    switch (spec.family) {
        case Family::k4_blocks:
            return 4;
        case Family::g5:
        case Family::g7:
        case Family::gn:
            return 5;
        case Family::double_wheel:
        case Family::k2_path:
            return 8;
        case Family::octahedron:
            return 6;
        case Family::icosahedron:
            return 7;
        case Family::disjoint_copies: {
            ConstructionSpec part = spec;
            part.family = spec.base;
            return declared_k(part);
        }
    }
    return 0;
}

ValidationReport validate_construction(const ColoredGraph& cg, int k, int expected) {
    ValidationReport report;
    report.edge_count = static_cast<int>(cg.graph().size());
    report.expected_edges = expected;
    report.proper = is_proper(cg);
    report.planar = is_planar(cg.graph()).planar;
    report.witness = find_rainbow_path(cg, PathSpec(k));
    report.rainbow_free = !report.witness;
    report.colors_used = cg.colors_used();
    return report;
}

nlohmann::json to_json(const ValidationReport& report) {
    nlohmann::json doc = {{"edge_count", report.edge_count},
                          {"expected_edges", report.expected_edges},
                          {"proper", report.proper},
                          {"planar", report.planar},
                          {"rainbow_free", report.rainbow_free},
                          {"colors_used", report.colors_used},
                          {"pass", report.pass()}};
    if (report.witness) {
        doc["witness"] = to_json(*report.witness);
    }
    return doc;
}

}  // namespace rpt
