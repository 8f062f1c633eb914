#include "rainbow_planar/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <unordered_map>

namespace rpt {

std::string to_string(const Edge& e) {
    return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

Graph::Graph(int n, std::span<const Edge> edges) : n_(n) {
    if (n < 0) {
        throw GraphError("negative vertex count");
    }
    edges_.reserve(edges.size());
    for (const Edge& e : edges) {
        if (e.u == e.v) {
            throw GraphError("loop edge at vertex " + std::to_string(e.u));
        }
        if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
            throw GraphError("edge " + to_string(e) + " has an endpoint outside 0.." + std::to_string(n - 1));
        }
        edges_.push_back(e.u < e.v ? e : Edge{e.v, e.u});
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end()) {
        throw GraphError("duplicate edge " + to_string(*dup));
    }
    adj_.assign(n, {});
    for (const Edge& e : edges_) {
        adj_[e.u].push_back(e.v);
        adj_[e.v].push_back(e.u);
    }
    for (auto& nb : adj_) {
        std::sort(nb.begin(), nb.end());
    }
}

Graph::Graph(int n, std::initializer_list<Edge> edges) : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

Graph Graph::empty(int n) { return Graph(n, std::span<const Edge>{}); }

Graph Graph::complete(int n) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            edges.push_back({u, v});
        }
    }
    return Graph(n, edges);
}

std::optional<std::size_t> Graph::edge_index(Vertex a, Vertex b) const {
    Edge key = a < b ? Edge{a, b} : Edge{b, a};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || *it != key) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - edges_.begin());
}

Graph Graph::without_edge(std::size_t index) const {
    std::vector<Edge> rest;
    rest.reserve(edges_.size() - 1);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        if (i != index) {
            rest.push_back(edges_[i]);
        }
    }
    return Graph(n_, rest);
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
    if (perm.size() != static_cast<std::size_t>(n_)) {
        throw GraphError("relabeling has wrong length");
    }
    std::vector<Edge> moved;
    moved.reserve(edges_.size());
    for (const Edge& e : edges_) {
        moved.push_back({perm[e.u], perm[e.v]});
    }
    return Graph(n_, moved);
}

Neighborhoods neighborhoods(const Graph& g, Vertex v) {
    if (v < 0 || v >= g.order()) {
        throw GraphError("vertex " + std::to_string(v) + " out of range");
    }
    std::vector<int> dist(g.order(), -1);
    dist[v] = 0;
    std::queue<Vertex> frontier;
    frontier.push(v);
    Neighborhoods out;
    while (!frontier.empty()) {
        Vertex x = frontier.front();
        frontier.pop();
        if (dist[x] == 2) {
            continue;
        }
        for (Vertex y : g.neighbors(x)) {
            if (dist[y] < 0) {
                dist[y] = dist[x] + 1;
                frontier.push(y);
            }
        }
    }
    for (Vertex x = 0; x < g.order(); ++x) {
        if (dist[x] == 1) {
            out.first.push_back(x);
        } else if (dist[x] == 2) {
            out.second.push_back(x);
        }
    }
    return out;
}

ColoredGraph::ColoredGraph(Graph g, std::vector<Color> colors) : graph_(std::move(g)), colors_(std::move(colors)) {
    if (colors_.size() != graph_.size()) {
        throw GraphError("coloring has " + std::to_string(colors_.size()) + " colors for " +
                         std::to_string(graph_.size()) + " edges");
    }
    for (std::size_t i = 0; i < colors_.size(); ++i) {
        if (colors_[i] <= 0) {
            throw GraphError("edge " + to_string(graph_.edge(i)) + " has non-positive color " +
                             std::to_string(colors_[i]));
        }
    }
}

ColoredGraph ColoredGraph::from_triples(int n, std::span<const Triple> triples) {
    std::vector<Edge> edges;
    edges.reserve(triples.size());
    for (const auto& t : triples) {
        edges.push_back({t.u, t.v});
    }
    Graph g(n, edges);
    std::vector<Color> colors(g.size(), 0);
    for (const auto& t : triples) {
        colors[*g.edge_index(t.u, t.v)] = t.color;
    }
    return ColoredGraph(std::move(g), std::move(colors));
}

ColoredGraph ColoredGraph::from_triples(int n, std::initializer_list<Triple> triples) {
    return from_triples(n, std::span<const Triple>(triples.begin(), triples.size()));
}

Color ColoredGraph::color_of(Vertex a, Vertex b) const {
    auto idx = graph_.edge_index(a, b);
    if (!idx) {
        throw GraphError("(" + std::to_string(a) + "," + std::to_string(b) + ") is not an edge");
    }
    return colors_[*idx];
}

int ColoredGraph::colors_used() const {
    std::set<Color> distinct(colors_.begin(), colors_.end());
    return static_cast<int>(distinct.size());
}

Color ColoredGraph::max_color() const {
    return colors_.empty() ? 0 : *std::max_element(colors_.begin(), colors_.end());
}

ColoredGraph ColoredGraph::normalized() const {
    std::unordered_map<Color, Color> rename;
    std::vector<Color> out;
    out.reserve(colors_.size());
    for (Color c : colors_) {
        auto [it, fresh] = rename.try_emplace(c, static_cast<Color>(rename.size()) + 1);
        out.push_back(it->second);
    }
    return ColoredGraph(graph_, std::move(out));
}

ColoredGraph ColoredGraph::with_color(std::size_t edge_index, Color c) const {
    auto colors = colors_;
    colors.at(edge_index) = c;
    return ColoredGraph(graph_, std::move(colors));
}

bool is_proper(const ColoredGraph& cg) {
    const Graph& g = cg.graph();
    std::set<std::pair<Vertex, Color>> seen;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const Edge& e = g.edge(i);
        if (!seen.insert({e.u, cg.color(i)}).second || !seen.insert({e.v, cg.color(i)}).second) {
            return false;
        }
    }
    return true;
}

ColoredGraph disjoint_union(std::span<const ColoredGraph> parts) {
    int n = 0;
    Color offset = 0;
    std::vector<ColoredGraph::Triple> triples;
    for (const auto& part : parts) {
        for (std::size_t i = 0; i < part.size(); ++i) {
            const Edge& e = part.graph().edge(i);
            triples.push_back({e.u + n, e.v + n, part.color(i) + offset});
        }
        n += part.order();
        offset += part.max_color();
    }
    return ColoredGraph::from_triples(n, triples);
}

ColoredGraph permute_colors(const ColoredGraph& cg, const std::map<Color, Color>& pi) {
    std::map<Color, Color> image_of;
    std::vector<Color> out;
    out.reserve(cg.size());
    for (Color c : cg.colors()) {
        auto it = pi.find(c);
        if (it == pi.end()) {
            throw GraphError("color map does not cover color " + std::to_string(c));
        }
        auto [prev, fresh] = image_of.try_emplace(it->second, c);
        if (!fresh && prev->second != c) {
            throw GraphError("color map is not injective: colors " + std::to_string(prev->second) + " and " +
                             std::to_string(c) + " both map to " + std::to_string(it->second));
        }
        out.push_back(it->second);
    }
    return ColoredGraph(cg.graph(), std::move(out));
}

PathSpec::PathSpec(int k) : k_(k) {
    if (k < 2) {
        throw std::invalid_argument("path needs at least 2 vertices, got " + std::to_string(k));
    }
}

}  // namespace rpt
