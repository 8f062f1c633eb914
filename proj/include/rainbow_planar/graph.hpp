#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rpt {

using Vertex = int;
using Color = int;

/// Raised for structurally invalid graphs and colorings.
class GraphError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Unordered vertex pair. Graph stores edges with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph on vertices 0..n-1 with a canonical edge list
/// (endpoints ordered, list sorted lexicographically).
class Graph {
  public:
    Graph() = default;
    Graph(int n, std::span<const Edge> edges);
    Graph(int n, std::initializer_list<Edge> edges);

    /// Edgeless graph on n vertices.
    static Graph empty(int n);
    static Graph complete(int n);

    int order() const { return n_; }
    std::size_t size() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(std::size_t i) const { return edges_[i]; }

    /// Sorted neighbor list.
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(v); }
    int degree(Vertex v) const { return static_cast<int>(adj_.at(v).size()); }
    bool has_edge(Vertex a, Vertex b) const { return edge_index(a, b).has_value(); }
    std::optional<std::size_t> edge_index(Vertex a, Vertex b) const;

    Graph without_edge(std::size_t index) const;
    /// Relabels vertex v as perm[v].
    Graph relabeled(std::span<const Vertex> perm) const;

    bool operator==(const Graph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

  private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
};

struct Neighborhoods {
    std::vector<Vertex> first;   ///< distance exactly 1
    std::vector<Vertex> second;  ///< distance exactly 2
};

Neighborhoods neighborhoods(const Graph& g, Vertex v);

/// Graph plus one positive color per edge, aligned with graph().edges().
class ColoredGraph {
  public:
    ColoredGraph() = default;
    ColoredGraph(Graph g, std::vector<Color> colors);

    struct Triple {
        Vertex u;
        Vertex v;
        Color color;
    };
    /// Builds from (u, v, color) triples in any order.
    static ColoredGraph from_triples(int n, std::span<const Triple> triples);
    static ColoredGraph from_triples(int n, std::initializer_list<Triple> triples);

    const Graph& graph() const { return graph_; }
    int order() const { return graph_.order(); }
    std::size_t size() const { return graph_.size(); }
    const std::vector<Color>& colors() const { return colors_; }
    Color color(std::size_t edge_index) const { return colors_[edge_index]; }
    /// Color of edge ab; throws GraphError if ab is not an edge.
    Color color_of(Vertex a, Vertex b) const;

    /// Number of distinct colors.
    int colors_used() const;
    Color max_color() const;
    /// Renames colors to 1..t in first-occurrence order along the edge list.
    ColoredGraph normalized() const;

    ColoredGraph with_color(std::size_t edge_index, Color c) const;

    bool operator==(const ColoredGraph&) const = default;

  private:
    Graph graph_;
    std::vector<Color> colors_;
};

bool is_proper(const ColoredGraph& cg);

/// Vertex ids shifted per part; each part's colors offset by the largest
/// color of the parts before it so the color ranges are disjoint.
ColoredGraph disjoint_union(std::span<const ColoredGraph> parts);

/// Maps every edge color through pi. Throws if pi misses a used color or
/// merges two used colors.
ColoredGraph permute_colors(const ColoredGraph& cg, const std::map<Color, Color>& pi);

/// Path on k vertices (k - 1 edges).
class PathSpec {
  public:
    explicit PathSpec(int k);
    int vertices() const { return k_; }
    int edges() const { return k_ - 1; }

  private:
    int k_;
};

std::string to_string(const Edge& e);

}  // namespace rpt
