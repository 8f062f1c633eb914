#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include <json.hpp>

#include "rainbow_planar/graph.hpp"

namespace rpt {

/// Vertex sequence of a rainbow path together with its edge colors.
struct RainbowWitness {
    std::vector<Vertex> vertices;
    std::vector<Color> colors;

    bool operator==(const RainbowWitness&) const = default;
};

/// True iff w is a path of cg (distinct vertices, consecutive pairs are
/// edges with the recorded colors) whose colors are pairwise distinct.
bool replays(const RainbowWitness& w, const ColoredGraph& cg);

nlohmann::json to_json(const RainbowWitness& w);

/// Adjacency with per-edge colors that may be changed in place; color 0
/// marks an uncolored edge, which path searches never traverse. Colors
/// are expected to be small (normalized) ids.
class ColorView {
  public:
    struct Arc {
        Vertex to;
        int edge;
    };

    explicit ColorView(const Graph& g);
    explicit ColorView(const ColoredGraph& cg);

    const Graph& graph() const { return *graph_; }
    Color color(int edge) const { return colors_[edge]; }
    void set_color(int edge, Color c);
    const std::vector<Arc>& arcs(Vertex v) const { return arcs_[v]; }
    Color max_color() const { return max_color_; }

  private:
    std::shared_ptr<const Graph> graph_;
    std::vector<Color> colors_;
    std::vector<std::vector<Arc>> arcs_;
    Color max_color_ = 0;
};

/// Reusable rainbow-path search over a ColorView. Scratch state is sized
/// once at construction; colors above color_capacity must not appear.
class RainbowPathFinder {
  public:
    RainbowPathFinder(const ColorView& view, int k, Color color_capacity);

    /// Lexicographically least rainbow path on k vertices (ascending start
    /// vertex, neighbors explored in ascending order).
    std::optional<RainbowWitness> anywhere();
    /// Some rainbow path on k vertices using the given edge, reported in the
    /// orientation with the smaller vertex sequence.
    std::optional<RainbowWitness> through(int edge);
    /// Existence-only variant of through() that skips witness assembly.
    bool exists_through(int edge);

  private:
    bool test(Color c) const { return (used_[c >> 6] >> (c & 63)) & 1u; }
    void set(Color c) { used_[c >> 6] |= std::uint64_t{1} << (c & 63); }
    void clear(Color c) { used_[c >> 6] &= ~(std::uint64_t{1} << (c & 63)); }
    bool grow(Vertex at, int remaining, int arm);
    void release();
    RainbowWitness assemble(Color middle) const;

    const ColorView& view_;
    int k_;
    std::vector<char> on_path_;
    std::vector<std::uint64_t> used_;
    // arm 0: the only arm (anywhere) or the left arm (through); arm 1: right arm
    std::vector<Vertex> verts_[2];
    std::vector<Color> cols_[2];
    int right_edges_ = 0;
};

/// Lexicographically least rainbow path on k vertices among colored edges.
std::optional<RainbowWitness> find_rainbow_path(const ColorView& view, int k);
/// Some rainbow path on k vertices through the given (colored) edge.
std::optional<RainbowWitness> find_rainbow_path_through(const ColorView& view, int edge, int k);

/// Colors are normalized internally; witness colors are reported in the
/// caller's original ids.
std::optional<RainbowWitness> find_rainbow_path(const ColoredGraph& cg, const PathSpec& path);
std::optional<RainbowWitness> find_rainbow_path_through(const ColoredGraph& cg, Edge e, const PathSpec& path);

}  // namespace rpt
