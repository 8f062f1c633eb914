#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "rainbow_planar/graph.hpp"

namespace rpt {

enum class SearchStatus { sat, unsat, budget_exceeded };

std::string_view to_string(SearchStatus s);

struct SearchStats {
    std::uint64_t nodes = 0;
    /// Largest color id placed on any edge during the search.
    int max_colors_used = 0;
    double wall_seconds = 0.0;
};

struct SearchOutcome {
    SearchStatus status = SearchStatus::unsat;
    std::optional<ColoredGraph> certificate;  ///< present iff status == sat
    SearchStats stats;
};

struct SearchLimits {
    std::uint64_t max_nodes = 0;  ///< 0 = unlimited
    std::chrono::milliseconds max_time{0};
};

/// Largest palette the search supports (per-vertex color masks are 64-bit).
inline constexpr int kMaxSearchColors = 63;

/// Fail-first static edge order: decreasing endpoint degree sum, ties by
/// canonical edge index.
std::vector<int> search_edge_order(const Graph& g);

/// Complete backtracking search for a proper edge coloring of g with at
/// most max_colors colors and no rainbow path on k vertices. Colors are
/// introduced in first-use order along the search edge order, so each
/// color-renaming class is visited once. max_colors is clamped to e(g);
/// throws std::invalid_argument for k < 3, max_colors < 1, or a clamped
/// palette above kMaxSearchColors.
SearchOutcome find_coloring(const Graph& g, int k, int max_colors, const SearchLimits& limits = {});

/// Visits every solution of the same search (one per renaming class).
/// The visitor returns false to stop early. Returns the number visited.
std::uint64_t enumerate_colorings(const Graph& g, int k, int max_colors,
                                  const std::function<bool(const ColoredGraph&)>& visit);

/// Largest edge count oracle_enumerate accepts.
inline constexpr std::size_t kOracleMaxEdges = 12;

/// Independent cross-check: walks every restricted-growth color string over
/// the canonical edge order and tests each complete coloring with
/// is_proper and the whole-graph rainbow detector. Counts renaming classes.
std::uint64_t oracle_enumerate(const Graph& g, int k);

nlohmann::json to_json(const SearchOutcome& outcome, int k, int max_colors);

}  // namespace rpt
