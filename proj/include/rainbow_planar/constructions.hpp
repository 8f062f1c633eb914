#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "rainbow_planar/graph.hpp"
#include "rainbow_planar/rainbow.hpp"

namespace rpt {

enum class Family { k4_blocks, g5, g7, gn, double_wheel, k2_path, octahedron, icosahedron, disjoint_copies };

std::string to_string(Family family);
/// Accepts the hyphenated names, e.g. "double-wheel".
std::optional<Family> parse_family(std::string_view name);

struct ConstructionSpec {
    Family family = Family::gn;
    int n = 0;  ///< target order where the family takes one
    int copies = 1;
    Family base = Family::octahedron;  ///< part family for disjoint-copies; n applies to it
};

class ConstructionError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

ColoredGraph make(const ConstructionSpec& spec);

/// Edge count the family is known to reach.
int expected_edges(const ConstructionSpec& spec);
/// Path order the family is meant to avoid as a rainbow path.
int declared_k(const ConstructionSpec& spec);

struct ValidationReport {
    int edge_count = 0;
    int expected_edges = 0;
    bool proper = false;
    bool planar = false;
    bool rainbow_free = false;
    int colors_used = 0;
    std::optional<RainbowWitness> witness;

    bool pass() const { return proper && planar && rainbow_free && edge_count == expected_edges; }
};

ValidationReport validate_construction(const ColoredGraph& cg, int k, int expected_edges);

nlohmann::json to_json(const ValidationReport& report);

}  // namespace rpt
