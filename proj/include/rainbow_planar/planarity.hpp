#pragma once

#include <string_view>

#include "rainbow_planar/graph.hpp"

namespace rpt {

struct PlanarityVerdict {
    enum class Reason { euler_bound, combinatorial_test };

    bool planar = true;
    Reason reason = Reason::combinatorial_test;

    explicit operator bool() const { return planar; }
};

std::string_view to_string(PlanarityVerdict::Reason r);

/// Left-right planarity test on a DFS orientation. Graphs with n >= 3 and
/// more than 3n - 6 edges are rejected by the Euler bound without the test.
PlanarityVerdict is_planar(const Graph& g);

}  // namespace rpt
