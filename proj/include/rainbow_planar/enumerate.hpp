#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <vector>

#include "rainbow_planar/graph.hpp"

namespace rpt {

/// Largest order for which the built-in generator is offered.
inline constexpr int kBuiltinEnumerationCap = 8;
/// Largest order the 64-bit canonical code can represent.
inline constexpr int kCanonicalCodeMaxOrder = 11;

/// Canonical code of g: the least upper-triangle bit string over all vertex
/// orders compatible with an equitable degree refinement. Two graphs of the
/// same order are isomorphic iff their codes are equal.
std::uint64_t canonical_code(const Graph& g);
Graph graph_from_code(int n, std::uint64_t code);

/// Isomorphism classes of n-vertex graphs, generated level by level: every
/// class with m edges is reached by adding one edge to a class with m - 1
/// edges, and duplicates are rejected by canonical code. Each level is
/// sorted by code. Thread-safe; levels are cached.
class GraphCatalog {
  public:
    explicit GraphCatalog(int n);

    int order() const { return n_; }
    const std::vector<std::uint64_t>& level(int m);
    std::vector<Graph> graphs(int m);

  private:
    int n_;
    std::mutex mutex_;
    std::vector<std::vector<std::uint64_t>> levels_;
};

}  // namespace rpt
