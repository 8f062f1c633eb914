#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rainbow_planar/colorer.hpp"
#include "rainbow_planar/graph.hpp"

namespace rpt {

/// Minimum degree at least 2 and no edge joining two degree-2 vertices.
bool is_reduced(const Graph& g);

struct CandidateFilters {
    bool reduced = false;
    bool planar = false;
};

/// Where candidate graphs come from: the built-in generator (n <= 8) or a
/// graph6 file assumed to hold pairwise non-isomorphic graphs.
struct CandidateSource {
    std::optional<std::string> graph6_file;

    std::string describe() const;
};

class EnumerationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Complete, isomorph-free list of n-vertex m-edge graphs passing the
/// filters, in a fixed deterministic order.
class CandidateStream {
  public:
    CandidateStream(std::string source, std::vector<Graph> graphs)
        : source_(std::move(source)), graphs_(std::move(graphs)) {}

    const std::string& source() const { return source_; }
    std::size_t size() const { return graphs_.size(); }
    bool empty() const { return graphs_.empty(); }
    const Graph& operator[](std::size_t i) const { return graphs_[i]; }
    auto begin() const { return graphs_.begin(); }
    auto end() const { return graphs_.end(); }

  private:
    std::string source_;
    std::vector<Graph> graphs_;
};

CandidateStream enumerate_candidates(int n, int m, CandidateFilters filters, const CandidateSource& source = {});

struct ExtremalOptions {
    int jobs = 1;
    std::uint64_t budget_nodes = 0;  ///< per colorer call; 0 = unlimited
    CandidateSource source;
    bool reductions = true;  ///< allow the reduced-graph filter where sound
};

/// Outcome of running one (n, m) level through the filter chain
/// degree -> reduction -> Euler bound -> planarity -> colorer.
struct LevelReport {
    int n = 0;
    int m = 0;
    int k = 0;
    std::string source;
    bool reductions_applied = false;
    bool exhaustive = true;  ///< false when a SAT candidate stopped the scan early

    std::size_t candidates = 0;
    std::size_t min_degree_ok = 0;
    std::size_t reduced = 0;
    std::size_t euler_ok = 0;
    std::size_t planar = 0;
    std::size_t unsat = 0;
    std::size_t sat = 0;
    std::size_t budget_exceeded = 0;
    std::uint64_t nodes = 0;
    std::string digest;  ///< FNV-1a over (graph6, status) of colorer inputs, in stream order

    std::optional<std::size_t> first_sat_index;
    std::optional<ColoredGraph> first_sat;

    /// Every candidate reaching the colorer came back UNSAT.
    bool pass() const { return sat == 0 && budget_exceeded == 0; }
};

/// PASS iff every (reduced, when requested) planar n-vertex m-edge graph is
/// UNSAT for find_coloring(g, k, m). Budget overruns fail the level.
LevelReport refute_level(int n, int m, int k, const ExtremalOptions& options, bool apply_reductions = true);

/// Scans the level until the lowest-index SAT candidate is found; counts
/// are complete only when no SAT candidate exists.
LevelReport find_level_witness(int n, int m, int k, const ExtremalOptions& options, bool apply_reductions);

struct ExtremalReport {
    int n = 0;
    int k = 0;
    bool complete = false;  ///< false if a budget overrun left a level undecided
    int value = 0;
    std::optional<ColoredGraph> achiever;
    std::optional<LevelReport> refuted;  ///< level value + 1, absent when vacuous
    std::string vacuous_reason;
    /// Levels (n', floor(3n'/2) + 1), n' < n, refuted so the reduced-graph
    /// filter is sound at this n.
    std::vector<LevelReport> chain;
    std::vector<std::string> provenance;
};

ExtremalReport compute_extremal(int n, int k, const ExtremalOptions& options = {});

nlohmann::json to_json(const LevelReport& level);
nlohmann::json to_json(const ExtremalReport& report);

}  // namespace rpt
