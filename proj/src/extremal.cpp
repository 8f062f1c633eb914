#include "rainbow_planar/extremal.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <thread>

#include "rainbow_planar/codec.hpp"
#include "rainbow_planar/enumerate.hpp"
#include "rainbow_planar/planarity.hpp"

namespace rpt {

bool is_reduced(const Graph& g) {
    for (Vertex v = 0; v < g.order(); ++v) {
        if (g.degree(v) < 2) {
            return false;
        }
    }
    for (const Edge& e : g.edges()) {
        if (g.degree(e.u) == 2 && g.degree(e.v) == 2) {
            return false;
        }
    }
    return true;
}

std::string CandidateSource::describe() const {
    return graph6_file ? "graph6:" + *graph6_file : "built-in";
}

namespace {

GraphCatalog& catalog(int n) {
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<GraphCatalog>> catalogs;
    std::lock_guard lock(mutex);
    auto& slot = catalogs[n];
    if (!slot) {
        slot = std::make_unique<GraphCatalog>(n);
    }
    return *slot;
}

std::vector<Graph> read_graph6_level(const std::string& path, int n, int m) {
    std::ifstream in(path);
    if (!in) {
        throw EnumerationError("cannot open graph6 file " + path);
    }
    std::vector<Graph> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == ">>graph6<<") {
            continue;
        }
        Graph g;
        try {
            g = decode_graph6(line);
        } catch (const Graph6Error& e) {
            throw EnumerationError(path + ":" + std::to_string(line_no) + ": " + e.what());
        }
        if (g.order() == n && static_cast<int>(g.size()) == m) {
            out.push_back(std::move(g));
        }
    }
    return out;
}

}  // namespace

CandidateStream enumerate_candidates(int n, int m, CandidateFilters filters, const CandidateSource& source) {
    if (n < 0) {
        throw EnumerationError("negative vertex count");
    }
    std::vector<Graph> all;
    if (source.graph6_file) {
        all = read_graph6_level(*source.graph6_file, n, m);
    } else {
        if (n > kBuiltinEnumerationCap) {
            throw EnumerationError("n = " + std::to_string(n) + " exceeds the built-in enumeration cap of " +
                                   std::to_string(kBuiltinEnumerationCap) + "; supply a graph6 file");
        }
        all = catalog(n).graphs(m);
    }
    std::vector<Graph> kept;
    for (auto& g : all) {
        if (filters.reduced && !is_reduced(g)) {
            continue;
        }
        if (filters.planar && !is_planar(g).planar) {
            continue;
        }
        kept.push_back(std::move(g));
    }
    return CandidateStream(source.describe(), std::move(kept));
}

namespace {

enum class Stage { degree, reduction, euler, planarity, colored };

struct CandidateResult {
    Stage stopped_at = Stage::degree;
    SearchOutcome outcome;
    bool evaluated = false;
};

CandidateResult evaluate(const Graph& g, int k, bool reductions, std::uint64_t budget) {
    CandidateResult r;
    r.evaluated = true;
    if (reductions) {
        for (Vertex v = 0; v < g.order(); ++v) {
            if (g.degree(v) < 2) {
                r.stopped_at = Stage::degree;
                return r;
            }
        }
        if (!is_reduced(g)) {
            r.stopped_at = Stage::reduction;
            return r;
        }
    }
    auto verdict = is_planar(g);
    if (!verdict.planar) {
        r.stopped_at =
            verdict.reason == PlanarityVerdict::Reason::euler_bound ? Stage::euler : Stage::planarity;
        return r;
    }
    r.stopped_at = Stage::colored;
    const int palette = std::max(1, static_cast<int>(g.size()));
    r.outcome = find_coloring(g, k, palette, {.max_nodes = budget});
    return r;
}

constexpr std::size_t kChunk = 4;

// Processes candidates in chunks handed out in increasing index order. In
// first-SAT mode chunks starting past the best SAT index found so far are
// skipped, so every index below the final best has been evaluated.
std::vector<CandidateResult> run_candidates(const CandidateStream& stream, int k, const ExtremalOptions& options,
                                            bool reductions, bool stop_at_sat, std::size_t& best_sat) {
    const std::size_t count = stream.size();
    std::vector<CandidateResult> results(count);
    std::atomic<std::size_t> next_chunk{0};
    std::atomic<std::size_t> best{count};
    auto worker = [&] {
        while (true) {
            const std::size_t begin = next_chunk.fetch_add(1) * kChunk;
            if (begin >= count) {
                return;
            }
            if (stop_at_sat && begin > best.load()) {
                continue;
            }
            const std::size_t end = std::min(count, begin + kChunk);
            for (std::size_t i = begin; i < end; ++i) {
                results[i] = evaluate(stream[i], k, reductions, options.budget_nodes);
                if (stop_at_sat && results[i].stopped_at == Stage::colored &&
                    results[i].outcome.status == SearchStatus::sat) {
                    std::size_t seen = best.load();
                    while (i < seen && !best.compare_exchange_weak(seen, i)) {
                    }
                    break;
                }
            }
        }
    };
    const int jobs = std::max(1, options.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) {
            pool.emplace_back(worker);
        }
        for (auto& t : pool) {
            t.join();
        }
    }
    best_sat = best.load();
    return results;
}

std::string hex64(std::uint64_t x) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i, x >>= 4) {
        s[i] = digits[x & 15];
    }
    return s;
}

LevelReport run_level(int n, int m, int k, const ExtremalOptions& options, bool reductions, bool stop_at_sat) {
    LevelReport report;
    report.n = n;
    report.m = m;
    report.k = k;
    report.reductions_applied = reductions;
    const CandidateStream stream = enumerate_candidates(n, m, {}, options.source);
    report.source = stream.source();

    std::size_t best = stream.size();
    auto results = run_candidates(stream, k, options, reductions, stop_at_sat, best);
    const std::size_t limit = stop_at_sat && best < stream.size() ? best + 1 : stream.size();
    report.exhaustive = limit == stream.size() && !(stop_at_sat && best < stream.size());

    std::uint64_t digest = 0xcbf29ce484222325ULL;
    auto mix = [&](std::string_view s) {
        for (unsigned char ch : s) {
            digest ^= ch;
            digest *= 0x100000001b3ULL;
        }
    };
    for (std::size_t i = 0; i < limit; ++i) {
        const auto& r = results[i];
        ++report.candidates;
        if (r.stopped_at == Stage::degree) {
            continue;
        }
        ++report.min_degree_ok;
        if (r.stopped_at == Stage::reduction) {
            continue;
        }
        ++report.reduced;
        if (r.stopped_at == Stage::euler) {
            continue;
        }
        ++report.euler_ok;
        if (r.stopped_at == Stage::planarity) {
            continue;
        }
        ++report.planar;
        report.nodes += r.outcome.stats.nodes;
        switch (r.outcome.status) {
            case SearchStatus::sat:
                ++report.sat;
                if (!report.first_sat) {
                    report.first_sat_index = i;
                    report.first_sat = r.outcome.certificate;
                }
                break;
            case SearchStatus::unsat:
                ++report.unsat;
                break;
            case SearchStatus::budget_exceeded:
                ++report.budget_exceeded;
                break;
        }
        mix(encode_graph6(stream[i]));
        mix(":");
        mix(to_string(r.outcome.status));
        mix(";");
    }
    report.digest = hex64(digest);
    return report;
}

int three_halves(int n) { return 3 * n / 2; }

int max_planar_edges(int n) { return n >= 3 ? 3 * n - 6 : n * (n - 1) / 2; }

}  // namespace

LevelReport refute_level(int n, int m, int k, const ExtremalOptions& options, bool apply_reductions) {
    return run_level(n, m, k, options, apply_reductions, false);
}

LevelReport find_level_witness(int n, int m, int k, const ExtremalOptions& options, bool apply_reductions) {
    return run_level(n, m, k, options, apply_reductions, true);
}

ExtremalReport compute_extremal(int n, int k, const ExtremalOptions& options) {
    if (n < 1) {
        throw std::invalid_argument("n must be positive");
    }
    PathSpec path(k);
    ExtremalReport report;
    report.n = n;
    report.k = k;
    report.provenance.push_back("n=" + std::to_string(n) + ": " + options.source.describe());

    // The reduced-graph filter is sound at level (n, m) with m > floor(3n/2)
    // once every smaller order n' has no colorable planar graph with
    // floor(3n'/2) + 1 edges: deleting a vertex of degree <= 1 or an
    // adjacent pair of degree-2 vertices never lowers e - floor(3n/2).
    std::optional<bool> chain_ok;
    auto ensure_chain = [&]() -> bool {
        if (chain_ok) {
            return *chain_ok;
        }
        ExtremalOptions builtin = options;
        builtin.source = {};
        chain_ok = true;
        for (int smaller = 4; smaller < n; ++smaller) {
            const int level = three_halves(smaller) + 1;
            if (level > max_planar_edges(smaller)) {
                continue;
            }
            if (smaller > kBuiltinEnumerationCap) {
                report.provenance.push_back("chain stops at n=" + std::to_string(smaller) +
                                           ": beyond built-in enumeration, reductions disabled");
                chain_ok = false;
                break;
            }
            LevelReport r = refute_level(smaller, level, k, builtin, true);
            const bool ok = r.pass();
            report.chain.push_back(std::move(r));
            if (!ok) {
                chain_ok = false;
                break;
            }
        }
        return *chain_ok;
    };

    report.complete = true;
    report.value = 0;
    report.achiever = ColoredGraph(Graph::empty(n), {});
    const int top = max_planar_edges(n);
    for (int m = 1; m <= top; ++m) {
        const bool reduce = options.reductions && m > three_halves(n) && ensure_chain();
        LevelReport level = find_level_witness(n, m, k, options, reduce);
        if (level.first_sat) {
            report.value = m;
            report.achiever = level.first_sat;
            continue;
        }
        if (level.budget_exceeded > 0) {
            report.complete = false;
        }
        report.refuted = std::move(level);
        return report;
    }
    report.vacuous_reason = "m = " + std::to_string(top + 1) + " exceeds the planar maximum " +
                            (n >= 3 ? std::string("3n - 6") : std::string("C(n, 2)"));
    return report;
}

nlohmann::json to_json(const LevelReport& level) {
    nlohmann::json doc = {{"n", level.n},
                          {"m", level.m},
                          {"k", level.k},
                          {"source", level.source},
                          {"reductions_applied", level.reductions_applied},
                          {"exhaustive", level.exhaustive},
                          {"counts",
                           {{"candidates", level.candidates},
                            {"min_degree_ok", level.min_degree_ok},
                            {"reduced", level.reduced},
                            {"euler_ok", level.euler_ok},
                            {"planar", level.planar},
                            {"unsat", level.unsat},
                            {"sat", level.sat},
                            {"budget_exceeded", level.budget_exceeded}}},
                          {"nodes", level.nodes},
                          {"digest", level.digest},
                          {"pass", level.pass()}};
    if (level.first_sat) {
        doc["first_sat"] = {{"index", *level.first_sat_index}, {"certificate", to_json(*level.first_sat)}};
    }
    return doc;
}

nlohmann::json to_json(const ExtremalReport& report) {
    nlohmann::json chain = nlohmann::json::array();
    for (const auto& level : report.chain) {
        chain.push_back(to_json(level));
    }
    nlohmann::json doc = {{"n", report.n},
                          {"k", report.k},
                          {"complete", report.complete},
                          {"value", report.value},
                          {"chain", std::move(chain)},
                          {"provenance", report.provenance}};
    doc["achiever"] = report.achiever ? to_json(*report.achiever, {{"k", report.k}, {"edges", report.value}})
                                      : nlohmann::json(nullptr);
    doc["refuted_level"] = report.refuted ? to_json(*report.refuted) : nlohmann::json(nullptr);
    if (!report.vacuous_reason.empty()) {
        doc["vacuous"] = report.vacuous_reason;
    }
    return doc;
}

}  // namespace rpt
