#include "rainbow_planar/colorer.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "rainbow_planar/codec.hpp"
#include "rainbow_planar/rainbow.hpp"

namespace rpt {

std::string_view to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::sat:
            return "SAT";
        case SearchStatus::unsat:
            return "UNSAT";
        case SearchStatus::budget_exceeded:
            return "BUDGET_EXCEEDED";
    }
    return "?";
}

std::vector<int> search_edge_order(const Graph& g) {
    std::vector<int> order(g.size());
    std::iota(order.begin(), order.end(), 0);
    auto weight = [&](int i) { return g.degree(g.edge(i).u) + g.degree(g.edge(i).v); };
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return weight(a) > weight(b); });
    return order;
}

namespace {

using Clock = std::chrono::steady_clock;

class Backtracker {
  public:
    Backtracker(const Graph& g, int k, int max_colors, const SearchLimits& limits)
        : g_(g),
          k_(k),
          palette_(std::min<int>(max_colors, static_cast<int>(g.size()))),
          limits_(limits),
          order_(search_edge_order(g)),
          view_(g),
          finder_(view_, k, std::max(palette_, 1)),
          masks_(g.order(), 0),
          start_(Clock::now()) {
        if (k < 3) {
            throw std::invalid_argument("find_coloring needs k >= 3");
        }
        if (max_colors < 1) {
            throw std::invalid_argument("max_colors must be positive");
        }
        if (palette_ > kMaxSearchColors) {
            throw std::invalid_argument("palette of " + std::to_string(palette_) + " colors exceeds the supported " +
                                        std::to_string(kMaxSearchColors));
        }
    }

    // Returns true when the visitor asked to stop (or a budget tripped).
    bool run(const std::function<bool(const ColoredGraph&)>& visit) {
        visit_ = &visit;
        return place(0, 0);
    }

    bool budget_exceeded() const { return exceeded_; }
    std::uint64_t nodes() const { return nodes_; }
    int max_color_seen() const { return max_seen_; }
    double elapsed() const { return std::chrono::duration<double>(Clock::now() - start_).count(); }

  private:
    bool out_of_budget() {
        if (limits_.max_nodes != 0 && nodes_ > limits_.max_nodes) {
            return true;
        }
        if (limits_.max_time.count() != 0 && (nodes_ & 1023) == 0 && Clock::now() - start_ > limits_.max_time) {
            return true;
        }
        return false;
    }

    bool place(std::size_t pos, int used) {
        if (pos == order_.size()) {
            std::vector<Color> colors(g_.size());
            for (std::size_t i = 0; i < g_.size(); ++i) {
                colors[i] = view_.color(static_cast<int>(i));
            }
            return !(*visit_)(ColoredGraph(g_, std::move(colors)));
        }
        const int e = order_[pos];
        const Vertex u = g_.edge(e).u;
        const Vertex v = g_.edge(e).v;
        const int limit = std::min(used + 1, palette_);
        for (int c = 1; c <= limit; ++c) {
            const std::uint64_t bit = std::uint64_t{1} << c;
            if ((masks_[u] | masks_[v]) & bit) {
                continue;
            }
            ++nodes_;
            if (out_of_budget()) {
                exceeded_ = true;
                return true;
            }
            max_seen_ = std::max(max_seen_, c);
            view_.set_color(e, c);
            if (!finder_.exists_through(e)) {
                masks_[u] |= bit;
                masks_[v] |= bit;
                const bool stop = place(pos + 1, std::max(used, c));
                masks_[u] &= ~bit;
                masks_[v] &= ~bit;
                if (stop) {
                    view_.set_color(e, 0);
                    return true;
                }
            }
            view_.set_color(e, 0);
        }
        return false;
    }

    const Graph& g_;
    int k_;
    int palette_;
    SearchLimits limits_;
    std::vector<int> order_;
    ColorView view_;
    RainbowPathFinder finder_;
    std::vector<std::uint64_t> masks_;
    Clock::time_point start_;
    const std::function<bool(const ColoredGraph&)>* visit_ = nullptr;
    std::uint64_t nodes_ = 0;
    int max_seen_ = 0;
    bool exceeded_ = false;
};

}  // namespace

SearchOutcome find_coloring(const Graph& g, int k, int max_colors, const SearchLimits& limits) {
    Backtracker search(g, k, max_colors, limits);
    SearchOutcome out;
    std::function<bool(const ColoredGraph&)> keep_first = [&](const ColoredGraph& cg) {
        out.certificate = cg;
        return false;
    };
    search.run(keep_first);
    if (search.budget_exceeded()) {
        out.status = SearchStatus::budget_exceeded;
        out.certificate.reset();
    } else {
        out.status = out.certificate ? SearchStatus::sat : SearchStatus::unsat;
    }
    out.stats.nodes = search.nodes();
    out.stats.max_colors_used = out.certificate ? out.certificate->max_color() : search.max_color_seen();
    out.stats.wall_seconds = search.elapsed();
    return out;
}

std::uint64_t enumerate_colorings(const Graph& g, int k, int max_colors,
                                  const std::function<bool(const ColoredGraph&)>& visit) {
    Backtracker search(g, k, max_colors, {});
    std::uint64_t count = 0;
    std::function<bool(const ColoredGraph&)> counting = [&](const ColoredGraph& cg) {
        ++count;
        return visit(cg);
    };
    search.run(counting);
    return count;
}

std::uint64_t oracle_enumerate(const Graph& g, int k) {
    if (g.size() > kOracleMaxEdges) {
        throw std::invalid_argument("oracle_enumerate is limited to " + std::to_string(kOracleMaxEdges) + " edges");
    }
    const PathSpec path(k);
    const std::size_t m = g.size();
    std::vector<Color> colors(m, 1);
    std::uint64_t count = 0;
    // Iterative restricted-growth string walk: colors[i] <= 1 + max(colors[0..i)).
    std::vector<Color> prefix_max(m + 1, 0);
    auto leaf = [&] {
        ColoredGraph cg(g, colors);
        if (is_proper(cg) && !find_rainbow_path(cg, path)) {
            ++count;
        }
    };
    if (m == 0) {
        leaf();
        return count;
    }
    std::size_t i = 0;
    colors[0] = 0;
    while (true) {
        if (colors[i] < prefix_max[i] + 1) {
            ++colors[i];
            prefix_max[i + 1] = std::max(prefix_max[i], colors[i]);
            if (i + 1 == m) {
                leaf();
            } else {
                ++i;
                colors[i] = 0;
            }
        } else {
            if (i == 0) {
                break;
            }
            --i;
        }
    }
    return count;
}

nlohmann::json to_json(const SearchOutcome& outcome, int k, int max_colors) {
    nlohmann::json doc = {{"status", to_string(outcome.status)},
                          {"k", k},
                          {"max_colors", max_colors},
                          {"stats", {{"nodes", outcome.stats.nodes}, {"max_colors_used", outcome.stats.max_colors_used}}}};
    if (outcome.certificate) {
        doc["certificate"] = to_json(*outcome.certificate, {{"k", k}, {"max_colors", max_colors},
                                                            {"stats", doc["stats"]}});
    }
    return doc;
}

}  // namespace rpt
