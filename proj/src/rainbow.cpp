#include "rainbow_planar/rainbow.hpp"

#include <algorithm>
#include <set>

namespace rpt {

bool replays(const RainbowWitness& w, const ColoredGraph& cg) {
    if (w.vertices.empty() || w.colors.size() + 1 != w.vertices.size()) {
        return false;
    }
    std::set<Vertex> seen(w.vertices.begin(), w.vertices.end());
    if (seen.size() != w.vertices.size()) {
        return false;
    }
    for (std::size_t i = 0; i + 1 < w.vertices.size(); ++i) {
        auto idx = cg.graph().edge_index(w.vertices[i], w.vertices[i + 1]);
        if (!idx || cg.color(*idx) != w.colors[i]) {
            return false;
        }
    }
    std::set<Color> distinct(w.colors.begin(), w.colors.end());
    return distinct.size() == w.colors.size();
}

nlohmann::json to_json(const RainbowWitness& w) { return {{"vertices", w.vertices}, {"colors", w.colors}}; }

ColorView::ColorView(const Graph& g)
    : graph_(std::make_shared<const Graph>(g)), colors_(g.size(), 0), arcs_(g.order()) {
    for (std::size_t i = 0; i < g.size(); ++i) {
        const Edge& e = g.edge(i);
        arcs_[e.u].push_back({e.v, static_cast<int>(i)});
        arcs_[e.v].push_back({e.u, static_cast<int>(i)});
    }
    for (auto& a : arcs_) {
        std::sort(a.begin(), a.end(), [](const Arc& x, const Arc& y) { return x.to < y.to; });
    }
}

ColorView::ColorView(const ColoredGraph& cg) : ColorView(cg.graph()) {
    colors_ = cg.colors();
    max_color_ = cg.max_color();
}

void ColorView::set_color(int edge, Color c) {
    colors_[edge] = c;
    max_color_ = std::max(max_color_, c);
}


RainbowPathFinder::RainbowPathFinder(const ColorView& view, int k, Color color_capacity)
    : view_(view), k_(k), on_path_(view.graph().order(), 0), used_(color_capacity / 64 + 1, 0) {}

bool RainbowPathFinder::grow(Vertex at, int remaining, int arm) {
    if (remaining == 0) {
        return arm == 0 && right_edges_ >= 0 ? grow(verts_[1].front(), right_edges_, 1) : true;
    }
    for (const auto& arc : view_.arcs(at)) {
        const Color c = view_.color(arc.edge);
        if (c == 0 || on_path_[arc.to] || test(c)) {
            continue;
        }
        on_path_[arc.to] = 1;
        set(c);
        verts_[arm].push_back(arc.to);
        cols_[arm].push_back(c);
        if (grow(arc.to, remaining - 1, arm)) {
            return true;
        }
        verts_[arm].pop_back();
        cols_[arm].pop_back();
        clear(c);
        on_path_[arc.to] = 0;
    }
    return false;
}

std::optional<RainbowWitness> RainbowPathFinder::anywhere() {
    right_edges_ = -1;
    verts_[1].clear();
    cols_[1].clear();
    for (Vertex s = 0; s < view_.graph().order(); ++s) {
        verts_[0].assign(1, s);
        cols_[0].clear();
        on_path_[s] = 1;
        const bool found = grow(s, k_ - 1, 0);
        if (found) {
            release();
            on_path_[s] = 0;
            return RainbowWitness{verts_[0], cols_[0]};
        }
        on_path_[s] = 0;
    }
    return std::nullopt;
}

bool RainbowPathFinder::exists_through(int edge) {
    const Color c = view_.color(edge);
    if (c == 0) {
        return false;
    }
    const Edge& e = view_.graph().edge(edge);
    const int arm_edges = k_ - 2;
    on_path_[e.u] = on_path_[e.v] = 1;
    set(c);
    bool found = false;
    for (int left = 0; left <= arm_edges && !found; ++left) {
        verts_[0].assign(1, e.u);
        verts_[1].assign(1, e.v);
        cols_[0].clear();
        cols_[1].clear();
        right_edges_ = arm_edges - left;
        found = grow(e.u, left, 0);
    }
    if (found) {
        release();
    }
    clear(c);
    on_path_[e.u] = on_path_[e.v] = 0;
    return found;
}

std::optional<RainbowWitness> RainbowPathFinder::through(int edge) {
    if (!exists_through(edge)) {
        return std::nullopt;
    }
    return assemble(view_.color(edge));
}

void RainbowPathFinder::release() {
    // A successful grow() leaves its path marked; anchors are cleared by
    // the callers.
    for (int arm = 0; arm < 2; ++arm) {
        for (std::size_t i = 1; i < verts_[arm].size(); ++i) {
            on_path_[verts_[arm][i]] = 0;
        }
        for (Color c : cols_[arm]) {
            clear(c);
        }
    }
}

RainbowWitness RainbowPathFinder::assemble(Color middle) const {
    RainbowWitness w;
    w.vertices.assign(verts_[0].rbegin(), verts_[0].rend());
    w.colors.assign(cols_[0].rbegin(), cols_[0].rend());
    w.colors.push_back(middle);
    w.vertices.insert(w.vertices.end(), verts_[1].begin(), verts_[1].end());
    w.colors.insert(w.colors.end(), cols_[1].begin(), cols_[1].end());
    std::vector<Vertex> rev(w.vertices.rbegin(), w.vertices.rend());
    if (rev < w.vertices) {
        w.vertices = std::move(rev);
        std::reverse(w.colors.begin(), w.colors.end());
    }
    return w;
}

std::optional<RainbowWitness> find_rainbow_path(const ColorView& view, int k) {
    RainbowPathFinder finder(view, k, view.max_color());
    return finder.anywhere();
}

std::optional<RainbowWitness> find_rainbow_path_through(const ColorView& view, int edge, int k) {
    RainbowPathFinder finder(view, k, view.max_color());
    return finder.through(edge);
}

namespace {

RainbowWitness restore_colors(RainbowWitness w, const ColoredGraph& original) {
    for (std::size_t i = 0; i < w.colors.size(); ++i) {
        w.colors[i] = original.color_of(w.vertices[i], w.vertices[i + 1]);
    }
    return w;
}

}  // namespace

std::optional<RainbowWitness> find_rainbow_path(const ColoredGraph& cg, const PathSpec& path) {
    ColorView view(cg.normalized());
    auto w = find_rainbow_path(view, path.vertices());
    if (!w) {
        return std::nullopt;
    }
    return restore_colors(std::move(*w), cg);
}

std::optional<RainbowWitness> find_rainbow_path_through(const ColoredGraph& cg, Edge e, const PathSpec& path) {
    auto idx = cg.graph().edge_index(e.u, e.v);
    if (!idx) {
        throw GraphError(to_string(e) + " is not an edge");
    }
    ColorView view(cg.normalized());
    auto w = find_rainbow_path_through(view, static_cast<int>(*idx), path.vertices());
    if (!w) {
        return std::nullopt;
    }
    return restore_colors(std::move(*w), cg);
}

}  // namespace rpt
