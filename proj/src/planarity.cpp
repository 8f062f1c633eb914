#include "rainbow_planar/planarity.hpp"

#include <algorithm>
#include <limits>
#include <vector>

namespace rpt {

std::string_view to_string(PlanarityVerdict::Reason r) {
    return r == PlanarityVerdict::Reason::euler_bound ? "euler-bound" : "combinatorial-test";
}

namespace {

constexpr int kNone = -1;

// Edges are identified by their index in the graph's edge list; the
// orientation phase fixes src/dst for each of them.
class LeftRightTest {
  public:
    explicit LeftRightTest(const Graph& g)
        : g_(g),
          m_(static_cast<int>(g.size())),
          height_(g.order(), kUnvisited),
          parent_edge_(g.order(), kNone),
          oriented_(m_, false),
          src_(m_, kNone),
          dst_(m_, kNone),
          lowpt_(m_, 0),
          lowpt2_(m_, 0),
          nesting_depth_(m_, 0),
          out_(g.order()),
          ref_(m_, kNone),
          lowpt_edge_(m_, kNone),
          stack_bottom_(m_, 0) {
        incident_.assign(g.order(), {});
        for (int e = 0; e < m_; ++e) {
            incident_[g.edge(e).u].push_back(e);
            incident_[g.edge(e).v].push_back(e);
        }
    }

    bool run() {
        std::vector<Vertex> roots;
        for (Vertex v = 0; v < g_.order(); ++v) {
            if (height_[v] == kUnvisited) {
                height_[v] = 0;
                roots.push_back(v);
                orient(v);
            }
        }
        for (Vertex v = 0; v < g_.order(); ++v) {
            std::sort(out_[v].begin(), out_[v].end(),
                      [&](int a, int b) { return nesting_depth_[a] < nesting_depth_[b]; });
        }
        for (Vertex r : roots) {
            if (!test(r)) {
                return false;
            }
        }
        return true;
    }

  private:
    static constexpr int kUnvisited = std::numeric_limits<int>::max();

    struct Interval {
        int low = kNone;
        int high = kNone;
        bool empty() const { return low == kNone && high == kNone; }
    };
    struct ConflictPair {
        Interval left;
        Interval right;
        void swap() { std::swap(left, right); }
    };

    int other(int e, Vertex v) const { return g_.edge(e).u == v ? g_.edge(e).v : g_.edge(e).u; }

    void orient(Vertex v) {
        const int e = parent_edge_[v];
        for (int vw : incident_[v]) {
            if (oriented_[vw]) {
                continue;
            }
            oriented_[vw] = true;
            const Vertex w = other(vw, v);
            src_[vw] = v;
            dst_[vw] = w;
            out_[v].push_back(vw);
            lowpt_[vw] = height_[v];
            lowpt2_[vw] = height_[v];
            if (height_[w] == kUnvisited) {
                parent_edge_[w] = vw;
                height_[w] = height_[v] + 1;
                orient(w);
            } else {
                lowpt_[vw] = height_[w];
            }
            nesting_depth_[vw] = 2 * lowpt_[vw];
            if (lowpt2_[vw] < height_[v]) {
                nesting_depth_[vw] += 1;
            }
            if (e != kNone) {
                if (lowpt_[vw] < lowpt_[e]) {
                    lowpt2_[e] = std::min(lowpt_[e], lowpt2_[vw]);
                    lowpt_[e] = lowpt_[vw];
                } else if (lowpt_[vw] > lowpt_[e]) {
                    lowpt2_[e] = std::min(lowpt2_[e], lowpt_[vw]);
                } else {
                    lowpt2_[e] = std::min(lowpt2_[e], lowpt2_[vw]);
                }
            }
        }
    }

    bool conflicting(const Interval& i, int b) const { return !i.empty() && lowpt_[i.high] > lowpt_[b]; }

    int lowest(const ConflictPair& p) const {
        if (p.left.empty()) {
            return lowpt_[p.right.low];
        }
        if (p.right.empty()) {
            return lowpt_[p.left.low];
        }
        return std::min(lowpt_[p.left.low], lowpt_[p.right.low]);
    }

    bool test(Vertex v) {
        const int e = parent_edge_[v];
        bool first = true;
        for (int ei : out_[v]) {
            stack_bottom_[ei] = static_cast<int>(stack_.size());
            if (ei == parent_edge_[dst_[ei]]) {
                if (!test(dst_[ei])) {
                    return false;
                }
            } else {
                lowpt_edge_[ei] = ei;
                stack_.push_back({Interval{}, Interval{ei, ei}});
            }
            if (lowpt_[ei] < height_[v]) {
                if (first) {
                    lowpt_edge_[e] = lowpt_edge_[ei];
                } else if (!add_constraints(ei, e)) {
                    return false;
                }
            }
            first = false;
        }
        if (e != kNone) {
            const Vertex u = src_[e];
            remove_back_edges(u);
            if (lowpt_[e] < height_[u] && !stack_.empty()) {
                const int hl = stack_.back().left.high;
                const int hr = stack_.back().right.high;
                ref_[e] = (hl != kNone && (hr == kNone || lowpt_[hl] > lowpt_[hr])) ? hl : hr;
            }
        }
        return true;
    }

    bool add_constraints(int ei, int e) {
        ConflictPair p;
        do {
            ConflictPair q = stack_.back();
            stack_.pop_back();
            if (!q.left.empty()) {
                q.swap();
            }
            if (!q.left.empty()) {
                return false;
            }
            if (lowpt_[q.right.low] > lowpt_[e]) {
                if (p.right.empty()) {
                    p.right.high = q.right.high;
                } else {
                    ref_[p.right.low] = q.right.high;
                }
                p.right.low = q.right.low;
            } else {
                ref_[q.right.low] = lowpt_edge_[e];
            }
        } while (static_cast<int>(stack_.size()) != stack_bottom_[ei]);

        while (!stack_.empty() && (conflicting(stack_.back().left, ei) || conflicting(stack_.back().right, ei))) {
            ConflictPair q = stack_.back();
            stack_.pop_back();
            if (conflicting(q.right, ei)) {
                q.swap();
            }
            if (conflicting(q.right, ei)) {
                return false;
            }
            if (p.right.low != kNone) {
                ref_[p.right.low] = q.right.high;
            }
            if (q.right.low != kNone) {
                p.right.low = q.right.low;
            }
            if (p.left.empty()) {
                p.left.high = q.left.high;
            } else {
                ref_[p.left.low] = q.left.high;
            }
            p.left.low = q.left.low;
        }
        if (!(p.left.empty() && p.right.empty())) {
            stack_.push_back(p);
        }
        return true;
    }

    void remove_back_edges(Vertex u) {
        while (!stack_.empty() && lowest(stack_.back()) == height_[u]) {
            stack_.pop_back();
        }
        if (stack_.empty()) {
            return;
        }
        ConflictPair p = stack_.back();
        stack_.pop_back();
        while (p.left.high != kNone && dst_[p.left.high] == u) {
            p.left.high = ref_[p.left.high];
        }
        if (p.left.high == kNone && p.left.low != kNone) {
            ref_[p.left.low] = p.right.low;
            p.left.low = kNone;
        }
        while (p.right.high != kNone && dst_[p.right.high] == u) {
            p.right.high = ref_[p.right.high];
        }
        if (p.right.high == kNone && p.right.low != kNone) {
            ref_[p.right.low] = p.left.low;
            p.right.low = kNone;
        }
        stack_.push_back(p);
    }

    const Graph& g_;
    int m_;
    std::vector<std::vector<int>> incident_;
    std::vector<int> height_;
    std::vector<int> parent_edge_;
    std::vector<bool> oriented_;
    std::vector<Vertex> src_;
    std::vector<Vertex> dst_;
    std::vector<int> lowpt_;
    std::vector<int> lowpt2_;
    std::vector<int> nesting_depth_;
    std::vector<std::vector<int>> out_;
    std::vector<int> ref_;
    std::vector<int> lowpt_edge_;
    std::vector<int> stack_bottom_;
    std::vector<ConflictPair> stack_;
};

}  // namespace

PlanarityVerdict is_planar(const Graph& g) {
    const long long n = g.order();
    if (n >= 3 && static_cast<long long>(g.size()) > 3 * n - 6) {
        return {false, PlanarityVerdict::Reason::euler_bound};
    }
    LeftRightTest lr(g);
    return {lr.run(), PlanarityVerdict::Reason::combinatorial_test};
}

}  // namespace rpt
