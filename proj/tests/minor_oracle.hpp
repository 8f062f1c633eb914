#pragma once

#include <algorithm>
#include <array>
#include <vector>

#include "rainbow_planar/graph.hpp"

namespace rpt::testing {

// Brute-force minor oracle. Vertices are assigned to branch sets (or left
// out) as restricted-growth labelings; a K5 minor is 5 connected, pairwise
// touching branch sets, a K3,3 minor is 6 connected branch sets whose
// contact graph contains K3,3.
class MinorOracle {
  public:
    explicit MinorOracle(const Graph& g) : g_(g), label_(g.order(), -1) {}

    bool nonplanar() { return assign(0, 0); }

  private:
    bool assign(int v, int blocks) {
        if (v == g_.order()) {
            return (blocks == 5 && check(5)) || (blocks == 6 && check(6));
        }
        label_[v] = -1;
        if (assign(v + 1, blocks)) {
            return true;
        }
        for (int b = 0; b <= std::min(blocks, 5); ++b) {
            label_[v] = b;
            if (assign(v + 1, std::max(blocks, b + 1))) {
                return true;
            }
        }
        label_[v] = -1;
        return false;
    }

    bool connected_block(int b) const {
        std::vector<Vertex> members;
        for (Vertex v = 0; v < g_.order(); ++v) {
            if (label_[v] == b) {
                members.push_back(v);
            }
        }
        std::vector<bool> seen(g_.order(), false);
        std::vector<Vertex> stack{members.front()};
        seen[members.front()] = true;
        std::size_t reached = 0;
        while (!stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            ++reached;
            for (Vertex y : g_.neighbors(x)) {
                if (!seen[y] && label_[y] == b) {
                    seen[y] = true;
                    stack.push_back(y);
                }
            }
        }
        return reached == members.size();
    }

    bool check(int blocks) const {
        for (int b = 0; b < blocks; ++b) {
            if (!connected_block(b)) {
                return false;
            }
        }
        std::array<std::array<bool, 6>, 6> touch{};
        for (const Edge& e : g_.edges()) {
            int a = label_[e.u];
            int b = label_[e.v];
            if (a >= 0 && b >= 0 && a != b) {
                touch[a][b] = touch[b][a] = true;
            }
        }
        if (blocks == 5) {
            for (int a = 0; a < 5; ++a) {
                for (int b = a + 1; b < 5; ++b) {
                    if (!touch[a][b]) {
                        return false;
                    }
                }
            }
            return true;
        }
        // sides {0, x, y} vs the rest
        for (int x = 1; x < 6; ++x) {
            for (int y = x + 1; y < 6; ++y) {
                std::array<bool, 6> left{};
                left[0] = left[x] = left[y] = true;
                bool ok = true;
                for (int a = 0; a < 6 && ok; ++a) {
                    for (int b = 0; b < 6 && ok; ++b) {
                        if (left[a] && !left[b] && !touch[a][b]) {
                            ok = false;
                        }
                    }
                }
                if (ok) {
                    return true;
                }
            }
        }
        return false;
    }

    const Graph& g_;
    std::vector<int> label_;
};

inline bool oracle_planar(const Graph& g) { return !MinorOracle(g).nonplanar(); }

}  // namespace rpt::testing
