#include "rainbow_planar/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace rpt {

namespace {

// Bit of the pair (i, j), i < j: graph6 column order read from the most
// significant end, so pairs among early slots dominate the comparison.
constexpr int pair_bit(int n, int i, int j) { return n * (n - 1) / 2 - 1 - (j * (j - 1) / 2 + i); }

// Iterated degree refinement: a vertex's cell is determined by its previous
// cell and the multiset of its neighbors' cells. Cells are numbered by the
// sorted order of those signatures, so the result is isomorphism-invariant.
std::vector<int> refine(const Graph& g) {
    const int n = g.order();
    std::vector<int> cell(n);
    for (Vertex v = 0; v < n; ++v) {
        cell[v] = g.degree(v);
    }
    int cells = -1;
    while (true) {
        std::vector<std::pair<std::vector<int>, Vertex>> sig(n);
        for (Vertex v = 0; v < n; ++v) {
            std::vector<int> s{cell[v]};
            for (Vertex w : g.neighbors(v)) {
                s.push_back(cell[w]);
            }
            std::sort(s.begin() + 1, s.end());
            sig[v] = {std::move(s), v};
        }
        std::sort(sig.begin(), sig.end());
        std::vector<int> next(n);
        int id = 0;
        for (int i = 0; i < n; ++i) {
            if (i > 0 && sig[i].first != sig[i - 1].first) {
                ++id;
            }
            next[sig[i].second] = id;
        }
        const int now = n == 0 ? 0 : id + 1;
        cell = std::move(next);
        if (now == cells) {
            return cell;
        }
        cells = now;
    }
}

class CodeSearch {
  public:
    explicit CodeSearch(const Graph& g) : g_(g), n_(g.order()), position_(n_, -1), slot_cell_(n_) {
        cell_ = refine(g);
        std::vector<int> sorted(cell_);
        std::sort(sorted.begin(), sorted.end());
        slot_cell_ = sorted;
    }

    std::uint64_t best() {
        assign(0, 0);
        return best_;
    }

  private:
    // Places a vertex of the right cell at slot p; `code` holds the bits of
    // edges between already placed vertices.
    void assign(int p, std::uint64_t code) {
        if (code > best_) {
            // placing more vertices only adds lower-order bits
            return;
        }
        if (p == n_) {
            best_ = std::min(best_, code);
            return;
        }
        for (Vertex v = 0; v < n_; ++v) {
            if (position_[v] >= 0 || cell_[v] != slot_cell_[p]) {
                continue;
            }
            std::uint64_t next = code;
            for (Vertex w : g_.neighbors(v)) {
                if (position_[w] >= 0) {
                    next |= std::uint64_t{1} << pair_bit(n_, position_[w], p);
                }
            }
            position_[v] = p;
            assign(p + 1, next);
            position_[v] = -1;
        }
    }

    const Graph& g_;
    int n_;
    std::vector<int> cell_;
    std::vector<int> position_;
    std::vector<int> slot_cell_;
    std::uint64_t best_ = ~std::uint64_t{0};
};

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
    if (g.order() > kCanonicalCodeMaxOrder) {
        throw std::invalid_argument("canonical codes are limited to n <= " + std::to_string(kCanonicalCodeMaxOrder));
    }
    if (g.order() == 0) {
        return 0;
    }
    return CodeSearch(g).best();
}

Graph graph_from_code(int n, std::uint64_t code) {
    std::vector<Edge> edges;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (code >> pair_bit(n, i, j) & 1) {
                edges.push_back({i, j});
            }
        }
    }
    return Graph(n, edges);
}

GraphCatalog::GraphCatalog(int n) : n_(n) {
    if (n < 0 || n > kCanonicalCodeMaxOrder) {
        throw std::invalid_argument("catalog order out of range");
    }
    levels_.push_back({0});
}

const std::vector<std::uint64_t>& GraphCatalog::level(int m) {
    std::lock_guard lock(mutex_);
    const int max_edges = n_ * (n_ - 1) / 2;
    static const std::vector<std::uint64_t> none;
    if (m < 0 || m > max_edges) {
        return none;
    }
    while (static_cast<int>(levels_.size()) <= m) {
        std::set<std::uint64_t> next;
        for (std::uint64_t code : levels_.back()) {
            Graph g = graph_from_code(n_, code);
            for (int j = 1; j < n_; ++j) {
                for (int i = 0; i < j; ++i) {
                    if (code >> pair_bit(n_, i, j) & 1) {
                        continue;
                    }
                    std::vector<Edge> edges = g.edges();
                    edges.push_back({i, j});
                    next.insert(canonical_code(Graph(n_, edges)));
                }
            }
        }
        levels_.emplace_back(next.begin(), next.end());
    }
    return levels_[m];
}

std::vector<Graph> GraphCatalog::graphs(int m) {
    std::vector<Graph> out;
    for (std::uint64_t code : level(m)) {
        out.push_back(graph_from_code(n_, code));
    }
    return out;
}

}  // namespace rpt
