#pragma once

// Brute-force reference implementations used only by the tests.

#include <algorithm>
#include <functional>
#include <set>
#include <utility>
#include <vector>

#include "dtw1/cycles.hpp"
#include "dtw1/digraph.hpp"
#include "dtw1/hypergraph.hpp"

namespace oracle {

using dtw1::Digraph;
using dtw1::Hypergraph;
using dtw1::UGraph;
using dtw1::VertexSet;

/// reach[u] = vertices reachable from u (including u), by Floyd–Warshall.
inline std::vector<VertexSet> closure(const Digraph& d) {
    std::vector<VertexSet> reach(dtw1::kMaxVertices);
    for (int v : d.vertices()) reach[v] = VertexSet::single(v) | d.out(v);
    for (int k : d.vertices())
        for (int i : d.vertices())
            if (reach[i].contains(k)) reach[i] = reach[i] | reach[k];
    return reach;
}

inline std::set<VertexSet> strong_components(const Digraph& d) {
    auto reach = closure(d);
    std::set<VertexSet> out;
    for (int v : d.vertices()) {
        VertexSet c;
        for (int u : d.vertices())
            if (reach[v].contains(u) && reach[u].contains(v)) c.insert(u);
        out.insert(c);
    }
    return out;
}

/// All directed cycles as vertex sequences starting at their minimum, by trying
/// every ordering of every vertex subset.
inline std::set<std::vector<int>> cycles(const Digraph& d) {
    std::set<std::vector<int>> out;
    auto all = d.vertices().to_vector();
    int n = static_cast<int>(all.size());
    for (unsigned m = 1; m < (1u << n); ++m) {
        std::vector<int> seq;
        for (int i = 0; i < n; ++i)
            if (m >> i & 1) seq.push_back(all[i]);
        if (seq.size() < 2) continue;
        do {
            bool ok = true;
            for (std::size_t i = 0; i < seq.size() && ok; ++i) ok = d.has_edge(seq[i], seq[(i + 1) % seq.size()]);
            if (ok) out.insert(seq);
        } while (std::next_permutation(seq.begin() + 1, seq.end()));
    }
    return out;
}

/// Every labeled tree on vertices 0..n-1 via Prüfer sequences.
inline void for_each_tree(int n, const std::function<void(const std::vector<std::pair<int, int>>&)>& f) {
    if (n == 1) return f({});
    if (n == 2) return f({{0, 1}});
    std::vector<int> code(n - 2, 0);
    while (true) {
        std::vector<int> degree(n, 1);
        for (int x : code) ++degree[x];
        std::vector<std::pair<int, int>> edges;
        for (int x : code) {
            int leaf = 0;
            while (degree[leaf] != 1) ++leaf;
            edges.push_back({leaf, x});
            --degree[leaf];
            --degree[x];
        }
        std::vector<int> rest;
        for (int v = 0; v < n; ++v)
            if (degree[v] == 1) rest.push_back(v);
        edges.push_back({rest[0], rest[1]});
        f(edges);
        int i = 0;
        while (i < n - 2 && ++code[i] == n) code[i++] = 0;
        if (i == n - 2) return;
    }
}

inline bool connected_in(const std::vector<std::pair<int, int>>& tree, const std::vector<int>& set) {
    if (set.empty()) return true;
    std::set<int> in(set.begin(), set.end()), seen{set[0]};
    std::vector<int> stack{set[0]};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (auto [a, b] : tree) {
            int w = a == v ? b : b == v ? a : -1;
            if (w >= 0 && in.count(w) && seen.insert(w).second) stack.push_back(w);
        }
    }
    return seen.size() == in.size();
}

/// Hypertree by trying every host tree.
inline bool is_hypertree(const Hypergraph& h) {
    bool found = false;
    for_each_tree(h.num_vertices(), [&](const auto& tree) {
        if (found) return;
        bool ok = true;
        for (const auto& e : h.edges()) ok = ok && connected_in(tree, e);
        found = ok;
    });
    return found;
}

inline bool helly(const Hypergraph& h) {
    int m = h.num_edges();
    for (unsigned f = 1; f < (1u << m); ++f) {
        bool pairwise = true;
        std::set<int> core;
        bool first = true;
        for (int i = 0; i < m && pairwise; ++i) {
            if (!(f >> i & 1)) continue;
            for (int j = i + 1; j < m; ++j)
                if (f >> j & 1 && !dtw1::detail::sorted_intersects(h.edge(i), h.edge(j))) pairwise = false;
            std::set<int> e(h.edge(i).begin(), h.edge(i).end());
            if (first) core = e, first = false;
            else {
                std::set<int> next;
                for (int v : core)
                    if (e.count(v)) next.insert(v);
                core = next;
            }
        }
        if (pairwise && core.empty()) return false;
    }
    return true;
}

/// Chordal: no vertex subset of size ≥ 4 induces a cycle.
inline bool chordal(const UGraph& g) {
    int n = g.order();
    for (unsigned s = 0; s < (1u << n); ++s) {
        std::vector<int> vs;
        for (int v = 0; v < n; ++v)
            if (s >> v & 1) vs.push_back(v);
        if (vs.size() < 4) continue;
        bool all_two = true;
        for (int v : vs) {
            int deg = 0;
            for (int w : vs) deg += g.has_edge(v, w);
            all_two = all_two && deg == 2;
        }
        if (!all_two) continue;
        std::vector<std::pair<int, int>> induced;
        for (int v : vs)
            for (int w : vs)
                if (v < w && g.has_edge(v, w)) induced.push_back({v, w});
        if (connected_in(induced, vs)) return false;
    }
    return true;
}

/// Conformal: every clique of the 2-section lies inside a hyperedge.
inline bool conformal(const Hypergraph& h) {
    auto g = dtw1::two_section(h);
    int n = h.num_vertices();
    for (unsigned s = 1; s < (1u << n); ++s) {
        std::vector<int> vs;
        for (int v = 0; v < n; ++v)
            if (s >> v & 1) vs.push_back(v);
        bool clique = true;
        for (int a : vs)
            for (int b : vs) clique = clique && (a == b || g.has_edge(a, b));
        if (!clique) continue;
        bool inside = false;
        for (const auto& e : h.edges()) inside = inside || std::includes(e.begin(), e.end(), vs.begin(), vs.end());
        if (!inside) return false;
    }
    return true;
}

/// Smallest vertex set hitting every listed cycle (vertex sets), by increasing size.
inline int min_hitting_size(VertexSet ground, const std::vector<VertexSet>& targets) {
    for (int k = 0; k <= ground.size(); ++k) {
        bool found = dtw1::for_each_subset_of_size(ground, k, [&](VertexSet s) {
            for (auto t : targets)
                if (!t.intersects(s)) return false;
            return true;
        });
        if (found) return k;
    }
    return -1;
}

/// Leaf bipartitions (one side per tree edge) of every cubic tree with the given
/// labeled leaves, built by inserting leaves into edges one at a time.
inline void for_each_cubic_tree(const std::vector<int>& leaves,
                                const std::function<void(const std::vector<VertexSet>&)>& f) {
    int n = static_cast<int>(leaves.size());
    if (n == 1) return f({});
    // nodes 0..n-1 are leaves; inner nodes follow
    std::function<void(std::vector<std::pair<int, int>>, int, int)> grow = [&](std::vector<std::pair<int, int>> edges, int next,
                                                                               int inner) {
        if (next == n) {
            std::vector<VertexSet> sides;
            for (std::size_t i = 0; i < edges.size(); ++i) {
                VertexSet side;
                std::vector<int> stack{edges[i].second};
                std::set<int> seen{edges[i].first, edges[i].second};
                while (!stack.empty()) {
                    int v = stack.back();
                    stack.pop_back();
                    if (v < n) side.insert(leaves[v]);
                    for (auto [a, b] : edges) {
                        int w = a == v ? b : b == v ? a : -1;
                        if (w >= 0 && seen.insert(w).second) stack.push_back(w);
                    }
                }
                sides.push_back(side);
            }
            return f(sides);
        }
        for (std::size_t i = 0; i < edges.size(); ++i) {
            auto e2 = edges;
            auto [a, b] = e2[i];
            e2[i] = {a, inner};
            e2.push_back({inner, b});
            e2.push_back({inner, next});
            grow(e2, next + 1, inner + 1);
        }
    };
    if (n == 2) return grow({{0, 1}}, 2, n);
    grow({{0, n}, {1, n}, {2, n}}, 3, n + 1);
}

/// Optimal directed branch width by trying every cubic tree.
inline int dbw(const Digraph& d) {
    auto cycles = dtw1::enumerate_cycles(d);
    std::vector<VertexSet> sets;
    for (const auto& c : cycles) sets.push_back(c.vertex_set());
    int best = 1 << 20;
    for_each_cubic_tree(d.vertices().to_vector(), [&](const std::vector<VertexSet>& sides) {
        int w = 0;
        for (auto side : sides) {
            std::vector<VertexSet> crossing;
            for (auto c : sets)
                if (c.intersects(side) && c.intersects(d.vertices() - side)) crossing.push_back(c);
            w = std::max(w, min_hitting_size(d.vertices(), crossing));
        }
        best = std::min(best, w);
    });
    return best;
}

/// k-linked straight from the definition, using the closure-based components.
inline bool linked(const Digraph& d, VertexSet w, int k) {
    auto all = d.vertices().to_vector();
    int n = static_cast<int>(all.size());
    for (unsigned m = 0; m < (1u << n); ++m) {
        VertexSet s;
        for (int i = 0; i < n; ++i)
            if (m >> i & 1) s.insert(all[i]);
        if (s.size() > k) continue;
        bool ok = false;
        for (auto c : oracle::strong_components(d.induced(d.vertices() - s))) ok = ok || 2 * (c & w).size() > w.size();
        if (!ok) return false;
    }
    return true;
}

}  // namespace oracle
