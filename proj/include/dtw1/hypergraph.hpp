#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dtw1/error.hpp"

namespace dtw1 {

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
class UGraph {
public:
    UGraph() = default;
    explicit UGraph(int n) : adj_(n) {}

    int order() const { return static_cast<int>(adj_.size()); }
    const std::vector<int>& neighbours(int v) const { return adj_[v]; }
    bool has_edge(int u, int v) const { return std::binary_search(adj_[u].begin(), adj_[u].end(), v); }

    void add_edge(int u, int v) {
        if (u == v || has_edge(u, v)) return;
        adj_[u].insert(std::upper_bound(adj_[u].begin(), adj_[u].end(), v), v);
        adj_[v].insert(std::upper_bound(adj_[v].begin(), adj_[v].end(), u), u);
    }

    /// Edges (u, v) with u < v in lexicographic order.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> es;
        for (int u = 0; u < order(); ++u)
            for (int v : adj_[u])
                if (u < v) es.emplace_back(u, v);
        return es;
    }

    friend bool operator==(const UGraph&, const UGraph&) = default;

private:
    std::vector<std::vector<int>> adj_;
};

/// Hypergraph on vertices 0..n-1 with an ordered multiset of non-empty hyperedges.
/// `vertex_origin` / `edge_origin` record where vertices and edges came from
/// (digraph vertex, cycle index, ...) and are swapped by dual().
class Hypergraph {
public:
    Hypergraph() = default;

    /// Throws PreconditionError on empty edges, out-of-range vertices or isolated vertices.
    Hypergraph(int n, std::vector<std::vector<int>> edges) : n_(n), edges_(std::move(edges)) {
        std::vector<bool> used(n, false);
        for (auto& e : edges_) {
            std::sort(e.begin(), e.end());
            e.erase(std::unique(e.begin(), e.end()), e.end());
            if (e.empty()) throw PreconditionError("hyperedges must be non-empty");
            for (int v : e) {
                if (v < 0 || v >= n) throw PreconditionError("hyperedge vertex out of range");
                used[v] = true;
            }
        }
        for (int v = 0; v < n; ++v)
            if (!used[v]) throw PreconditionError("isolated vertex " + std::to_string(v));
        vertex_origin.resize(n);
        std::iota(vertex_origin.begin(), vertex_origin.end(), 0);
        edge_origin.resize(edges_.size());
        std::iota(edge_origin.begin(), edge_origin.end(), 0);
    }

    /// Builds a hypergraph from edges over arbitrary ids, renumbering the used
    /// ids densely in ascending order; vertex_origin keeps the original ids.
    static Hypergraph compact(const std::vector<std::vector<int>>& edges) {
        std::vector<int> ids;
        for (const auto& e : edges) ids.insert(ids.end(), e.begin(), e.end());
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
        std::vector<std::vector<int>> dense;
        for (const auto& e : edges) {
            std::vector<int> d;
            for (int v : e) d.push_back(static_cast<int>(std::lower_bound(ids.begin(), ids.end(), v) - ids.begin()));
            dense.push_back(std::move(d));
        }
        Hypergraph h(static_cast<int>(ids.size()), std::move(dense));
        h.vertex_origin = ids;
        return h;
    }

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const std::vector<int>& edge(int i) const { return edges_[i]; }
    const std::vector<std::vector<int>>& edges() const { return edges_; }

    bool edge_contains(int i, int v) const {
        return std::binary_search(edges_[i].begin(), edges_[i].end(), v);
    }

    /// Indices of edges containing v.
    std::vector<int> incident(int v) const {
        std::vector<int> out;
        for (int i = 0; i < num_edges(); ++i)
            if (edge_contains(i, v)) out.push_back(i);
        return out;
    }

    std::vector<int> vertex_origin;
    std::vector<int> edge_origin;
    std::vector<std::string> vertex_names;
    std::vector<std::string> edge_names;

    std::string vertex_name(int v) const {
        return v < static_cast<int>(vertex_names.size()) ? vertex_names[v] : std::to_string(v);
    }
    std::string edge_name(int i) const {
        return i < static_cast<int>(edge_names.size()) ? edge_names[i] : "e" + std::to_string(i);
    }

private:
    int n_ = 0;
    std::vector<std::vector<int>> edges_;
};

/// Union of the given edges' vertex sets, sorted.
inline std::vector<int> edge_union(const Hypergraph& h, const std::vector<int>& edge_ids) {
    std::vector<int> out;
    for (int i : edge_ids) out.insert(out.end(), h.edge(i).begin(), h.edge(i).end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline Hypergraph dual(const Hypergraph& h) {
    std::vector<std::vector<int>> es(h.num_vertices());
    for (int i = 0; i < h.num_edges(); ++i)
        for (int v : h.edge(i)) es[v].push_back(i);
    Hypergraph d(h.num_edges(), std::move(es));
    d.vertex_origin = h.edge_origin;
    d.edge_origin = h.vertex_origin;
    d.vertex_names = h.edge_names;
    d.edge_names = h.vertex_names;
    return d;
}

inline UGraph two_section(const Hypergraph& h) {
    UGraph g(h.num_vertices());
    for (const auto& e : h.edges())
        for (std::size_t i = 0; i < e.size(); ++i)
            for (std::size_t j = i + 1; j < e.size(); ++j) g.add_edge(e[i], e[j]);
    return g;
}

inline UGraph line_graph(const Hypergraph& h) {
    UGraph g(h.num_edges());
    for (int v = 0; v < h.num_vertices(); ++v) {
        auto inc = h.incident(v);
        for (std::size_t i = 0; i < inc.size(); ++i)
            for (std::size_t j = i + 1; j < inc.size(); ++j) g.add_edge(inc[i], inc[j]);
    }
    return g;
}

/// GYO reduction. With `reverse`, vertices and edges are scanned in descending order.
inline bool is_alpha_acyclic(const Hypergraph& h, bool reverse = false) {
    int m = h.num_edges();
    std::vector<std::vector<int>> es = h.edges();
    std::vector<bool> alive(m, true);
    auto order = [&](int count) {
        std::vector<int> idx(count);
        std::iota(idx.begin(), idx.end(), 0);
        if (reverse) std::reverse(idx.begin(), idx.end());
        return idx;
    };
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<int> occurrences(h.num_vertices(), 0);
        for (int i = 0; i < m; ++i)
            if (alive[i])
                for (int v : es[i]) ++occurrences[v];
        for (int v : order(h.num_vertices())) {
            if (occurrences[v] != 1) continue;
            for (int i = 0; i < m; ++i) {
                if (!alive[i]) continue;
                auto it = std::find(es[i].begin(), es[i].end(), v);
                if (it != es[i].end()) {
                    es[i].erase(it);
                    occurrences[v] = 0;
                    changed = true;
                }
            }
        }
        for (int i : order(m)) {
            if (!alive[i]) continue;
            bool contained = es[i].empty();
            for (int j = 0; j < m && !contained; ++j) {
                if (j == i || !alive[j]) continue;
                if (!std::includes(es[j].begin(), es[j].end(), es[i].begin(), es[i].end())) continue;
                if (es[j].size() > es[i].size() || (reverse ? j > i : j < i)) contained = true;
            }
            if (contained) {
                alive[i] = false;
                changed = true;
            }
        }
    }
    return std::none_of(alive.begin(), alive.end(), [](bool a) { return a; });
}

namespace detail {

inline std::vector<int> intersect_sorted(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline bool sorted_intersects(const std::vector<int>& a, const std::vector<int>& b) {
    auto i = a.begin(), j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i == *j) return true;
        if (*i < *j) ++i; else ++j;
    }
    return false;
}

}  // namespace detail

/// Helly property: every family of pairwise intersecting edges has a common vertex.
inline bool has_helly(const Hypergraph& h) {
    std::vector<std::vector<int>> es = h.edges();
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    int m = static_cast<int>(es.size());
    // Depth-first over cliques of the intersection graph; a violation is a
    // clique whose running intersection becomes empty.
    std::vector<std::vector<bool>> meets(m, std::vector<bool>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) meets[i][j] = detail::sorted_intersects(es[i], es[j]);
    std::vector<int> family;
    auto dfs = [&](auto&& self, int from, const std::vector<int>& core) -> bool {
        for (int j = from; j < m; ++j) {
            bool ok = true;
            for (int f : family)
                if (!meets[f][j]) { ok = false; break; }
            if (!ok) continue;
            auto next = detail::intersect_sorted(core, es[j]);
            if (next.empty()) return false;
            family.push_back(j);
            bool good = self(self, j + 1, next);
            family.pop_back();
            if (!good) return false;
        }
        return true;
    };
    for (int i = 0; i < m; ++i) {
        family = {i};
        if (!dfs(dfs, i + 1, es[i])) return false;
    }
    return true;
}

/// Maximum cardinality search order (first visited first); ties to the smallest id.
inline std::vector<int> maximum_cardinality_search(const UGraph& g) {
    int n = g.order();
    std::vector<int> weight(n, 0), order;
    std::vector<bool> done(n, false);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!done[v] && (best < 0 || weight[v] > weight[best])) best = v;
        done[best] = true;
        order.push_back(best);
        for (int w : g.neighbours(best))
            if (!done[w]) ++weight[w];
    }
    return order;
}

inline bool is_chordal(const UGraph& g) {
    auto visit = maximum_cardinality_search(g);
    std::vector<int> peo(visit.rbegin(), visit.rend());
    int n = g.order();
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[peo[i]] = i;
    for (int v : peo) {
        std::vector<int> later;
        for (int w : g.neighbours(v))
            if (pos[w] > pos[v]) later.push_back(w);
        if (later.empty()) continue;
        int u = *std::min_element(later.begin(), later.end(), [&](int a, int b) { return pos[a] < pos[b]; });
        for (int w : later)
            if (w != u && !g.has_edge(u, w)) return false;
    }
    return true;
}

/// Maximal cliques (Bron–Kerbosch with pivoting), each sorted.
inline std::vector<std::vector<int>> maximal_cliques(const UGraph& g) {
    std::vector<std::vector<int>> out;
    std::vector<int> r;
    auto bk = [&](auto&& self, std::vector<int> p, std::vector<int> x) -> void {
        if (p.empty() && x.empty()) {
            auto c = r;
            std::sort(c.begin(), c.end());
            out.push_back(c);
            return;
        }
        int pivot = -1;
        std::size_t best = 0;
        for (const auto* s : {&p, &x})
            for (int u : *s) {
                auto k = detail::intersect_sorted(p, g.neighbours(u)).size();
                if (pivot < 0 || k > best) { pivot = u; best = k; }
            }
        std::vector<int> candidates;
        std::set_difference(p.begin(), p.end(), g.neighbours(pivot).begin(), g.neighbours(pivot).end(),
                            std::back_inserter(candidates));
        for (int v : candidates) {
            r.push_back(v);
            self(self, detail::intersect_sorted(p, g.neighbours(v)), detail::intersect_sorted(x, g.neighbours(v)));
            r.pop_back();
            p.erase(std::find(p.begin(), p.end(), v));
            x.insert(std::upper_bound(x.begin(), x.end(), v), v);
        }
    };
    std::vector<int> all(g.order());
    std::iota(all.begin(), all.end(), 0);
    if (!all.empty()) bk(bk, all, {});
    std::sort(out.begin(), out.end());
    return out;
}

/// Every maximal clique of the 2-section lies inside some hyperedge.
inline bool is_conformal(const Hypergraph& h) {
    for (const auto& c : maximal_cliques(two_section(h))) {
        bool covered = false;
        for (const auto& e : h.edges())
            if (std::includes(e.begin(), e.end(), c.begin(), c.end())) { covered = true; break; }
        if (!covered) return false;
    }
    return true;
}

/// A tree on V(H) in which every hyperedge induces a subtree.
struct JoinTreeWitness {
    int num_vertices = 0;
    std::vector<std::pair<int, int>> tree_edges;
};

/// True iff `tree_edges` forms a spanning tree of 0..n-1 in which every edge of h is connected.
inline bool is_join_tree(const Hypergraph& h, const JoinTreeWitness& w) {
    int n = h.num_vertices();
    if (w.num_vertices != n || static_cast<int>(w.tree_edges.size()) != std::max(0, n - 1)) return false;
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) { while (parent[x] != x) x = parent[x] = parent[parent[x]]; return x; };
    for (auto [u, v] : w.tree_edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) return false;
        int a = find(u), b = find(v);
        if (a == b) return false;
        parent[a] = b;
    }
    for (const auto& e : h.edges()) {
        // e is connected in the tree iff the tree edges inside e number |e|-1.
        int inside = 0;
        for (auto [u, v] : w.tree_edges)
            if (std::binary_search(e.begin(), e.end(), u) && std::binary_search(e.begin(), e.end(), v)) ++inside;
        if (inside != static_cast<int>(e.size()) - 1) return false;
    }
    return true;
}

/// Host tree for a hypertree: a maximum-weight spanning tree of the co-occurrence
/// weights (Kruskal, ties to the lexicographically least pair), accepted iff it
/// is a join tree. Such a tree exists iff some host tree exists.
inline std::optional<JoinTreeWitness> hypertree_witness(const Hypergraph& h) {
    int n = h.num_vertices();
    std::map<std::pair<int, int>, int> weight;
    for (const auto& e : h.edges())
        for (std::size_t i = 0; i < e.size(); ++i)
            for (std::size_t j = i + 1; j < e.size(); ++j) ++weight[{e[i], e[j]}];
    std::vector<std::tuple<int, int, int>> cand;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            auto it = weight.find({u, v});
            cand.emplace_back(-(it == weight.end() ? 0 : it->second), u, v);
        }
    std::sort(cand.begin(), cand.end());
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) { while (parent[x] != x) x = parent[x] = parent[parent[x]]; return x; };
    JoinTreeWitness w{n, {}};
    for (auto [negw, u, v] : cand) {
        int a = find(u), b = find(v);
        if (a == b) continue;
        parent[a] = b;
        w.tree_edges.emplace_back(u, v);
    }
    if (!is_join_tree(h, w)) return std::nullopt;
    return w;
}

}  // namespace dtw1
