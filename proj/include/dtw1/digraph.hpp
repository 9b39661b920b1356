#pragma once

#include <array>
#include <algorithm>
#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dtw1/error.hpp"
#include "dtw1/vertex_set.hpp"

namespace dtw1 {

struct Edge {
    int tail = 0;
    int head = 0;
    auto operator<=>(const Edge&) const = default;
};

/// Simple digraph on at most 64 vertices. Digons are allowed, loops and parallel
/// edges are not. Vertex ids need not be contiguous: label-stable operations
/// (deletions, merges) keep the ids of surviving vertices.
class Digraph {
public:
    Digraph() = default;
    explicit Digraph(int n) {
        if (n < 0 || n > kMaxVertices) throw PreconditionError("digraph order must be in [0, 64]");
        vertices_ = VertexSet::range(n);
    }
    static Digraph from_edges(int n, const std::vector<Edge>& edges) {
        Digraph d(n);
        for (const auto& e : edges) d.add_edge(e.tail, e.head);
        return d;
    }

    VertexSet vertices() const { return vertices_; }
    int order() const { return vertices_.size(); }
    int id_bound() const { return vertices_.max() + 1; }
    bool has_vertex(int v) const { return v >= 0 && v < kMaxVertices && vertices_.contains(v); }
    bool has_edge(int u, int v) const { return has_vertex(u) && out_[u].contains(v); }
    bool has_edge(Edge e) const { return has_edge(e.tail, e.head); }

    VertexSet out(int v) const { return out_[v]; }
    VertexSet in(int v) const { return in_[v]; }
    int out_degree(int v) const { return out_[v].size(); }
    int in_degree(int v) const { return in_[v].size(); }

    int edge_count() const {
        int m = 0;
        for (int v : vertices_) m += out_[v].size();
        return m;
    }

    /// All edges sorted by (tail, head).
    std::vector<Edge> edges() const {
        std::vector<Edge> es;
        for (int u : vertices_)
            for (int v : out_[u]) es.push_back({u, v});
        return es;
    }

    void add_vertex(int v) { vertices_.insert(v); }

    void add_edge(int u, int v) {
        if (u == v) throw PreconditionError("loops are not allowed");
        if (!has_vertex(u) || !has_vertex(v)) throw PreconditionError("edge endpoint is not a vertex");
        out_[u].insert(v);
        in_[v].insert(u);
    }

    void remove_edge(int u, int v) {
        if (!has_edge(u, v)) throw PreconditionError("edge not present");
        out_[u].erase(v);
        in_[v].erase(u);
    }

    void remove_vertex(int v) {
        if (!has_vertex(v)) throw PreconditionError("vertex not present");
        for (int w : out_[v]) in_[w].erase(v);
        for (int w : in_[v]) out_[w].erase(v);
        out_[v] = in_[v] = VertexSet{};
        vertices_.erase(v);
    }

    /// Identifies `gone` with `keep`; the merged vertex keeps the id `keep`.
    /// Loops and parallel edges created by the merge disappear.
    void merge_into(int keep, int gone) {
        if (!has_vertex(keep) || !has_vertex(gone) || keep == gone)
            throw PreconditionError("merge needs two distinct vertices");
        VertexSet o = out_[gone], i = in_[gone];
        remove_vertex(gone);
        for (int w : o)
            if (w != keep) add_edge(keep, w);
        for (int w : i)
            if (w != keep) add_edge(w, keep);
    }

    /// Subgraph induced by `keep`, ids unchanged.
    Digraph induced(VertexSet keep) const {
        Digraph d = *this;
        for (int v : vertices_ - keep) d.remove_vertex(v);
        return d;
    }

    const std::string& name(int v) const {
        static thread_local std::string fallback;
        if (v >= 0 && v < static_cast<int>(names_.size()) && !names_[v].empty()) return names_[v];
        fallback = std::to_string(v);
        return fallback;
    }
    void set_name(int v, std::string n) {
        if (static_cast<int>(names_.size()) <= v) names_.resize(v + 1);
        names_[v] = std::move(n);
    }
    const std::vector<std::string>& names() const { return names_; }

    /// Structural equality (names ignored).
    friend bool operator==(const Digraph& a, const Digraph& b) {
        if (a.vertices_ != b.vertices_) return false;
        for (int v : a.vertices_)
            if (a.out_[v] != b.out_[v]) return false;
        return true;
    }

private:
    VertexSet vertices_;
    std::array<VertexSet, kMaxVertices> out_{};
    std::array<VertexSet, kMaxVertices> in_{};
    std::vector<std::string> names_;
};

/// Vertices reachable from `from` inside `alive` (including `from ∩ alive`).
inline VertexSet reachable_within(const Digraph& d, VertexSet from, VertexSet alive) {
    VertexSet seen = from & alive, frontier = seen;
    while (!frontier.empty()) {
        VertexSet next;
        for (int v : frontier) next |= d.out(v);
        next = next & alive;
        frontier = next - seen;
        seen |= frontier;
    }
    return seen;
}

/// Vertices inside `alive` that reach `to` inside `alive`.
inline VertexSet reaching_within(const Digraph& d, VertexSet to, VertexSet alive) {
    VertexSet seen = to & alive, frontier = seen;
    while (!frontier.empty()) {
        VertexSet next;
        for (int v : frontier) next |= d.in(v);
        next = next & alive;
        frontier = next - seen;
        seen |= frontier;
    }
    return seen;
}

namespace detail {

struct TarjanState {
    const Digraph* d;
    VertexSet alive;
    std::array<int, kMaxVertices> index{}, low{};
    std::array<bool, kMaxVertices> on_stack{};
    std::vector<int> stack;
    int counter = 0;
    std::vector<VertexSet> out;

    void visit(int v) {
        index[v] = low[v] = ++counter;
        stack.push_back(v);
        on_stack[v] = true;
        for (int w : d->out(v) & alive) {
            if (index[w] == 0) {
                visit(w);
                low[v] = std::min(low[v], low[w]);
            } else if (on_stack[w]) {
                low[v] = std::min(low[v], index[w]);
            }
        }
        if (low[v] == index[v]) {
            VertexSet comp;
            int w;
            do {
                w = stack.back();
                stack.pop_back();
                on_stack[w] = false;
                comp.insert(w);
            } while (w != v);
            out.push_back(comp);
        }
    }
};

}  // namespace detail

/// Strong components of d[alive], sinks of the condensation first.
inline std::vector<VertexSet> strong_components_within(const Digraph& d, VertexSet alive) {
    detail::TarjanState st;
    st.d = &d;
    st.alive = alive & d.vertices();
    for (int v : st.alive)
        if (st.index[v] == 0) st.visit(v);
    return std::move(st.out);
}

/// Strong components in reverse topological order of the condensation.
inline std::vector<VertexSet> strong_components(const Digraph& d) {
    return strong_components_within(d, d.vertices());
}

/// The strong component of d[alive] containing v (empty if v is not alive).
inline VertexSet strong_component_of(const Digraph& d, int v, VertexSet alive) {
    if (!alive.contains(v)) return {};
    VertexSet single = VertexSet::single(v);
    return reachable_within(d, single, alive) & reaching_within(d, single, alive);
}

inline bool is_strongly_connected_within(const Digraph& d, VertexSet alive) {
    alive = alive & d.vertices();
    if (alive.empty()) return false;
    VertexSet s = VertexSet::single(alive.min());
    return reachable_within(d, s, alive) == alive && reaching_within(d, s, alive) == alive;
}

inline bool is_strongly_connected(const Digraph& d) { return is_strongly_connected_within(d, d.vertices()); }

/// Bidirection of a simple undirected graph given as an edge list on vertices 0..n-1.
inline Digraph bidirect(int n, const std::vector<std::pair<int, int>>& undirected) {
    Digraph d(n);
    for (auto [u, v] : undirected) {
        if (u == v) throw PreconditionError("bidirect: loop in undirected input");
        d.add_edge(u, v);
        d.add_edge(v, u);
    }
    return d;
}

inline bool butterfly_contractible(const Digraph& d, Edge e) {
    if (!d.has_edge(e)) throw PreconditionError("butterfly_contractible: edge not in digraph");
    return d.out_degree(e.tail) == 1 || d.in_degree(e.head) == 1;
}

/// Result of an id-remapping operation: the new digraph plus old id -> new id
/// (-1 for vanished ids; merged vertices map to the survivor).
struct Remapped {
    Digraph graph;
    std::vector<int> old_to_new;
};

/// Relabels the vertices of d densely (ascending id order), with `merged`
/// giving for each old id the old id it was merged into (identity if none).
inline Remapped densify(const Digraph& d, const std::vector<int>& merged_to) {
    std::vector<int> dense(kMaxVertices, -1);
    int next = 0;
    for (int v : d.vertices()) dense[v] = next++;
    Remapped r{Digraph(next), std::vector<int>(merged_to.size(), -1)};
    for (auto e : d.edges()) r.graph.add_edge(dense[e.tail], dense[e.head]);
    for (int v : d.vertices()) r.graph.set_name(dense[v], d.name(v));
    for (std::size_t v = 0; v < merged_to.size(); ++v)
        if (merged_to[v] >= 0) r.old_to_new[v] = dense[merged_to[v]];
    return r;
}

/// Butterfly contraction of e; the survivor is min(tail, head), ids are then made dense.
inline Remapped butterfly_contract(const Digraph& d, Edge e) {
    if (!butterfly_contractible(d, e)) throw PreconditionError("butterfly_contract: edge is not contractible");
    int keep = std::min(e.tail, e.head), gone = std::max(e.tail, e.head);
    Digraph g = d;
    g.merge_into(keep, gone);
    std::vector<int> merged(d.id_bound(), -1);
    for (int v : d.vertices()) merged[v] = (v == gone) ? keep : v;
    return densify(g, merged);
}

/// (A, B) with A ∪ B = V and no edge from B∖A to A∖B.
struct DirectedSeparation {
    VertexSet a;
    VertexSet b;
    VertexSet separator() const { return a & b; }
    int order() const { return separator().size(); }
    auto operator<=>(const DirectedSeparation&) const = default;
};

inline bool is_directed_separation(const Digraph& d, const DirectedSeparation& s) {
    if ((s.a | s.b) != d.vertices() || !s.a.subset_of(d.vertices()) || !s.b.subset_of(d.vertices()))
        return false;
    VertexSet b_only = s.b - s.a, a_only = s.a - s.b;
    for (int u : b_only)
        if (d.out(u).intersects(a_only)) return false;
    return true;
}

/// Two separations cross iff A∩C, B∩D, (A∩D)∖(B∩C), (B∩C)∖(A∩D) are all non-empty.
inline bool crosses(const DirectedSeparation& s, const DirectedSeparation& t) {
    VertexSet ad = s.a & t.b, bc = s.b & t.a;
    return !(s.a & t.a).empty() && !(s.b & t.b).empty() && !(ad - bc).empty() && !(bc - ad).empty();
}

struct TightSeparation {
    DirectedSeparation base;
    int cut = -1;
    bool non_trivial() const { return base.a.size() >= 2 && base.b.size() >= 2; }
    auto operator<=>(const TightSeparation&) const = default;
};

inline bool is_tight_separation(const Digraph& d, const TightSeparation& s) {
    return is_directed_separation(d, s.base) && s.base.separator() == VertexSet::single(s.cut);
}

/// The separation at cut vertex v built like the first case of the minor
/// extraction: K is the strong component of D−v containing `anchor` (or its
/// least vertex when anchor is v or absent); X is the set reachable from K when
/// some other component reaches K, and V(K) otherwise. Returns nothing when
/// D−v is strongly connected.
inline std::optional<TightSeparation> canonical_tight_separation(const Digraph& d, int v, int anchor = -1) {
    VertexSet rest = d.vertices() - VertexSet::single(v);
    if (rest.empty() || is_strongly_connected_within(d, rest)) return std::nullopt;
    if (anchor < 0 || anchor == v || !rest.contains(anchor)) anchor = rest.min();
    VertexSet k = strong_component_of(d, anchor, rest);
    VertexSet reaching_k = reaching_within(d, k, rest);
    VertexSet cut = VertexSet::single(v);
    if (reaching_k != k) {
        VertexSet x = reachable_within(d, k, rest);
        VertexSet y = rest - x;
        return TightSeparation{{y | cut, x | cut}, v};
    }
    VertexSet x = k, y = rest - x;
    return TightSeparation{{x | cut, y | cut}, v};
}

/// Tight separations of a strongly connected digraph: one canonical non-trivial
/// separation per cut vertex (see canonical_tight_separation), plus the trivial
/// ({v}, V) and (V, {v}) per vertex unless `non_trivial_only`.
inline std::vector<TightSeparation> tight_separations(const Digraph& d, bool non_trivial_only) {
    std::vector<TightSeparation> out;
    for (int v : d.vertices()) {
        if (auto s = canonical_tight_separation(d, v)) out.push_back(*s);
        if (!non_trivial_only) {
            out.push_back({{VertexSet::single(v), d.vertices()}, v});
            out.push_back({{d.vertices(), VertexSet::single(v)}, v});
        }
    }
    std::sort(out.begin(), out.end(), [](const TightSeparation& x, const TightSeparation& y) {
        return std::tie(x.base.a, x.base.b) < std::tie(y.base.a, y.base.b);
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const TightSeparation& x, const TightSeparation& y) {
                              return x.base.a == y.base.a && x.base.b == y.base.b;
                          }),
              out.end());
    return out;
}

/// Identifies all of `x` with `v` (v ∈ x allowed), keeping the id v. Label-stable.
inline Digraph collapse_onto(const Digraph& d, VertexSet x, int v) {
    Digraph g = d;
    for (int u : (x & d.vertices()) - VertexSet::single(v)) g.merge_into(v, u);
    return g;
}

enum class Shore { A, B };

/// Tight separation contraction of the chosen shore onto the cut vertex, with dense ids.
inline Remapped contract_shore(const Digraph& d, const TightSeparation& s, Shore shore) {
    if (!is_tight_separation(d, s)) throw PreconditionError("contract_shore: not a tight separation of d");
    VertexSet x = shore == Shore::A ? s.base.a : s.base.b;
    Digraph g = collapse_onto(d, x, s.cut);
    std::vector<int> merged(d.id_bound(), -1);
    for (int u : d.vertices()) merged[u] = x.contains(u) ? s.cut : u;
    return densify(g, merged);
}

/// True iff D−v is strongly connected for every v. Digraphs on at most two
/// vertices count as strongly 2-connected when strongly connected.
inline bool is_strongly_2_connected(const Digraph& d) {
    if (!is_strongly_connected(d)) return false;
    if (d.order() <= 2) return true;
    for (int v : d.vertices())
        if (!is_strongly_connected_within(d, d.vertices() - VertexSet::single(v))) return false;
    return true;
}

inline VertexSet butterfly_dominating_vertices(const Digraph& d) {
    std::vector<Edge> contractible;
    for (auto e : d.edges())
        if (butterfly_contractible(d, e)) contractible.push_back(e);
    if (contractible.empty()) return d.vertices();
    VertexSet result;
    for (int v : d.vertices()) {
        bool all_incident = true, has_in = false, has_out = false;
        for (auto e : contractible) {
            if (e.tail != v && e.head != v) { all_incident = false; break; }
            if (e.head == v) has_in = true;
            if (e.tail == v) has_out = true;
        }
        if (!all_incident) continue;
        if (has_in && has_out && d.in_degree(v) != 1 && d.out_degree(v) != 1) continue;
        result.insert(v);
    }
    return result;
}

/// FNV-1a hash over the sorted, name-labelled edge list and vertex names.
inline std::uint64_t canonical_hash(const Digraph& d) {
    std::vector<std::string> items;
    for (int v : d.vertices()) items.push_back("v " + d.name(v));
    for (auto e : d.edges()) items.push_back("e " + d.name(e.tail) + " " + d.name(e.head));
    std::sort(items.begin(), items.end());
    std::uint64_t h = 1469598103934665603ULL;
    for (const auto& s : items) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ULL;
        }
        h ^= '\n';
        h *= 1099511628211ULL;
    }
    return h;
}

}  // namespace dtw1
