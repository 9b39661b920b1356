#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "dtw1/digraph.hpp"
#include "dtw1/hypergraph.hpp"

namespace dtw1 {

inline constexpr std::size_t kDefaultCycleCap = 100000;

/// Simple directed cycle, rotated to start at its smallest vertex id.
struct DirectedCycle {
    std::vector<int> sequence;
    int length() const { return static_cast<int>(sequence.size()); }
    VertexSet vertex_set() const { return VertexSet::from_vector(sequence); }
    auto operator<=>(const DirectedCycle&) const = default;
};

inline bool is_cycle_of(const Digraph& d, const DirectedCycle& c) {
    if (c.sequence.size() < 2) return false;
    if (c.vertex_set().size() != c.length()) return false;
    for (int i = 0; i < c.length(); ++i)
        if (!d.has_edge(c.sequence[i], c.sequence[(i + 1) % c.length()])) return false;
    return true;
}

/// All simple directed cycles, sorted lexicographically by canonical sequence.
/// Throws CapExceeded as soon as more than `cap` cycles are found.
inline std::vector<DirectedCycle> enumerate_cycles(const Digraph& d, std::size_t cap = kDefaultCycleCap) {
    if (cap < 1) throw PreconditionError("cycle cap must be at least 1");
    std::vector<DirectedCycle> out;
    std::vector<int> path;
    for (int s : d.vertices()) {
        // Only vertices above s: each cycle is found once, from its minimum.
        VertexSet allowed = d.vertices() - VertexSet::range(s + 1);
        // Restrict to the part of d[allowed ∪ s] strongly connected with s.
        VertexSet zone = allowed | VertexSet::single(s);
        VertexSet scc = strong_component_of(d, s, zone);
        if (scc.size() < 2) continue;
        path.assign(1, s);
        auto dfs = [&](auto&& self, int v, VertexSet on_path) -> void {
            for (int w : d.out(v) & scc) {
                if (w == s) {
                    out.push_back({path});
                    if (out.size() > cap) throw CapExceeded(out.size(), cap);
                } else if (!on_path.contains(w)) {
                    path.push_back(w);
                    self(self, w, on_path | VertexSet::single(w));
                    path.pop_back();
                }
            }
        };
        dfs(dfs, s, VertexSet::single(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// C(D): one hyperedge per directed cycle (duplicates kept). The hypergraph's
/// vertices are the digraph vertices lying on some cycle, renumbered densely
/// (vertex_origin maps back); edge_origin is the cycle index.
struct CycleHypergraph {
    Digraph host;
    std::vector<DirectedCycle> cycles;
    std::vector<VertexSet> edge_sets;
    VertexSet acyclic_vertices;
    Hypergraph hypergraph;

    int num_edges() const { return static_cast<int>(cycles.size()); }
    /// Dense hypergraph id of digraph vertex v, or -1.
    int hyper_id(int v) const {
        auto it = std::lower_bound(hypergraph.vertex_origin.begin(), hypergraph.vertex_origin.end(), v);
        return (it != hypergraph.vertex_origin.end() && *it == v)
                   ? static_cast<int>(it - hypergraph.vertex_origin.begin())
                   : -1;
    }
};

inline CycleHypergraph cycle_hypergraph(const Digraph& d, std::size_t cap = kDefaultCycleCap) {
    CycleHypergraph ch;
    ch.host = d;
    ch.cycles = enumerate_cycles(d, cap);
    VertexSet covered;
    std::vector<std::vector<int>> raw;
    for (const auto& c : ch.cycles) {
        ch.edge_sets.push_back(c.vertex_set());
        covered |= c.vertex_set();
        raw.push_back(c.vertex_set().to_vector());
    }
    ch.acyclic_vertices = d.vertices() - covered;
    ch.hypergraph = Hypergraph::compact(raw);
    for (int v : ch.hypergraph.vertex_origin) ch.hypergraph.vertex_names.push_back(d.name(v));
    for (int i = 0; i < ch.num_edges(); ++i) {
        std::string name = "C";
        for (int v : ch.cycles[i].sequence) name += (name.size() > 1 ? ">" : "(") + d.name(v);
        ch.hypergraph.edge_names.push_back(name + ")");
    }
    return ch;
}

/// Indices of hyperedges meeting both x and its complement.
inline std::vector<int> cut(const CycleHypergraph& ch, VertexSet x) {
    std::vector<int> out;
    VertexSet rest = ch.host.vertices() - x;
    for (int i = 0; i < ch.num_edges(); ++i)
        if (ch.edge_sets[i].intersects(x) && ch.edge_sets[i].intersects(rest)) out.push_back(i);
    return out;
}

/// Minimum hitting set of the target hyperedges (subsets by increasing size, lexicographic ties).
inline std::optional<VertexSet> min_hitting_set(const CycleHypergraph& ch, const std::vector<int>& targets,
                                                int bound) {
    std::optional<VertexSet> found;
    for_each_subset_up_to(ch.host.vertices(), bound, [&](VertexSet s) {
        for (int i : targets)
            if (!ch.edge_sets[i].intersects(s)) return false;
        found = s;
        return true;
    });
    return found;
}

struct CycleChain {
    std::vector<int> cycles;
    bool closed = false;
};

inline bool is_chain(const CycleHypergraph& ch, const std::vector<int>& seq) {
    int l = static_cast<int>(seq.size());
    for (int i = 0; i < l; ++i)
        for (int j = i + 1; j < l; ++j) {
            bool meet = ch.edge_sets[seq[i]].intersects(ch.edge_sets[seq[j]]);
            if ((j == i + 1) != meet) return false;
        }
    return true;
}

/// Closed chain: cyclically consecutive cycles meet, all others are disjoint.
/// For length 3 no vertex may lie on all three cycles.
inline bool is_closed_chain(const CycleHypergraph& ch, const std::vector<int>& seq) {
    int l = static_cast<int>(seq.size());
    if (l < 3) return false;
    for (int i = 0; i < l; ++i)
        for (int j = i + 1; j < l; ++j) {
            bool adjacent = (j == i + 1) || (i == 0 && j == l - 1);
            if (adjacent != ch.edge_sets[seq[i]].intersects(ch.edge_sets[seq[j]])) return false;
        }
    if (l == 3 && !(ch.edge_sets[seq[0]] & ch.edge_sets[seq[1]] & ch.edge_sets[seq[2]]).empty()) return false;
    return true;
}

/// Some closed chain of at least three cycles, or nothing. Triangles of the
/// cycle-intersection graph with empty common intersection come first; then
/// induced cycles of length ≥ 4 in that graph.
inline std::optional<CycleChain> find_closed_chain(const CycleHypergraph& ch) {
    int m = ch.num_edges();
    std::vector<std::vector<bool>> meet(m, std::vector<bool>(m, false));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) meet[i][j] = i != j && ch.edge_sets[i].intersects(ch.edge_sets[j]);
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            if (!meet[a][b]) continue;
            for (int c = b + 1; c < m; ++c)
                if (meet[a][c] && meet[b][c] && (ch.edge_sets[a] & ch.edge_sets[b] & ch.edge_sets[c]).empty())
                    return CycleChain{{a, b, c}, true};
        }
    // Chordless cycle a, b, ..., c through a: shortest b-c path avoiding N[a] except b, c.
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            if (!meet[a][b]) continue;
            for (int c = b + 1; c < m; ++c) {
                if (!meet[a][c] || meet[b][c]) continue;
                std::vector<int> prev(m, -2);
                std::vector<int> queue{b};
                prev[b] = -1;
                for (std::size_t qi = 0; qi < queue.size() && prev[c] == -2; ++qi) {
                    int x = queue[qi];
                    for (int y = 0; y < m; ++y) {
                        if (!meet[x][y] || prev[y] != -2 || y == a) continue;
                        if (meet[a][y] && y != c) continue;
                        prev[y] = x;
                        queue.push_back(y);
                    }
                }
                if (prev[c] == -2) continue;
                std::vector<int> seq{a};
                std::vector<int> path;
                for (int x = c; x != -1; x = prev[x]) path.push_back(x);
                seq.insert(seq.end(), path.rbegin(), path.rend());
                return CycleChain{seq, true};
            }
        }
    return std::nullopt;
}

/// Strong connectivity through the cycle structure: |V| = 1, or every vertex is
/// on a cycle and the cycle-intersection graph is connected.
inline bool strongly_connected_via_chains(const Digraph& d, std::size_t cap = kDefaultCycleCap) {
    if (d.order() == 1) return true;
    if (d.order() == 0) return false;
    auto ch = cycle_hypergraph(d, cap);
    if (!ch.acyclic_vertices.empty() || ch.num_edges() == 0) return false;
    int m = ch.num_edges();
    std::vector<bool> seen(m, false);
    std::vector<int> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        int i = stack.back();
        stack.pop_back();
        for (int j = 0; j < m; ++j)
            if (!seen[j] && ch.edge_sets[i].intersects(ch.edge_sets[j])) {
                seen[j] = true;
                stack.push_back(j);
            }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool s) { return s; });
}

}  // namespace dtw1
