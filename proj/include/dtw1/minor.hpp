#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dtw1/digraph.hpp"
#include "dtw1/sdecomposition.hpp"

namespace dtw1 {

enum class StepKind { DeleteEdge, DeleteVertex, Contract };

/// One minor operation on labelled vertices. `contract u v` merges v into u
/// along an edge between them that is butterfly contractible at that moment.
struct ScriptStep {
    StepKind kind = StepKind::DeleteEdge;
    int u = -1;
    int v = -1;
    friend bool operator==(const ScriptStep&, const ScriptStep&) = default;
};

struct ReplayResult {
    bool ok = true;
    std::string error;
    Digraph graph;
    std::vector<VertexSet> branch;  // by surviving label: original vertices merged into it
};

/// Applies one step in place; returns an error message when the step is illegal.
inline std::optional<std::string> apply_step(Digraph& g, std::vector<VertexSet>& branch, const ScriptStep& s) {
    switch (s.kind) {
        case StepKind::DeleteEdge:
            if (!g.has_edge(s.u, s.v)) return "del: edge not present";
            g.remove_edge(s.u, s.v);
            return std::nullopt;
        case StepKind::DeleteVertex:
            if (!g.has_vertex(s.u)) return "delv: vertex not present";
            g.remove_vertex(s.u);
            branch[s.u] = {};
            return std::nullopt;
        case StepKind::Contract: {
            if (!g.has_vertex(s.u) || !g.has_vertex(s.v) || s.u == s.v) return "contract: needs two present vertices";
            bool fwd = g.has_edge(s.u, s.v) && butterfly_contractible(g, {s.u, s.v});
            bool bwd = g.has_edge(s.v, s.u) && butterfly_contractible(g, {s.v, s.u});
            if (!fwd && !bwd) return "contract: no butterfly contractible edge between the vertices";
            g.merge_into(s.u, s.v);
            branch[s.u] |= branch[s.v];
            branch[s.v] = {};
            return std::nullopt;
        }
    }
    return "unknown step";
}

inline ReplayResult replay_script(const Digraph& d, const std::vector<ScriptStep>& script) {
    ReplayResult r;
    r.graph = d;
    r.branch.assign(kMaxVertices, {});
    for (int v : d.vertices()) r.branch[v] = VertexSet::single(v);
    for (std::size_t i = 0; i < script.size(); ++i) {
        if (auto err = apply_step(r.graph, r.branch, script[i])) {
            r.ok = false;
            r.error = "step " + std::to_string(i + 1) + ": " + *err;
            return r;
        }
    }
    return r;
}

enum class PatternKind { Bicycle, A4 };

/// Bicycle: bidirected cycle on 0..length-1. A4: v1..v4 as 0..3 with the
/// 4-cycle 0→1→2→3→0 and digons {1,3}, {0,2}.
inline Digraph pattern_digraph(PatternKind kind, int length) {
    if (kind == PatternKind::A4) {
        return Digraph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {1, 3}, {3, 1}, {0, 2}, {2, 0}});
    }
    if (length < 3) throw PreconditionError("bicycles have length at least three");
    Digraph g(length);
    for (int i = 0; i < length; ++i) {
        g.add_edge(i, (i + 1) % length);
        g.add_edge((i + 1) % length, i);
    }
    return g;
}

/// True iff g is exactly the pattern with pattern vertex i placed at image[i].
inline bool matches_pattern(const Digraph& g, PatternKind kind, int length, const std::vector<int>& image) {
    Digraph p = pattern_digraph(kind, length);
    if (static_cast<int>(image.size()) != p.order()) return false;
    VertexSet used;
    for (int v : image) {
        if (!g.has_vertex(v) || used.contains(v)) return false;
        used.insert(v);
    }
    if (used != g.vertices()) return false;
    for (int i = 0; i < p.order(); ++i)
        for (int j = 0; j < p.order(); ++j)
            if (i != j && p.has_edge(i, j) != g.has_edge(image[i], image[j])) return false;
    return true;
}

/// Cyclic vertex order of g when g is a bicycle.
inline std::optional<std::vector<int>> match_bicycle(const Digraph& g) {
    if (g.order() < 3) return std::nullopt;
    for (int v : g.vertices())
        if (g.out(v) != g.in(v) || g.out(v).size() != 2) return std::nullopt;
    std::vector<int> order{g.vertices().min()};
    int prev = -1;
    while (true) {
        int cur = order.back();
        VertexSet next = g.out(cur);
        if (prev >= 0) next.erase(prev);
        int nxt = next.min();
        if (nxt == order.front()) break;
        if (static_cast<int>(order.size()) == g.order()) return std::nullopt;
        prev = cur;
        order.push_back(nxt);
    }
    if (static_cast<int>(order.size()) != g.order()) return std::nullopt;
    return order;
}

inline std::optional<std::vector<int>> match_a4(const Digraph& g) {
    if (g.order() != 4 || g.edge_count() != 8) return std::nullopt;
    std::vector<int> image = g.vertices().to_vector();
    do {
        if (matches_pattern(g, PatternKind::A4, 4, image)) return image;
    } while (std::next_permutation(image.begin(), image.end()));
    return std::nullopt;
}

/// Embedded bicycle or A4: the script turns D into the pattern, with pattern
/// vertex i surviving as label image[i].
struct MinorWitness {
    PatternKind kind = PatternKind::Bicycle;
    int length = 3;
    std::vector<ScriptStep> script;
    std::vector<int> image;
    std::vector<std::string> notes;
};

struct WitnessCheck {
    bool ok = false;
    std::string error;
    std::vector<VertexSet> branch_sets;  // per pattern vertex
};

inline WitnessCheck verify_minor_witness(const Digraph& d, const MinorWitness& w) {
    WitnessCheck c;
    if (w.kind == PatternKind::A4 && w.length != 4) {
        c.error = "A4 witness must have length 4";
        return c;
    }
    auto r = replay_script(d, w.script);
    if (!r.ok) {
        c.error = r.error;
        return c;
    }
    if (!matches_pattern(r.graph, w.kind, w.length, w.image)) {
        c.error = "replayed digraph is not the claimed pattern";
        return c;
    }
    for (int v : w.image) c.branch_sets.push_back(r.branch[v]);
    c.ok = true;
    return c;
}

namespace detail {

/// Steps that collapse shore W onto its cut vertex c along a depth-first
/// arborescence of D[W]: out-arborescence from c for a source-side shore,
/// in-arborescence into c for a sink-side shore.
inline void collapse_shore(Digraph& g, std::vector<VertexSet>& branch, VertexSet w, int c, bool source_side,
                           std::vector<ScriptStep>& script) {
    std::array<int, kMaxVertices> parent{};
    parent.fill(-1);
    std::vector<int> order{c};
    VertexSet seen = VertexSet::single(c);
    auto dfs = [&](auto&& self, int v) -> void {
        VertexSet nb = (source_side ? g.out(v) : g.in(v)) & w;
        for (int u : nb)
            if (!seen.contains(u)) {
                seen.insert(u);
                parent[u] = v;
                order.push_back(u);
                self(self, u);
            }
    };
    dfs(dfs, c);
    if (seen != (w & g.vertices())) throw std::logic_error("collapse_shore: shore not spanned from its cut vertex");
    auto run = [&](ScriptStep s) {
        if (auto err = apply_step(g, branch, s)) throw std::logic_error("collapse_shore: " + *err);
        script.push_back(s);
    };
    for (int u : order) {
        if (u == c) continue;
        VertexSet extra = (source_side ? g.in(u) : g.out(u)) - VertexSet::single(parent[u]);
        for (int x : extra) run(source_side ? ScriptStep{StepKind::DeleteEdge, x, u} : ScriptStep{StepKind::DeleteEdge, u, x});
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        if (*it != c) run({StepKind::Contract, parent[*it], *it});
}

}  // namespace detail

/// Reduces g to a strongly 2-connected piece with at least three vertices: all
/// vertices outside one strong component are deleted, then every shore
/// opposite to a large S-decomposition piece is collapsed. Returns false (and
/// leaves g in an unspecified state) when no strong component has such a piece.
inline bool reduce_to_dibrace(Digraph& g, std::vector<VertexSet>& branch, std::vector<ScriptStep>& script) {
    for (VertexSet k : strong_components(g)) {
        if (k.size() < 3) continue;
        Digraph piece = g.induced(k);
        auto sd = s_decomposition(piece);
        int pick = -1;
        for (int t = 0; t < sd.size() && pick < 0; ++t)
            if (sd.bags[t].size() >= 3) pick = t;
        if (pick < 0) continue;
        for (int v : g.vertices() - k) {
            ScriptStep s{StepKind::DeleteVertex, v, -1};
            apply_step(g, branch, s);
            script.push_back(s);
        }
        for (int e : sd.incident(pick)) {
            const auto& sep = sd.edges[e].sep;
            VertexSet w = sd.opposite(pick, e);
            detail::collapse_shore(g, branch, w, sep.cut, w == sep.base.a, script);
        }
        return true;
    }
    return false;
}

namespace detail {

struct Move {
    std::string label;
    std::vector<ScriptStep> steps;
};

inline std::vector<Move> candidate_moves(const Digraph& g) {
    std::vector<Move> out;
    auto del = [](int u, int v) { return ScriptStep{StepKind::DeleteEdge, u, v}; };
    auto con = [](int u, int v) { return ScriptStep{StepKind::Contract, u, v}; };
    auto only = [&](VertexSet among, std::vector<Edge> want) {
        // g[among] has exactly the edges `want`.
        int count = 0;
        for (int u : among) count += (g.out(u) & among).size();
        if (count != static_cast<int>(want.size())) return false;
        for (auto e : want)
            if (!g.has_edge(e)) return false;
        return true;
    };
    // High degree: drop one edge at a vertex with three out- or in-neighbours.
    for (int u : g.vertices()) {
        if (g.out_degree(u) >= 3)
            for (int w : g.out(u)) out.push_back({"case2", {del(u, w)}});
        if (g.in_degree(u) >= 3)
            for (int w : g.in(u)) out.push_back({"case2", {del(w, u)}});
    }
    if (!out.empty()) return out;
    auto vs = g.vertices().to_vector();
    for (int x : vs)
        for (int y : vs)
            for (int z : vs) {
                if (x == y || y == z || x == z) continue;
                VertexSet tri{x, y, z};
                if (only(tri, {{x, y}, {y, z}, {x, z}})) out.push_back({"case4", {del(x, z), con(y, z)}});
                if (only(tri, {{x, y}, {y, z}, {x, z}, {z, x}}))
                    out.push_back({"case5", {del(x, z), del(z, x), con(y, x), con(y, z)}});
            }
    for (int w : vs)
        for (int x : vs)
            for (int y : vs)
                for (int z : vs) {
                    if (VertexSet{w, x, y, z}.size() != 4 || w > x || y > z) continue;
                    if (only({w, x, y, z}, {{w, y}, {w, z}, {x, y}, {x, z}}))
                        out.push_back({"case8", {del(w, y), con(w, z)}});
                }
    for (int x : vs)
        if (g.out_degree(x) == 2)
            for (int y : g.out(x)) {
                int z = (g.out(x) - VertexSet::single(y)).min();
                out.push_back({"case3", {del(x, z), con(x, y)}});
            }
    for (auto e : g.edges())
        if (butterfly_contractible(g, e)) out.push_back({"fallback-contract", {con(e.tail, e.head)}});
    for (auto e : g.edges()) out.push_back({"fallback-delete", {del(e.tail, e.head)}});
    for (int v : vs) out.push_back({"fallback-delete-vertex", {{StepKind::DeleteVertex, v, -1}}});
    return out;
}

}  // namespace detail

/// Bicycle or A4 butterfly minor of d, found by walking down through strongly
/// 2-connected minors: each move (tried in the order high degree, transitive
/// triangle, triangle with digon, K_{2,2} orientation, small cycle property,
/// then any single operation) is kept only if the result still has an
/// S-decomposition piece on three or more vertices.
inline MinorWitness extract_minor_witness(const Digraph& d) {
    Digraph g = d;
    std::vector<VertexSet> branch(kMaxVertices);
    for (int v : d.vertices()) branch[v] = VertexSet::single(v);
    MinorWitness w;
    if (!reduce_to_dibrace(g, branch, w.script))
        throw PreconditionError("extract_minor_witness: no strongly 2-connected piece on three or more vertices");
    while (true) {
        if (auto order = match_bicycle(g)) {
            w.kind = PatternKind::Bicycle;
            w.length = static_cast<int>(order->size());
            w.image = *order;
            return w;
        }
        if (auto image = match_a4(g)) {
            w.kind = PatternKind::A4;
            w.length = 4;
            w.image = *image;
            return w;
        }
        bool moved = false;
        for (const auto& m : detail::candidate_moves(g)) {
            Digraph h = g;
            auto hb = branch;
            std::vector<ScriptStep> steps;
            bool legal = true;
            for (const auto& s : m.steps) {
                if (apply_step(h, hb, s)) { legal = false; break; }
                steps.push_back(s);
            }
            if (!legal || !reduce_to_dibrace(h, hb, steps)) continue;
            if (m.label.rfind("fallback", 0) == 0) w.notes.push_back("fallback move used: " + m.label);
            g = std::move(h);
            branch = std::move(hb);
            w.script.insert(w.script.end(), steps.begin(), steps.end());
            moved = true;
            break;
        }
        if (!moved) throw std::logic_error("extract_minor_witness: no move keeps a large strongly 2-connected piece");
    }
}

}  // namespace dtw1
