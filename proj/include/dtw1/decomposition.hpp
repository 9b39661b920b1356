#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dtw1/branch_dp.hpp"
#include "dtw1/cycles.hpp"
#include "dtw1/digraph.hpp"
#include "dtw1/hypertree_width.hpp"

namespace dtw1 {

/// Arborescence (parent array, -1 at the root) with partitioning bags and a
/// guard on every arc; guards[t] belongs to the arc (parent[t], t).
struct DirectedTreeDecomposition {
    std::vector<int> parent;
    std::vector<VertexSet> bags;
    std::vector<VertexSet> guards;

    int size() const { return static_cast<int>(parent.size()); }
    int add_node(int par, VertexSet bag, VertexSet guard = {}) {
        parent.push_back(par);
        bags.push_back(bag);
        guards.push_back(par < 0 ? VertexSet{} : guard);
        return size() - 1;
    }
    std::vector<std::vector<int>> children() const {
        std::vector<std::vector<int>> ch(size());
        for (int t = 0; t < size(); ++t)
            if (parent[t] >= 0) ch[parent[t]].push_back(t);
        return ch;
    }
    int root() const {
        for (int t = 0; t < size(); ++t)
            if (parent[t] < 0) return t;
        return -1;
    }
    /// Γ(t): the bag plus the guards of all incident arcs.
    VertexSet gamma(int t) const {
        VertexSet g = bags[t];
        if (parent[t] >= 0) g |= guards[t];
        for (int c = 0; c < size(); ++c)
            if (parent[c] == t) g |= guards[c];
        return g;
    }
    int width() const {
        int w = 0;
        for (int t = 0; t < size(); ++t) w = std::max(w, gamma(t).size() - 1);
        return w;
    }
    /// Union of the bags in the subtree below t.
    VertexSet below(int t) const {
        VertexSet s = bags[t];
        for (int c = 0; c < size(); ++c)
            if (parent[c] == t) s |= below(c);
        return s;
    }
};

inline ValidationReport validate_dtd(const Digraph& d, const DirectedTreeDecomposition& dec) {
    ValidationReport rep;
    int n = dec.size();
    if (static_cast<int>(dec.bags.size()) != n || static_cast<int>(dec.guards.size()) != n) {
        rep.fail("node arrays have different lengths");
        return rep;
    }
    if (!detail::tree_order(dec.parent) || n == 0) {
        rep.fail("parent array is not an arborescence");
        return rep;
    }
    VertexSet seen;
    for (int t = 0; t < n; ++t) {
        if (!dec.bags[t].subset_of(d.vertices())) rep.fail("bag of node " + std::to_string(t) + " has unknown vertex");
        if (dec.bags[t].intersects(seen)) rep.fail("bag of node " + std::to_string(t) + " overlaps an earlier bag");
        seen |= dec.bags[t];
        if (!dec.guards[t].subset_of(d.vertices()))
            rep.fail("guard of node " + std::to_string(t) + " has unknown vertex");
    }
    if (seen != d.vertices()) rep.fail("bags do not cover every vertex");
    if (!rep.valid) return rep;
    for (int t = 0; t < n; ++t) {
        if (dec.parent[t] < 0) continue;
        VertexSet s = dec.below(t), g = dec.guards[t];
        VertexSet alive = d.vertices() - g, src = s - g;
        VertexSet returning = reachable_within(d, src, alive) & reaching_within(d, src, alive);
        if (!(returning - s).empty())
            rep.fail("guard of arc (" + std::to_string(dec.parent[t]) + "," + std::to_string(t) +
                     ") misses a walk through vertex " + std::to_string((returning - s).min()));
    }
    rep.width = dec.width();
    return rep;
}

/// Leaf shape: internal bags empty, leaf bags singletons, at most three
/// children at the root and two elsewhere, root not a bare leaf.
inline bool is_leaf_dtd(const DirectedTreeDecomposition& dec) {
    auto ch = dec.children();
    int r = dec.root();
    if (r < 0) return false;
    if (dec.size() == 1) return dec.bags[r].size() == 1;
    for (int t = 0; t < dec.size(); ++t) {
        int k = static_cast<int>(ch[t].size());
        if (k == 0 && dec.bags[t].size() != 1) return false;
        if (k > 0 && !dec.bags[t].empty()) return false;
        if (k > (t == r ? 3 : 2)) return false;
        if (t == r && k < 2) return false;
    }
    return true;
}

/// Leaf directed tree decomposition of no larger width.
inline DirectedTreeDecomposition dtd_to_leaf_dtd(const Digraph& d, const DirectedTreeDecomposition& dec) {
    if (is_leaf_dtd(dec)) return dec;
    auto ch = dec.children();
    DirectedTreeDecomposition out;
    // Returns the new node for old node t, or -1 when its subtree holds no vertex.
    auto build = [&](auto&& self, int t, int new_parent, VertexSet guard) -> int {
        if (dec.below(t).empty()) return -1;
        VertexSet gam = dec.gamma(t);
        struct Part { VertexSet members; int old_child; int leaf_vertex; };
        std::vector<Part> parts;
        for (int c : ch[t])
            if (!dec.below(c).empty()) parts.push_back({dec.below(c), c, -1});
        for (int u : dec.bags[t]) parts.push_back({VertexSet::single(u), -1, u});
        // Order parts so that every suffix is closed under returning walks in D − Γ(t).
        VertexSet alive = d.vertices() - gam;
        int m = static_cast<int>(parts.size());
        std::vector<std::vector<bool>> before(m, std::vector<bool>(m, false));
        for (int i = 0; i < m; ++i) {
            VertexSet reach = reachable_within(d, parts[i].members - gam, alive);
            for (int j = 0; j < m; ++j)
                if (i != j && reach.intersects(parts[j].members - gam)) before[i][j] = true;
        }
        std::vector<int> order;
        std::vector<bool> placed(m, false);
        for (int step = 0; step < m; ++step) {
            int pick = -1;
            for (int i = 0; i < m && pick < 0; ++i) {
                if (placed[i]) continue;
                bool ready = true;
                for (int j = 0; j < m; ++j)
                    if (!placed[j] && j != i && before[j][i]) { ready = false; break; }
                if (ready) pick = i;
            }
            if (pick < 0) throw PreconditionError("dtd_to_leaf_dtd: input decomposition is not valid");
            placed[pick] = true;
            order.push_back(pick);
        }
        if (m == 1 && new_parent >= 0) {
            const Part& p = parts[order[0]];
            if (p.old_child >= 0) return self(self, p.old_child, new_parent, dec.guards[p.old_child]);
            return out.add_node(new_parent, p.members, guard);
        }
        int node = out.add_node(new_parent, {}, guard);
        int limit = new_parent < 0 ? 3 : 2;
        int holder = node;
        for (int idx = 0; idx < m; ++idx) {
            int remaining = m - idx;
            if (remaining > 1 && (holder == node ? limit : 2) - static_cast<int>(out.children()[holder].size()) == 1) {
                holder = out.add_node(holder, {}, gam);
            }
            const Part& p = parts[order[idx]];
            if (p.old_child >= 0) self(self, p.old_child, holder, dec.guards[p.old_child]);
            else out.add_node(holder, p.members, gam);
        }
        return node;
    };
    int r = dec.root();
    build(build, r, -1, {});
    // A root with a single child is redundant; promote the child.
    while (out.size() > 1) {
        int root = out.root();
        auto kids = out.children()[root];
        if (kids.size() != 1 || !out.bags[root].empty()) break;
        DirectedTreeDecomposition next;
        std::vector<int> remap(out.size(), -1);
        std::vector<int> order{kids[0]};
        for (std::size_t i = 0; i < order.size(); ++i)
            for (int c : out.children()[order[i]]) order.push_back(c);
        for (int t : order) remap[t] = next.add_node(t == kids[0] ? -1 : remap[out.parent[t]], out.bags[t], out.guards[t]);
        out = next;
    }
    return out;
}

/// Tree-edge thickness witnesses for a directed branch decomposition.
struct DirectedBranchDecomposition {
    SubcubicTree tree;
    std::vector<VertexSet> hitting_sets;
};

inline int dbd_thickness(const CycleHypergraph& ch, VertexSet side, int bound = kMaxVertices) {
    auto s = min_hitting_set(ch, cut(ch, side), bound);
    return s ? s->size() : bound + 1;
}

inline ValidationReport validate_dbd(const Digraph& d, const DirectedBranchDecomposition& dec, int bound,
                                     std::size_t cap = kDefaultCycleCap) {
    ValidationReport rep;
    for (auto& p : dec.tree.problems(d.vertices())) rep.fail(p);
    if (!rep.valid) return rep;
    auto ch = cycle_hypergraph(d, cap);
    bool have_witness = dec.hitting_sets.size() == dec.tree.edges.size();
    for (int i = 0; i < static_cast<int>(dec.tree.edges.size()); ++i) {
        auto targets = cut(ch, dec.tree.side(i));
        auto best = min_hitting_set(ch, targets, bound);
        if (!best) {
            rep.fail("tree edge " + std::to_string(i) + " is thicker than " + std::to_string(bound));
            continue;
        }
        rep.width = std::max(rep.width, best->size());
        if (have_witness) {
            VertexSet w = dec.hitting_sets[i];
            bool hits = std::all_of(targets.begin(), targets.end(), [&](int c) { return ch.edge_sets[c].intersects(w); });
            if (!hits || w.size() != best->size())
                rep.fail("stored hitting set of tree edge " + std::to_string(i) + " is not a minimum hitting set");
        }
    }
    return rep;
}

inline std::vector<VertexSet> minimum_hitting_sets(const CycleHypergraph& ch, const SubcubicTree& tree) {
    std::vector<VertexSet> out;
    for (int i = 0; i < static_cast<int>(tree.edges.size()); ++i)
        out.push_back(*min_hitting_set(ch, cut(ch, tree.side(i)), kMaxVertices));
    return out;
}

/// Exact directed branch width with an optimal decomposition.
inline std::pair<int, DirectedBranchDecomposition> exact_dbw(const Digraph& d, std::size_t cap = kDefaultCycleCap) {
    auto ch = cycle_hypergraph(d, cap);
    auto [w, tree] = optimal_branch_decomposition(d.vertices(), [&](VertexSet x) { return dbd_thickness(ch, x); });
    DirectedBranchDecomposition dec{tree, minimum_hitting_sets(ch, tree)};
    return {w, dec};
}

inline DirectedBranchDecomposition dtd_to_dbd(const Digraph& d, const DirectedTreeDecomposition& dec,
                                              std::size_t cap = kDefaultCycleCap) {
    auto leaf = dtd_to_leaf_dtd(d, dec);
    DirectedBranchDecomposition out;
    std::vector<int> node(leaf.size());
    for (int t = 0; t < leaf.size(); ++t) node[t] = out.tree.add_node(leaf.bags[t].empty() ? -1 : leaf.bags[t].min());
    for (int t = 0; t < leaf.size(); ++t)
        if (leaf.parent[t] >= 0) out.tree.add_edge(node[leaf.parent[t]], node[t]);
    auto ch = cycle_hypergraph(d, cap);
    out.hitting_sets = minimum_hitting_sets(ch, out.tree);
    return out;
}

/// Minimum set of hyperedges covering `targets` (sorted vertex list), or nothing within `bound`.
inline std::optional<std::vector<int>> min_edge_cover(const Hypergraph& h, const std::vector<int>& targets, int bound) {
    if (h.num_edges() > kMaxVertices) throw InstanceTooLarge("edge cover search supports at most 64 edges");
    std::vector<VertexSet> edge_sets;
    for (const auto& e : h.edges()) edge_sets.push_back(VertexSet::from_vector(e));
    std::optional<std::vector<int>> found;
    for_each_subset_up_to(VertexSet::range(h.num_edges()), bound, [&](VertexSet s) {
        std::vector<int> ids = s.to_vector();
        auto covered = edge_union(h, ids);
        if (!std::includes(covered.begin(), covered.end(), targets.begin(), targets.end())) return false;
        found = ids;
        return true;
    });
    return found;
}

/// Vertices shared by the edges on both sides of a split.
inline std::vector<int> hyperbranch_boundary(const Hypergraph& h, VertexSet side) {
    std::vector<int> a, b;
    for (int i = 0; i < h.num_edges(); ++i) (side.contains(i) ? a : b).push_back(i);
    return detail::intersect_sorted(edge_union(h, a), edge_union(h, b));
}

struct HyperbranchDecomposition {
    SubcubicTree tree;
    std::vector<std::vector<int>> cover_sets;
};

inline int hbd_thickness(const Hypergraph& h, VertexSet side, int bound = kMaxVertices) {
    auto s = min_edge_cover(h, hyperbranch_boundary(h, side), bound);
    return s ? static_cast<int>(s->size()) : bound + 1;
}

inline ValidationReport validate_hbd(const Hypergraph& h, const HyperbranchDecomposition& dec, int bound) {
    ValidationReport rep;
    if (h.num_edges() > kMaxVertices) throw InstanceTooLarge("hyperbranch decompositions support at most 64 edges");
    for (auto& p : dec.tree.problems(VertexSet::range(h.num_edges()))) rep.fail(p);
    if (!rep.valid) return rep;
    bool have_witness = dec.cover_sets.size() == dec.tree.edges.size();
    for (int i = 0; i < static_cast<int>(dec.tree.edges.size()); ++i) {
        auto targets = hyperbranch_boundary(h, dec.tree.side(i));
        auto best = min_edge_cover(h, targets, bound);
        if (!best) {
            rep.fail("tree edge " + std::to_string(i) + " is thicker than " + std::to_string(bound));
            continue;
        }
        rep.width = std::max(rep.width, static_cast<int>(best->size()));
        if (have_witness) {
            auto covered = edge_union(h, dec.cover_sets[i]);
            if (!std::includes(covered.begin(), covered.end(), targets.begin(), targets.end()) ||
                dec.cover_sets[i].size() != best->size())
                rep.fail("stored cover of tree edge " + std::to_string(i) + " is not a minimum cover");
        }
    }
    return rep;
}

inline std::pair<int, HyperbranchDecomposition> exact_hbw(const Hypergraph& h) {
    if (h.num_edges() > kMaxVertices) throw InstanceTooLarge("exact_hbw supports at most 64 edges");
    auto [w, tree] = optimal_branch_decomposition(VertexSet::range(h.num_edges()),
                                                  [&](VertexSet x) { return hbd_thickness(h, x); });
    HyperbranchDecomposition dec{tree, {}};
    for (int i = 0; i < static_cast<int>(tree.edges.size()); ++i)
        dec.cover_sets.push_back(*min_edge_cover(h, hyperbranch_boundary(h, tree.side(i)), h.num_edges()));
    return {w, dec};
}

/// Dual of the cycle hypergraph, dual(C(D)): vertices are cycles, edge i is e_v
/// for the digraph vertex v = edge_origin[i].
inline Hypergraph dual_cycle_hypergraph(const CycleHypergraph& ch) { return dual(ch.hypergraph); }

inline HyperbranchDecomposition dbd_to_hbd(const Digraph& d, const DirectedBranchDecomposition& dec,
                                           std::size_t cap = kDefaultCycleCap) {
    auto ch = cycle_hypergraph(d, cap);
    if (!ch.acyclic_vertices.empty()) throw PreconditionError("dbd_to_hbd: every vertex must lie on a cycle");
    HyperbranchDecomposition out;
    out.tree = dec.tree;
    for (auto& it : out.tree.item)
        if (it >= 0) it = ch.hyper_id(it);
    for (VertexSet s : dec.hitting_sets) {
        std::vector<int> cover;
        for (int v : s)
            if (ch.hyper_id(v) >= 0) cover.push_back(ch.hyper_id(v));
        out.cover_sets.push_back(cover);
    }
    return out;
}

inline DirectedBranchDecomposition hbd_to_dbd(const Digraph& d, const HyperbranchDecomposition& dec,
                                              std::size_t cap = kDefaultCycleCap) {
    auto ch = cycle_hypergraph(d, cap);
    auto h = dual_cycle_hypergraph(ch);
    if (!ch.acyclic_vertices.empty() || !dec.tree.problems(VertexSet::range(h.num_edges())).empty())
        throw PreconditionError("hbd_to_dbd: decomposition is not over dual(C(D))");
    DirectedBranchDecomposition out;
    out.tree = dec.tree;
    for (auto& it : out.tree.item)
        if (it >= 0) it = h.edge_origin[it];
    for (const auto& cover : dec.cover_sets) {
        VertexSet s;
        for (int e : cover) s.insert(h.edge_origin[e]);
        out.hitting_sets.push_back(s);
    }
    return out;
}

/// Generalised hypertree decomposition of dual(C(D)) from a directed tree
/// decomposition: bag of t = cycles whose spanning subtree contains t, guard of
/// t = the dual edges of Γ(t).
inline HypertreeDecomposition dtd_to_ghd(const Digraph& d, const DirectedTreeDecomposition& dec,
                                         std::size_t cap = kDefaultCycleCap) {
    auto ch = cycle_hypergraph(d, cap);
    HypertreeDecomposition out;
    if (ch.num_edges() == 0) return out;
    int n = dec.size();
    auto order = detail::tree_order(dec.parent);
    if (!order) throw PreconditionError("dtd_to_ghd: not an arborescence");
    auto kids = dec.children();
    out.parent = dec.parent;
    out.bags.assign(n, {});
    out.guards.assign(n, {});
    for (int c = 0; c < ch.num_edges(); ++c) {
        std::vector<int> hits(n, 0);
        int total = 0;
        for (int t = 0; t < n; ++t)
            if (dec.bags[t].intersects(ch.edge_sets[c])) { hits[t] = 1; ++total; }
        std::vector<int> count = hits;
        for (auto it = order->rbegin(); it != order->rend(); ++it)
            if (dec.parent[*it] >= 0) count[dec.parent[*it]] += count[*it];
        for (int t = 0; t < n; ++t) {
            if (count[t] == 0) continue;
            int branches = 0;
            for (int k : kids[t])
                if (count[k] > 0) ++branches;
            if (hits[t] || count[t] < total || branches >= 2) out.bags[t].push_back(c);
        }
    }
    for (int t = 0; t < n; ++t)
        for (int v : dec.gamma(t))
            if (ch.hyper_id(v) >= 0) out.guards[t].push_back(ch.hyper_id(v));
    return out;
}

}  // namespace dtw1
