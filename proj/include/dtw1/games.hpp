#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dtw1/cycles.hpp"
#include "dtw1/decomposition.hpp"
#include "dtw1/digraph.hpp"
#include "dtw1/hypergraph.hpp"

namespace dtw1 {

/// Cop set X and robber component R (a strong component of D − X).
struct GamePosition {
    VertexSet cops;
    VertexSet robber;
    auto operator<=>(const GamePosition&) const = default;
};

/// Cop strategy as a table: the opening cop set and a reply for every position.
struct CopStrategy {
    VertexSet opening;
    std::map<GamePosition, VertexSet> reply;
    int budget = 0;
};

struct GameResult {
    bool cops_win = false;
    std::optional<CopStrategy> strategy;
};

inline constexpr long long kDefaultGamePositionCap = 200000;

/// Robber moves after the cops go from `from` to `to`: strong components of
/// D − to inside the strong component of D − (from ∩ to) containing `robber`.
inline std::vector<VertexSet> robber_replies(const Digraph& d, VertexSet from, VertexSet robber, VertexSet to) {
    VertexSet stay = from & to;
    VertexSet zone = strong_component_of(d, robber.min(), d.vertices() - stay);
    std::vector<VertexSet> out;
    for (auto c : strong_components_within(d, zone - to)) out.push_back(c);
    return out;
}

/// Exact solution of the cops-and-robber game with k cops by a least fixpoint
/// over positions.
inline GameResult solve_game(const Digraph& d, int k, long long position_cap = kDefaultGamePositionCap) {
    if (k < 1) throw PreconditionError("solve_game needs at least one cop");
    std::vector<VertexSet> cop_sets;
    long long positions = 0;
    for_each_subset_up_to(d.vertices(), std::min(k, d.order()), [&](VertexSet x) {
        cop_sets.push_back(x);
        positions += static_cast<long long>(strong_components_within(d, d.vertices() - x).size());
        if (positions > position_cap) throw InstanceTooLarge("game position space exceeds the configured cap");
        return false;
    });
    std::vector<GamePosition> all;
    for (auto x : cop_sets)
        for (auto r : strong_components_within(d, d.vertices() - x)) all.push_back({x, r});
    std::map<GamePosition, VertexSet> winning;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& p : all) {
            if (winning.count(p)) continue;
            for (auto to : cop_sets) {
                bool good = true;
                for (auto r : robber_replies(d, p.cops, p.robber, to))
                    if (!winning.count({to, r})) { good = false; break; }
                if (good) {
                    winning[p] = to;
                    changed = true;
                    break;
                }
            }
        }
    }
    GameResult res;
    for (auto x : cop_sets) {
        bool good = true;
        for (auto r : strong_components_within(d, d.vertices() - x))
            if (!winning.count({x, r})) { good = false; break; }
        if (good) {
            res.cops_win = true;
            res.strategy = CopStrategy{x, winning, k};
            break;
        }
    }
    return res;
}

/// Least k ≤ k_max with a winning cop strategy, or k_max + 1.
inline int dcn_exact(const Digraph& d, int k_max, long long position_cap = kDefaultGamePositionCap) {
    for (int k = 1; k <= k_max; ++k)
        if (solve_game(d, k, position_cap).cops_win) return k;
    return k_max + 1;
}

struct StrategyCheck {
    bool wins = false;
    int max_cops = 0;
    std::vector<std::string> violations;
};

/// Plays the strategy against every robber (exhaustive adversary). The
/// strategy wins iff every play ends in a capture; repeating a position means
/// the robber escapes forever.
inline StrategyCheck check_strategy(const Digraph& d, const CopStrategy& s) {
    StrategyCheck out;
    out.wins = true;
    auto note = [&](VertexSet x) {
        out.max_cops = std::max(out.max_cops, x.size());
        if (x.size() > s.budget) {
            out.wins = false;
            out.violations.push_back("cop set of size " + std::to_string(x.size()) + " exceeds the budget");
        }
    };
    std::map<GamePosition, int> state;  // 1 = on the current play, 2 = proven won
    auto play = [&](auto&& self, const GamePosition& p) -> bool {
        auto it = state.find(p);
        if (it != state.end()) return it->second == 2;
        auto move = s.reply.find(p);
        if (move == s.reply.end()) {
            out.violations.push_back("no reply for a reachable position");
            return false;
        }
        note(move->second);
        state[p] = 1;
        for (auto r : robber_replies(d, p.cops, p.robber, move->second))
            if (!self(self, GamePosition{move->second, r})) {
                if (out.violations.empty()) out.violations.push_back("robber escapes");
                return false;
            }
        state[p] = 2;
        return true;
    };
    note(s.opening);
    for (auto r : strong_components_within(d, d.vertices() - s.opening))
        if (!play(play, {s.opening, r})) { out.wins = false; break; }
    return out;
}

/// Tree-walking strategy on a directed branch decomposition: the cops occupy
/// the hitting sets of all edges at the current node and step toward the
/// branch holding the robber. Leaf edges use the leaf's own vertex.
inline CopStrategy strategy_from_dbd(const Digraph& d, const DirectedBranchDecomposition& dec) {
    if (!dec.tree.problems(d.vertices()).empty() || dec.hitting_sets.size() != dec.tree.edges.size())
        throw PreconditionError("strategy_from_dbd: invalid branch decomposition");
    if (!is_strongly_connected(d) || d.order() < 2)
        throw PreconditionError("strategy_from_dbd: digraph must be strongly connected with at least two vertices");
    int width = 0;
    for (auto s : dec.hitting_sets) width = std::max(width, s.size());
    CopStrategy strat;
    strat.budget = 3 * std::max(width, 1);
    if (d.order() == 2) {
        strat.opening = d.vertices();
        return strat;
    }
    const auto& tree = dec.tree;
    auto adj = tree.adjacency();
    int m = static_cast<int>(tree.edges.size());
    std::vector<VertexSet> sets = dec.hitting_sets;
    for (int i = 0; i < m; ++i) {
        auto [a, b] = tree.edges[i];
        if (tree.item[a] >= 0) sets[i] = VertexSet::single(tree.item[a]);
        if (tree.item[b] >= 0) sets[i] = VertexSet::single(tree.item[b]);
    }
    auto cops_at = [&](int t) {
        VertexSet x;
        for (int i = 0; i < m; ++i)
            if (tree.edges[i].first == t || tree.edges[i].second == t) x |= sets[i];
        return x;
    };
    // A position (X, R) is read as: cops on the edges at some node t with
    // cops_at(t) = X, robber inside the branch of a neighbour u. Among all such
    // readings the one with the smallest branch is used, so every reply moves
    // into a strictly smaller branch and no play can repeat.
    auto reading = [&](const GamePosition& p) {
        int best_u = -1, best_size = 0;
        for (int i = 0; i < m; ++i) {
            for (int end = 0; end < 2; ++end) {
                int t = end ? tree.edges[i].second : tree.edges[i].first;
                int u = end ? tree.edges[i].first : tree.edges[i].second;
                if (tree.item[u] >= 0 || cops_at(t) != p.cops) continue;
                VertexSet branch = tree.side(i, u);
                if (!p.robber.subset_of(branch)) continue;
                if (best_u < 0 || branch.size() < best_size) best_u = u, best_size = branch.size();
            }
        }
        return best_u;
    };
    int leaf = -1;
    for (int t = 0; t < tree.size() && leaf < 0; ++t)
        if (tree.item[t] >= 0) leaf = t;
    int start = adj[leaf][0];
    strat.opening = cops_at(start);
    std::vector<GamePosition> work;
    for (auto r : strong_components_within(d, d.vertices() - strat.opening)) work.push_back({strat.opening, r});
    while (!work.empty()) {
        GamePosition p = work.back();
        work.pop_back();
        if (strat.reply.count(p)) continue;
        int u = reading(p);
        if (u < 0) continue;  // not reachable against a legal robber
        VertexSet next = cops_at(u);
        strat.reply.emplace(p, next);
        for (auto r : robber_replies(d, p.cops, p.robber, next)) work.push_back({next, r});
    }
    return strat;
}

/// Haven of a given order: h(X) for every X with |X| < order.
struct Haven {
    int order = 0;
    std::map<std::uint64_t, VertexSet> assignment;
    VertexSet at(VertexSet x) const {
        auto it = assignment.find(x.bits());
        return it == assignment.end() ? VertexSet{} : it->second;
    }
};

inline bool verify_haven(const Digraph& d, const Haven& h) {
    if (h.order < 1) return false;
    bool ok = true;
    for_each_subset_up_to(d.vertices(), h.order - 1, [&](VertexSet x) {
        VertexSet r = h.at(x);
        if (r.empty() || r.intersects(x) || strong_component_of(d, r.min(), d.vertices() - x) != r) {
            ok = false;
            return true;
        }
        // Monotone against every one-smaller subset suffices by transitivity.
        for (int v : x)
            if (!r.subset_of(h.at(x - VertexSet::single(v)))) {
                ok = false;
                return true;
            }
        return false;
    });
    return ok;
}

/// Order-3 haven from a closed chain of cycles. h(S) is the strong component
/// of D − S holding the first chain cycle S misses; when S meets every chain
/// cycle it is the component of an anchor vertex lying on a cycle missed by
/// each single vertex of S.
inline Haven haven_from_closed_chain(const Digraph& d, const CycleHypergraph& ch, const CycleChain& chain) {
    if (!chain.closed || !is_closed_chain(ch, chain.cycles))
        throw PreconditionError("haven_from_closed_chain: not a closed chain of at least three cycles");
    std::vector<VertexSet> cs;
    for (int i : chain.cycles) cs.push_back(ch.edge_sets[i]);
    VertexSet all;
    for (auto c : cs) all |= c;
    auto missed_by = [&](VertexSet s) {
        VertexSet u;
        for (auto c : cs)
            if (!c.intersects(s)) u |= c;
        return u;
    };
    Haven h;
    h.order = 3;
    h.assignment[0] = strong_component_of(d, all.min(), d.vertices());
    bool failed = false;
    for_each_subset_of_size(d.vertices(), 1, [&](VertexSet s) {
        auto free = missed_by(s);
        h.assignment[s.bits()] = strong_component_of(d, free.min(), d.vertices() - s);
        return false;
    });
    for_each_subset_of_size(d.vertices(), 2, [&](VertexSet s) {
        int first = -1;
        for (auto c : cs)
            if (!c.intersects(s)) { first = c.min(); break; }
        if (first < 0) {
            int x = s.min(), y = s.max();
            VertexSet anchors =
                (missed_by(VertexSet::single(x)) & missed_by(VertexSet::single(y))) - s;
            if (anchors.empty()) {
                failed = true;
                return true;
            }
            first = anchors.min();
        }
        h.assignment[s.bits()] = strong_component_of(d, first, d.vertices() - s);
        return false;
    });
    if (failed) throw std::logic_error("haven_from_closed_chain: no anchor vertex available");
    return h;
}

/// Every S with |S| ≤ k leaves a strong component holding a strict majority of W.
inline bool is_k_linked(const Digraph& d, VertexSet w, int k) {
    return !for_each_subset_up_to(d.vertices(), k, [&](VertexSet s) {
        for (auto c : strong_components_within(d, d.vertices() - s))
            if (2 * (c & w).size() > w.size()) return false;
        return true;
    });
}

/// Connected components (vertex sets, sorted) of h minus the vertex set `removed`.
inline std::vector<std::vector<int>> hypergraph_components(const Hypergraph& h, const std::vector<int>& removed) {
    int n = h.num_vertices();
    std::vector<bool> gone(n, false);
    for (int v : removed) gone[v] = true;
    std::vector<int> parent(n);
    for (int v = 0; v < n; ++v) parent[v] = v;
    auto find = [&](int x) { while (parent[x] != x) x = parent[x] = parent[parent[x]]; return x; };
    for (const auto& e : h.edges()) {
        int first = -1;
        for (int v : e) {
            if (gone[v]) continue;
            if (first < 0) first = v;
            else parent[find(v)] = find(first);
        }
    }
    std::map<int, std::vector<int>> groups;
    for (int v = 0; v < n; ++v)
        if (!gone[v]) groups[find(v)].push_back(v);
    std::vector<std::vector<int>> out;
    for (auto& [r, g] : groups) out.push_back(g);
    std::sort(out.begin(), out.end());
    return out;
}

/// Every S ⊆ E(h) with |S| < k leaves a component met by more than half of the edges in W.
inline bool is_k_hyperlinked(const Hypergraph& h, const std::vector<int>& w, int k) {
    if (h.num_edges() > kMaxVertices) throw InstanceTooLarge("is_k_hyperlinked supports at most 64 edges");
    if (k < 1) return true;
    return !for_each_subset_up_to(VertexSet::range(h.num_edges()), k - 1, [&](VertexSet s) {
        for (const auto& comp : hypergraph_components(h, edge_union(h, s.to_vector()))) {
            int meeting = 0;
            for (int e : w)
                if (detail::sorted_intersects(h.edge(e), comp)) ++meeting;
            if (2 * meeting > static_cast<int>(w.size())) return false;
        }
        return true;
    });
}

}  // namespace dtw1
