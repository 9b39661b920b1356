#pragma once

#include <set>
#include <utility>
#include <vector>

#include "dtw1/digraph.hpp"
#include "dtw1/error.hpp"
#include "dtw1/minor.hpp"

namespace dtw1 {

namespace detail {

/// True if g has a bicycle or A4 as a subgraph (not necessarily induced).
inline bool has_forbidden_subgraph(const Digraph& g) {
    // Digons form an undirected graph; a bicycle subgraph is a cycle in it.
    std::vector<int> parent(kMaxVertices);
    for (int v : g.vertices()) parent[v] = v;
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (auto e : g.edges()) {
        if (e.tail > e.head || !g.has_edge(e.head, e.tail)) continue;
        int a = find(e.tail), b = find(e.head);
        if (a == b) return true;
        parent[a] = b;
    }
    bool found = false;
    for_each_subset_of_size(g.vertices(), 4, [&](VertexSet s) {
        found = match_a4(g.induced(s)).has_value();
        return found;
    });
    return found;
}

}  // namespace detail

/// Exhaustive search for a bicycle or A4 butterfly minor. Every butterfly
/// minor is a subgraph of some contraction sequence in which each contracted
/// edge was first made contractible by deleting the competing out-edges of its
/// tail or in-edges of its head, so only those moves are explored.
inline bool has_forbidden_minor(const Digraph& d, long long state_cap = 2'000'000) {
    std::set<std::pair<int, std::vector<Edge>>> seen;
    std::vector<Digraph> stack{densify(d, {}).graph};
    while (!stack.empty()) {
        Digraph g = std::move(stack.back());
        stack.pop_back();
        if (!seen.insert({g.order(), g.edges()}).second) continue;
        if (static_cast<long long>(seen.size()) > state_cap) throw InstanceTooLarge("has_forbidden_minor: state cap exceeded");
        if (detail::has_forbidden_subgraph(g)) return true;
        if (g.order() <= 3) continue;
        for (auto e : g.edges()) {
            for (int side = 0; side < 2; ++side) {
                Digraph h = g;
                if (side == 0) {
                    for (int w : g.out(e.tail))
                        if (w != e.head) h.remove_edge(e.tail, w);
                } else {
                    for (int w : g.in(e.head))
                        if (w != e.tail) h.remove_edge(w, e.head);
                }
                if (side == 1 && g.out(e.tail).size() == 1) continue;  // same graph as side 0
                stack.push_back(butterfly_contract(h, e).graph);
            }
        }
    }
    return false;
}

}  // namespace dtw1
