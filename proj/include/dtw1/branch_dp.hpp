#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dtw1/error.hpp"
#include "dtw1/vertex_set.hpp"

namespace dtw1 {

/// Unrooted tree of maximum degree three whose leaves carry distinct items.
struct SubcubicTree {
    std::vector<int> item;                       // per node: item id, or -1 for inner nodes
    std::vector<std::pair<int, int>> edges;

    int size() const { return static_cast<int>(item.size()); }
    int add_node(int it = -1) {
        item.push_back(it);
        return size() - 1;
    }
    void add_edge(int a, int b) { edges.emplace_back(a, b); }

    std::vector<std::vector<int>> adjacency() const {
        std::vector<std::vector<int>> adj(size());
        for (auto [a, b] : edges) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
        return adj;
    }

    /// Items in the component of T − edges[i] containing `toward` (an endpoint of edge i).
    VertexSet side(int i, int toward) const {
        auto adj = adjacency();
        auto [a, b] = edges[i];
        int from = toward == a ? b : a;
        VertexSet out;
        std::vector<int> stack{toward};
        std::vector<bool> seen(size(), false);
        seen[toward] = seen[from] = true;
        while (!stack.empty()) {
            int t = stack.back();
            stack.pop_back();
            if (item[t] >= 0) out.insert(item[t]);
            for (int u : adj[t])
                if (!seen[u]) { seen[u] = true; stack.push_back(u); }
        }
        return out;
    }
    VertexSet side(int i) const { return side(i, edges[i].second); }

    /// Structural problems, empty when the tree is a valid decomposition tree over `items`.
    std::vector<std::string> problems(VertexSet items) const {
        std::vector<std::string> out;
        int n = size();
        if (n == 0) {
            if (!items.empty()) out.push_back("empty tree");
            return out;
        }
        if (static_cast<int>(edges.size()) != n - 1) out.push_back("edge count is not |nodes| - 1");
        auto adj = adjacency();
        std::vector<bool> seen(n, false);
        std::vector<int> stack{0};
        seen[0] = true;
        int reached = 1;
        while (!stack.empty()) {
            int t = stack.back();
            stack.pop_back();
            for (int u : adj[t])
                if (!seen[u]) { seen[u] = true; ++reached; stack.push_back(u); }
        }
        if (reached != n) out.push_back("tree is disconnected");
        VertexSet leaves;
        for (int t = 0; t < n; ++t) {
            int deg = static_cast<int>(adj[t].size());
            if (deg > 3) out.push_back("node " + std::to_string(t) + " has degree above three");
            if (deg <= 1) {
                if (item[t] < 0) out.push_back("leaf " + std::to_string(t) + " carries no item");
                else if (leaves.contains(item[t])) out.push_back("item " + std::to_string(item[t]) + " on two leaves");
                else leaves.insert(item[t]);
            } else if (item[t] >= 0) {
                out.push_back("inner node " + std::to_string(t) + " carries an item");
            }
        }
        if (leaves != items) out.push_back("leaf items do not match the ground set");
        return out;
    }
};

/// Optimal branch decomposition for a symmetric connectivity function `thickness`
/// (VertexSet of items -> int), by dynamic programming over subsets: the tree is
/// rooted at the leaf of the least item and every subtree is one subset.
template <class F>
std::pair<int, SubcubicTree> optimal_branch_decomposition(VertexSet items, F&& thickness) {
    SubcubicTree tree;
    int count = items.size();
    if (count == 0) return {0, tree};
    if (count == 1) {
        tree.add_node(items.min());
        return {0, tree};
    }
    if (count > 16) throw InstanceTooLarge("branch decomposition DP supports at most 16 leaves");
    std::unordered_map<std::uint64_t, int> f_memo;
    auto f = [&](VertexSet s) {
        auto it = f_memo.find(s.bits());
        if (it != f_memo.end()) return it->second;
        int v = thickness(s);
        f_memo.emplace(s.bits(), v);
        return v;
    };
    std::unordered_map<std::uint64_t, std::pair<int, std::uint64_t>> g_memo;  // value, best left part
    auto g = [&](auto&& self, VertexSet s) -> int {
        auto it = g_memo.find(s.bits());
        if (it != g_memo.end()) return it->second.first;
        int own = f(s);
        if (s.size() == 1) {
            g_memo[s.bits()] = {own, 0};
            return own;
        }
        // Splits A ∪ B = s with the least element in A, A and B non-empty.
        int low = s.min();
        VertexSet rest = s - VertexSet::single(low);
        int best = -1;
        std::uint64_t best_a = 0;
        std::uint64_t r = rest.bits();
        for (std::uint64_t sub = r;; sub = (sub - 1) & r) {
            VertexSet a = VertexSet(sub) | VertexSet::single(low);
            VertexSet b = s - a;
            if (!b.empty()) {
                int w = std::max(self(self, a), self(self, b));
                if (best < 0 || w < best || (w == best && a.bits() < best_a)) {
                    best = w;
                    best_a = a.bits();
                }
            }
            if (sub == 0) break;
        }
        int val = std::max(own, best);
        g_memo[s.bits()] = {val, best_a};
        return val;
    };
    int root_item = items.min();
    VertexSet rest = items - VertexSet::single(root_item);
    int width = g(g, rest);
    int root = tree.add_node(root_item);
    auto build = [&](auto&& self, VertexSet s) -> int {
        if (s.size() == 1) return tree.add_node(s.min());
        int node = tree.add_node();
        VertexSet a(g_memo.at(s.bits()).second);
        tree.add_edge(node, self(self, a));
        tree.add_edge(node, self(self, s - a));
        return node;
    };
    tree.add_edge(root, build(build, rest));
    return {width, tree};
}

/// Width of a given tree under `thickness`: the maximum over its edges.
template <class F>
int branch_width_of(const SubcubicTree& tree, F&& thickness) {
    int w = 0;
    for (int i = 0; i < static_cast<int>(tree.edges.size()); ++i) w = std::max(w, thickness(tree.side(i)));
    return w;
}

}  // namespace dtw1
