#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dtw1/error.hpp"
#include "dtw1/hypergraph.hpp"
#include "dtw1/vertex_set.hpp"

namespace dtw1 {

/// Rooted tree with vertex bags and hyperedge guards. Serves both the
/// generalised variant (orientation irrelevant) and the hypertree variant.
struct HypertreeDecomposition {
    std::vector<int> parent;                 // -1 at the root
    std::vector<std::vector<int>> bags;      // sorted hypergraph vertex ids
    std::vector<std::vector<int>> guards;    // sorted hyperedge ids

    int size() const { return static_cast<int>(parent.size()); }
    int width() const {
        int w = 0;
        for (const auto& g : guards) w = std::max(w, static_cast<int>(g.size()));
        return w;
    }
    int add_node(int par, std::vector<int> bag, std::vector<int> guard) {
        parent.push_back(par);
        bags.push_back(std::move(bag));
        guards.push_back(std::move(guard));
        return size() - 1;
    }
};

struct ValidationReport {
    bool valid = true;
    int width = 0;
    std::vector<std::string> violations;

    void fail(std::string msg) {
        valid = false;
        violations.push_back(std::move(msg));
    }
};

namespace detail {

/// Checks that `parent` describes a single rooted tree; returns a root-first order.
inline std::optional<std::vector<int>> tree_order(const std::vector<int>& parent) {
    int n = static_cast<int>(parent.size());
    std::vector<std::vector<int>> children(n);
    int root = -1;
    for (int t = 0; t < n; ++t) {
        if (parent[t] == -1) {
            if (root != -1) return std::nullopt;
            root = t;
        } else if (parent[t] < 0 || parent[t] >= n) {
            return std::nullopt;
        } else {
            children[parent[t]].push_back(t);
        }
    }
    if (n == 0) return std::vector<int>{};
    if (root == -1) return std::nullopt;
    std::vector<int> order{root};
    for (std::size_t i = 0; i < order.size(); ++i)
        for (int c : children[order[i]]) order.push_back(c);
    if (static_cast<int>(order.size()) != n) return std::nullopt;
    return order;
}

}  // namespace detail

/// Generalised hypertree decomposition check; with `hypertree` also the descendant condition.
inline ValidationReport validate_hypertree_decomposition(const Hypergraph& h, const HypertreeDecomposition& dec,
                                                         bool hypertree) {
    ValidationReport rep;
    int n = dec.size();
    if (static_cast<int>(dec.bags.size()) != n || static_cast<int>(dec.guards.size()) != n) {
        rep.fail("node arrays have different lengths");
        return rep;
    }
    auto order = detail::tree_order(dec.parent);
    if (!order) {
        rep.fail("parent array is not a rooted tree");
        return rep;
    }
    if (n == 0) {
        if (h.num_vertices() > 0) rep.fail("empty decomposition of a non-empty hypergraph");
        return rep;
    }
    auto in_bag = [&](int t, int v) { return std::binary_search(dec.bags[t].begin(), dec.bags[t].end(), v); };
    for (int t = 0; t < n; ++t) {
        for (int v : dec.bags[t])
            if (v < 0 || v >= h.num_vertices()) rep.fail("bag of node " + std::to_string(t) + " has unknown vertex");
        for (int e : dec.guards[t])
            if (e < 0 || e >= h.num_edges()) rep.fail("guard of node " + std::to_string(t) + " has unknown edge");
    }
    if (!rep.valid) return rep;
    for (int t = 0; t < n; ++t) {
        auto cover = edge_union(h, dec.guards[t]);
        if (!std::includes(cover.begin(), cover.end(), dec.bags[t].begin(), dec.bags[t].end()))
            rep.fail("bag of node " + std::to_string(t) + " not covered by its guards");
    }
    for (int i = 0; i < h.num_edges(); ++i) {
        bool found = false;
        for (int t = 0; t < n && !found; ++t)
            found = std::includes(dec.bags[t].begin(), dec.bags[t].end(), h.edge(i).begin(), h.edge(i).end());
        if (!found) rep.fail("hyperedge " + std::to_string(i) + " lies in no bag");
    }
    for (int v = 0; v < h.num_vertices(); ++v) {
        // Nodes containing v must be connected: exactly one of them has a parent without v.
        int tops = 0;
        for (int t = 0; t < n; ++t)
            if (in_bag(t, v) && (dec.parent[t] == -1 || !in_bag(dec.parent[t], v))) ++tops;
        if (tops != 1) rep.fail("vertex " + std::to_string(v) + " occurs in a disconnected (or empty) set of bags");
    }
    if (hypertree) {
        std::vector<std::vector<int>> below(n);
        for (auto it = order->rbegin(); it != order->rend(); ++it) {
            int t = *it;
            below[t].insert(below[t].end(), dec.bags[t].begin(), dec.bags[t].end());
            std::sort(below[t].begin(), below[t].end());
            below[t].erase(std::unique(below[t].begin(), below[t].end()), below[t].end());
            if (dec.parent[t] >= 0)
                below[dec.parent[t]].insert(below[dec.parent[t]].end(), below[t].begin(), below[t].end());
        }
        for (int t = 0; t < n; ++t) {
            auto cover = edge_union(h, dec.guards[t]);
            for (int v : detail::intersect_sorted(cover, below[t]))
                if (!in_bag(t, v))
                    rep.fail("descendant condition fails at node " + std::to_string(t) + " for vertex " +
                             std::to_string(v));
        }
    }
    rep.width = dec.width();
    return rep;
}

inline ValidationReport validate_ghd(const Hypergraph& h, const HypertreeDecomposition& dec) {
    return validate_hypertree_decomposition(h, dec, false);
}

inline ValidationReport validate_hd(const Hypergraph& h, const HypertreeDecomposition& dec) {
    return validate_hypertree_decomposition(h, dec, true);
}

inline constexpr long long kDefaultSeparatorBudget = 2'000'000;

namespace detail {

class DetKDecomp {
public:
    DetKDecomp(const Hypergraph& h, int k) : h_(h), k_(k) {
        for (const auto& e : h.edges()) edges_.push_back(VertexSet::from_vector(e));
    }

    std::optional<HypertreeDecomposition> run() {
        HypertreeDecomposition dec;
        if (h_.num_vertices() == 0) return dec;
        if (!solve(VertexSet::range(h_.num_vertices()), -1, dec)) return std::nullopt;
        return dec;
    }

private:
    VertexSet neighbourhood(VertexSet comp) const {
        VertexSet u;
        for (auto e : edges_)
            if (e.intersects(comp)) u |= e;
        return u - comp;
    }

    std::vector<VertexSet> components(VertexSet rest) const {
        std::vector<VertexSet> out;
        while (!rest.empty()) {
            VertexSet c = VertexSet::single(rest.min()), frontier = c;
            while (!frontier.empty()) {
                VertexSet next;
                for (auto e : edges_)
                    if (e.intersects(frontier)) next |= e;
                next = (next & rest) - c;
                c |= next;
                frontier = next;
            }
            out.push_back(c);
            rest -= c;
        }
        return out;
    }

    bool solve(VertexSet comp, int par, HypertreeDecomposition& dec) {
        if (failed_.count(comp.bits())) return false;
        VertexSet conn = neighbourhood(comp);
        VertexSet scope = comp | conn;
        std::vector<int> relevant;
        for (int i = 0; i < static_cast<int>(edges_.size()); ++i)
            if (edges_[i].intersects(scope)) relevant.push_back(i);
        int r = static_cast<int>(relevant.size());
        std::vector<int> pick;
        bool ok = false;
        auto attempt = [&](auto&& self, int from, VertexSet covered) -> bool {
            if (!pick.empty() && conn.subset_of(covered) && covered.intersects(comp)) {
                VertexSet chi = covered & scope;
                auto children = components(comp - chi);
                int mark = dec.size();
                std::vector<int> guard;
                for (int i : pick) guard.push_back(relevant[i]);
                int node = dec.add_node(par, chi.to_vector(), guard);
                bool all = true;
                for (auto c : children)
                    if (!solve(c, node, dec)) { all = false; break; }
                if (all) return true;
                dec.parent.resize(mark);
                dec.bags.resize(mark);
                dec.guards.resize(mark);
            }
            if (static_cast<int>(pick.size()) == k_) return false;
            for (int i = from; i < r; ++i) {
                if (++spent_ > kDefaultSeparatorBudget)
                    throw InstanceTooLarge("hypertree width search exceeded its separator budget");
                pick.push_back(i);
                bool done = self(self, i + 1, covered | edges_[relevant[i]]);
                pick.pop_back();
                if (done) return true;
            }
            return false;
        };
        ok = attempt(attempt, 0, VertexSet{});
        if (!ok) failed_.insert(comp.bits());
        return ok;
    }

    const Hypergraph& h_;
    int k_;
    std::vector<VertexSet> edges_;
    std::set<std::uint64_t> failed_;
    long long spent_ = 0;
};

}  // namespace detail

/// Exact hypertree width up to k_max (det-k-decomp with failure memo); the
/// decomposition found is validated before being returned.
inline std::optional<std::pair<int, HypertreeDecomposition>> exact_hw(const Hypergraph& h, int k_max) {
    if (h.num_vertices() > kMaxVertices) throw InstanceTooLarge("exact_hw supports at most 64 vertices");
    if (h.num_vertices() == 0) return std::make_pair(0, HypertreeDecomposition{});
    for (int k = 1; k <= k_max; ++k) {
        detail::DetKDecomp search(h, k);
        if (auto dec = search.run()) {
            auto rep = validate_hd(h, *dec);
            if (!rep.valid) throw std::logic_error("exact_hw produced an invalid decomposition: " + rep.violations[0]);
            return std::make_pair(rep.width, std::move(*dec));
        }
    }
    return std::nullopt;
}

}  // namespace dtw1
