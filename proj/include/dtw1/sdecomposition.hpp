#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "dtw1/digraph.hpp"

namespace dtw1 {

/// Tree edge of an S-decomposition, carrying its tight separation of D.
struct SEdge {
    int a = -1;
    int b = -1;
    TightSeparation sep;

    int other(int t) const { return t == a ? b : a; }
};

/// Tree of pieces B_t glued along a laminar family of non-trivial tight
/// separations. Vertex ids are those of the input digraph.
struct SDecomposition {
    std::vector<VertexSet> bags;
    std::vector<SEdge> edges;
    std::vector<Digraph> dibraces;

    int size() const { return static_cast<int>(bags.size()); }

    std::vector<int> incident(int t) const {
        std::vector<int> out;
        for (int i = 0; i < static_cast<int>(edges.size()); ++i)
            if (edges[i].a == t || edges[i].b == t) out.push_back(i);
        return out;
    }

    /// ζ(t, e): the shore of edge e's separation on t's side.
    VertexSet zeta(int t, int e) const {
        const auto& s = edges[e].sep.base;
        return bags[t].subset_of(s.a) ? s.a : s.b;
    }
    /// The shore of edge e's separation away from t.
    VertexSet opposite(int t, int e) const {
        const auto& s = edges[e].sep.base;
        return bags[t].subset_of(s.a) ? s.b : s.a;
    }
};

/// Collapses every shore opposite to t onto its cut vertex (label-stable).
inline Digraph dibrace_of(const Digraph& d, const SDecomposition& sd, int t) {
    Digraph g = d;
    for (int e : sd.incident(t)) g = collapse_onto(g, sd.opposite(t, e), sd.edges[e].sep.cut);
    return g;
}

enum class SplitOrder { Forward, Reverse };

/// Splits pieces along canonical tight separations until every piece is
/// strongly 2-connected. Forward uses the smallest cut vertex of a piece and
/// anchors at its smallest vertex; Reverse uses the largest of each.
inline SDecomposition s_decomposition(const Digraph& d, SplitOrder order = SplitOrder::Forward) {
    if (d.order() < 2 || !is_strongly_connected(d))
        throw PreconditionError("s_decomposition: digraph must be strongly connected with at least two vertices");
    SDecomposition sd;
    sd.bags.push_back(d.vertices());
    std::vector<int> work{0};
    while (!work.empty()) {
        int t = work.back();
        work.pop_back();
        if (sd.bags[t].size() < 3) continue;
        Digraph g = dibrace_of(d, sd, t);
        std::optional<TightSeparation> local;
        std::vector<int> verts = g.vertices().to_vector();
        if (order == SplitOrder::Reverse) std::reverse(verts.begin(), verts.end());
        for (int v : verts) {
            int anchor = -1;
            if (order == SplitOrder::Reverse) anchor = (g.vertices() - VertexSet::single(v)).max();
            local = canonical_tight_separation(g, v, anchor);
            if (local) break;
        }
        if (!local) continue;
        int v = local->cut;
        VertexSet a_local = local->base.a, b_local = local->base.b;
        VertexSet a = a_local, b = b_local;
        std::vector<int> to_a, to_b;
        for (int e : sd.incident(t)) {
            int c = sd.edges[e].sep.cut;
            VertexSet w = sd.opposite(t, e);
            bool goes_a;
            if (c != v) goes_a = a_local.contains(c);
            else goes_a = (w == sd.edges[e].sep.base.a);
            (goes_a ? a : b) |= w;
            (goes_a ? to_a : to_b).push_back(e);
        }
        int t2 = sd.size();
        sd.bags[t] = a_local;
        sd.bags.push_back(b_local);
        for (int e : to_b) (sd.edges[e].a == t ? sd.edges[e].a : sd.edges[e].b) = t2;
        sd.edges.push_back({t, t2, TightSeparation{{a, b}, v}});
        work.push_back(t);
        work.push_back(t2);
    }
    for (int t = 0; t < sd.size(); ++t) sd.dibraces.push_back(dibrace_of(d, sd, t));
    return sd;
}

}  // namespace dtw1
