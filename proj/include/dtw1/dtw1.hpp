#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dtw1/cycles.hpp"
#include "dtw1/decomposition.hpp"
#include "dtw1/games.hpp"
#include "dtw1/hypergraph.hpp"
#include "dtw1/minor.hpp"
#include "dtw1/sdecomposition.hpp"

namespace dtw1 {

enum class Verdict { Yes, No };

struct Dtw1Certificate {
    Verdict verdict = Verdict::Yes;
    std::optional<DirectedTreeDecomposition> decomposition;  // YES
    std::optional<MinorWitness> witness;                      // NO
    std::optional<Haven> haven;                               // NO
};

/// Width-1 decomposition read off an S-decomposition whose pieces all have two
/// vertices: rooted at a leaf piece, each piece keeps its vertices except the
/// cut vertex toward its parent, which becomes the guard.
inline DirectedTreeDecomposition decomposition_from_pieces(const SDecomposition& sd) {
    DirectedTreeDecomposition dec;
    int root = 0;
    for (int t = 0; t < sd.size(); ++t)
        if (sd.incident(t).size() <= 1) { root = t; break; }
    std::vector<int> node(sd.size(), -1);
    node[root] = dec.add_node(-1, sd.bags[root]);
    std::vector<int> queue{root};
    for (std::size_t i = 0; i < queue.size(); ++i) {
        int t = queue[i];
        for (int e : sd.incident(t)) {
            int u = sd.edges[e].other(t);
            if (node[u] >= 0) continue;
            int c = sd.edges[e].sep.cut;
            node[u] = dec.add_node(node[t], sd.bags[u] - VertexSet::single(c), VertexSet::single(c));
            queue.push_back(u);
        }
    }
    return dec;
}

inline bool all_pieces_small(const SDecomposition& sd) {
    for (auto b : sd.bags)
        if (b.size() > 2) return false;
    return true;
}

/// Decides dtw(D) = 1 for a strongly connected digraph on at least two vertices.
inline Dtw1Certificate recognize_dtw1(const Digraph& d, std::size_t cap = kDefaultCycleCap) {
    if (d.order() < 2 || !is_strongly_connected(d))
        throw PreconditionError("recognize_dtw1: digraph must be strongly connected with at least two vertices");
    auto sd = s_decomposition(d);
    Dtw1Certificate cert;
    if (all_pieces_small(sd)) {
        cert.verdict = Verdict::Yes;
        cert.decomposition = decomposition_from_pieces(sd);
        return cert;
    }
    cert.verdict = Verdict::No;
    cert.witness = extract_minor_witness(d);
    auto ch = cycle_hypergraph(d, cap);
    auto chain = find_closed_chain(ch);
    if (!chain) throw std::logic_error("recognize_dtw1: minor found but no closed chain of cycles");
    cert.haven = haven_from_closed_chain(d, ch, *chain);
    return cert;
}

struct CertificateCheck {
    bool ok = false;
    std::string error;
};

inline CertificateCheck verify_certificate(const Digraph& d, const Dtw1Certificate& cert) {
    CertificateCheck c;
    if (cert.verdict == Verdict::Yes) {
        if (!cert.decomposition) { c.error = "YES certificate without decomposition"; return c; }
        auto rep = validate_dtd(d, *cert.decomposition);
        if (!rep.valid) { c.error = rep.violations.front(); return c; }
        if (rep.width > 1) { c.error = "decomposition has width " + std::to_string(rep.width); return c; }
        c.ok = true;
        return c;
    }
    if (!cert.witness || !cert.haven) { c.error = "NO certificate needs a witness and a haven"; return c; }
    auto wc = verify_minor_witness(d, *cert.witness);
    if (!wc.ok) { c.error = wc.error; return c; }
    if (cert.haven->order != 3 || !verify_haven(d, *cert.haven)) { c.error = "haven of order 3 does not verify"; return c; }
    c.ok = true;
    return c;
}

struct HypertreeRoute {
    bool is_hypertree = false;
    std::optional<JoinTreeWitness> witness;
    std::optional<DirectedTreeDecomposition> decomposition;
};

/// Decides whether C(D) is a hypertree; if so, turns its host tree (rooted at
/// a leaf) into a decomposition with bag {t} and guard {parent} per node.
inline HypertreeRoute hypertree_route(const Digraph& d, std::size_t cap = kDefaultCycleCap) {
    if (!is_strongly_connected(d)) throw PreconditionError("hypertree_route: digraph must be strongly connected");
    auto ch = cycle_hypergraph(d, cap);
    HypertreeRoute r;
    r.witness = hypertree_witness(ch.hypergraph);
    r.is_hypertree = r.witness.has_value();
    if (!r.is_hypertree || ch.hypergraph.num_vertices() == 0) return r;
    const auto& origin = ch.hypergraph.vertex_origin;
    int n = ch.hypergraph.num_vertices();
    std::vector<std::vector<int>> adj(n);
    for (auto [a, b] : r.witness->tree_edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    int root = 0;
    for (int v = 0; v < n; ++v)
        if (adj[v].size() <= 1) { root = v; break; }
    DirectedTreeDecomposition dec;
    std::vector<int> node(n, -1);
    node[root] = dec.add_node(-1, VertexSet::single(origin[root]));
    std::vector<int> queue{root};
    for (std::size_t i = 0; i < queue.size(); ++i) {
        int t = queue[i];
        for (int u : adj[t]) {
            if (node[u] >= 0) continue;
            node[u] = dec.add_node(node[t], VertexSet::single(origin[u]), VertexSet::single(origin[t]));
            queue.push_back(u);
        }
    }
    r.decomposition = dec;
    return r;
}

/// For a YES instance, confirms that C(D) is a hypertree.
inline bool dtw1_implies_hypertree_check(const Digraph& d, const Dtw1Certificate& cert,
                                         std::size_t cap = kDefaultCycleCap) {
    if (cert.verdict != Verdict::Yes) throw PreconditionError("dtw1_implies_hypertree_check: certificate is not YES");
    return hypertree_witness(cycle_hypergraph(d, cap).hypergraph).has_value();
}

}  // namespace dtw1
