#pragma once

#include <random>
#include <vector>

#include "dtw1/digraph.hpp"
#include "dtw1/error.hpp"
#include "dtw1/hypergraph.hpp"

namespace dtw1 {

using Rng = std::mt19937_64;

inline int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// Each ordered pair becomes an edge with probability p.
inline Digraph random_digraph(int n, double p, Rng& rng) {
    std::bernoulli_distribution coin(p);
    Digraph d(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b && coin(rng)) d.add_edge(a, b);
    return d;
}

/// Rejection sampling of random_digraph until strongly connected.
inline Digraph random_strong_digraph(int n, double p, Rng& rng, int max_tries = 100000) {
    for (int i = 0; i < max_tries; ++i) {
        Digraph d = random_digraph(n, p, rng);
        if (is_strongly_connected(d)) return d;
    }
    throw PreconditionError("random_strong_digraph: no strongly connected sample");
}

/// Random hypergraph with nonempty edges in which every vertex is covered.
inline Hypergraph random_hypergraph(int vertices, int edges, Rng& rng, double p = 0.4) {
    if (vertices < 1 || edges < 1) throw PreconditionError("random_hypergraph: need at least one vertex and one edge");
    std::bernoulli_distribution coin(p);
    std::vector<std::vector<int>> es(edges);
    for (auto& e : es) {
        for (int v = 0; v < vertices; ++v)
            if (coin(rng)) e.push_back(v);
        if (e.empty()) e.push_back(uniform_int(rng, 0, vertices - 1));
    }
    for (int v = 0; v < vertices; ++v) {
        bool covered = false;
        for (const auto& e : es)
            for (int x : e) covered = covered || x == v;
        if (!covered) {
            auto& e = es[uniform_int(rng, 0, edges - 1)];
            e.push_back(v);
            std::sort(e.begin(), e.end());
        }
    }
    return Hypergraph(vertices, es);
}

/// Bidirected random recursive tree: vertex i > 0 attaches to a uniform earlier vertex.
inline Digraph random_bidirected_tree(int n, Rng& rng) {
    Digraph d(n);
    for (int v = 1; v < n; ++v) {
        int u = uniform_int(rng, 0, v - 1);
        d.add_edge(u, v);
        d.add_edge(v, u);
    }
    return d;
}

/// Replaces `count` random edges u→v by paths u→w→v through new vertices.
inline Digraph random_subdivision(const Digraph& d, int count, Rng& rng) {
    Digraph g = d;
    for (int i = 0; i < count; ++i) {
        auto es = g.edges();
        if (es.empty() || g.id_bound() >= kMaxVertices) break;
        Edge e = es[uniform_int(rng, 0, static_cast<int>(es.size()) - 1)];
        int w = g.id_bound();
        g.add_vertex(w);
        g.remove_edge(e.tail, e.head);
        g.add_edge(e.tail, w);
        g.add_edge(w, e.head);
    }
    return g;
}

}  // namespace dtw1
