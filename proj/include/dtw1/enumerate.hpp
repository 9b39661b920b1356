#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "dtw1/digraph.hpp"
#include "dtw1/error.hpp"

namespace dtw1 {

/// Calls f on every labeled digraph on vertices 0..n-1 (2^(n(n-1)) of them).
template <class F>
void for_each_labeled_digraph(int n, F&& f) {
    if (n > 5) throw InstanceTooLarge("for_each_labeled_digraph: n > 5");
    std::vector<Edge> pairs;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b) pairs.push_back({a, b});
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << pairs.size()); ++m) {
        Digraph d(n);
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (m >> i & 1) d.add_edge(pairs[i].tail, pairs[i].head);
        f(d);
    }
}

namespace detail {

inline std::uint64_t adjacency_code(int n, const std::vector<std::uint64_t>& rows, const std::vector<int>& perm) {
    std::uint64_t code = 0;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (rows[a] >> b & 1) code |= std::uint64_t{1} << (perm[a] * n + perm[b]);
    return code;
}

/// Smallest adjacency code over all relabelings of vertices 0..n-1.
inline std::uint64_t canonical_code(int n, const std::vector<std::uint64_t>& rows) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do best = std::min(best, adjacency_code(n, rows, perm));
    while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

inline Digraph from_code(int n, std::uint64_t code) {
    Digraph d(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (code >> (a * n + b) & 1) d.add_edge(a, b);
    return d;
}

}  // namespace detail

/// One representative per isomorphism class of digraphs on n ≤ 6 vertices,
/// built by extending the classes on n − 1 vertices with a new vertex.
inline std::vector<Digraph> digraph_isomorphism_classes(int n) {
    if (n < 1 || n > 6) throw InstanceTooLarge("digraph_isomorphism_classes: need 1 ≤ n ≤ 6");
    if (n == 1) return {Digraph(1)};
    std::set<std::uint64_t> codes;
    for (const auto& base : digraph_isomorphism_classes(n - 1)) {
        std::vector<std::uint64_t> rows(n, 0);
        for (auto e : base.edges()) rows[e.tail] |= std::uint64_t{1} << e.head;
        int last = n - 1;
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << (2 * last)); ++m) {
            auto r = rows;
            for (int v = 0; v < last; ++v) {
                if (m >> v & 1) r[v] |= std::uint64_t{1} << last;
                if (m >> (last + v) & 1) r[last] |= std::uint64_t{1} << v;
            }
            codes.insert(detail::canonical_code(n, r));
        }
    }
    std::vector<Digraph> out;
    for (auto c : codes) out.push_back(detail::from_code(n, c));
    return out;
}

}  // namespace dtw1
