#include <gtest/gtest.h>

#include "dtw1/cycles.hpp"
#include "dtw1/minor.hpp"
#include "dtw1/random.hpp"
#include "oracles.hpp"

using namespace dtw1;

namespace {

Digraph directed_cycle(int n) {
    Digraph d(n);
    for (int i = 0; i < n; ++i) d.add_edge(i, (i + 1) % n);
    return d;
}

const Digraph kBicycle3 = bidirect(3, {{0, 1}, {1, 2}, {2, 0}});

VertexSet set_of(std::initializer_list<int> xs) { return VertexSet::from_vector(std::vector<int>(xs)); }

int index_of(const CycleHypergraph& ch, std::vector<int> seq) {
    for (int i = 0; i < ch.num_edges(); ++i)
        if (ch.cycles[i].sequence == seq) return i;
    return -1;
}

}  // namespace

TEST(Cycles, SmallExamples) {
    auto c3 = enumerate_cycles(directed_cycle(3));
    ASSERT_EQ(c3.size(), 1u);
    EXPECT_EQ(c3[0].sequence, (std::vector<int>{0, 1, 2}));
    auto digon = enumerate_cycles(bidirect(2, {{0, 1}}));
    ASSERT_EQ(digon.size(), 1u);
    EXPECT_EQ(digon[0].sequence, (std::vector<int>{0, 1}));
}

TEST(Cycles, BidirectedTriangleHasFiveCycles) {
    auto cs = enumerate_cycles(kBicycle3);
    std::vector<std::vector<int>> seqs;
    for (const auto& c : cs) seqs.push_back(c.sequence);
    EXPECT_EQ(seqs, (std::vector<std::vector<int>>{{0, 1}, {0, 1, 2}, {0, 2}, {0, 2, 1}, {1, 2}}));
}

TEST(Cycles, MatchBruteForce) {
    Rng rng(3);
    for (int i = 0; i < 300; ++i) {
        Digraph d = random_digraph(uniform_int(rng, 1, 6), 0.2 + 0.1 * (i % 6), rng);
        std::set<std::vector<int>> got;
        for (const auto& c : enumerate_cycles(d)) {
            EXPECT_TRUE(is_cycle_of(d, c));
            EXPECT_EQ(c.sequence.front(), c.vertex_set().min());
            got.insert(c.sequence);
        }
        EXPECT_EQ(got, oracle::cycles(d));
    }
}

TEST(Cycles, CapIsEnforced) {
    EXPECT_THROW(enumerate_cycles(kBicycle3, 4), CapExceeded);
    EXPECT_EQ(enumerate_cycles(kBicycle3, 5).size(), 5u);
}

TEST(CycleHypergraph, Examples) {
    auto c3 = cycle_hypergraph(directed_cycle(3));
    EXPECT_EQ(c3.hypergraph.num_vertices(), 3);
    ASSERT_EQ(c3.hypergraph.num_edges(), 1);
    EXPECT_EQ(c3.hypergraph.edge(0), (std::vector<int>{0, 1, 2}));

    auto b3 = cycle_hypergraph(kBicycle3);
    std::vector<std::vector<int>> edges(b3.hypergraph.edges().begin(), b3.hypergraph.edges().end());
    std::sort(edges.begin(), edges.end());
    EXPECT_EQ(edges, (std::vector<std::vector<int>>{{0, 1}, {0, 1, 2}, {0, 1, 2}, {0, 2}, {1, 2}}));

    Digraph dag(2);
    dag.add_edge(0, 1);
    auto empty = cycle_hypergraph(dag);
    EXPECT_EQ(empty.num_edges(), 0);
    EXPECT_EQ(empty.acyclic_vertices, set_of({0, 1}));
}

TEST(CycleHypergraph, Cut) {
    auto c3 = cycle_hypergraph(directed_cycle(3));
    EXPECT_EQ(cut(c3, set_of({0})).size(), 1u);
    EXPECT_TRUE(cut(c3, set_of({0, 1, 2})).empty());
    auto b3 = cycle_hypergraph(kBicycle3);
    EXPECT_EQ(cut(b3, set_of({0})).size(), 4u);
}

TEST(CycleHypergraph, CutIsSymmetric) {
    Rng rng(5);
    for (int i = 0; i < 100; ++i) {
        Digraph d = random_digraph(uniform_int(rng, 2, 6), 0.4, rng);
        auto ch = cycle_hypergraph(d);
        VertexSet x;
        for (int v : d.vertices())
            if (uniform_int(rng, 0, 1)) x.insert(v);
        EXPECT_EQ(cut(ch, x), cut(ch, d.vertices() - x));
    }
}

TEST(CycleHypergraph, MinHittingSet) {
    auto b3 = cycle_hypergraph(kBicycle3);
    EXPECT_EQ(min_hitting_set(b3, {}, 3), VertexSet{});
    auto c3 = cycle_hypergraph(directed_cycle(3));
    EXPECT_EQ(min_hitting_set(c3, {0}, 1), set_of({0}));
    std::vector<int> all{0, 1, 2, 3, 4};
    EXPECT_FALSE(min_hitting_set(b3, all, 1).has_value());
    EXPECT_EQ(min_hitting_set(b3, all, 2), set_of({0, 1}));
}

TEST(CycleHypergraph, MinHittingSetMatchesBruteForce) {
    Rng rng(9);
    for (int i = 0; i < 100; ++i) {
        Digraph d = random_digraph(uniform_int(rng, 2, 6), 0.45, rng);
        auto ch = cycle_hypergraph(d);
        std::vector<int> targets;
        std::vector<VertexSet> sets;
        for (int e = 0; e < ch.num_edges(); ++e)
            if (uniform_int(rng, 0, 1)) targets.push_back(e), sets.push_back(ch.edge_sets[e]);
        auto got = min_hitting_set(ch, targets, d.order());
        ASSERT_TRUE(got.has_value());
        EXPECT_EQ(got->size(), oracle::min_hitting_size(d.vertices(), sets));
    }
}

TEST(Chains, OpenChains) {
    auto a4 = cycle_hypergraph(pattern_digraph(PatternKind::A4, 4));
    // v1..v4 are 0..3: C1 = v1 v2 v4, C2 = v2 v3 v4, C3 = v1 v3
    int c1 = index_of(a4, {0, 1, 3}), c2 = index_of(a4, {1, 2, 3}), c3 = index_of(a4, {0, 2});
    ASSERT_GE(c1, 0);
    ASSERT_GE(c2, 0);
    ASSERT_GE(c3, 0);
    EXPECT_FALSE(is_chain(a4, {c1, c2, c3}));
    EXPECT_TRUE(is_closed_chain(a4, {c1, c2, c3}));
    EXPECT_TRUE(is_chain(a4, {c1}));
    auto p3 = cycle_hypergraph(bidirect(3, {{0, 1}, {1, 2}}));
    EXPECT_TRUE(is_chain(p3, {0, 1}));
}

TEST(Chains, ClosedChainExamples) {
    auto a4 = cycle_hypergraph(pattern_digraph(PatternKind::A4, 4));
    auto chain = find_closed_chain(a4);
    ASSERT_TRUE(chain.has_value());
    EXPECT_TRUE(is_closed_chain(a4, chain->cycles));
    EXPECT_EQ(chain->cycles.size(), 3u);

    auto c4 = cycle_hypergraph(bidirect(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}));
    auto ring = find_closed_chain(c4);
    ASSERT_TRUE(ring.has_value());
    ASSERT_EQ(ring->cycles.size(), 4u);
    for (int c : ring->cycles) EXPECT_EQ(c4.cycles[c].length(), 2);
    EXPECT_TRUE(is_closed_chain(c4, ring->cycles));

    EXPECT_FALSE(find_closed_chain(cycle_hypergraph(directed_cycle(3))).has_value());
}

TEST(Chains, FoundChainsSplitIntoOpenChains) {
    Rng rng(13);
    for (int i = 0; i < 200; ++i) {
        Digraph d = random_strong_digraph(uniform_int(rng, 3, 6), 0.4, rng);
        auto ch = cycle_hypergraph(d);
        auto chain = find_closed_chain(ch);
        if (!chain) continue;
        const auto& s = chain->cycles;
        EXPECT_TRUE(is_closed_chain(ch, s));
        EXPECT_TRUE(ch.edge_sets[s.front()].intersects(ch.edge_sets[s.back()]));
        EXPECT_TRUE(is_chain(ch, std::vector<int>(s.begin(), s.end() - 1)));
        EXPECT_TRUE(is_chain(ch, std::vector<int>(s.begin() + 1, s.end())));
    }
}

TEST(Chains, StrongConnectivityThroughChains) {
    EXPECT_TRUE(strongly_connected_via_chains(Digraph(1)));
    EXPECT_TRUE(strongly_connected_via_chains(bidirect(2, {{0, 1}})));
    EXPECT_FALSE(strongly_connected_via_chains(bidirect(4, {{0, 1}, {2, 3}})));
}
