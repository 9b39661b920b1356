#include <gtest/gtest.h>

#include <set>

#include "dtw1/games.hpp"
#include "dtw1/minor.hpp"
#include "dtw1/random.hpp"
#include "oracles.hpp"

using namespace dtw1;

namespace {

VertexSet set_of(std::initializer_list<int> xs) { return VertexSet::from_vector(std::vector<int>(xs)); }

Digraph directed_cycle(int n) {
    Digraph d(n);
    for (int i = 0; i < n; ++i) d.add_edge(i, (i + 1) % n);
    return d;
}

Digraph bidirected_cycle(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i) es.push_back({i, (i + 1) % n});
    return bidirect(n, es);
}

const Digraph kDigon = bidirect(2, {{0, 1}});
const Digraph kPath3 = bidirect(3, {{0, 1}, {1, 2}});

/// Counts assignments (one strong component of D − X per X with |X| < order) that verify.
int count_havens(const Digraph& d, int order) {
    std::vector<VertexSet> xs;
    std::vector<std::vector<VertexSet>> choices;
    for_each_subset_up_to(d.vertices(), order - 1, [&](VertexSet x) {
        xs.push_back(x);
        auto comps = oracle::strong_components(d.induced(d.vertices() - x));
        choices.emplace_back(comps.begin(), comps.end());
        return false;
    });
    for (const auto& c : choices)
        if (c.empty()) return 0;
    int found = 0;
    std::vector<std::size_t> pick(xs.size(), 0);
    while (true) {
        Haven h;
        h.order = order;
        for (std::size_t i = 0; i < xs.size(); ++i) h.assignment[xs[i].bits()] = choices[i][pick[i]];
        found += verify_haven(d, h);
        std::size_t i = 0;
        while (i < xs.size() && ++pick[i] == choices[i].size()) pick[i++] = 0;
        if (i == xs.size()) return found;
    }
}

}  // namespace

TEST(Game, SmallCases) {
    EXPECT_FALSE(solve_game(kDigon, 1).cops_win);
    EXPECT_TRUE(solve_game(kDigon, 2).cops_win);
    auto b3 = bidirected_cycle(3);
    EXPECT_FALSE(solve_game(b3, 2).cops_win);
    EXPECT_TRUE(solve_game(b3, 3).cops_win);
}

TEST(Game, CopNumbers) {
    EXPECT_EQ(dcn_exact(kDigon, 4), 2);
    EXPECT_EQ(dcn_exact(directed_cycle(3), 4), 2);
    EXPECT_EQ(dcn_exact(kPath3, 4), 2);
    EXPECT_EQ(dcn_exact(pattern_digraph(PatternKind::A4, 4), 4), 3);
    EXPECT_EQ(dcn_exact(bidirected_cycle(5), 4), 3);
}

TEST(Game, MonotoneInCops) {
    Rng rng(71);
    for (int i = 0; i < 60; ++i) {
        Digraph d = random_strong_digraph(uniform_int(rng, 2, 6), 0.35, rng);
        bool prev = false;
        for (int k = 1; k <= d.order(); ++k) {
            bool win = solve_game(d, k).cops_win;
            EXPECT_TRUE(!prev || win);
            prev = win;
        }
        EXPECT_TRUE(prev);
    }
}

TEST(Game, WinningStrategiesCheckOut) {
    Rng rng(73);
    for (int i = 0; i < 60; ++i) {
        Digraph d = random_strong_digraph(uniform_int(rng, 2, 6), 0.35, rng);
        int k = dcn_exact(d, d.order());
        auto res = solve_game(d, k);
        ASSERT_TRUE(res.cops_win);
        ASSERT_TRUE(res.strategy.has_value());
        auto check = check_strategy(d, *res.strategy);
        EXPECT_TRUE(check.wins);
        EXPECT_LE(check.max_cops, k);
    }
}

TEST(Game, RobberReplies) {
    auto b3 = bidirected_cycle(3);
    auto replies = robber_replies(b3, set_of({0}), set_of({1, 2}), set_of({1}));
    EXPECT_EQ(replies, std::vector<VertexSet>{set_of({0, 2})});
    auto c3 = directed_cycle(3);
    auto r2 = robber_replies(c3, set_of({0}), set_of({1, 2}), set_of({1}));
    EXPECT_EQ(std::set<VertexSet>(r2.begin(), r2.end()), (std::set<VertexSet>{set_of({0}), set_of({2})}));
    auto stay = robber_replies(b3, set_of({0}), set_of({1, 2}), set_of({0, 1}));
    EXPECT_EQ(stay, std::vector<VertexSet>{set_of({2})});
}

TEST(Haven, OrderThreeFromClosedChains) {
    for (const auto& d : {bidirected_cycle(4), bidirected_cycle(6), pattern_digraph(PatternKind::A4, 4)}) {
        auto ch = cycle_hypergraph(d);
        auto chain = find_closed_chain(ch);
        ASSERT_TRUE(chain.has_value());
        auto h = haven_from_closed_chain(d, ch, *chain);
        EXPECT_EQ(h.order, 3);
        EXPECT_TRUE(verify_haven(d, h));
        EXPECT_FALSE(solve_game(d, 2).cops_win);
    }
}

TEST(Haven, BruteForceExistence) {
    EXPECT_GT(count_havens(kPath3, 2), 0);
    EXPECT_EQ(count_havens(kPath3, 3), 0);
    EXPECT_GT(count_havens(kDigon, 2), 0);
    EXPECT_EQ(count_havens(kDigon, 3), 0);
    EXPECT_GT(count_havens(bidirected_cycle(3), 3), 0);
}

TEST(Haven, RejectsBrokenAssignments) {
    auto b3 = bidirected_cycle(3);
    Haven h;
    h.order = 2;
    h.assignment[0] = b3.vertices();
    for (int v = 0; v < 3; ++v) h.assignment[VertexSet::single(v).bits()] = b3.vertices() - VertexSet::single(v);
    EXPECT_TRUE(verify_haven(b3, h));
    auto bad = h;
    bad.assignment[VertexSet::single(0).bits()] = set_of({1});
    EXPECT_FALSE(verify_haven(b3, bad));
    bad = h;
    bad.assignment.erase(VertexSet::single(2).bits());
    EXPECT_FALSE(verify_haven(b3, bad));

    // h({0, 1}) = {2} is not inside h({1}) = {0}
    Haven p;
    p.order = 3;
    p.assignment[0] = kPath3.vertices();
    p.assignment[set_of({0}).bits()] = set_of({1, 2});
    p.assignment[set_of({1}).bits()] = set_of({0});
    p.assignment[set_of({2}).bits()] = set_of({0, 1});
    p.assignment[set_of({0, 1}).bits()] = set_of({2});
    p.assignment[set_of({0, 2}).bits()] = set_of({1});
    p.assignment[set_of({1, 2}).bits()] = set_of({0});
    EXPECT_FALSE(verify_haven(kPath3, p));
}

TEST(Strategy, FromBranchDecomposition) {
    auto c4 = bidirected_cycle(4);
    auto [w, dec] = exact_dbw(c4);
    EXPECT_EQ(w, 2);
    auto check = check_strategy(c4, strategy_from_dbd(c4, dec));
    EXPECT_TRUE(check.wins);
    EXPECT_LE(check.max_cops, 3 * w);
}

TEST(Strategy, FromRandomDecompositions) {
    Rng rng(79);
    for (int i = 0; i < 60; ++i) {
        Digraph d = random_strong_digraph(uniform_int(rng, 2, 6), 0.35, rng);
        auto [w, dec] = exact_dbw(d);
        auto check = check_strategy(d, strategy_from_dbd(d, dec));
        EXPECT_TRUE(check.wins);
        EXPECT_LE(check.max_cops, 3 * w);
    }
}

TEST(Linked, MatchesDefinition) {
    Rng rng(83);
    for (int i = 0; i < 150; ++i) {
        Digraph d = random_digraph(uniform_int(rng, 2, 6), 0.4, rng);
        VertexSet w;
        for (int v : d.vertices())
            if (uniform_int(rng, 0, 1)) w.insert(v);
        if (w.empty()) continue;
        for (int k = 0; k <= 2; ++k) EXPECT_EQ(is_k_linked(d, w, k), oracle::linked(d, w, k));
    }
}

TEST(Linked, Examples) {
    auto b3 = bidirected_cycle(3);
    EXPECT_TRUE(is_k_linked(b3, b3.vertices(), 1));
    EXPECT_FALSE(is_k_linked(b3, b3.vertices(), 2));
    EXPECT_FALSE(is_k_linked(kPath3, set_of({0, 2}), 1));
}

TEST(Linked, HyperlinkedOnTheDual) {
    Rng rng(89);
    for (int i = 0; i < 100; ++i) {
        Digraph d = random_strong_digraph(uniform_int(rng, 2, 5), 0.4, rng);
        auto ch = cycle_hypergraph(d);
        if (!ch.acyclic_vertices.empty()) continue;
        auto h = dual(ch.hypergraph);
        VertexSet w;
        for (int v : d.vertices())
            if (uniform_int(rng, 0, 1)) w.insert(v);
        if (w.size() < 2) continue;
        std::vector<int> we;
        for (int v : w) we.push_back(ch.hyper_id(v));
        std::sort(we.begin(), we.end());
        for (int k = 0; k <= 2; ++k) {
            bool linked = is_k_linked(d, w, k);
            if (linked) {
                EXPECT_TRUE(is_k_hyperlinked(h, we, k));
            }
            EXPECT_EQ(linked, is_k_hyperlinked(h, we, k + 1));
        }
    }
}
