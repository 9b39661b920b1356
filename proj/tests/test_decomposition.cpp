#include <gtest/gtest.h>

#include "dtw1/decomposition.hpp"
#include "dtw1/random.hpp"
#include "oracles.hpp"

using namespace dtw1;

namespace {

VertexSet set_of(std::initializer_list<int> xs) { return VertexSet::from_vector(std::vector<int>(xs)); }

const Digraph kDigon = bidirect(2, {{0, 1}});
const Digraph kBicycle3 = bidirect(3, {{0, 1}, {1, 2}, {2, 0}});
const Digraph kBicycle4 = bidirect(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});

DirectedTreeDecomposition digon_dtd() {
    DirectedTreeDecomposition dec;
    int r = dec.add_node(-1, {});
    dec.add_node(r, set_of({0}), set_of({1}));
    dec.add_node(r, set_of({1}), set_of({0}));
    return dec;
}

DirectedTreeDecomposition one_bag(const Digraph& d) {
    DirectedTreeDecomposition dec;
    dec.add_node(-1, d.vertices());
    return dec;
}

std::vector<Digraph> strong_family(std::uint64_t seed, int count, int max_n) {
    Rng rng(seed);
    std::vector<Digraph> out;
    for (int i = 0; i < count; ++i) out.push_back(random_strong_digraph(uniform_int(rng, 2, max_n), 0.35, rng));
    return out;
}

}  // namespace

TEST(Dtd, DigonExample) {
    auto dec = digon_dtd();
    auto rep = validate_dtd(kDigon, dec);
    EXPECT_TRUE(rep.valid);
    EXPECT_EQ(rep.width, 1);
    EXPECT_EQ(dec.gamma(0), set_of({0, 1}));
    EXPECT_TRUE(is_leaf_dtd(dec));
}

TEST(Dtd, MissingGuardIsReported) {
    auto dec = digon_dtd();
    dec.guards[1] = {};
    auto rep = validate_dtd(kDigon, dec);
    EXPECT_FALSE(rep.valid);
    EXPECT_FALSE(rep.violations.empty());
}

TEST(Dtd, BagsMustPartition) {
    auto dec = digon_dtd();
    dec.bags[2] = set_of({0, 1});
    EXPECT_FALSE(validate_dtd(kDigon, dec).valid);
    dec.bags[2] = {};
    EXPECT_FALSE(validate_dtd(kDigon, dec).valid);
}

TEST(Dtd, OneBagIsAlwaysValid) {
    for (const auto& d : strong_family(43, 50, 7)) {
        auto rep = validate_dtd(d, one_bag(d));
        EXPECT_TRUE(rep.valid);
        EXPECT_EQ(rep.width, d.order() - 1);
    }
}

TEST(Dtd, LeafFormKeepsValidity) {
    for (const auto& d : strong_family(47, 50, 6)) {
        auto leaf = dtd_to_leaf_dtd(d, one_bag(d));
        EXPECT_TRUE(is_leaf_dtd(leaf));
        EXPECT_TRUE(validate_dtd(d, leaf).valid);
    }
    auto leaf = dtd_to_leaf_dtd(kDigon, digon_dtd());
    EXPECT_TRUE(is_leaf_dtd(leaf));
    EXPECT_LE(validate_dtd(kDigon, leaf).width, 1);
}

TEST(Dbd, SmallWidths) {
    EXPECT_EQ(exact_dbw(kDigon).first, 1);
    EXPECT_EQ(exact_dbw(kBicycle3).first, 1);
    EXPECT_EQ(exact_dbw(kBicycle4).first, 2);
    EXPECT_EQ(oracle::dbw(kBicycle3), 1);
    EXPECT_EQ(oracle::dbw(kBicycle4), 2);
}

TEST(Dbd, DynamicProgramMatchesTreeEnumeration) {
    for (const auto& d : strong_family(53, 60, 6)) {
        auto [w, dec] = exact_dbw(d);
        EXPECT_EQ(w, oracle::dbw(d));
        auto rep = validate_dbd(d, dec, w);
        EXPECT_TRUE(rep.valid);
        EXPECT_EQ(rep.width, w);
    }
}

TEST(Dbd, ValidatorRejectsWrongHittingSet) {
    auto [w, dec] = exact_dbw(kBicycle4);
    ASSERT_FALSE(dec.hitting_sets.empty());
    for (auto& s : dec.hitting_sets) s = {};
    EXPECT_FALSE(validate_dbd(kBicycle4, dec, w).valid);
    auto [w2, dec2] = exact_dbw(kBicycle4);
    EXPECT_FALSE(validate_dbd(kBicycle4, dec2, w2 - 1).valid);
}

TEST(Dbd, HyperbranchRoundTrip) {
    for (const auto& d : strong_family(59, 60, 6)) {
        auto ch = cycle_hypergraph(d);
        if (!ch.acyclic_vertices.empty()) continue;
        auto [w, dec] = exact_dbw(d);
        auto h = dual_cycle_hypergraph(ch);
        auto hbd = dbd_to_hbd(d, dec);
        auto rep = validate_hbd(h, hbd, w);
        EXPECT_TRUE(rep.valid);
        EXPECT_EQ(rep.width, w);
        auto back = hbd_to_dbd(d, hbd);
        EXPECT_EQ(back.tree.item, dec.tree.item);
        EXPECT_EQ(back.tree.edges, dec.tree.edges);
        EXPECT_EQ(back.hitting_sets, dec.hitting_sets);
        EXPECT_EQ(exact_hbw(h).first, w);
    }
}

TEST(Dbd, FromDtd) {
    auto dbd = dtd_to_dbd(kDigon, digon_dtd());
    auto rep = validate_dbd(kDigon, dbd, 2);
    EXPECT_TRUE(rep.valid);
    EXPECT_LE(rep.width, 2);
    for (const auto& d : strong_family(61, 40, 6)) {
        auto conv = dtd_to_dbd(d, one_bag(d));
        EXPECT_TRUE(validate_dbd(d, conv, d.order()).valid);
    }
}

TEST(Ghd, DigonExample) {
    auto ch = cycle_hypergraph(kDigon);
    auto ghd = dtd_to_ghd(kDigon, digon_dtd());
    auto rep = validate_ghd(dual_cycle_hypergraph(ch), ghd);
    EXPECT_TRUE(rep.valid);
    EXPECT_EQ(rep.width, 2);
}

TEST(Ghd, WidthBoundFromDtd) {
    for (const auto& d : strong_family(67, 60, 6)) {
        auto ch = cycle_hypergraph(d);
        if (!ch.acyclic_vertices.empty()) continue;
        auto dec = dtd_to_leaf_dtd(d, one_bag(d));
        int k = validate_dtd(d, dec).width;
        auto rep = validate_ghd(dual_cycle_hypergraph(ch), dtd_to_ghd(d, dec));
        EXPECT_TRUE(rep.valid);
        EXPECT_LE(rep.width, k + 1);
    }
}
