#include <gtest/gtest.h>

#include "dtw1/cycles.hpp"
#include "dtw1/hypergraph.hpp"
#include "dtw1/hypertree_width.hpp"
#include "dtw1/random.hpp"
#include "oracles.hpp"

using namespace dtw1;

namespace {

const Hypergraph kPath(3, {{0, 1}, {1, 2}});
const Hypergraph kTriangle(3, {{0, 1}, {1, 2}, {0, 2}});

std::vector<Hypergraph> random_family(std::uint64_t seed, int count) {
    Rng rng(seed);
    std::vector<Hypergraph> out;
    for (int i = 0; i < count; ++i)
        out.push_back(random_hypergraph(uniform_int(rng, 1, 6), uniform_int(rng, 1, 6), rng, 0.3 + 0.05 * (i % 5)));
    return out;
}

}  // namespace

TEST(Hypergraph, RejectsBadEdges) {
    EXPECT_THROW(Hypergraph(2, {{0}, {}}), PreconditionError);
    EXPECT_THROW(Hypergraph(2, {{0, 2}}), PreconditionError);
    EXPECT_THROW(Hypergraph(3, {{0, 1}}), PreconditionError);
}

TEST(Hypergraph, DualAndSections) {
    auto d = dual(kPath);
    EXPECT_EQ(d.num_vertices(), 2);
    EXPECT_EQ(d.edges(), (std::vector<std::vector<int>>{{0}, {0, 1}, {1}}));
    auto g = two_section(kPath);
    EXPECT_EQ(g.edges(), (std::vector<std::pair<int, int>>{{0, 1}, {1, 2}}));
    EXPECT_EQ(line_graph(kTriangle).edges(), (std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}}));
}

TEST(Hypergraph, LineGraphIsTwoSectionOfDual) {
    for (const auto& h : random_family(17, 200)) EXPECT_EQ(line_graph(h), two_section(dual(h)));
}

TEST(Hypergraph, DualIsAnInvolution) {
    for (const auto& h : random_family(19, 100)) EXPECT_EQ(dual(dual(h)).edges(), h.edges());
}

TEST(Hypergraph, SmallExamples) {
    EXPECT_TRUE(is_alpha_acyclic(kPath));
    EXPECT_TRUE(has_helly(kPath));
    EXPECT_TRUE(is_conformal(kPath));
    EXPECT_TRUE(hypertree_witness(kPath).has_value());

    EXPECT_FALSE(is_alpha_acyclic(kTriangle));
    EXPECT_FALSE(has_helly(kTriangle));
    EXPECT_FALSE(is_conformal(kTriangle));
    EXPECT_TRUE(is_chordal(two_section(kTriangle)));
    EXPECT_FALSE(hypertree_witness(kTriangle).has_value());
    EXPECT_TRUE(is_alpha_acyclic(Hypergraph(3, {{0, 1}, {1, 2}, {0, 2}, {0, 1, 2}})));
}

TEST(Hypergraph, ChordalityMatchesBruteForce) {
    Rng rng(23);
    for (int i = 0; i < 300; ++i) {
        int n = uniform_int(rng, 1, 7);
        UGraph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (uniform_int(rng, 0, 99) < 45) g.add_edge(u, v);
        EXPECT_EQ(is_chordal(g), oracle::chordal(g));
    }
    UGraph c4(4);
    for (int i = 0; i < 4; ++i) c4.add_edge(i, (i + 1) % 4);
    EXPECT_FALSE(is_chordal(c4));
    c4.add_edge(0, 2);
    EXPECT_TRUE(is_chordal(c4));
}

TEST(Hypergraph, HellyAndConformalMatchBruteForce) {
    for (const auto& h : random_family(29, 300)) {
        EXPECT_EQ(has_helly(h), oracle::helly(h));
        EXPECT_EQ(is_conformal(h), oracle::conformal(h));
    }
}

TEST(Hypergraph, WitnessMatchesTreeEnumeration) {
    for (const auto& h : random_family(31, 300)) {
        auto w = hypertree_witness(h);
        EXPECT_EQ(w.has_value(), oracle::is_hypertree(h));
        if (w) {
            EXPECT_TRUE(is_join_tree(h, *w));
        }
    }
}

TEST(Hypergraph, HypertreeCharacterisationsAgree) {
    for (const auto& h : random_family(37, 400)) {
        bool tree = hypertree_witness(h).has_value();
        auto d = dual(h);
        EXPECT_EQ(tree, is_alpha_acyclic(d));
        EXPECT_EQ(tree, is_alpha_acyclic(d, true));
        EXPECT_EQ(tree, has_helly(h) && is_chordal(line_graph(h)));
        EXPECT_EQ(tree, is_conformal(d) && is_chordal(two_section(d)));
        auto hw = exact_hw(d, 1);
        EXPECT_EQ(tree, hw.has_value());
    }
}

TEST(Hypergraph, JoinTreeRejectsBadTrees) {
    EXPECT_TRUE(is_join_tree(kPath, {3, {{0, 1}, {1, 2}}}));
    EXPECT_FALSE(is_join_tree(kPath, {3, {{0, 2}, {2, 1}}}));
    EXPECT_FALSE(is_join_tree(kPath, {3, {{0, 1}}}));
    EXPECT_FALSE(is_join_tree(kPath, {3, {{0, 1}, {0, 1}}}));
}

TEST(HypertreeWidth, CycleHypergraphDuals) {
    auto digon = cycle_hypergraph(bidirect(2, {{0, 1}}));
    auto hw1 = exact_hw(dual(digon.hypergraph), 3);
    ASSERT_TRUE(hw1.has_value());
    EXPECT_EQ(hw1->first, 1);

    auto b3 = cycle_hypergraph(bidirect(3, {{0, 1}, {1, 2}, {2, 0}}));
    auto d3 = dual(b3.hypergraph);
    auto hw2 = exact_hw(d3, 3);
    ASSERT_TRUE(hw2.has_value());
    EXPECT_EQ(hw2->first, 2);
    EXPECT_TRUE(validate_hd(d3, hw2->second).valid);
}

TEST(HypertreeWidth, DecompositionsValidate) {
    for (const auto& h : random_family(41, 150)) {
        auto r = exact_hw(h, h.num_edges());
        ASSERT_TRUE(r.has_value());
        auto rep = validate_hd(h, r->second);
        EXPECT_TRUE(rep.valid);
        EXPECT_EQ(rep.width, r->first);
        EXPECT_EQ(r->first == 1, is_alpha_acyclic(h));
    }
}

TEST(HypertreeWidth, ValidatorCatchesMissingEdge) {
    HypertreeDecomposition dec;
    dec.add_node(-1, {0, 1}, {0});
    auto rep = validate_ghd(kPath, dec);
    EXPECT_FALSE(rep.valid);
    EXPECT_FALSE(rep.violations.empty());
}
