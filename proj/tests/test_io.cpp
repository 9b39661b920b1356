#include <gtest/gtest.h>

#include <sstream>

#include "dtw1/io.hpp"
#include "dtw1/random.hpp"

using namespace dtw1;

namespace {

int parse_error_line(const std::string& text) {
    try {
        parse_edge_list(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    return 0;
}

std::string certificate_text(const Digraph& d, const Dtw1Certificate& cert) {
    std::ostringstream out;
    write_certificate(out, d, cert);
    return out.str();
}

}  // namespace

TEST(EdgeList, NamesAndComments) {
    auto d = parse_edge_list("# comment\na b\nb a  # back\n\nc\n");
    EXPECT_EQ(d.order(), 3);
    EXPECT_EQ(d.name(0), "a");
    EXPECT_EQ(d.name(2), "c");
    EXPECT_TRUE(d.has_edge(0, 1));
    EXPECT_TRUE(d.has_edge(1, 0));
    EXPECT_TRUE(d.out(2).empty());
}

TEST(EdgeList, ErrorsCarryLineNumbers) {
    EXPECT_EQ(parse_error_line("a b\nb c d\n"), 2);
    EXPECT_EQ(parse_error_line("a b\n\nb b\n"), 3);
    EXPECT_EQ(parse_error_line("a {b}\n"), 1);
    std::string big;
    for (int i = 0; i < 65; ++i) big += "v" + std::to_string(i) + "\n";
    EXPECT_EQ(parse_error_line(big), 65);
}

TEST(EdgeList, RoundTrip) {
    Rng rng(107);
    for (int i = 0; i < 50; ++i) {
        Digraph d = random_digraph(uniform_int(rng, 1, 9), 0.3, rng);
        std::ostringstream out;
        write_edge_list(out, d);
        auto back = parse_edge_list(out.str());
        EXPECT_EQ(back, d);
    }
}

TEST(HypergraphText, ParseAndWrite) {
    std::istringstream in("v x y z\ne x y\ne y z\n");
    auto h = parse_hypergraph(in);
    EXPECT_EQ(h.num_vertices(), 3);
    EXPECT_EQ(h.num_edges(), 2);
    std::ostringstream out;
    write_hypergraph(out, h);
    std::istringstream again(out.str());
    EXPECT_EQ(parse_hypergraph(again).edges(), h.edges());
    std::istringstream undeclared("v x\ne x w\n");
    EXPECT_THROW(parse_hypergraph(undeclared), ParseError);
}

TEST(Decompositions, DtdRoundTrip) {
    auto d = parse_edge_list("a b\nb a\nb c\nc b\nc d\nd c\n");
    auto cert = recognize_dtw1(d);
    ASSERT_EQ(cert.verdict, Verdict::Yes);
    std::ostringstream out;
    write_dtd(out, d, *cert.decomposition);
    std::istringstream in(out.str());
    auto back = parse_dtd(in, d);
    EXPECT_EQ(back.parent, cert.decomposition->parent);
    EXPECT_EQ(back.bags, cert.decomposition->bags);
    EXPECT_EQ(back.guards, cert.decomposition->guards);
}

TEST(Decompositions, DbdRoundTrip) {
    auto d = parse_edge_list("a b\nb c\nc d\nd a\nb a\nc b\nd c\na d\n");
    auto [w, dec] = exact_dbw(d);
    std::ostringstream out;
    write_dbd(out, d, dec);
    std::istringstream in(out.str());
    auto back = parse_dbd(in, d);
    EXPECT_EQ(back.tree.item, dec.tree.item);
    EXPECT_EQ(back.tree.edges, dec.tree.edges);
    EXPECT_EQ(back.hitting_sets, dec.hitting_sets);
    EXPECT_TRUE(validate_dbd(d, back, w).valid);
}

TEST(Decompositions, DtdErrors) {
    auto d = parse_edge_list("a b\nb a\n");
    std::istringstream bad("dtd\nnode 0 bag={a}\nnode 1 bag={q}\n");
    try {
        parse_dtd(bad, d);
        FAIL() << "expected a parse error";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3);
    }
}

TEST(Certificate, RoundTripYesAndNo) {
    for (const char* text : {"a b\nb a\n", "a b\nb c\nc a\nb a\nc b\na c\n", "a x\nx b\nb a\nb c\nc b\nc a\na c\n"}) {
        auto d = parse_edge_list(text);
        auto cert = recognize_dtw1(d);
        auto s = certificate_text(d, cert);
        std::istringstream in(s);
        auto parsed = parse_certificate(in, d);
        EXPECT_EQ(parsed.hash, hash_text(canonical_hash(d)));
        EXPECT_EQ(parsed.cert.verdict, cert.verdict);
        auto check = verify_certificate(d, parsed.cert);
        EXPECT_TRUE(check.ok) << check.error;
        EXPECT_EQ(certificate_text(d, parsed.cert), s);
    }
}

TEST(Certificate, HashIsReadFirst) {
    auto d = parse_edge_list("a b\nb a\n");
    std::istringstream in(certificate_text(d, recognize_dtw1(d)));
    auto h = certificate_hash(in);
    ASSERT_TRUE(h.has_value());
    EXPECT_EQ(*h, hash_text(canonical_hash(d)));
    std::istringstream junk("hello\n");
    EXPECT_FALSE(certificate_hash(junk).has_value());
}

TEST(Certificate, TruncatedIsAnError) {
    auto d = parse_edge_list("a b\nb c\nc a\nb a\nc b\na c\n");
    auto s = certificate_text(d, recognize_dtw1(d));
    s = s.substr(0, s.rfind("end"));
    std::istringstream in(s);
    EXPECT_THROW(parse_certificate(in, d), ParseError);
}
