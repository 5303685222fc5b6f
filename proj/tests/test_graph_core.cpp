#include "doctest.h"
#include "test_support.hpp"

#include "superlocal/errors.hpp"
#include "superlocal/families.hpp"
#include "superlocal/graph6.hpp"
#include "superlocal/interval.hpp"
#include "superlocal/multigraph.hpp"

using namespace superlocal;
using namespace testsupport;

TEST_CASE("graph6 decodes the complete graph on five vertices") {
    auto g = parse_graph6("D~{");
    CHECK(g.order() == 5);
    CHECK(g.size() == 10);
    CHECK(g == families::complete(5));
    CHECK(reference_graph6(g) == "D~{");
}

TEST_CASE("graph6 two-vertex encodings") {
    auto empty = parse_graph6("A?");
    CHECK(empty.order() == 2);
    CHECK(empty.size() == 0);
    // "A_" sets the single upper-triangle bit, so it is K2
    auto k2 = parse_graph6("A_");
    CHECK(k2.order() == 2);
    CHECK(k2.adjacent(0, 1));
}

TEST_CASE("graph6 five-cycle encodings") {
    auto c5 = parse_graph6("Dhc");
    CHECK(c5.size() == 5);
    for (int v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);
    CHECK(brute_connected(c5));
    CHECK(reference_graph6(families::cycle(5)) == "Dhc");

    // "DQw" decodes to five edges but not a 2-regular graph
    auto other = parse_graph6("DQw");
    CHECK(other.order() == 5);
    CHECK(other.size() == 5);
    std::vector<int> degrees;
    for (int v = 0; v < 5; ++v) degrees.push_back(other.degree(v));
    std::sort(degrees.begin(), degrees.end());
    CHECK(degrees == std::vector<int>{1, 2, 2, 2, 3});
}

TEST_CASE("graph6 header, whitespace and long forms") {
    CHECK(parse_graph6(">>graph6<<D~{\n") == families::complete(5));
    auto big = families::path(63);
    auto text = encode_graph6(big);
    CHECK(text[0] == '~');
    CHECK(text == reference_graph6(big));
    CHECK(parse_graph6(text) == big);
    CHECK(parse_graph6("?").order() == 0);
}

TEST_CASE("graph6 errors name the byte offset") {
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
    CHECK_THROWS_AS(parse_graph6("D~"), ParseError);     // truncated
    CHECK_THROWS_AS(parse_graph6("D~{?"), ParseError);   // trailing byte
    CHECK_THROWS_AS(parse_graph6("A`"), ParseError);     // padding bit set
    try {
        parse_graph6("D~ {");
        FAIL("accepted a space");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 2);
    }
    // 65 vertices exceeds the mask representation
    CHECK_THROWS_AS(parse_graph6(std::string("~?@@") + std::string(348, '?')), ParseError);
}

TEST_CASE("graph6 round trip on random graphs") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
        auto g = random_graph(rng, static_cast<int>(rng() % 20), static_cast<int>(rng() % 100));
        auto text = encode_graph6(g);
        CHECK(text == reference_graph6(g));
        CHECK(parse_graph6(text) == g);
    }
}

TEST_CASE("multigraph text format") {
    auto fat = parse_multigraph("n 3 / 0 1 2 / 1 2 2 / 0 2 2");
    CHECK(fat.order() == 3);
    CHECK(fat.edge_count() == 6);
    CHECK(fat.multiplicity(0, 1) == 2);
    CHECK(fat.multiplicity(2, 1) == 2);
    CHECK(fat.multiplicity(0, 2) == 2);

    auto dipole = parse_multigraph("n 2 / 0 1 3");
    CHECK(dipole.edge_count() == 3);
    CHECK(dipole.multiplicity(0, 1) == 3);

    auto p3 = parse_multigraph("n 3\n0 1 1\n1 2 1\n");
    CHECK(p3.edge_count() == 2);
    CHECK_FALSE(p3.adjacent(0, 2));

    auto commented = parse_multigraph("# header next\nn 2  # two vertices\n\n1 0 2\n");
    CHECK(commented.multiplicity(0, 1) == 2);
}

TEST_CASE("multigraph format errors") {
    CHECK_THROWS_AS(parse_multigraph("n 3 / 1 1 1"), ParseError);          // loop
    CHECK_THROWS_AS(parse_multigraph("n 3 / 0 1 1 / 1 0 2"), ParseError);  // duplicate pair
    CHECK_THROWS_AS(parse_multigraph("n 3 / 0 1 0"), ParseError);          // m = 0
    CHECK_THROWS_AS(parse_multigraph("n 3 / 0 1 -2"), ParseError);
    CHECK_THROWS_AS(parse_multigraph("n 3 / 0 3 1"), ParseError);          // out of range
    CHECK_THROWS_AS(parse_multigraph("0 1 1"), ParseError);                // no header
    CHECK_THROWS_AS(parse_multigraph("n 3 / 0 1"), ParseError);
    CHECK_THROWS_AS(parse_multigraph(""), ParseError);
}

TEST_CASE("multigraph round trip keeps pairs and edge ids") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
        auto g = random_multigraph(rng, 2 + static_cast<int>(rng() % 7), 50, 3);
        auto back = parse_multigraph(encode_multigraph(g));
        CHECK(back.order() == g.order());
        REQUIRE(back.edge_count() == g.edge_count());
        for (int e = 0; e < g.edge_count(); ++e) CHECK(back.edge(e) == g.edge(e));
    }
}

TEST_CASE("line graphs of small multigraphs") {
    auto p3 = line_graph(make_multigraph(3, {{0, 1, 1}, {1, 2, 1}}));
    CHECK(p3 == families::complete(2));

    auto tri = line_graph(make_multigraph(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}}));
    CHECK(tri.order() == 3);
    for (int v = 0; v < 3; ++v) CHECK(tri.degree(v) == 2);

    auto dipole = line_graph(make_multigraph(2, {{0, 1, 3}}));
    CHECK(dipole == families::complete(3));

    CHECK_THROWS_AS(line_graph(Multigraph(4, std::vector<MultiEdge>{})), DomainError);
    std::vector<PairMultiplicity> many{{0, 1, 65}};
    CHECK_THROWS_AS(line_graph(Multigraph(2, many)), SizeLimitError);
}

TEST_CASE("line graph degree identity on random multigraphs") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 300; ++i) {
        int n = 2 + static_cast<int>(rng() % 7);
        auto g = random_multigraph(rng, n, 45, 3);
        if (g.edge_count() == 0 || g.edge_count() > 64) continue;
        auto l = line_graph(g);
        for (int e = 0; e < g.edge_count(); ++e) {
            const auto& x = g.edge(e);
            CHECK(l.degree(e) == g.degree(x.u) + g.degree(x.v) - g.multiplicity(x.u, x.v) - 1);
            for (int f = 0; f < g.edge_count(); ++f) {
                const auto& y = g.edge(f);
                bool touch = e != f && (x.u == y.u || x.u == y.v || x.v == y.u || x.v == y.v);
                CHECK(l.adjacent(e, f) == touch);
            }
        }
    }
}

TEST_CASE("complement") {
    CHECK(complement(families::complete(5)) == families::empty(5));
    auto c5c = complement(families::cycle(5));
    for (int v = 0; v < 5; ++v) CHECK(c5c.degree(v) == 2);
    CHECK(brute_connected(c5c));

    std::mt19937_64 rng(3);
    for (int i = 0; i < 100; ++i) {
        auto g = random_graph(rng, static_cast<int>(rng() % 12), 40);
        auto c = complement(g);
        CHECK(complement(c) == g);
        for (int u = 0; u < g.order(); ++u)
            for (int v = 0; v < g.order(); ++v) CHECK(c.adjacent(u, v) == (u != v && !g.adjacent(u, v)));
    }
}

TEST_CASE("induced subgraphs") {
    auto c5 = families::cycle(5);
    auto closed = induced_subgraph(c5, c5.closed_neighbourhood(0));
    CHECK(closed.graph.order() == 3);
    CHECK(closed.graph.size() == 2);
    CHECK(closed.original == std::vector<int>{0, 1, 4});

    CHECK(induced_subgraph(c5, VertexMask{0}).graph.order() == 0);
    CHECK(induced_subgraph(c5, c5.vertices()).graph == c5);

    std::vector<int> bad{0, 7};
    CHECK_THROWS_AS(induced_subgraph(c5, bad), DomainError);
    CHECK_THROWS_AS(induced_subgraph(c5, bit(9)), DomainError);

    std::vector<int> picked{4, 2, 0};
    auto sub = induced_subgraph(c5, picked);
    // the induced copy keeps ascending vertex order
    CHECK(sub.original == std::vector<int>{0, 2, 4});
    CHECK(sub.graph.adjacent(0, 2));  // 0 ~ 4
    CHECK_FALSE(sub.graph.adjacent(0, 1));
}

TEST_CASE("linear interval realisation") {
    auto pts = [](std::initializer_list<int> xs) {
        std::vector<Rational> out;
        for (int x : xs) out.emplace_back(x);
        return out;
    };
    LinearIntervalRepresentation one{pts({0, 1, 2}), {{0, 1}}};
    auto g = realize_linear_interval(one);
    CHECK(g == make_graph(3, {{0, 1}}));

    LinearIntervalRepresentation two{pts({0, 1, 2}), {{0, 1}, {1, 2}}};
    CHECK(realize_linear_interval(two) == families::path(3));

    LinearIntervalRepresentation all{pts({0, 1, 2, 3, 4}), {{0, 4}}};
    CHECK(realize_linear_interval(all) == families::complete(5));

    LinearIntervalRepresentation half{{Rational(0), Rational(1, 2), Rational(1)}, {{Rational(1, 3), Rational(1)}}};
    CHECK(realize_linear_interval(half) == make_graph(3, {{1, 2}}));

    LinearIntervalRepresentation unsorted{pts({0, 2, 1}), {}};
    CHECK_THROWS_AS(realize_linear_interval(unsorted), DomainError);
    LinearIntervalRepresentation reversed{pts({0, 1}), {{1, 0}}};
    CHECK_THROWS_AS(realize_linear_interval(reversed), DomainError);
}

TEST_CASE("named families") {
    CHECK(families::petersen().size() == 15);
    for (int v = 0; v < 10; ++v) CHECK(families::petersen().degree(v) == 3);
    CHECK(encode_graph6(families::petersen()) == "IheA@GUAo");
    auto ds = families::double_star();
    CHECK(ds.size() == 5);
    CHECK(ds.degree(0) == 3);
    CHECK(ds.degree(1) == 3);
    auto pc = families::pendant_clique(6);
    CHECK(pc.order() == 42);
    CHECK(pc.size() == 15 + 36);
    CHECK(families::cocktail_party(3).size() == 12);
}
