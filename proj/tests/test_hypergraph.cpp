#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <hyperalpha/hypergraph.hpp>
#include <hyperalpha/io.hpp>

#include <sstream>

#include "oracles.hpp"

using namespace hyperalpha;

namespace {
Hypergraph g1() { return Hypergraph::build(4, 3, {{1, 2, 3}, {1, 2, 4}}); }
}

TEST_CASE("build validates and canonicalizes") {
    Hypergraph g = g1();
    CHECK(g.n() == 4);
    CHECK(g.k() == 3);
    CHECK(g.m() == 2);
    CHECK(g.degree(1) == 2);
    CHECK(g.degree(2) == 2);
    CHECK(g.degree(3) == 1);
    CHECK(g.degree(4) == 1);

    CHECK_THROWS_AS(Hypergraph::build(4, 3, {{1, 2, 3}, {3, 2, 1}}), DuplicateEdge);
    CHECK_THROWS_AS(Hypergraph::build(4, 3, {{1, 2, 2}}), EdgeWrongArity);
    CHECK_THROWS_AS(Hypergraph::build(4, 3, {{1, 2}}), EdgeWrongArity);
    CHECK_THROWS_AS(Hypergraph::build(4, 3, {{1, 2, 5}}), VertexOutOfRange);
    CHECK_THROWS_AS(Hypergraph::build(0, 3, {}), InvalidDimensions);
    CHECK_THROWS_AS(Hypergraph::build(4, 1, {}), InvalidDimensions);
}

TEST_CASE("complete hypergraphs") {
    Hypergraph c43 = Hypergraph::complete(4, 3);
    CHECK(c43.m() == 4);
    for (int v = 1; v <= 4; ++v) CHECK(c43.degree(v) == 3);

    Hypergraph single = Hypergraph::complete(3, 3);
    CHECK(single.m() == 1);
    for (int v = 1; v <= 3; ++v) CHECK(single.degree(v) == 1);

    Hypergraph c53 = Hypergraph::complete(5, 3);
    CHECK(c53.m() == 10);
    for (int v = 1; v <= 5; ++v) CHECK(c53.degree(v) == 6);

    CHECK_THROWS_AS(Hypergraph::complete(2, 3), InvalidDimensions);
}

TEST_CASE("complement") {
    Hypergraph g = complement(g1());
    CHECK(g.m() == 2);
    CHECK(g.has_edge({1, 3, 4}));
    CHECK(g.has_edge({2, 3, 4}));

    CHECK(complement(Hypergraph::complete(4, 3)).m() == 0);
    Hypergraph from_empty = complement(Hypergraph::empty(4, 3));
    CHECK(from_empty.m() == 4);
    CHECK(from_empty.is_complete());
}

TEST_CASE("complement is an involution") {
    std::mt19937_64 rng(42);
    for (int rep = 0; rep < 30; ++rep) {
        const int n = 3 + static_cast<int>(bounded_uniform(rng, 4));
        const int k = 2 + static_cast<int>(bounded_uniform(rng, 2));
        if (k > n) continue;
        const int max_m = static_cast<int>(Hypergraph::binomial(n, k));
        const int m = static_cast<int>(bounded_uniform(rng, max_m + 1));
        std::set<Edge> edges;
        while (static_cast<int>(edges.size()) < m) edges.insert(random_k_subset(rng, n, k));
        Hypergraph g = Hypergraph::build(n, k, std::vector<Edge>(edges.begin(), edges.end()));
        Hypergraph gg = complement(complement(g));
        CHECK(gg.edges() == g.edges());
    }
}

TEST_CASE("degree profile") {
    DegreeProfile p = degree_profile(g1());
    CHECK(p.degrees == std::vector<int>{2, 2, 1, 1});
    CHECK(p.max_degree == 2);
    CHECK(p.min_degree == 1);
    CHECK(p.avg_num == 3);
    CHECK(p.avg_den == 2);
    CHECK(p.average() == doctest::Approx(1.5));

    CHECK(degree_profile(Hypergraph::complete(5, 3)).regular());
    CHECK(degree_profile(Hypergraph::complete(5, 3)).max_degree == 6);
}

TEST_CASE("connectivity and components") {
    CHECK(is_connected(g1()));

    Hypergraph two = Hypergraph::build(6, 3, {{1, 2, 3}, {4, 5, 6}});
    Connectivity c = connectivity(two);
    CHECK_FALSE(c.connected);
    REQUIRE(c.components.size() == 2);
    CHECK(c.components[0] == std::vector<int>{1, 2, 3});
    CHECK(c.components[1] == std::vector<int>{4, 5, 6});

    Hypergraph iso = Hypergraph::build(4, 3, {{1, 2, 3}});
    Connectivity ci = connectivity(iso);
    CHECK_FALSE(ci.connected);
    REQUIRE(ci.components.size() == 2);
    CHECK(ci.components[1] == std::vector<int>{4});
}

TEST_CASE("connectivity agrees with transitive-closure oracle on all small edge sets") {
    for (int k = 2; k <= 4; ++k) {
        for (int n = k; n <= 6; ++n) {
            const std::vector<Edge> universe = Hypergraph::all_k_subsets(n, k);
            const int u = static_cast<int>(universe.size());
            // All edge subsets of size <= 4.
            std::vector<int> pick;
            auto run = [&]() {
                std::vector<Edge> edges;
                for (int idx : pick) edges.push_back(universe[idx]);
                Hypergraph g = Hypergraph::build(n, k, edges);
                CHECK(is_connected(g) == oracle::connected_closure(g));
            };
            run();
            for (int a = 0; a < u; ++a) {
                pick = {a};
                run();
                for (int b = a + 1; b < u; ++b) {
                    pick = {a, b};
                    run();
                    if (u <= 22) {
                        for (int c = b + 1; c < u; ++c) {
                            pick = {a, b, c};
                            run();
                            for (int d = c + 1; d < u; ++d) {
                                pick = {a, b, c, d};
                                run();
                            }
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("direct product of the examples") {
    Hypergraph k33 = Hypergraph::complete(3, 3);
    Hypergraph p = direct_product(g1(), k33);
    CHECK(p.n() == 12);
    CHECK(p.m() == 12);  // k! * m_G * m_H = 6 * 2 * 1
    CHECK(p.degree(product_vertex(1, 1, 4)) == 4);  // (k-1)! * d_G(1) * d_H(1) = 2*2*1

    Hypergraph pp = direct_product(k33, k33);
    CHECK(pp.n() == 9);
    CHECK(pp.m() == 6);
    for (int v = 1; v <= 9; ++v) CHECK(pp.degree(v) == 2);

    CHECK_THROWS_AS(direct_product(g1(), Hypergraph::complete(4, 4)), ArityMismatch);
}

TEST_CASE("direct product degree and edge laws, with membership oracle") {
    std::mt19937_64 rng(7);
    for (int rep = 0; rep < 12; ++rep) {
        const int ng = 3 + static_cast<int>(bounded_uniform(rng, 3));
        const int nh = 3 + static_cast<int>(bounded_uniform(rng, 3));
        const int max_g = static_cast<int>(Hypergraph::binomial(ng, 3));
        const int max_h = static_cast<int>(Hypergraph::binomial(nh, 3));
        const int mg = 1 + static_cast<int>(bounded_uniform(rng, std::min(3, max_g)));
        const int mh = 1 + static_cast<int>(bounded_uniform(rng, std::min(3, max_h)));
        std::set<Edge> eg, eh;
        while (static_cast<int>(eg.size()) < mg) eg.insert(random_k_subset(rng, ng, 3));
        while (static_cast<int>(eh.size()) < mh) eh.insert(random_k_subset(rng, nh, 3));
        Hypergraph g = Hypergraph::build(ng, 3, std::vector<Edge>(eg.begin(), eg.end()));
        Hypergraph h = Hypergraph::build(nh, 3, std::vector<Edge>(eh.begin(), eh.end()));
        Hypergraph p = direct_product(g, h);

        CHECK(p.m() == 6 * g.m() * h.m());
        for (int i = 1; i <= ng; ++i)
            for (int j = 1; j <= nh; ++j)
                CHECK(p.degree(product_vertex(i, j, ng)) == 2 * g.degree(i) * h.degree(j));

        // Exhaustive membership comparison against the definition.
        for (const Edge& cand : Hypergraph::all_k_subsets(p.n(), 3))
            CHECK(p.has_edge(cand) == oracle::product_edge_pred(g, h, cand));
    }
}

TEST_CASE("product of connected factors is connected for k >= 3") {
    std::mt19937_64 rng(21);
    auto feasible = [&](int n) {
        const int lo = std::max(1, (n - 1 + 1) / 2);  // ceil((n-1)/2) for k=3
        const int hi = static_cast<int>(Hypergraph::binomial(n, 3));
        return lo + static_cast<int>(bounded_uniform(rng, static_cast<std::uint64_t>(hi - lo + 1)));
    };
    for (int rep = 0; rep < 10; ++rep) {
        const int ng = 4 + static_cast<int>(bounded_uniform(rng, 3));
        const int nh = 3 + static_cast<int>(bounded_uniform(rng, 3));
        Hypergraph g = random_connected(ng, 3, feasible(ng), rng());
        Hypergraph h = random_connected(nh, 3, feasible(nh), rng());
        CHECK(is_connected(direct_product(g, h)));
    }
}

TEST_CASE("random_connected is deterministic and validates feasibility") {
    Hypergraph a = random_connected(6, 3, 4, 1);
    Hypergraph b = random_connected(6, 3, 4, 1);
    CHECK(a.edges() == b.edges());
    CHECK(is_connected(a));

    CHECK_THROWS_AS(random_connected(4, 3, 1, 99), InfeasibleRequest);
    CHECK_THROWS_AS(random_connected(5, 3, 11, 99), InfeasibleRequest);

    Hypergraph forced = random_connected(5, 3, 10, 3);
    CHECK(forced.is_complete());
}

TEST_CASE("disjoint union shifts the second block") {
    Hypergraph u = disjoint_union(Hypergraph::complete(3, 3), Hypergraph::complete(3, 3));
    CHECK(u.n() == 6);
    CHECK(u.m() == 2);
    CHECK(u.has_edge({4, 5, 6}));
    CHECK_FALSE(is_connected(u));
}

TEST_CASE("uhg round trip is byte identical") {
    Hypergraph g = g1();
    std::string text = to_uhg(g);
    CHECK(text == "3 4 2\n1 2 3\n1 2 4\n");
    std::istringstream in(text);
    Hypergraph back = read_uhg(in);
    CHECK(to_uhg(back) == text);
}

TEST_CASE("uhg round trip is byte identical on random instances") {
    std::mt19937_64 rng(55);
    for (int rep = 0; rep < 20; ++rep) {
        const int k = 2 + static_cast<int>(bounded_uniform(rng, 3));
        const int n = k + static_cast<int>(bounded_uniform(rng, 5));
        const int cap = static_cast<int>(Hypergraph::binomial(n, k));
        const int m = static_cast<int>(bounded_uniform(rng, cap + 1));
        std::set<Edge> edges;
        while (static_cast<int>(edges.size()) < m) edges.insert(random_k_subset(rng, n, k));
        Hypergraph g = Hypergraph::build(n, k, std::vector<Edge>(edges.begin(), edges.end()));
        const std::string text = to_uhg(g);
        std::istringstream in(text);
        CHECK(to_uhg(read_uhg(in)) == text);
    }
}

TEST_CASE("uhg parser accepts comments and blank lines") {
    std::istringstream in("# a comment\n\n3 4 2\n# another\n1 2 3\n\n1 2 4\n");
    Hypergraph g = read_uhg(in);
    CHECK(g.m() == 2);
    CHECK(g.edges() == g1().edges());
}

TEST_CASE("uhg parser reports offending line numbers") {
    auto expect_line = [](const std::string& text, int line) {
        std::istringstream in(text);
        try {
            read_uhg(in);
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line == line);
        }
    };
    expect_line("3 4 2\n1 2 3\n1 2\n", 3);          // wrong arity
    expect_line("3 4 2\n1 2 3\n1 2 9\n", 3);        // out of range
    expect_line("3 4 2\n1 2 3\n3 2 1\n", 3);        // duplicate edge
    expect_line("3 4 2\n1 2 2\n1 2 4\n", 2);        // repeated vertex
    expect_line("3 4\n", 1);                        // bad header
    expect_line("3 4 2\n1 2 3\n", 3);               // missing edge line
    expect_line("3 4 1\n1 2 3\n1 2 4\n", 3);        // extra edge line
    expect_line("3 4 2\n1 2 x\n1 2 4\n", 2);        // non-integer
}
