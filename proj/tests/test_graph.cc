#include <boxcert/errors.hh>
#include <boxcert/expression.hh>
#include <boxcert/graph.hh>

#include <doctest.h>

#include <random>
#include <sstream>

using namespace boxcert;

namespace
{
    auto random_graph(int n, double p, std::mt19937_64 & rng) -> Graph
    {
        std::bernoulli_distribution coin(p);
        std::vector<Edge> edges;
        for (int u = 0 ; u < n ; ++u)
            for (int v = u + 1 ; v < n ; ++v)
                if (coin(rng))
                    edges.emplace_back(u, v);
        return Graph(n, edges);
    }

    auto is_regular(const Graph & g, int k) -> bool
    {
        for (int v = 0 ; v < g.size() ; ++v)
            if (g.degree(v) != k)
                return false;
        return true;
    }
}

TEST_SUITE("graph")
{
    TEST_CASE("generators")
    {
        CHECK(isomorphic(hamming_graph(2, 2), cycle_graph(4)));
        auto crown = crown_graph(3);
        CHECK(crown.size() == 6);
        CHECK(crown.edge_count() == 6);
        CHECK(isomorphic(crown, cycle_graph(6)));

        auto h = hamming_graph(3, 2);
        CHECK(h.size() == 9);
        CHECK(h.edge_count() == 18);
        CHECK(is_regular(h, 4));

        CHECK(star_graph(4).degree(0) == 4);
        CHECK(hypercube_graph(3).label(5) == Label{ 1, 0, 1 });

        CHECK_THROWS_AS(complete_graph(0), InvalidArgument);
        CHECK_THROWS_AS(crown_graph(1), InvalidArgument);
        CHECK_THROWS_AS(hamming_graph(1, 2), InvalidArgument);
        CHECK_THROWS_AS(cycle_graph(2), InvalidArgument);
    }

    TEST_CASE("binary products")
    {
        auto k2 = complete_graph(2);
        CHECK(product(k2, k2, ProductKind::strong) == complete_graph(4));
        auto matching = product(k2, k2, ProductKind::direct);
        CHECK(matching.edge_count() == 2);
        CHECK(is_regular(matching, 1));
        CHECK(isomorphic(product(k2, k2, ProductKind::cartesian), cycle_graph(4)));
    }

    TEST_CASE("powers")
    {
        auto k2 = complete_graph(2);
        auto q3 = power(k2, 3, ProductKind::cartesian);
        CHECK(q3.size() == 8);
        CHECK(q3.edge_count() == 12);
        auto m = power(k2, 2, ProductKind::direct);
        CHECK(m.edge_count() == 2);
        CHECK(is_regular(m, 1));
        CHECK(power(complete_graph(3), 2, ProductKind::cartesian) == hamming_graph(3, 2));
        CHECK(q3.label(6) == Label{ 1, 1, 0 });
        CHECK_THROWS_AS(power(complete_graph(9), 5, ProductKind::cartesian), SizeLimitError);
        CHECK_THROWS_AS(power(k2, 0, ProductKind::strong), InvalidArgument);
    }

    TEST_CASE("assembly")
    {
        CHECK(join(complete_graph(1), complete_graph(1)) == complete_graph(2));
        auto u = disjoint_union(cycle_graph(4), cycle_graph(4));
        CHECK(u.size() == 8);
        CHECK(u.edge_count() == 8);
        CHECK(! u.adjacent(0, 4));
        CHECK(add_universal(path_graph(2), 1) == complete_graph(3));
        CHECK(add_universal(path_graph(3), 0) == path_graph(3));

        int vertices[] = { 0, 2 };
        CHECK(induced(path_graph(3), vertices).edge_count() == 0);
        int bad[] = { 0, 5 };
        CHECK_THROWS_AS(induced(path_graph(3), bad), InvalidArgument);
        int repeated[] = { 1, 1 };
        CHECK_THROWS_AS(induced(path_graph(3), repeated), InvalidArgument);
    }

    TEST_CASE("colourings")
    {
        CHECK(exact_coloring(cycle_graph(4)).k == 2);
        CHECK(exact_coloring(cycle_graph(5)).k == 3);
        CHECK(greedy_coloring(complete_graph(5)).k == 5);
        CHECK_THROWS_AS(exact_coloring(path_graph(17)), SizeLimitError);

        std::mt19937_64 rng(11);
        for (int trial = 0 ; trial < 30 ; ++trial) {
            auto g = random_graph(3 + trial % 8, 0.45, rng);
            auto exact = exact_coloring(g);
            auto greedy = greedy_coloring(g);
            CHECK(is_proper_coloring(g, exact));
            CHECK(is_proper_coloring(g, greedy));
            CHECK(exact.k <= greedy.k);
        }
    }

    TEST_CASE("product laws on random pairs")
    {
        std::mt19937_64 rng(5);
        for (int trial = 0 ; trial < 25 ; ++trial) {
            auto g1 = random_graph(1 + trial % 4, 0.5, rng);
            auto g2 = random_graph(1 + (trial / 4) % 4, 0.5, rng);
            auto s = product(g1, g2, ProductKind::strong);
            auto c = product(g1, g2, ProductKind::cartesian);
            auto d = product(g1, g2, ProductKind::direct);
            for (int u = 0 ; u < s.size() ; ++u)
                for (int v = u + 1 ; v < s.size() ; ++v) {
                    CHECK(s.adjacent(u, v) == (c.adjacent(u, v) || d.adjacent(u, v)));
                    CHECK(! (c.adjacent(u, v) && d.adjacent(u, v)));
                }
        }
    }

    TEST_CASE("fibres of strong and cartesian powers are the base graph")
    {
        auto g = path_graph(3);
        for (auto kind : { ProductKind::strong, ProductKind::cartesian }) {
            auto p = power(g, 3, kind);
            int radices[] = { 3, 3, 3 };
            for (int axis = 0 ; axis < 3 ; ++axis) {
                std::vector<int> fibre;
                for (int x = 0 ; x < 3 ; ++x) {
                    int digits[] = { 1, 2, 0 };
                    digits[axis] = x;
                    fibre.push_back(mixed_radix_index(digits, radices));
                }
                CHECK(isomorphic(induced(p, fibre), g));
            }
        }
    }

    TEST_CASE("mixed radix round trip")
    {
        int radices[] = { 3, 1, 4 };
        for (int i = 0 ; i < 12 ; ++i)
            CHECK(mixed_radix_index(mixed_radix_digits(i, radices), radices) == i);
        CHECK_THROWS(mixed_radix_digits(12, radices));
    }

    TEST_CASE("graph text format")
    {
        auto g = hamming_graph(3, 2);
        std::istringstream in(to_text(g));
        CHECK(read_graph(in) == g);

        std::istringstream commented("# a path\n3 2\n\n0 1\n# middle\n1 2\n");
        CHECK(read_graph(commented) == path_graph(3));

        for (auto text : { "3 2\n0 1\n0 1\n", "3 1\n1 1\n", "3 1\n1 0\n", "3 1\n0 3\n", "3 2\n0 1\n", "3 1\n0 1\n1 2\n", "x\n" }) {
            std::istringstream bad(text);
            CHECK_THROWS_AS(read_graph(bad), ParseError);
        }
    }

    TEST_CASE("expressions")
    {
        CHECK(build_graph(parse_expression("strong(C4, P3)")) == product(cycle_graph(4), path_graph(3), ProductKind::strong));
        CHECK(build_graph(parse_expression("power(cartesian, K2, 3)")) == hypercube_graph(3));
        CHECK(build_graph(parse_expression("hamming(3,2)")) == hamming_graph(3, 2));
        CHECK(build_graph(parse_expression("universal(P2, 1)")) == complete_graph(3));
        CHECK(build_graph(parse_expression("union(K1,K1)")).edge_count() == 0);

        auto view = product_view(parse_expression("cartesian(Q2, strong(K2,K2), P3)"));
        REQUIRE(view);
        CHECK(view->kind == ProductKind::cartesian);
        CHECK(view->factors.size() == 4);
        CHECK(! product_view(parse_expression("C5")));

        auto e = parse_expression("direct(crown(3),K2)");
        CHECK(parse_expression(to_string(e)).operands.size() == 2);

        for (auto text : { "K", "strong(K2", "foo(1)", "hamming(3)", "K2 K3", "power(weird,K2,2)" })
            CHECK_THROWS_AS(parse_expression(text), ParseError);
    }
}
