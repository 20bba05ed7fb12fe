#include <boxcert/errors.hh>
#include <boxcert/oracle.hh>

#include <doctest.h>

#include <random>

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
}

TEST_SUITE("oracle")
{
    TEST_CASE("recognition")
    {
        auto p5 = interval_recognition(path_graph(5));
        REQUIRE(p5);
        CHECK(verify(path_graph(5), *p5).ok);
        auto u5 = unit_interval_recognition(path_graph(5));
        REQUIRE(u5);
        CHECK(verify(path_graph(5), *u5).ok);

        CHECK(! interval_recognition(cycle_graph(4)));
        CHECK(interval_recognition(star_graph(3)));
        CHECK(! unit_interval_recognition(star_graph(3)));
    }

    TEST_CASE("recognition agrees with the independent characterizations")
    {
        std::mt19937_64 rng(17);
        for (int trial = 0 ; trial < 80 ; ++trial) {
            auto g = random_graph(3 + trial % 6, 0.5, rng);
            auto model = interval_recognition(g);
            bool interval = is_chordal(g) && is_asteroidal_triple_free(g);
            CHECK(model.has_value() == interval);
            if (model)
                CHECK(verify(g, *model).ok);
            auto unit = unit_interval_recognition(g);
            CHECK(unit.has_value() == (interval && ! has_induced_claw(g)));
            if (unit)
                CHECK(verify(g, *unit).ok);
        }
    }

    TEST_CASE("sandwich problems")
    {
        Edge forbid[] = { { 0, 2 } };
        CHECK(interval_sandwich(cycle_graph(4), forbid));
        Edge chords[] = { { 0, 2 }, { 1, 3 } };
        CHECK(! interval_sandwich(cycle_graph(4), chords));
        Edge none[1];
        CHECK(interval_sandwich(cycle_graph(4), std::span<const Edge>(none, 0)));
        auto model = interval_sandwich(path_graph(4), forbid);
        REQUIRE(model);
        CHECK(! realize(*model).adjacent(0, 2));
        CHECK(unit_interval_sandwich(star_graph(3), std::span<const Edge>(none, 0)));
        Edge leaves[] = { { 1, 2 }, { 1, 3 }, { 2, 3 } };
        CHECK(! unit_interval_sandwich(star_graph(3), leaves));
        CHECK(interval_sandwich(star_graph(3), leaves));
    }

    TEST_CASE("exact boxicity")
    {
        for (int n = 1 ; n <= 8 ; ++n)
            CHECK(exact_boxicity(complete_graph(n), 3).value == 0);
        auto c4 = exact_boxicity(cycle_graph(4), 3);
        CHECK(c4.value == 2);
        CHECK(c4.optimal);
        REQUIRE(c4.witness);
        CHECK(verify(cycle_graph(4), *c4.witness).ok);
        CHECK(exact_boxicity(crown_graph(3), 3).value == 2);
        CHECK(exact_boxicity(crown_graph(4), 3).value == 2);
        CHECK(exact_boxicity(path_graph(6), 3).value == 1);

        auto capped = exact_boxicity(cycle_graph(4), 1);
        CHECK(capped.exceeded);
        CHECK(capped.value == 2);
        CHECK(! capped.witness);

        CHECK_THROWS_AS(exact_boxicity(path_graph(13), 2), SizeLimitError);
    }

    TEST_CASE("exact cubicity")
    {
        CHECK(exact_cubicity(star_graph(4), 4).value == 2);
        CHECK(exact_cubicity(star_graph(8), 4).value == 3);
        auto c4 = exact_cubicity(cycle_graph(4), 4);
        CHECK(c4.value == 2);
        REQUIRE(c4.witness);
        CHECK(verify(cycle_graph(4), *c4.witness).ok);
        auto matching = power(complete_graph(2), 2, ProductKind::direct);
        CHECK(exact_cubicity(matching, 3).value == 1);
        CHECK(exact_boxicity(matching, 3).value == 1);
    }

    TEST_CASE("oracle witnesses on random graphs")
    {
        std::mt19937_64 rng(29);
        for (int trial = 0 ; trial < 20 ; ++trial) {
            auto g = random_graph(4 + trial % 4, 0.55, rng);
            auto b = exact_boxicity(g, 4);
            auto c = exact_cubicity(g, 5);
            REQUIRE(b.witness);
            REQUIRE(c.witness);
            CHECK(verify(g, *b.witness).ok);
            CHECK(verify(g, *c.witness).ok);
            CHECK(b.value <= c.value);
            CHECK(dimensions(*b.witness) == b.value);
        }
    }
}
