#include <boxcert/errors.hh>
#include <boxcert/poset.hh>

#include <doctest.h>

#include <algorithm>
#include <sstream>

using namespace boxcert;

namespace
{
    auto chain(int n) -> Poset
    {
        std::vector<std::pair<int, int>> r;
        for (int i = 0 ; i + 1 < n ; ++i)
            r.emplace_back(i, i + 1);
        return Poset(n, r);
    }
}

TEST_SUITE("posets")
{
    TEST_CASE("construction closes transitively and rejects cycles")
    {
        auto c = chain(3);
        CHECK(c.less(0, 2));
        CHECK(! c.less(2, 0));
        CHECK(! c.has_height_at_most_two());

        std::vector<std::pair<int, int>> cyclic{ { 0, 1 }, { 1, 0 } };
        CHECK_THROWS_AS(Poset(2, cyclic), InvalidArgument);
        std::vector<std::pair<int, int>> reflexive{ { 1, 1 } };
        CHECK_THROWS_AS(Poset(2, reflexive), InvalidArgument);
        CHECK_THROWS_AS(LinearExtension({ 0, 0, 1 }), InvalidArgument);
    }

    TEST_CASE("layer posets")
    {
        auto b2 = boolean_layer_poset(2, 0, 1);
        CHECK(b2.poset.size() == 3);
        CHECK(b2.poset.less(0, 1));
        CHECK(b2.poset.less(0, 2));
        CHECK(! b2.poset.comparable(1, 2));

        auto b3 = boolean_layer_poset(3, 1, 2);
        REQUIRE(b3.poset.size() == 6);
        for (int a = 0 ; a < 3 ; ++a)
            for (int b = 3 ; b < 6 ; ++b)
                CHECK(b3.poset.less(a, b) == ((b3.vertex[a] & b3.vertex[b]) == b3.vertex[a]));
        CHECK(b3.comparability.edge_count() == 6);

        auto b4 = boolean_layer_poset(4, 1, 2);
        REQUIRE(b4.poset.size() == 10);
        for (int b = 4 ; b < 10 ; ++b) {
            CHECK(hamming_weight(b4.vertex[b]) == 2);
            int below = 0;
            for (int a = 0 ; a < 4 ; ++a)
                below += b4.poset.less(a, b);
            CHECK(below == 2);
        }
        CHECK_THROWS_AS(boolean_layer_poset(3, 2, 1), InvalidArgument);
    }

    TEST_CASE("realizer checks")
    {
        auto b2 = boolean_layer_poset(2, 0, 1).poset;
        Realizer r{ { LinearExtension({ 0, 1, 2 }), LinearExtension({ 0, 2, 1 }) } };
        CHECK(is_realizer(b2, r));
        Realizer one{ { LinearExtension({ 0, 1, 2 }) } };
        CHECK(! is_realizer(b2, one));
        CHECK(! LinearExtension({ 1, 0, 2 }).extends(b2));
    }

    TEST_CASE("exact dimension")
    {
        auto c = exact_pdim(chain(3), 4);
        CHECK(c.dimension == 1);
        REQUIRE(c.realizer);
        CHECK(is_realizer(chain(3), *c.realizer));

        auto b2 = boolean_layer_poset(2, 0, 1);
        auto r2 = exact_pdim(b2.poset, 4);
        CHECK(r2.dimension == 2);
        CHECK(r2.exhausted_below);

        auto b3 = boolean_layer_poset(3, 1, 2);
        auto r3 = exact_pdim(b3.poset, 4);
        CHECK(r3.dimension == 3);
        CHECK(r3.exhausted_below);
        REQUIRE(r3.realizer);
        CHECK(is_realizer(b3.poset, *r3.realizer));

        auto capped = exact_pdim(b3.poset, 2);
        CHECK(capped.dimension == 3);
        CHECK(! capped.realizer);

        CHECK_THROWS_AS(exact_pdim(chain(30), 2), SizeLimitError);
    }

    TEST_CASE("realizer to box")
    {
        std::vector<std::pair<int, int>> edge{ { 0, 1 } };
        Poset ab(2, edge);
        auto single = realizer_to_box(ab, Realizer{ { LinearExtension({ 0, 1 }) } });
        CHECK(single.dimensions() == 2);
        CHECK(verify(comparability_graph(ab), single).ok);

        for (auto [d, lo, hi, expected] : { std::tuple{ 2, 0, 1, 4 }, std::tuple{ 3, 1, 2, 6 } }) {
            auto layer = boolean_layer_poset(d, lo, hi);
            auto r = exact_pdim(layer.poset, 4);
            REQUIRE(r.realizer);
            auto rep = realizer_to_box(layer.poset, *r.realizer);
            CHECK(rep.dimensions() == expected);
            CHECK(verify(layer.comparability, rep).ok);
        }
        CHECK(comparability_graph(boolean_layer_poset(2, 0, 1).poset) == star_graph(2));
    }

    TEST_CASE("poset text format")
    {
        auto b3 = boolean_layer_poset(3, 1, 2);
        auto r = exact_pdim(b3.poset, 4);
        std::ostringstream out;
        write_poset(out, b3.poset, &*r.realizer);
        std::istringstream in(out.str());
        auto [p, realizer] = read_poset(in);
        CHECK(p == b3.poset);
        REQUIRE(realizer);
        CHECK(is_realizer(p, *realizer));

        for (auto bad : { "2\n0 < 2\n", "2\n0 > 1\n", "2\nL: 0\n" }) {
            std::istringstream b(bad);
            CHECK_THROWS_AS(read_poset(b), ParseError);
        }
    }
}
