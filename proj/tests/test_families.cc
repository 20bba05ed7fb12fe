#include <boxcert/errors.hh>
#include <boxcert/families.hh>
#include <boxcert/oracle.hh>

#include <doctest.h>

#include <sstream>

using namespace boxcert;

namespace
{
    // Brute force over every pair of pairs, independent of the library's pruned scan.
    auto naive_double_distinguishing(const SetFamily & f) -> bool
    {
        for (int a = 0 ; a < f.size() ; ++a)
            for (int a2 = a + 1 ; a2 < f.size() ; ++a2)
                for (int b = 0 ; b < f.size() ; ++b)
                    for (int b2 = b + 1 ; b2 < f.size() ; ++b2)
                        if (((f.set(a) ^ f.set(a2)) & (f.set(b) ^ f.set(b2))) == 0)
                            return false;
        return true;
    }
}

TEST_SUITE("families")
{
    TEST_CASE("quadruple check")
    {
        auto bad = verify_double_distinguishing(SetFamily(2, { 0b00, 0b01, 0b10 }));
        CHECK(! bad.ok);
        REQUIRE(bad.witness);
        CHECK(bad.witness->a == 0);
        CHECK(bad.witness->a_prime == 1);
        CHECK(bad.witness->b == 0);
        CHECK(bad.witness->b_prime == 2);

        CHECK(verify_double_distinguishing(SetFamily(2, { 0b01, 0b11 })).ok);
        CHECK(verify_double_distinguishing(SetFamily(2, { 0b01, 0b10 })).ok);
        CHECK(verify_double_distinguishing(SetFamily(5, { 0b10110 })).ok);

        for (std::uint64_t mask = 0 ; mask < 4096 ; mask += 7) {
            SetFamily f(3, { mask & 7, mask >> 3 & 7, mask >> 6 & 7, mask >> 9 & 7 });
            CHECK(verify_double_distinguishing(f).ok == naive_double_distinguishing(f));
        }
        CHECK_THROWS_AS(SetFamily(2, { 0b100 }), InvalidArgument);
    }

    TEST_CASE("random search")
    {
        auto trivial = random_double_distinguishing(4, 1, 3);
        CHECK(trivial.family.size() == 1);

        CHECK(guaranteed_family_size(20) == 4);
        CHECK(guaranteed_family_size(8) == 1);
        CHECK(hamming_universe_size(3) == 16);
        CHECK(hamming_universe_size(2) == 10);

        auto found = random_double_distinguishing(20, 4, 1);
        CHECK(found.family.size() == 4);
        CHECK(found.family.universe() == 20);
        CHECK(verify_double_distinguishing(found.family).ok);
        CHECK(naive_double_distinguishing(found.family));

        auto again = random_double_distinguishing(20, 4, 1);
        CHECK(again.family == found.family);
        CHECK(again.seed == found.seed);

        CHECK_THROWS_AS(random_double_distinguishing(2, 4, 0, 4), NotFoundError);
    }

    TEST_CASE("hamming realizers")
    {
        // Universe 1 with F = {{1}, {}}: the single map is the identity on C_4, which kills every non-edge.
        auto tiny = hamming_realizer(2, 2, SetFamily(1, { 0b1, 0b0 }));
        CHECK(tiny.maps.size() == 1);
        CHECK(verify_realizer(tiny).ok);

        auto k2 = hamming_realizer(2, 1, SetFamily(2, { 0b01, 0b10 }));
        CHECK(k2.maps.size() == 2);
        CHECK(verify_realizer(k2).ok);

        auto family = random_double_distinguishing(16, 3, 0).family;
        auto realizer = hamming_realizer(3, 2, family);
        CHECK(realizer.maps.size() == 16);
        CHECK(verify_realizer(realizer).ok);

        auto c4 = std::get<BoxRepresentation>(*exact_boxicity(hamming_graph(2, 2), 3).witness);
        auto rep = compose_realizer(realizer, c4);
        CHECK(rep.dimensions() == 32);
        CHECK(verify(hamming_graph(3, 2), rep).ok);

        auto cubes = std::get<CubeRepresentation>(*exact_cubicity(hamming_graph(2, 2), 3).witness);
        CHECK(verify(hamming_graph(3, 2), compose_realizer(realizer, cubes)).ok);

        CHECK_THROWS_AS(hamming_realizer(3, 2, SetFamily(4, { 1, 2 })), InvalidArgument);
    }

    TEST_CASE("weak homomorphism checks")
    {
        auto k3 = complete_graph(3);
        CHECK(verify_realizer(WeakHomFamily{ k3, k3, { { 0, 1, 2 } } }).ok);

        auto constant = verify_realizer(WeakHomFamily{ path_graph(3), complete_graph(1), { { 0, 0, 0 } } });
        CHECK(! constant.ok);
        CHECK(constant.failure == RealizerFailure::unkilled_non_edge);
        CHECK(constant.u == 0);
        CHECK(constant.v == 2);

        auto broken = verify_realizer(WeakHomFamily{ path_graph(3), empty_graph(3), { { 0, 1, 2 } } });
        CHECK(! broken.ok);
        CHECK(broken.failure == RealizerFailure::not_weak_homomorphism);
        CHECK(broken.map == 0);

        auto identity = WeakHomFamily{ cycle_graph(4), cycle_graph(4), { { 0, 1, 2, 3 } } };
        auto c4 = std::get<BoxRepresentation>(*exact_boxicity(cycle_graph(4), 3).witness);
        CHECK(compose_realizer(identity, c4).dimensions() == 2);
        CHECK_THROWS_AS(compose_realizer(WeakHomFamily{ path_graph(3), complete_graph(1), { { 0, 0, 0 } } },
                    BoxRepresentation(1, 0)), VerificationError);
    }

    TEST_CASE("family text format")
    {
        SetFamily f(5, { 0b10101, 0, 0b11111 });
        std::istringstream in(to_text(f));
        CHECK(read_family(in) == f);
        std::istringstream commented("# found\n" + to_text(f));
        CHECK(read_family(commented) == f);
        std::istringstream bad("2 1\n3\n");
        CHECK_THROWS_AS(read_family(bad), ParseError);
    }
}
