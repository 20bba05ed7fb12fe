#include <boxcert/constructions.hh>
#include <boxcert/errors.hh>
#include <boxcert/oracle.hh>

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace boxcert;

namespace
{
    auto verified(const Certificate & c) -> bool
    {
        return c.report.ok && verify(c.target, c.rep).ok && c.ledger_total() == c.dimensions();
    }

    auto slurp(const std::filesystem::path & p) -> std::string
    {
        std::ifstream in(p);
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    }
}

TEST_SUITE("constructions")
{
    TEST_CASE("certify rejects a wrong representation")
    {
        BoxRepresentation apart(2, 1);
        apart.set(1, 0, Interval(2, 3));
        CHECK_THROWS_AS(certify("manual", complete_graph(2), apart, { { "all", 1 } }), VerificationError);
        CHECK_THROWS_AS(certify("manual", empty_graph(2), apart, { { "all", 2 } }), VerificationError);
        CHECK(certify("manual", empty_graph(2), apart, { { "all", 1 } }).dimensions() == 1);
    }

    TEST_CASE("strong products")
    {
        Graph k2s[] = { complete_graph(2), complete_graph(2), complete_graph(2) };
        auto k8 = thm1_strong(k2s, RepKind::box);
        CHECK(k8.target == complete_graph(8));
        CHECK(k8.dimensions() == 0);

        Graph cp[] = { cycle_graph(4), path_graph(3) };
        auto c = thm1_strong(cp, RepKind::box);
        CHECK(verified(c));
        CHECK(c.dimensions() == 3);
        CHECK(c.ledger.size() == 2);

        Graph stars[] = { star_graph(2), star_graph(2) };
        auto s = thm1_strong(stars, RepKind::box);
        CHECK(verified(s));
        CHECK(s.dimensions() == 2);
        CHECK(exact_boxicity(s.target, 3).value == 2);

        CHECK(verified(thm1_strong(cp, RepKind::cube)));

        Representation wrong[] = { BoxRepresentation(4, 0), BoxRepresentation(3, 0) };
        CHECK_THROWS_AS(thm1_strong(cp, RepKind::box, {}, wrong), VerificationError);
    }

    TEST_CASE("cartesian products via strong products")
    {
        Graph k2k2[] = { complete_graph(2), complete_graph(2) };
        auto c4 = thm2_cartesian_via_strong(k2k2, RepKind::box);
        CHECK(verified(c4));
        CHECK(isomorphic(c4.target, cycle_graph(4)));

        Graph pp[] = { path_graph(3), path_graph(3) };
        auto p = thm2_cartesian_via_strong(pp, RepKind::box);
        CHECK(verified(p));
        int colour_part = cartesian_complete_product(std::vector<int>{ 2, 2 }, RepKind::box).dimensions();
        CHECK(p.dimensions() == 1 + 1 + colour_part);

        Graph single[] = { cycle_graph(4) };
        auto one = thm2_cartesian_via_strong(single, RepKind::box);
        CHECK(one.dimensions() == 2);
        CHECK(one.target == cycle_graph(4));
    }

    TEST_CASE("cartesian products via cubes")
    {
        for (int d = 1 ; d <= 3 ; ++d) {
            std::vector<Graph> k2s(d, complete_graph(2));
            auto q = thm3_cartesian_via_cubes(k2s, RepKind::box);
            CHECK(verified(q));
            CHECK(q.target == hypercube_graph(d));
        }

        Graph pc[] = { path_graph(3), cycle_graph(4) };
        auto c = thm3_cartesian_via_cubes(pc, RepKind::box);
        CHECK(verified(c));
        int sizes[] = { 3, 4 };
        auto audit = audit_thm3(c, sizes);
        CHECK(audit.ok());
        CHECK(audit.layer_non_edges > 0);
        CHECK(audit.cross_non_edges > 0);

        Graph lone[] = { path_graph(4) };
        auto h = thm3_cartesian_via_cubes(lone, RepKind::box);
        CHECK(h.ledger.front().stage == "H");
        CHECK(h.dimensions() == h.ledger.front().dimensions);
    }

    TEST_CASE("hypercubes")
    {
        for (int d = 1 ; d <= 4 ; ++d) {
            auto c = thm4_hypercube(d);
            CHECK(verified(c));
            CHECK(c.target == hypercube_graph(d));
        }
        CHECK(thm4_hypercube(2).dimensions() >= exact_boxicity(cycle_graph(4), 3).value);
        CHECK_THROWS_AS(thm4_hypercube(9), SizeLimitError);
    }

    TEST_CASE("hamming graphs")
    {
        auto box = thm6_hamming(3, 2, RepKind::box);
        CHECK(verified(box));
        CHECK(box.target == hamming_graph(3, 2));
        CHECK(box.dimensions() == 16 * thm4_hypercube(2).dimensions());
        CHECK(exact_boxicity(box.target, 3).value >= 2);

        auto cube = thm6_hamming(3, 2, RepKind::cube);
        CHECK(verified(cube));
        CHECK(cube.dimensions() == 32);

        auto binary = thm6_hamming(2, 2, RepKind::box);
        CHECK(verified(binary));
        CHECK(binary.target == hamming_graph(2, 2));

        auto mixed = cartesian_complete_product(std::vector<int>{ 3, 1, 2 }, RepKind::box);
        CHECK(verified(mixed));
        CHECK(mixed.target.size() == 6);
    }

    TEST_CASE("direct products of complete graphs")
    {
        for (auto qs : { std::vector<int>{ 2, 2 }, std::vector<int>{ 3, 2 }, std::vector<int>{ 3, 3 }, std::vector<int>{ 2, 2, 2 } }) {
            auto box = thm8_direct_complete(qs, RepKind::box);
            CHECK(verified(box));
            int sum = 0, cubes = 0, n = 1;
            for (int q : qs)
                n *= q;
            for (int q : qs) {
                sum += q;
                cubes += q * int(std::ceil(std::log2(double(n) / q) - 1e-9));
            }
            CHECK(box.dimensions() == sum);
            auto cube = thm8_direct_complete(qs, RepKind::cube);
            CHECK(verified(cube));
            CHECK(cube.dimensions() == cubes);
        }
        auto crown = thm8_direct_complete(std::vector<int>{ 3, 2 }, RepKind::box);
        CHECK(isomorphic(crown.target, cycle_graph(6)));
        CHECK(exact_boxicity(crown.target, 3).value == 2);
        CHECK(exact_boxicity(thm8_direct_complete(std::vector<int>{ 2, 2 }, RepKind::box).target, 3).value == 1);
        CHECK_THROWS_AS(thm8_direct_complete(std::vector<int>{ 1, 3 }, RepKind::box), InvalidArgument);
    }

    TEST_CASE("direct products of general graphs")
    {
        Graph k2k2[] = { complete_graph(2), complete_graph(2) };
        auto m = thm7_direct_via_strong(k2k2, RepKind::box);
        CHECK(verified(m));
        CHECK(m.target.edge_count() == 2);

        Graph pp[] = { path_graph(3), path_graph(3) };
        CHECK(verified(thm7_direct_via_strong(pp, RepKind::box)));
        auto general = cor9_direct_general(pp);
        CHECK(verified(general));

        Graph kk[] = { complete_graph(3), complete_graph(2) };
        auto c = thm7_direct_via_strong(kk, RepKind::cube);
        CHECK(verified(c));
        CHECK(exact_boxicity(c.target, 3).value == 2);

        Graph with_edgeless[] = { empty_graph(2), path_graph(3) };
        CHECK(verified(thm7_direct_via_strong(with_edgeless, RepKind::box)));
    }

    TEST_CASE("stars")
    {
        for (int n = 1 ; n <= 8 ; ++n) {
            auto s = obs7_star_cube(n);
            CHECK(verified(s));
            CHECK(s.dimensions() == int(std::ceil(std::log2(n) - 1e-9)));
            if (n >= 2)
                CHECK(s.dimensions() == exact_cubicity(star_graph(n), 4).value);
        }
    }

    TEST_CASE("certificate files")
    {
        auto dir = std::filesystem::temp_directory_path() / "boxcert-constructions-test";
        std::filesystem::remove_all(dir);
        auto cert = thm6_hamming(3, 2, RepKind::cube, ConstructionOptions{ .seed = 4 });
        write_certificate(dir.string(), cert);
        CHECK(read_graph_file((dir / "graph.txt").string()) == cert.target);
        CHECK(verify(cert.target, read_representation_file((dir / "rep.txt").string())).ok);
        auto provenance = slurp(dir / "provenance.txt");
        CHECK(provenance.starts_with("theorem "));
        CHECK(provenance.find("verified yes") != std::string::npos);
        CHECK(provenance.find("\nledger\n") != std::string::npos);

        auto again = thm6_hamming(3, 2, RepKind::cube, ConstructionOptions{ .seed = 4 });
        auto other = dir / "again";
        write_certificate(other.string(), again);
        CHECK(slurp(dir / "rep.txt") == slurp(other / "rep.txt"));
        CHECK(provenance == slurp(other / "provenance.txt"));
        std::filesystem::remove_all(dir);
    }
}
