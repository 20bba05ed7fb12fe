// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <boxcert/bounds.hh>
#include <boxcert/constructions.hh>
#include <boxcert/errors.hh>
#include <boxcert/families.hh>
#include <boxcert/oracle.hh>
#include <boxcert/poset.hh>

#include <cmath>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>

using namespace boxcert;
namespace fs = std::filesystem;

namespace
{
    struct Outcome
    {
        bool ok = true;
        std::string detail;

        auto expect(bool condition, const std::string & what) -> void
        {
            if (! condition && ok) {
                ok = false;
                detail = what;
            }
        }
    };

    auto ceil_log2(int n) -> int
    {
        int bits = 0;
        while ((1 << bits) < n)
            ++bits;
        return bits;
    }

    auto slurp(const fs::path & p) -> std::string
    {
        std::ifstream in(p);
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    }

    auto run_cli(const std::string & args) -> int
    {
        auto command = std::string(BOXCERT_CLI) + " " + args + " > /dev/null 2>&1";
        int raw = std::system(command.c_str());
        return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    }

    auto box_value(const Graph & g, int kmax = 4) -> int
    {
        return exact_boxicity(g, kmax).value;
    }

    auto random_graph(int n, std::mt19937_64 & rng) -> Graph
    {
        std::bernoulli_distribution coin(0.5);
        std::vector<Edge> edges;
        for (int u = 0 ; u < n ; ++u)
            for (int v = u + 1 ; v < n ; ++v)
                if (coin(rng))
                    edges.emplace_back(u, v);
        return Graph(n, edges);
    }

    auto ac1() -> Outcome
    {
        Outcome o;
        for (int n = 1 ; n <= 8 ; ++n)
            o.expect(box_value(complete_graph(n)) == 0, "box(K" + std::to_string(n) + ")");
        o.expect(box_value(cycle_graph(4)) == 2, "box(C4)");
        for (int q : { 3, 4 })
            o.expect(box_value(crown_graph(q)) == (q + 1) / 2, "box(crown " + std::to_string(q) + ")");
        for (int n = 2 ; n <= 8 ; ++n)
            o.expect(exact_cubicity(star_graph(n), 4).value == ceil_log2(n), "cub(S" + std::to_string(n) + ")");
        auto matching = power(complete_graph(2), 2, ProductKind::direct);
        o.expect(box_value(matching) == 1 && exact_cubicity(matching, 3).value == 1, "matching");
        return o;
    }

    auto ac2() -> Outcome
    {
        Outcome o;
        auto fixture = std::string(BOXCERT_FIXTURES) + "/figure1_c4_p3.box";
        auto rep = read_representation_file(fixture);
        auto target = product(cycle_graph(4), path_graph(3), ProductKind::strong);
        o.expect(size(rep) == 12 && dimensions(rep) == 2, "fixture shape");
        o.expect(verify(target, rep).ok, "library verify");
        o.expect(run_cli("verify -e 'strong(C4,P3)' -r " + fixture) == 0, "cli exit code");
        Graph factors[] = { cycle_graph(4), path_graph(3) };
        o.expect(dimensions(rep) < thm1_strong(factors, RepKind::box).dimensions(), "2 < product-of-factors bound");
        return o;
    }

    auto ac3() -> Outcome
    {
        Outcome o;
        auto s = product(star_graph(2), star_graph(2), ProductKind::strong);
        o.expect(s.has_universal_vertex(), "universal vertex");
        o.expect(box_value(star_graph(2)) + box_value(star_graph(2)) == 2, "factor values");
        o.expect(box_value(s) == 2, "oracle value");
        return o;
    }

    auto ac4() -> Outcome
    {
        Outcome o;
        for (int d = 2 ; d <= 4 ; ++d) {
            auto c = thm4_hypercube(d);
            o.expect(c.report.ok && c.target == hypercube_graph(d) && verify(c.target, c.rep).ok, "certificate d=" + std::to_string(d));
            if (d <= 3) {
                auto r = exact_boxicity(hypercube_graph(d), 4);
                o.expect(r.optimal && r.value <= c.ledger_total(), "oracle within ledger d=" + std::to_string(d));
            }
        }
        auto b3 = exact_pdim(boolean_layer_poset(3, 1, 2).poset, 4);
        o.expect(b3.dimension == 3 && b3.exhausted_below, "pdim B3(1,2)");
        auto b2 = exact_pdim(boolean_layer_poset(2, 0, 1).poset, 4);
        o.expect(b2.dimension == 2 && b2.exhausted_below, "pdim B2(0,1)");
        return o;
    }

    auto ac5() -> Outcome
    {
        Outcome o;
        auto c = thm6_hamming(3, 2, RepKind::box);
        o.expect(c.report.ok && c.target == hamming_graph(3, 2) && verify(c.target, c.rep).ok, "certificate");
        auto r = exact_boxicity(c.target, 4);
        o.expect(r.optimal && r.value >= ceil_log2(3), "oracle lower bound");
        return o;
    }

    auto ac6() -> Outcome
    {
        Outcome o;
        for (int n : { 8, 12, 16, 20 }) {
            int q = int(guaranteed_family_size(n));
            int successes = 0;
            for (std::uint64_t seed = 1 ; seed <= 10 ; ++seed) {
                try {
                    auto found = random_double_distinguishing(n, q, seed * 1000, 64);
                    o.expect(verify_double_distinguishing(found.family).ok && found.family.size() == q,
                            "family check n=" + std::to_string(n));
                    if (! found.from_fallback)
                        ++successes;
                }
                catch (const NotFoundError &) {
                }
            }
            o.expect(successes >= 9, "success count n=" + std::to_string(n) + " was " + std::to_string(successes));
        }
        return o;
    }

    auto ac7() -> Outcome
    {
        Outcome o;
        for (auto qs : { std::vector<int>{ 2, 2 }, std::vector<int>{ 3, 2 }, std::vector<int>{ 3, 3 }, std::vector<int>{ 2, 2, 2 } }) {
            int n = 1, sum = 0, cube = 0;
            double lower = 0;
            for (int q : qs)
                n *= q;
            for (int q : qs) {
                sum += q;
                cube += q * ceil_log2(n / q);
                lower += 0.5 * (q - 2);
            }
            auto b = thm8_direct_complete(qs, RepKind::box);
            auto c = thm8_direct_complete(qs, RepKind::cube);
            o.expect(b.report.ok && b.dimensions() == sum, "box dimension");
            o.expect(c.report.ok && c.dimensions() == cube, "cube dimension");
            auto exact = exact_boxicity(b.target, 4);
            o.expect(exact.optimal && lower <= exact.value, "lower bound vs oracle");
        }
        return o;
    }

    auto ac8() -> Outcome
    {
        Outcome o;
        for (auto second : { cycle_graph(4), path_graph(3) }) {
            Graph factors[] = { path_graph(3), second };
            auto c = thm3_cartesian_via_cubes(factors, RepKind::box);
            int sizes[] = { 3, second.size() };
            auto audit = audit_thm3(c, sizes);
            o.expect(c.report.ok && verify(c.target, c.rep).ok, "certificate");
            o.expect(audit.ok() && audit.layer_non_edges > 0 && audit.cross_non_edges > 0, "audit");
        }
        return o;
    }

    auto ac9() -> Outcome
    {
        Outcome o;
        std::mt19937_64 rng(2024);
        std::vector<Graph> corpus;
        std::uniform_int_distribution<int> size(1, 7);
        for (int i = 0 ; i < 20 ; ++i)
            corpus.push_back(random_graph(size(rng), rng));

        std::vector<int> values;
        for (auto & g : corpus)
            values.push_back(box_value(g));

        for (int i = 0 ; i < 20 ; ++i) {
            auto & g = corpus[i];
            auto & h = corpus[(i + 1) % 20];
            auto tag = " at " + std::to_string(i);
            if (g.size() + h.size() <= 12) {
                int b1 = values[i], b2 = values[(i + 1) % 20];
                o.expect(box_value(disjoint_union(g, h)) == std::max({ b1, b2, 1 }), "disjoint union" + tag);
                o.expect(box_value(join(g, h)) == b1 + b2, "join" + tag);
            }
            o.expect(box_value(add_universal(g, 2)) == values[i], "universal vertex" + tag);
        }
        return o;
    }

    auto ac10() -> Outcome
    {
        Outcome o;
        auto root = fs::temp_directory_path() / "boxcert-acceptance";
        fs::remove_all(root);
        const char * commands[] = {
            "--thm 1 --expr 'strong(C4,P3)'",
            "--thm 3 --expr 'cartesian(P3,C4)'",
            "--thm 4 --d 3",
            "--thm 6 --q 3 --d 2 --seed 11",
            "--thm 6 --q 3 --d 2 --mode cube --seed 11",
            "--thm 8 --qs 3,3 --mode cube",
            "--thm 9 --expr 'direct(P3,P3)'",
        };
        int index = 0;
        for (auto args : commands) {
            auto a = root / (std::to_string(index) + "a"), b = root / (std::to_string(index) + "b");
            ++index;
            o.expect(run_cli(std::string("construct ") + args + " -o " + a.string()) == 0, std::string("run ") + args);
            o.expect(run_cli(std::string("construct ") + args + " -o " + b.string()) == 0, std::string("rerun ") + args);
            for (auto file : { "graph.txt", "rep.txt", "provenance.txt" })
                o.expect(fs::exists(a / file) && slurp(a / file) == slurp(b / file), std::string("bytes differ for ") + args);
        }
        fs::remove_all(root);
        return o;
    }
}

auto main() -> int
{
    std::pair<const char *, std::function<Outcome ()>> criteria[] = {
        { "oracle matches known small values", ac1 },
        { "transcribed 2-box fixture verifies for C4 strong P3", ac2 },
        { "star strong star attains the sum of factor boxicities", ac3 },
        { "hypercube pipeline, oracle comparison and layer poset dimensions", ac4 },
        { "Hamming pipeline for q=3, d=2 with oracle lower bound", ac5 },
        { "double distinguishing families at the guaranteed size", ac6 },
        { "direct products of complete graphs", ac7 },
        { "Cartesian pipeline non-edge audit", ac8 },
        { "assembly laws on 20 random graphs", ac9 },
        { "byte-identical reruns", ac10 },
    };

    int failures = 0, index = 0;
    for (auto & [name, check] : criteria) {
        ++index;
        Outcome o;
        try {
            o = check();
        }
        catch (const std::exception & e) {
            o = { false, std::string("exception: ") + e.what() };
        }
        std::cout << "AC" << index << (o.ok ? " PASS: " : " FAIL: ") << name;
        if (! o.ok)
            std::cout << " (" << o.detail << ")";
        std::cout << std::endl;
        failures += ! o.ok;
    }
    return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
