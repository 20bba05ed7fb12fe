#include <boxcert/bounds.hh>
#include <boxcert/constructions.hh>
#include <boxcert/errors.hh>
#include <boxcert/expression.hh>
#include <boxcert/families.hh>
#include <boxcert/geometry.hh>
#include <boxcert/graph.hh>
#include <boxcert/oracle.hh>

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace boxcert;
using std::optional;
using std::string;
using std::vector;

namespace
{
    enum Exit { success = 0, verification_failed = 1, usage = 2, limit = 3, not_found = 4 };

    class UsageError : public Error
    {
        public:
            using Error::Error;
    };

    /// Writes to a temporary sibling and renames, so readers never see a partial file.
    auto emit(const string & path, const string & text) -> void
    {
        if (path.empty() || path == "-") {
            std::cout << text;
            return;
        }
        std::filesystem::path target(path);
        auto temporary = target;
        temporary += ".tmp";
        {
            std::ofstream out(temporary, std::ios::binary);
            if (! out)
                throw UsageError("cannot write " + path);
            out << text;
        }
        std::filesystem::rename(temporary, target);
    }

    auto parse_list(const string & text) -> vector<int>
    {
        vector<int> values;
        std::istringstream in(text);
        string item;
        while (std::getline(in, item, ','))
            try {
                size_t used = 0;
                values.push_back(std::stoi(item, &used));
                if (used != item.size())
                    throw ParseError("bad list item '" + item + "'");
            }
            catch (const std::logic_error &) {
                throw ParseError("bad list item '" + item + "'");
            }
        if (values.empty())
            throw ParseError("empty list");
        return values;
    }

    struct GraphSource
    {
        string file, expression;

        auto load(int max_vertices) const -> Graph
        {
            if (file.empty() == expression.empty())
                throw UsageError("give exactly one of -g FILE or -e EXPR");
            if (! file.empty())
                return read_graph_file(file);
            return build_graph(parse_expression(expression), max_vertices);
        }
    };

    auto add_graph_source(CLI::App * cmd, GraphSource & source) -> void
    {
        cmd->add_option("-g,--graph", source.file, "graph file");
        cmd->add_option("-e,--expr", source.expression, "graph expression, e.g. strong(C4,P3)");
    }

    auto factors_of(const string & text, int max_vertices) -> vector<Graph>
    {
        auto e = parse_expression(text);
        vector<Graph> factors;
        if (auto view = product_view(e))
            for (auto & f : view->factors)
                factors.push_back(build_graph(f, max_vertices));
        else
            factors.push_back(build_graph(e, max_vertices));
        return factors;
    }
}

int main(int argc, char ** argv)
{
    CLI::App app{ "Box and cube representations of graph products: construct, verify, compute." };
    app.require_subcommand(1, 1);

    int max_n = -1, max_k = -1;
    app.add_option("--max-n", max_n, "vertex limit for generators, products and exact search")->check(CLI::PositiveNumber);
    app.add_option("--max-k", max_k, "dimension limit for exact search")->check(CLI::NonNegativeNumber);

    // gen
    auto gen = app.add_subcommand("gen", "generate a named graph");
    string gen_kind, gen_expr, gen_out;
    int gen_q = 0, gen_d = 0, gen_n = 0;
    gen->add_option("--kind", gen_kind, "complete, path, cycle, star, hypercube, hamming, crown or empty");
    gen->add_option("--expr", gen_expr, "graph expression instead of --kind");
    gen->add_option("--q", gen_q);
    gen->add_option("--d", gen_d);
    gen->add_option("--n", gen_n);
    gen->add_option("-o,--output", gen_out, "output file, stdout when absent");

    // construct
    auto construct = app.add_subcommand("construct", "build and verify a certificate");
    string thm, construct_expr, construct_qs, construct_mode = "box", construct_out;
    int construct_q = 0, construct_d = 0, construct_n = 0, retries = default_family_retries;
    std::uint64_t construct_seed = 0;
    construct->add_option("--thm", thm, "1, 2, 3, 4, 6, 7, 8, 9 or obs7")->required();
    construct->add_option("--expr", construct_expr, "product whose factors are used (1, 2, 3, 7, 9)");
    construct->add_option("--q", construct_q);
    construct->add_option("--d", construct_d);
    construct->add_option("--n", construct_n);
    construct->add_option("--qs", construct_qs, "comma separated alphabet sizes (8)");
    construct->add_option("--mode", construct_mode, "box or cube")->check(CLI::IsMember({ "box", "cube" }));
    construct->add_option("--seed", construct_seed);
    construct->add_option("--retries", retries)->check(CLI::PositiveNumber);
    construct->add_option("-o,--output", construct_out, "certificate directory")->required();

    // verify
    auto verify_cmd = app.add_subcommand("verify", "check a representation against a graph");
    GraphSource verify_graph;
    string verify_rep;
    add_graph_source(verify_cmd, verify_graph);
    verify_cmd->add_option("-r,--rep", verify_rep, "representation file")->required();

    // exact
    auto exact = app.add_subcommand("exact", "exact boxicity or cubicity");
    GraphSource exact_graph;
    string exact_param, exact_witness;
    int kmax = 4;
    add_graph_source(exact, exact_graph);
    exact->add_option("--param", exact_param)->required()->check(CLI::IsMember({ "boxicity", "cubicity" }));
    exact->add_option("--kmax", kmax)->check(CLI::NonNegativeNumber);
    exact->add_option("-w,--witness", exact_witness, "write the witness representation here");

    // bound
    auto bound_cmd = app.add_subcommand("bound", "bound report for a graph expression");
    string bound_expr, bound_param;
    bound_cmd->add_option("--expr", bound_expr)->required();
    bound_cmd->add_option("--param", bound_param)->required()->check(CLI::IsMember({ "boxicity", "cubicity" }));

    // table
    auto table = app.add_subcommand("table", "bounds for the powers of a graph");
    string table_seed, table_kind, table_param;
    int dmax = 8;
    table->add_option("--seed", table_seed, "base graph expression")->required();
    table->add_option("--kind", table_kind)->required()->check(CLI::IsMember({ "strong", "cartesian", "direct" }));
    table->add_option("--param", table_param)->required()->check(CLI::IsMember({ "boxicity", "cubicity" }));
    table->add_option("--dmax", dmax)->check(CLI::PositiveNumber);

    // family
    auto family = app.add_subcommand("family", "random double distinguishing family");
    int family_n = 0, family_q = 0;
    std::uint64_t family_seed = 0;
    string family_out;
    family->add_option("--n", family_n, "universe size")->required();
    family->add_option("--q", family_q, "family size")->required();
    family->add_option("--seed", family_seed);
    family->add_option("--retries", retries)->check(CLI::PositiveNumber);
    family->add_option("-o,--output", family_out);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError & e) {
        std::cerr << "error: usage: " << e.what() << '\n';
        return usage;
    }

    ConstructionOptions options;
    if (max_n > 0) {
        options.max_vertices = max_n;
        options.box_oracle_limit = std::min(max_n, oracle_hard_limit);
        options.cube_oracle_limit = std::min(max_n, oracle_hard_limit);
    }
    if (max_k >= 0)
        options.kmax = max_k;

    try {
        if (gen->parsed()) {
            Graph g;
            if (! gen_expr.empty())
                g = build_graph(parse_expression(gen_expr), options.max_vertices);
            else {
                int size = gen_kind == "hamming" ? 0 : (gen_n ? gen_n : gen_kind == "hypercube" ? gen_d : gen_q);
                vector<int> params = gen_kind == "hamming" ? vector<int>{ gen_q, gen_d } : vector<int>{ size };
                if (gen_kind.empty())
                    throw UsageError("gen needs --kind or --expr");
                g = build_graph(generator_expression(gen_kind, params), options.max_vertices);
            }
            emit(gen_out, to_text(g));
            return success;
        }

        if (construct->parsed()) {
            auto kind = parse_rep_kind(construct_mode);
            options.seed = construct_seed;
            options.retries = retries;
            auto need_expr = [&] {
                if (construct_expr.empty())
                    throw UsageError("--thm " + thm + " needs --expr");
                return factors_of(construct_expr, options.max_vertices);
            };

            optional<Certificate> cert;
            string extra;
            if (thm == "1")
                cert = thm1_strong(need_expr(), kind, options);
            else if (thm == "2")
                cert = thm2_cartesian_via_strong(need_expr(), kind, options);
            else if (thm == "3") {
                auto factors = need_expr();
                cert = thm3_cartesian_via_cubes(factors, kind, options);
                vector<int> sizes;
                for (auto & f : factors)
                    sizes.push_back(f.size());
                auto audit = audit_thm3(*cert, sizes);
                extra = "audit layer " + std::to_string(audit.layer_killed_in_h) + "/" + std::to_string(audit.layer_non_edges)
                    + " cross " + std::to_string(audit.cross_killed_in_k) + "/" + std::to_string(audit.cross_non_edges) + "\n";
            }
            else if (thm == "4") {
                if (kind != RepKind::box)
                    throw UsageError("--thm 4 builds box certificates only");
                cert = thm4_hypercube(construct_d, options);
            }
            else if (thm == "6")
                cert = thm6_hamming(construct_q, construct_d, kind, options);
            else if (thm == "7")
                cert = thm7_direct_via_strong(need_expr(), kind, options);
            else if (thm == "8") {
                if (construct_qs.empty())
                    throw UsageError("--thm 8 needs --qs");
                cert = thm8_direct_complete(parse_list(construct_qs), kind, options);
            }
            else if (thm == "9") {
                if (kind != RepKind::box)
                    throw UsageError("--thm 9 builds box certificates only");
                cert = cor9_direct_general(need_expr(), options);
            }
            else if (thm == "obs7") {
                if (kind != RepKind::cube)
                    throw UsageError("--thm obs7 builds cube certificates only");
                cert = obs7_star_cube(construct_n);
            }
            else
                throw UsageError("unknown --thm '" + thm + "'");

            string seed_note = "seed " + std::to_string(construct_seed);
            if (std::ranges::find(cert->notes, seed_note) == cert->notes.end())
                cert->notes.insert(cert->notes.begin(), seed_note);
            write_certificate(construct_out, *cert);
            std::cout << cert->theorem << " vertices " << cert->target.size() << " dimensions " << cert->dimensions()
                << " verified yes " << seed_note << '\n' << extra;
            return success;
        }

        if (verify_cmd->parsed()) {
            auto g = verify_graph.load(options.max_vertices);
            auto rep = read_representation_file(verify_rep);
            if (size(rep) != g.size())
                throw VerificationError("representation covers " + std::to_string(size(rep)) + " vertices, graph has "
                        + std::to_string(g.size()));
            auto report = verify(g, rep);
            if (report.ok) {
                std::cout << "ok vertices " << g.size() << " dimensions " << dimensions(rep) << '\n';
                return success;
            }
            auto & w = report.violations.front();
            std::cout << "fail " << w.u << ' ' << w.v << ' ' << to_string(w.kind)
                << " violations " << report.violations.size() << '\n';
            std::cerr << "error: verification: pair " << w.u << ' ' << w.v << ' ' << to_string(w.kind) << '\n';
            return verification_failed;
        }

        if (exact->parsed()) {
            int limit = max_n > 0 ? max_n : -1;
            auto param = parse_parameter(exact_param);
            auto g = exact_graph.load(options.max_vertices);
            int k = max_k >= 0 ? max_k : kmax;
            auto r = param == Parameter::boxicity
                ? exact_boxicity(g, k, limit > 0 ? limit : default_boxicity_limit)
                : exact_cubicity(g, k, limit > 0 ? limit : default_cubicity_limit);
            if (r.exceeded) {
                std::cout << '>' << k << '\n';
                return success;
            }
            std::cout << r.value << '\n';
            if (! exact_witness.empty())
                emit(exact_witness, to_text(*r.witness));
            return success;
        }

        if (bound_cmd->parsed()) {
            BoundOptions bo;
            bo.construction = options;
            auto report = bound(parse_expression(bound_expr), parse_parameter(bound_param), bo);
            write_bound_report(std::cout, report);
            return success;
        }

        if (table->parsed()) {
            BoundOptions bo;
            bo.construction = options;
            auto g = build_graph(parse_expression(table_seed), options.max_vertices);
            auto rows = growth_table(g, parse_product_kind(table_kind), parse_parameter(table_param), dmax, bo);
            write_growth_table(std::cout, rows);
            return success;
        }

        if (family->parsed()) {
            auto result = random_double_distinguishing(family_n, family_q, family_seed, retries);
            std::ostringstream out;
            out << "# seed " << family_seed << " trial-seed " << result.seed << " attempts " << result.attempts
                << " fallback " << (result.from_fallback ? "yes" : "no") << '\n';
            write_family(out, result.family);
            emit(family_out, out.str());
            return success;
        }
    }
    catch (const VerificationError & e) {
        std::cerr << "error: verification: " << e.what() << '\n';
        return verification_failed;
    }
    catch (const SizeLimitError & e) {
        std::cerr << "error: limit: " << e.what() << '\n';
        return limit;
    }
    catch (const NotFoundError & e) {
        std::cerr << "error: not-found: " << e.what() << '\n';
        return not_found;
    }
    catch (const Error & e) {
        std::cerr << "error: usage: " << e.what() << '\n';
        return usage;
    }
    catch (const std::exception & e) {
        std::cerr << "error: usage: " << e.what() << '\n';
        return usage;
    }
    return usage;
}
