#include <boxcert/bounds.hh>
#include <boxcert/errors.hh>
#include <boxcert/families.hh>
#include <boxcert/oracle.hh>
#include <boxcert/poset.hh>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

using std::optional;
using std::span;
using std::string;
using std::vector;

namespace boxcert
{
    using std::to_string;

    namespace
    {
        auto ceil_log2(long n) -> int
        {
            int bits = 0;
            while ((long(1) << bits) < n)
                ++bits;
            return bits;
        }

        auto ceil_value(double raw) -> long
        {
            return long(std::ceil(raw - 1e-9));
        }

        auto format_raw(double raw) -> string
        {
            if (std::abs(raw - std::round(raw)) < 1e-9)
                return to_string(long(std::llround(raw)));
            std::ostringstream s;
            s.precision(4);
            s << std::fixed << raw;
            return s.str();
        }

        struct Entries
        {
            vector<BoundEntry> list;

            auto add(string tag, string formula, BoundSide side, double raw, Standing standing) -> void
            {
                list.push_back({ std::move(tag), std::move(formula), side, raw, ceil_value(raw), standing });
            }

            auto exact(string tag, string formula, double raw, Standing standing) -> void
            {
                add(tag, formula, BoundSide::lower, raw, standing == Standing::witnessed ? Standing::proved : standing);
                add(std::move(tag), std::move(formula), BoundSide::upper, raw, standing);
            }
        };

        auto finish(Parameter parameter, Entries entries, optional<long> exact) -> BoundReport
        {
            BoundReport report;
            report.parameter = parameter;
            report.exact = exact;
            for (auto & e : entries.list) {
                if (e.standing == Standing::asymptotic)
                    continue;
                if (e.side == BoundSide::lower)
                    report.lower = std::max(report.lower, e.value);
                else if (e.standing != Standing::reported) {
                    if (! report.upper || e.value < *report.upper)
                        report.upper = e.value;
                    if (e.standing == Standing::witnessed && (! report.witnessed_upper || e.value < *report.witnessed_upper))
                        report.witnessed_upper = e.value;
                }
            }
            report.entries = std::move(entries.list);
            return report;
        }

        /// Hypercube quantities reused across reports; each is computed once per process.
        class HypercubeTable
        {
            private:
                std::mutex _mutex;
                std::map<int, int> _b, _thm4;
                std::map<std::pair<int, int>, optional<int>> _oracle;

            public:
                auto b(int d, const ConstructionOptions & options) -> int
                {
                    std::lock_guard lock(_mutex);
                    if (auto i = _b.find(d) ; i != _b.end())
                        return i->second;
                    int best = 0;
                    for (int j = 1 ; j <= d ; ++j) {
                        auto r = exact_pdim(boolean_layer_poset(d, j - 1, j).poset, options.kmax);
                        if (! r.realizer)
                            throw SizeLimitError("layer poset dimension exceeds kmax");
                        best = std::max(best, r.dimension);
                    }
                    return _b[d] = best;
                }

                auto thm4(int d, const ConstructionOptions & options) -> int
                {
                    {
                        std::lock_guard lock(_mutex);
                        if (auto i = _thm4.find(d) ; i != _thm4.end())
                            return i->second;
                    }
                    int dims = thm4_hypercube(d, options).dimensions();
                    std::lock_guard lock(_mutex);
                    return _thm4[d] = dims;
                }

                auto oracle(int d, Parameter p, const ConstructionOptions & options) -> optional<int>
                {
                    int limit = p == Parameter::boxicity ? options.box_oracle_limit : options.cube_oracle_limit;
                    if ((1 << d) > limit)
                        return std::nullopt;
                    std::lock_guard lock(_mutex);
                    auto key = std::pair{ d, int(p) };
                    if (auto i = _oracle.find(key) ; i != _oracle.end())
                        return i->second;
                    auto g = hypercube_graph(d);
                    auto r = p == Parameter::boxicity ? exact_boxicity(g, options.kmax, limit) : exact_cubicity(g, options.kmax, limit);
                    optional<int> value;
                    if (! r.exceeded)
                        value = r.value;
                    return _oracle[key] = value;
                }
        };

        auto hypercubes() -> HypercubeTable &
        {
            static HypercubeTable table;
            return table;
        }

        struct Upper
        {
            optional<long> proved, witnessed;
        };

        /// Upper bounds on the hypercube of dimension d, d >= 2.
        auto hypercube_upper(int d, Parameter p, const ConstructionOptions & options) -> Upper
        {
            Upper u;
            auto oracle = hypercubes().oracle(d, p, options);
            if (p == Parameter::boxicity) {
                if (d <= options.hypercube_limit) {
                    u.witnessed = hypercubes().thm4(d, options);
                    u.proved = std::min<long>(*u.witnessed, 3L * hypercubes().b(d, options));
                }
                if (oracle)
                    u.proved = u.proved ? std::min<long>(*u.proved, *oracle) : *oracle;
            }
            else if (oracle)
                u.proved = u.witnessed = *oracle;
            return u;
        }

        /// Upper bounds on the Cartesian product of K_{q_i}, matching the restricted Hamming pipeline.
        auto complete_cartesian_upper(span<const int> qs, Parameter p, const ConstructionOptions & options) -> Upper
        {
            int d = int(std::ranges::count_if(qs, [] (int q) { return q >= 2; }));
            if (d <= 1)
                return { 0, 0 };
            int q = *std::ranges::max_element(qs);
            long universe = hamming_universe_size(q);
            auto h = hypercube_upper(d, p, options);
            Upper u;
            if (h.proved)
                u.proved = universe * *h.proved;
            double vertices = std::pow(double(q), d);
            if (h.witnessed && vertices <= options.max_vertices)
                u.witnessed = universe * *h.witnessed;
            return u;
        }

        auto oracle_value(const Graph & g, Parameter p, const BoundOptions & options) -> optional<OracleResult>
        {
            auto & c = options.construction;
            int limit = std::min(options.oracle_vertices,
                    p == Parameter::boxicity ? c.box_oracle_limit : c.cube_oracle_limit);
            if (g.size() > limit)
                return std::nullopt;
            return p == Parameter::boxicity ? exact_boxicity(g, c.kmax, limit) : exact_cubicity(g, c.kmax, limit);
        }

        auto add_oracle(Entries & entries, const OracleResult & r, long kmax) -> optional<long>
        {
            if (r.exceeded) {
                entries.add("oracle", "exhaustive search", BoundSide::lower, double(kmax + 1), Standing::proved);
                return std::nullopt;
            }
            entries.exact("oracle", "exhaustive search", r.value, Standing::witnessed);
            return r.value;
        }

        auto param_of(const FactorInvariants & f, Parameter p) -> optional<int>
        {
            return p == Parameter::boxicity ? f.boxicity : f.cubicity;
        }

        template <typename F_>
        auto all_known(span<const FactorInvariants> fs, F_ get) -> bool
        {
            return std::ranges::all_of(fs, [&] (auto & f) { return get(f).has_value(); });
        }

        auto log2(double x) -> double { return std::log2(x); }
    }

    auto to_string(Parameter p) -> string
    {
        return p == Parameter::boxicity ? "boxicity" : "cubicity";
    }

    auto parse_parameter(const string & s) -> Parameter
    {
        if (s == "boxicity")
            return Parameter::boxicity;
        if (s == "cubicity")
            return Parameter::cubicity;
        throw ParseError("unknown parameter '" + s + "'");
    }

    auto to_string(Standing s) -> string
    {
        switch (s) {
            case Standing::witnessed: return "witnessed";
            case Standing::proved: return "proved";
            case Standing::reported: return "reported";
            case Standing::asymptotic: return "asymptotic";
        }
        return "?";
    }

    auto factor_invariants(const Graph & g, string name, const BoundOptions & options) -> FactorInvariants
    {
        FactorInvariants f;
        f.name = std::move(name);
        f.graph = g;
        f.complete = g.is_complete();
        f.universal = g.has_universal_vertex();
        f.has_edge = g.edge_count() > 0;
        f.chi = (g.size() <= default_exact_coloring_limit ? exact_coloring(g) : greedy_coloring(g)).k;

        auto & c = options.construction;
        if (f.complete)
            f.boxicity = f.cubicity = 0;
        else {
            if (g.size() <= c.box_oracle_limit)
                if (auto r = exact_boxicity(g, c.kmax, c.box_oracle_limit) ; ! r.exceeded)
                    f.boxicity = r.value;
            if (g.size() <= c.cube_oracle_limit)
                if (auto r = exact_cubicity(g, c.kmax, c.cube_oracle_limit) ; ! r.exceeded)
                    f.cubicity = r.value;
        }
        return f;
    }

    auto bound_product(span<const FactorInvariants> fs, ProductKind kind, Parameter p, const BoundOptions & options) -> BoundReport
    {
        if (fs.empty())
            throw InvalidArgument("a product needs at least one factor");
        auto & c = options.construction;
        int d = int(fs.size());
        double vertices = 1;
        for (auto & f : fs)
            vertices *= f.graph.size();
        bool buildable = vertices <= c.max_vertices;

        Entries entries;
        optional<long> exact;
        if (vertices <= options.oracle_vertices) {
            vector<Graph> graphs;
            for (auto & f : fs)
                graphs.push_back(f.graph);
            if (auto r = oracle_value(product_all(graphs, kind, c.max_vertices), p, options))
                exact = add_oracle(entries, *r, c.kmax);
        }

        auto nontrivial = std::ranges::count_if(fs, [] (auto & f) { return f.graph.size() >= 2; });
        bool complete = false, edgeless = false;
        switch (kind) {
            case ProductKind::strong:
                complete = std::ranges::all_of(fs, [] (auto & f) { return f.complete; });
                edgeless = std::ranges::none_of(fs, [] (auto & f) { return f.has_edge; });
                break;
            case ProductKind::cartesian:
                complete = nontrivial == 0 || (nontrivial == 1 && std::ranges::all_of(fs, [] (auto & f) { return f.complete; }));
                edgeless = std::ranges::none_of(fs, [] (auto & f) { return f.has_edge; });
                break;
            case ProductKind::direct:
                complete = vertices == 1;
                edgeless = std::ranges::any_of(fs, [] (auto & f) { return ! f.has_edge; });
                break;
        }
        if (complete) {
            entries.exact("clique", "complete graph", 0, Standing::witnessed);
            return finish(p, std::move(entries), exact);
        }
        entries.add("non-clique", "not complete", BoundSide::lower, 1, Standing::proved);
        if (edgeless) {
            entries.add("edgeless", "disjoint points", BoundSide::upper, 1, Standing::proved);
            return finish(p, std::move(entries), exact);
        }

        auto value = [p] (auto & f) { return param_of(f, p); };
        auto box = [] (auto & f) { return f.boxicity; };
        auto chi_sum = std::accumulate(fs.begin(), fs.end(), 0L, [] (long s, auto & f) { return s + f.chi; });
        optional<long> sum_values, max_values, max_box;
        if (all_known(fs, value)) {
            sum_values = max_values = 0;
            for (auto & f : fs) {
                *sum_values += *value(f);
                max_values = std::max<long>(*max_values, *value(f));
            }
        }
        if (all_known(fs, box)) {
            max_box = 0;
            for (auto & f : fs)
                max_box = std::max<long>(*max_box, *f.boxicity);
        }
        string pname = p == Parameter::boxicity ? "b_i" : "c_i";

        switch (kind) {
            case ProductKind::strong: {
                if (max_values)
                    entries.add("thm1-lower", "max " + pname, BoundSide::lower, double(*max_values), Standing::proved);
                if (p == Parameter::cubicity && max_box)
                    entries.add("thm1-lower-box", "max b_i", BoundSide::lower, double(*max_box), Standing::proved);
                if (sum_values) {
                    entries.add("thm1", "sum " + pname, BoundSide::upper, double(*sum_values),
                            buildable ? Standing::witnessed : Standing::proved);
                    if (std::ranges::all_of(fs, [] (auto & f) { return f.universal; }))
                        entries.add("thm1-tight", "sum " + pname + " with universal vertices", BoundSide::lower,
                                double(*sum_values), Standing::proved);
                }
                break;
            }

            case ProductKind::cartesian: {
                if (max_values)
                    entries.add("obs1-factor", "max " + pname, BoundSide::lower, double(*max_values), Standing::proved);
                if (p == Parameter::cubicity && max_box)
                    entries.add("obs1-factor-box", "max b_i", BoundSide::lower, double(*max_box), Standing::proved);

                int e = int(std::ranges::count_if(fs, [] (auto & f) { return f.has_edge; }));
                if (e >= 2) {
                    if (e <= c.hypercube_limit)
                        entries.add("thm4-lower", "b_d / 2, d = " + to_string(e), BoundSide::lower,
                                hypercubes().b(e, c) / 2.0, Standing::proved);
                    if (auto o = hypercubes().oracle(e, p, c))
                        entries.add("hypercube-oracle", "induced hypercube, d = " + to_string(e), BoundSide::lower,
                                double(*o), Standing::proved);
                    entries.add("hypercube-lower-external", "(ceil(log log d) + 1) / 2, d = " + to_string(e), BoundSide::lower,
                            (std::ceil(log2(log2(double(e))) - 1e-9) + 1) / 2.0, Standing::reported);
                }

                vector<int> cliques;
                for (auto & f : fs)
                    if (f.complete && f.graph.size() >= 2)
                        cliques.push_back(f.graph.size());
                if (cliques.size() >= 2) {
                    std::ranges::sort(cliques, std::greater<>());
                    entries.add("thm6-lower", "log q, q = " + to_string(cliques[1]), BoundSide::lower,
                            log2(double(cliques[1])), Standing::proved);
                }

                if (sum_values) {
                    vector<int> chis;
                    for (auto & f : fs)
                        chis.push_back(f.chi);
                    auto k = complete_cartesian_upper(chis, p, c);
                    if (k.proved)
                        entries.add("thm2", "sum " + pname + " + dim(cartesian K_chi)", BoundSide::upper,
                                double(*sum_values + *k.proved), Standing::proved);
                    if (k.witnessed && buildable)
                        entries.add("thm2-pipeline", "sum " + pname + " + certified dim(cartesian K_chi)", BoundSide::upper,
                                double(*sum_values + *k.witnessed), Standing::witnessed);
                }
                if (all_known(fs, [] (auto & f) { return f.cubicity; })) {
                    long max_c = 0;
                    vector<int> sizes;
                    for (auto & f : fs) {
                        max_c = std::max<long>(max_c, *f.cubicity);
                        sizes.push_back(f.graph.size());
                    }
                    auto k = complete_cartesian_upper(sizes, p, c);
                    if (k.proved)
                        entries.add("thm3", "max c_i + dim(cartesian K_q_i)", BoundSide::upper,
                                double(max_c + *k.proved), Standing::proved);
                    if (k.witnessed && buildable)
                        entries.add("thm3-pipeline", "max c_i + certified dim(cartesian K_q_i)", BoundSide::upper,
                                double(max_c + *k.witnessed), Standing::witnessed);
                }

                bool hypercube = std::ranges::all_of(fs, [] (auto & f) { return f.graph.size() == 2 && f.complete; });
                if (hypercube && p == Parameter::boxicity && d <= c.hypercube_limit) {
                    entries.add("thm4", "certified layer partition", BoundSide::upper, hypercubes().thm4(d, c), Standing::witnessed);
                    entries.add("thm4-bound", "3 b_d", BoundSide::upper, 3.0 * hypercubes().b(d, c), Standing::proved);
                }
                if (hypercube && d >= 3) {
                    if (p == Parameter::boxicity)
                        entries.add("thm4-external", "12 log d / log log d", BoundSide::upper,
                                12 * log2(d) / log2(log2(d)), Standing::reported);
                    else
                        entries.add("hypercube-cubicity-shape", "d / log d", BoundSide::upper, d / log2(d), Standing::asymptotic);
                }
                else if (d >= 3) {
                    if (p == Parameter::boxicity)
                        entries.add("growth-shape", "log d / log log d", BoundSide::upper, log2(d) / log2(log2(d)), Standing::asymptotic);
                    else
                        entries.add("growth-shape", "d / log d", BoundSide::upper, d / log2(d), Standing::asymptotic);
                }
                break;
            }

            case ProductKind::direct: {
                bool all_complete = std::ranges::all_of(fs, [] (auto & f) { return f.complete; });
                if (all_complete && std::ranges::all_of(fs, [] (auto & f) { return f.graph.size() == 2; })) {
                    entries.exact("matching", "perfect matching", 1, Standing::proved);
                    break;
                }
                if (all_complete) {
                    long half = 0, sum_q = 0;
                    double verbatim = 0;
                    long ceiled = 0;
                    for (auto & f : fs) {
                        int q = f.graph.size();
                        half += q - 2;
                        sum_q += q;
                        verbatim += q * log2(vertices / q);
                        ceiled += q * ceil_log2(long(vertices) / q);
                    }
                    entries.add("thm8-lower", "sum (q_i - 2) / 2", BoundSide::lower, half / 2.0, Standing::proved);
                    auto standing = buildable ? Standing::witnessed : Standing::proved;
                    if (p == Parameter::boxicity)
                        entries.add("thm8", "sum q_i", BoundSide::upper, double(sum_q), standing);
                    else {
                        entries.add("thm8", "sum q_i ceil(log(n / q_i))", BoundSide::upper, double(ceiled), standing);
                        entries.add("thm8-verbatim", "sum q_i log(n / q_i)", BoundSide::upper, verbatim, Standing::reported);
                    }
                    if (d == 2 && (fs[0].graph.size() == 2 || fs[1].graph.size() == 2)) {
                        int q = std::max(fs[0].graph.size(), fs[1].graph.size());
                        entries.add("crown-external", "ceil(q / 2), q = " + to_string(q), BoundSide::lower,
                                std::ceil(q / 2.0), Standing::reported);
                    }
                }

                if (sum_values) {
                    double colour = 0;
                    if (p == Parameter::boxicity)
                        colour = double(chi_sum);
                    else {
                        double n_chi = 1;
                        for (auto & f : fs)
                            n_chi *= f.chi;
                        for (auto & f : fs)
                            colour += f.chi * ceil_log2(long(n_chi) / f.chi);
                    }
                    entries.add("thm7", "sum " + pname + " + dim(direct K_chi)", BoundSide::upper, double(*sum_values) + colour,
                            buildable ? Standing::witnessed : Standing::proved);
                    if (p == Parameter::boxicity)
                        entries.add("cor9", "sum (b_i + chi_i)", BoundSide::upper, double(*sum_values + chi_sum),
                                buildable ? Standing::witnessed : Standing::proved);
                }
                break;
            }
        }

        return finish(p, std::move(entries), exact);
    }

    auto bound_graph(const Graph & g, Parameter p, const BoundOptions & options) -> BoundReport
    {
        Entries entries;
        optional<long> exact;
        if (g.is_complete()) {
            entries.exact("clique", "complete graph", 0, Standing::witnessed);
            return finish(p, std::move(entries), exact);
        }
        entries.add("non-clique", "not complete", BoundSide::lower, 1, Standing::proved);
        if (auto r = oracle_value(g, p, options))
            exact = add_oracle(entries, *r, options.construction.kmax);
        if (g.size() <= oracle_hard_limit) {
            bool one = p == Parameter::boxicity ? interval_recognition(g).has_value() : unit_interval_recognition(g).has_value();
            if (one)
                entries.add("recognition", p == Parameter::boxicity ? "interval graph" : "unit interval graph",
                        BoundSide::upper, 1, Standing::witnessed);
            else
                entries.add("recognition", "not an interval graph", BoundSide::lower, 2, Standing::proved);
        }
        return finish(p, std::move(entries), exact);
    }

    auto bound(const Expression & e, Parameter p, const BoundOptions & options) -> BoundReport
    {
        auto & c = options.construction;
        if (auto view = product_view(e)) {
            std::map<string, FactorInvariants> cache;
            vector<FactorInvariants> fs;
            for (auto & f : view->factors) {
                auto key = to_string(f);
                auto i = cache.find(key);
                if (i == cache.end())
                    i = cache.emplace(key, factor_invariants(build_graph(f, c.max_vertices), key, options)).first;
                fs.push_back(i->second);
            }
            return bound_product(fs, view->kind, p, options);
        }

        if (e.kind == Expression::Kind::generator && e.generator == "star" && e.parameters.at(0) >= 1) {
            int n = e.parameters[0];
            auto report = bound_graph(build_graph(e, c.max_vertices), p, options);
            Entries entries{ std::move(report.entries) };
            if (p == Parameter::cubicity)
                entries.exact("obs7", "ceil(log n)", ceil_log2(n), Standing::witnessed);
            else if (n >= 2)
                entries.exact("obs7", "star is an interval graph", 1, Standing::proved);
            return finish(p, std::move(entries), report.exact);
        }

        auto whole = bound_graph(build_graph(e, c.max_vertices), p, options);
        if (p != Parameter::boxicity || e.kind == Expression::Kind::generator || e.kind == Expression::Kind::product)
            return whole;

        // Assembly laws for boxicity.
        Entries entries{ std::move(whole.entries) };
        auto first = bound(e.operands[0], p, options);
        switch (e.kind) {
            case Expression::Kind::join: {
                auto second = bound(e.operands[1], p, options);
                entries.add("obs4-join", "b_1 + b_2", BoundSide::lower, double(first.lower + second.lower), Standing::proved);
                if (first.upper && second.upper)
                    entries.add("obs4-join", "b_1 + b_2", BoundSide::upper, double(*first.upper + *second.upper), Standing::proved);
                break;
            }
            case Expression::Kind::disjoint_union: {
                auto second = bound(e.operands[1], p, options);
                entries.add("obs3-union", "max(b_1, b_2)", BoundSide::lower, double(std::max(first.lower, second.lower)), Standing::proved);
                if (first.upper && second.upper)
                    entries.add("obs3-union", "max(b_1, b_2, 1)", BoundSide::upper,
                            double(std::max({ *first.upper, *second.upper, 1L })), Standing::proved);
                break;
            }
            case Expression::Kind::universal:
                entries.add("obs5-universal", "b", BoundSide::lower, double(first.lower), Standing::proved);
                if (first.upper)
                    entries.add("obs5-universal", "b", BoundSide::upper, double(*first.upper), Standing::proved);
                break;
            default:
                break;
        }
        return finish(p, std::move(entries), whole.exact);
    }

    auto write_bound_report(std::ostream & out, const BoundReport & r) -> void
    {
        out << "parameter " << to_string(r.parameter) << '\n';
        out << "lower " << r.lower << '\n';
        out << "upper " << (r.upper ? to_string(*r.upper) : string("inf")) << '\n';
        out << "witnessed_upper " << (r.witnessed_upper ? to_string(*r.witnessed_upper) : string("inf")) << '\n';
        if (r.exact)
            out << "exact " << *r.exact << '\n';
        for (auto & e : r.entries)
            out << (e.side == BoundSide::lower ? "lower " : "upper ") << e.tag << " raw " << format_raw(e.raw)
                << " value " << e.value << ' ' << to_string(e.standing) << " [" << e.formula << "]\n";
    }

    auto growth_table(const Graph & g, ProductKind kind, Parameter p, int dmax, const BoundOptions & options) -> vector<GrowthRow>
    {
        if (dmax < 1)
            throw InvalidArgument("growth table needs dmax >= 1");
        auto f = factor_invariants(g, "G", options);
        vector<GrowthRow> rows;
        long carried_lower = 0;
        for (int d = 1 ; d <= dmax ; ++d) {
            vector<FactorInvariants> fs(d, f);
            auto r = bound_product(fs, kind, p, options);

            // Strong and Cartesian powers contain the previous power as an induced subgraph.
            string carried;
            if (kind != ProductKind::direct && carried_lower > r.lower) {
                r.lower = carried_lower;
                carried = "lower:previous-row";
            }
            carried_lower = r.lower;

            string provenance;
            auto append = [&] (const string & s) { provenance += (provenance.empty() ? "" : ";") + s; };
            if (! carried.empty())
                append(carried);
            for (auto & e : r.entries) {
                bool lower_side = e.side == BoundSide::lower;
                if (e.standing == Standing::reported || e.standing == Standing::asymptotic)
                    append(to_string(e.standing) + ":" + e.tag + "=" + format_raw(e.raw));
                else if (lower_side && e.value == r.lower && carried.empty())
                    append("lower:" + e.tag);
                else if (! lower_side && r.upper && e.value == *r.upper)
                    append("upper:" + e.tag);
            }
            rows.push_back({ d, r.lower, r.upper, r.witnessed_upper, provenance });
        }
        return rows;
    }

    auto write_growth_table(std::ostream & out, span<const GrowthRow> rows) -> void
    {
        out << "d,lower,upper,witnessed_upper,provenance\n";
        for (auto & r : rows)
            out << r.d << ',' << r.lower << ',' << (r.upper ? to_string(*r.upper) : string()) << ','
                << (r.witnessed_upper ? to_string(*r.witnessed_upper) : string()) << ',' << r.provenance << '\n';
    }
}
