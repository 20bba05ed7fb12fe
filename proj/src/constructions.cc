#include <boxcert/constructions.hh>
#include <boxcert/errors.hh>
#include <boxcert/families.hh>
#include <boxcert/poset.hh>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <ostream>
#include <sstream>

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

        auto sizes_of(span<const Graph> gs) -> vector<int>
        {
            vector<int> sizes;
            for (auto & g : gs)
                sizes.push_back(g.size());
            return sizes;
        }

        auto require_factors(span<const Graph> gs) -> void
        {
            if (gs.empty())
                throw InvalidArgument("at least one factor is required");
            for (auto & g : gs)
                if (g.size() == 0)
                    throw InvalidArgument("factors must be nonempty");
        }

        auto concat(const Representation & a, const Representation & b) -> Representation
        {
            if (auto ab = std::get_if<BoxRepresentation>(&a)) {
                BoxRepresentation parts[] = { *ab, std::get<BoxRepresentation>(b) };
                return concat_reps(parts);
            }
            CubeRepresentation parts[] = { std::get<CubeRepresentation>(a), std::get<CubeRepresentation>(b) };
            return concat_cubes(parts);
        }

        auto pull(const Representation & rep, span<const int> image) -> Representation
        {
            return std::visit([&] (const auto & r) -> Representation { return pullback(r, image); }, rep);
        }

        auto empty_rep(RepKind kind, int n, int dims) -> Representation
        {
            if (kind == RepKind::box)
                return BoxRepresentation(n, dims);
            return CubeRepresentation(n, dims);
        }

        auto colour(const Graph & g) -> ProperColoring
        {
            if (g.size() <= default_exact_coloring_limit)
                return exact_coloring(g);
            return greedy_coloring(g);
        }

        auto colour_image(const Graph & target, span<const int> sizes,
                const vector<ProperColoring> & colourings, span<const int> chis) -> vector<int>
        {
            vector<int> image(target.size());
            for (int v = 0 ; v < target.size() ; ++v) {
                auto digits = mixed_radix_digits(v, sizes);
                for (size_t i = 0 ; i < digits.size() ; ++i)
                    digits[i] = colourings[i].colors[digits[i]];
                image[v] = mixed_radix_index(digits, chis);
            }
            return image;
        }

        auto as_boxes(const Representation & rep) -> BoxRepresentation
        {
            if (auto b = std::get_if<BoxRepresentation>(&rep))
                return *b;
            return to_boxes(std::get<CubeRepresentation>(rep));
        }

        struct DirectParts
        {
            Certificate strong;
            vector<int> chis;
            Representation colour_rep;
            string colour_stage;
            Graph target;
            vector<int> image;
        };

        auto direct_parts(span<const Graph> factors, RepKind kind, const ConstructionOptions & options) -> DirectParts
        {
            require_factors(factors);
            auto strong = thm1_strong(factors, kind, options);
            auto sizes = sizes_of(factors);

            vector<ProperColoring> colourings;
            vector<int> chis;
            for (auto & g : factors) {
                colourings.push_back(colour(g));
                chis.push_back(colourings.back().k);
            }

            auto target = product_all(factors, ProductKind::direct, options.max_vertices);
            auto image = colour_image(target, sizes, colourings, chis);

            long points = std::accumulate(chis.begin(), chis.end(), 1L, std::multiplies<long>());
            Representation colour_rep;
            string stage;
            if (std::ranges::any_of(chis, [] (int c) { return c < 2; })) {
                // An edgeless factor makes the colour product edgeless: separate its points on one axis.
                int dims = points >= 2 ? 1 : 0;
                colour_rep = empty_rep(kind, int(points), dims);
                for (int p = 0 ; p < points && dims == 1 ; ++p) {
                    if (kind == RepKind::box)
                        std::get<BoxRepresentation>(colour_rep).set(p, 0, Interval(2 * p, 2 * p));
                    else
                        std::get<CubeRepresentation>(colour_rep).set(p, 0, Dyadic(2 * p));
                }
                stage = "edgeless-colour-product";
            }
            else {
                colour_rep = thm8_direct_complete(chis, kind, options).rep;
                stage = "direct-colour-product";
            }

            return { std::move(strong), std::move(chis), std::move(colour_rep), std::move(stage), std::move(target), std::move(image) };
        }

        auto write_atomically(const std::filesystem::path & path, const string & text) -> void
        {
            auto temporary = path;
            temporary += ".tmp";
            {
                std::ofstream out(temporary, std::ios::binary);
                if (! out)
                    throw InvalidArgument("cannot write " + temporary.string());
                out << text;
                if (! out)
                    throw InvalidArgument("write failed for " + temporary.string());
            }
            std::filesystem::rename(temporary, path);
        }
    }

    auto to_string(RepKind kind) -> string
    {
        return kind == RepKind::box ? "box" : "cube";
    }

    auto parse_rep_kind(const string & s) -> RepKind
    {
        if (s == "box")
            return RepKind::box;
        if (s == "cube")
            return RepKind::cube;
        throw ParseError("unknown representation mode '" + s + "'");
    }

    auto Certificate::ledger_total() const -> int
    {
        int total = 0;
        for (auto & e : ledger)
            total += e.dimensions;
        return total;
    }

    auto certify(string theorem, Graph target, Representation rep,
            vector<LedgerEntry> ledger, vector<string> notes) -> Certificate
    {
        if (auto b = std::get_if<BoxRepresentation>(&rep))
            rep = normalize(*b);

        auto report = verify(target, rep);
        if (! report.ok) {
            auto & w = report.violations.front();
            throw VerificationError(theorem + " certificate fails at pair " + to_string(w.u) + " " + to_string(w.v)
                    + " (" + to_string(w.kind) + ")");
        }

        Certificate cert{ std::move(theorem), std::move(target), std::move(rep), std::move(report),
            std::move(ledger), std::move(notes) };
        if (cert.ledger_total() != cert.dimensions())
            throw VerificationError(cert.theorem + " ledger sums to " + to_string(cert.ledger_total())
                    + " but the representation has " + to_string(cert.dimensions()) + " dimensions");
        return cert;
    }

    auto minimal_representation(const Graph & g, RepKind kind, const ConstructionOptions & options) -> Representation
    {
        auto result = kind == RepKind::box
            ? exact_boxicity(g, options.kmax, options.box_oracle_limit)
            : exact_cubicity(g, options.kmax, options.cube_oracle_limit);
        if (result.exceeded)
            throw SizeLimitError(to_string(kind) + " dimension of a factor exceeds kmax " + to_string(options.kmax));
        return *result.witness;
    }

    auto thm1_strong(span<const Graph> factors, RepKind kind, const ConstructionOptions & options,
            span<const Representation> supplied) -> Certificate
    {
        require_factors(factors);
        if (! supplied.empty() && supplied.size() != factors.size())
            throw InvalidArgument("need one supplied representation per factor");

        vector<Representation> reps;
        for (size_t i = 0 ; i < factors.size() ; ++i) {
            if (supplied.empty()) {
                reps.push_back(minimal_representation(factors[i], kind, options));
                continue;
            }
            bool is_box = std::holds_alternative<BoxRepresentation>(supplied[i]);
            if (is_box != (kind == RepKind::box))
                throw InvalidArgument("supplied representation " + to_string(i) + " has the wrong mode");
            if (! verify(factors[i], supplied[i]).ok)
                throw VerificationError("supplied representation " + to_string(i) + " does not realize its factor");
            reps.push_back(supplied[i]);
        }

        vector<LedgerEntry> ledger;
        Graph acc_graph = factors[0];
        Representation acc = reps[0];
        ledger.push_back({ "factor-1", dimensions(reps[0]) });
        for (size_t i = 1 ; i < factors.size() ; ++i) {
            if (kind == RepKind::box)
                acc = strong_product_rep(acc_graph, std::get<BoxRepresentation>(acc), factors[i], std::get<BoxRepresentation>(reps[i]));
            else
                acc = strong_product_rep(acc_graph, std::get<CubeRepresentation>(acc), factors[i], std::get<CubeRepresentation>(reps[i]));
            acc_graph = product(acc_graph, factors[i], ProductKind::strong, options.max_vertices);
            ledger.push_back({ "factor-" + to_string(i + 1), dimensions(reps[i]) });
        }

        return certify("thm1", product_all(factors, ProductKind::strong, options.max_vertices), std::move(acc), std::move(ledger));
    }

    auto thm2_cartesian_via_strong(span<const Graph> factors, RepKind kind, const ConstructionOptions & options) -> Certificate
    {
        require_factors(factors);
        auto strong = thm1_strong(factors, kind, options);
        auto sizes = sizes_of(factors);

        vector<ProperColoring> colourings;
        vector<int> chis;
        vector<string> notes;
        for (size_t i = 0 ; i < factors.size() ; ++i) {
            colourings.push_back(colour(factors[i]));
            chis.push_back(colourings.back().k);
            notes.push_back("chi-" + to_string(i + 1) + " " + to_string(chis.back()));
        }

        auto colour_cert = cartesian_complete_product(chis, kind, options);
        auto target = product_all(factors, ProductKind::cartesian, options.max_vertices);
        auto image = colour_image(target, sizes, colourings, chis);
        auto rep = concat(strong.rep, pull(colour_cert.rep, image));
        for (auto & n : colour_cert.notes)
            notes.push_back(n);

        return certify("thm2", std::move(target), std::move(rep),
                { { "strong", strong.dimensions() }, { "cartesian-colour-product", colour_cert.dimensions() } },
                std::move(notes));
    }

    auto thm3_cartesian_via_cubes(span<const Graph> factors, RepKind kind, const ConstructionOptions & options) -> Certificate
    {
        require_factors(factors);
        auto sizes = sizes_of(factors);

        vector<CubeRepresentation> embeddings;
        int c = 0;
        for (auto & g : factors) {
            embeddings.push_back(std::get<CubeRepresentation>(minimal_representation(g, RepKind::cube, options)));
            c = std::max(c, embeddings.back().dimensions());
        }

        auto target = product_all(factors, ProductKind::cartesian, options.max_vertices);
        CubeRepresentation h(target.size(), c);
        for (int v = 0 ; v < target.size() ; ++v) {
            auto digits = mixed_radix_digits(v, sizes);
            for (int t = 0 ; t < c ; ++t) {
                Dyadic sum = 0;
                for (size_t i = 0 ; i < factors.size() ; ++i)
                    if (t < embeddings[i].dimensions())
                        sum = sum + embeddings[i].origin(digits[i], t);
                h.set(v, t, sum);
            }
        }

        // The complete-graph product shares the target's vertex numbering.
        auto k = cartesian_complete_product(sizes, kind, options);
        Representation h_rep = kind == RepKind::box ? Representation(to_boxes(h)) : Representation(h);
        auto rep = concat(h_rep, k.rep);

        vector<string> notes;
        for (size_t i = 0 ; i < factors.size() ; ++i)
            notes.push_back("cubicity-" + to_string(i + 1) + " " + to_string(embeddings[i].dimensions()));
        for (auto & n : k.notes)
            notes.push_back(n);

        auto cert = certify("thm3", std::move(target), std::move(rep),
                { { "H", c }, { "K", k.dimensions() } }, std::move(notes));
        auto audit = audit_thm3(cert, sizes);
        if (! audit.ok())
            throw VerificationError("thm3 non-edge audit failed");
        cert.notes.push_back("audit layer " + to_string(audit.layer_non_edges) + " cross " + to_string(audit.cross_non_edges));
        return cert;
    }

    auto audit_thm3(const Certificate & cert, span<const int> factor_sizes) -> NonEdgeAudit
    {
        int h_end = -1, k_end = -1;
        int offset = 0;
        for (auto & e : cert.ledger) {
            offset += e.dimensions;
            if (e.stage == "H")
                h_end = offset;
            else if (e.stage == "K")
                k_end = offset;
        }
        if (h_end < 0 || k_end < 0 || k_end < h_end)
            throw InvalidArgument("certificate has no H and K blocks");

        auto boxes = as_boxes(cert.rep);
        auto killed = [&] (int u, int v, int from, int to) {
            for (int t = from ; t < to ; ++t)
                if (! boxes.interval(u, t).intersects(boxes.interval(v, t)))
                    return true;
            return false;
        };

        NonEdgeAudit audit;
        for (auto [u, v] : cert.target.non_edges()) {
            auto du = mixed_radix_digits(u, factor_sizes), dv = mixed_radix_digits(v, factor_sizes);
            int differing = 0;
            for (size_t i = 0 ; i < du.size() ; ++i)
                differing += du[i] != dv[i];
            if (differing == 1) {
                ++audit.layer_non_edges;
                audit.layer_killed_in_h += killed(u, v, 0, h_end);
            }
            else {
                ++audit.cross_non_edges;
                audit.cross_killed_in_k += killed(u, v, h_end, k_end);
            }
        }
        return audit;
    }

    auto thm4_hypercube(int d, const ConstructionOptions & options) -> Certificate
    {
        if (d < 1)
            throw InvalidArgument("hypercube needs d >= 1");
        if (d > options.hypercube_limit)
            throw SizeLimitError("hypercube dimension " + to_string(d) + " exceeds limit " + to_string(options.hypercube_limit));

        struct Part
        {
            vector<int> vertices;
            BoxRepresentation rep;
        };

        // Adjacent-layer posets, boxed through their minimum realizers.
        vector<Part> layer_parts(d + 1);
        int b_d = 0;
        for (int j = 1 ; j <= d ; ++j) {
            auto lp = boolean_layer_poset(d, j - 1, j);
            auto pdim = exact_pdim(lp.poset, options.kmax);
            if (! pdim.realizer)
                throw SizeLimitError("poset dimension of layers " + to_string(j - 1) + "," + to_string(j) + " exceeds kmax");
            b_d = std::max(b_d, pdim.dimension);
            layer_parts[j] = { lp.vertex, normalize(realizer_to_box(lp.poset, *pdim.realizer)) };
        }

        int n = 1 << d;
        vector<BoxRepresentation> blocks;
        vector<LedgerEntry> ledger;
        for (int k = 0 ; k < 3 ; ++k) {
            vector<Part> parts;
            for (int j = 1 ; j <= d ; ++j)
                if (j % 3 == (k + 2) % 3)
                    parts.push_back(layer_parts[j]);
            if (0 % 3 == (k + 2) % 3)
                parts.push_back({ { 0 }, BoxRepresentation(1, 0) });
            if (d % 3 == (k + 1) % 3)
                parts.push_back({ { n - 1 }, BoxRepresentation(1, 0) });

            int dims = 0;
            std::int64_t w = 1;
            for (auto & p : parts) {
                dims = std::max(dims, p.rep.dimensions());
                for (int t = 0 ; t < p.rep.dimensions() ; ++t)
                    w = std::max(w, span_of(p.rep, t).hi.numerator());
            }
            if (parts.size() >= 2)
                dims = std::max(dims, 1);

            int count = int(parts.size());
            BoxRepresentation block(n, dims);
            for (int t = 0 ; t < dims ; ++t) {
                std::int64_t hi = t == 0 ? (2 * (count - 1) + 1) * w : w;
                for (int v = 0 ; v < n ; ++v)
                    block.set(v, t, Interval(0, hi));
            }
            for (int c = 0 ; c < count ; ++c) {
                auto & p = parts[c];
                for (size_t e = 0 ; e < p.vertices.size() ; ++e)
                    for (int t = 0 ; t < dims ; ++t) {
                        Interval i = t < p.rep.dimensions() ? p.rep.interval(int(e), t) : Interval(0, w);
                        if (t == 0)
                            i = Interval(i.lo + Dyadic(2 * c * w), i.hi + Dyadic(2 * c * w));
                        block.set(p.vertices[e], t, i);
                    }
            }
            ledger.push_back({ "block-" + to_string(k), dims });
            blocks.push_back(std::move(block));
        }

        auto rep = concat_reps(blocks);
        int ceiling = 6 * b_d;
        if (rep.dimensions() > ceiling)
            throw VerificationError("hypercube certificate exceeds six times the layer poset dimension");
        return certify("thm4", hypercube_graph(d), std::move(rep), std::move(ledger),
                { "b_d " + to_string(b_d), "ceiling " + to_string(ceiling) });
    }

    auto thm6_hamming(int q, int d, RepKind kind, const ConstructionOptions & options) -> Certificate
    {
        if (q < 2 || d < 1)
            throw InvalidArgument("hamming certificate needs q >= 2 and d >= 1");
        auto target = hamming_graph(q, d);
        if (target.size() > options.max_vertices)
            throw SizeLimitError("hamming graph exceeds vertex limit");

        int n = hamming_universe_size(q);
        auto search = random_double_distinguishing(n, q, options.seed, options.retries);
        auto family = hamming_realizer(q, d, search.family);

        vector<string> notes{ "seed " + to_string(options.seed), "trial-seed " + to_string(search.seed),
            "attempts " + to_string(search.attempts), "fallback " + string(search.from_fallback ? "yes" : "no"),
            "universe " + to_string(n) };

        Representation rep;
        int dh;
        if (kind == RepKind::box) {
            auto cube = thm4_hypercube(d, options);
            for (auto & e : cube.ledger)
                notes.push_back("hypercube-" + e.stage + " " + to_string(e.dimensions));
            dh = cube.dimensions();
            rep = compose_realizer(family, std::get<BoxRepresentation>(cube.rep));
        }
        else {
            auto h = std::get<CubeRepresentation>(minimal_representation(hypercube_graph(d), RepKind::cube, options));
            dh = h.dimensions();
            notes.push_back("hypercube-oracle " + to_string(dh));
            rep = compose_realizer(family, h);
        }

        vector<LedgerEntry> ledger;
        for (int u = 1 ; u <= n ; ++u)
            ledger.push_back({ "map-" + to_string(u), dh });
        return certify("thm6", std::move(target), std::move(rep), std::move(ledger), std::move(notes));
    }

    auto cartesian_complete_product(span<const int> qs, RepKind kind, const ConstructionOptions & options) -> Certificate
    {
        if (qs.empty())
            throw InvalidArgument("at least one alphabet size is required");
        vector<Graph> factors;
        for (int q : qs)
            factors.push_back(complete_graph(q));
        auto target = product_all(factors, ProductKind::cartesian, options.max_vertices);

        int q = *std::ranges::max_element(qs);
        int nontrivial = int(std::ranges::count_if(qs, [] (int x) { return x >= 2; }));
        if (nontrivial <= 1)
            return certify("thm6-restricted", std::move(target), empty_rep(kind, target.size(), 0), {});

        // Coordinates with a single letter carry no information and are dropped.
        auto uniform = thm6_hamming(q, nontrivial, kind, options);
        vector<int> radices(nontrivial, q);
        vector<int> image(target.size());
        for (int v = 0 ; v < target.size() ; ++v) {
            auto digits = mixed_radix_digits(v, qs);
            std::erase_if(digits, [&, i = 0] (int) mutable { return qs[i++] < 2; });
            image[v] = mixed_radix_index(digits, radices);
        }

        return certify("thm6-restricted", std::move(target), pull(uniform.rep, image),
                std::move(uniform.ledger), std::move(uniform.notes));
    }

    auto thm8_direct_complete(span<const int> qs, RepKind kind, const ConstructionOptions & options) -> Certificate
    {
        if (qs.empty())
            throw InvalidArgument("at least one alphabet size is required");
        vector<Graph> factors;
        for (int q : qs) {
            if (q < 2)
                throw InvalidArgument("direct complete product needs every q >= 2");
            factors.push_back(complete_graph(q));
        }
        auto target = product_all(factors, ProductKind::direct, options.max_vertices);
        int n = target.size();

        // members[i][j] lists V_{i,j} in increasing vertex order.
        vector<vector<vector<int>>> members(qs.size());
        for (size_t i = 0 ; i < qs.size() ; ++i)
            members[i].resize(qs[i]);
        for (int v = 0 ; v < n ; ++v) {
            auto digits = mixed_radix_digits(v, qs);
            for (size_t i = 0 ; i < qs.size() ; ++i)
                members[i][digits[i]].push_back(v);
        }

        vector<LedgerEntry> ledger;
        if (kind == RepKind::box) {
            BoxRepresentation rep(n, std::accumulate(qs.begin(), qs.end(), 0));
            int t = 0;
            for (size_t i = 0 ; i < qs.size() ; ++i)
                for (int j = 0 ; j < qs[i] ; ++j, ++t) {
                    auto & m = members[i][j];
                    for (int v = 0 ; v < n ; ++v)
                        rep.set(v, t, Interval(0, 2 * std::int64_t(m.size()) - 1));
                    for (size_t r = 0 ; r < m.size() ; ++r)
                        rep.set(m[r], t, Interval(2 * std::int64_t(r), 2 * std::int64_t(r) + 1));
                    ledger.push_back({ "V-" + to_string(i + 1) + "-" + to_string(j + 1), 1 });
                }
            return certify("thm8", std::move(target), std::move(rep), std::move(ledger));
        }

        int dims = 0;
        for (size_t i = 0 ; i < qs.size() ; ++i)
            dims += qs[i] * ceil_log2(n / qs[i]);
        CubeRepresentation rep(n, dims);
        int t = 0;
        for (size_t i = 0 ; i < qs.size() ; ++i)
            for (int j = 0 ; j < qs[i] ; ++j) {
                auto & m = members[i][j];
                int bits = ceil_log2(long(m.size()));
                for (int b = 0 ; b < bits ; ++b) {
                    for (int v = 0 ; v < n ; ++v)
                        rep.set(v, t + b, Dyadic(1));
                    for (size_t r = 0 ; r < m.size() ; ++r)
                        rep.set(m[r], t + b, Dyadic((r >> (bits - 1 - b) & 1) ? 2 : 0));
                }
                t += bits;
                ledger.push_back({ "V-" + to_string(i + 1) + "-" + to_string(j + 1), bits });
            }
        return certify("thm8", std::move(target), std::move(rep), std::move(ledger));
    }

    auto thm7_direct_via_strong(span<const Graph> factors, RepKind kind, const ConstructionOptions & options) -> Certificate
    {
        auto parts = direct_parts(factors, kind, options);
        vector<string> notes;
        for (size_t i = 0 ; i < parts.chis.size() ; ++i)
            notes.push_back("chi-" + to_string(i + 1) + " " + to_string(parts.chis[i]));
        int dk = dimensions(parts.colour_rep);
        auto rep = concat(parts.strong.rep, pull(parts.colour_rep, parts.image));
        return certify("thm7", std::move(parts.target), std::move(rep),
                { { "strong", parts.strong.dimensions() }, { parts.colour_stage, dk } }, std::move(notes));
    }

    auto cor9_direct_general(span<const Graph> factors, const ConstructionOptions & options) -> Certificate
    {
        auto parts = direct_parts(factors, RepKind::box, options);
        vector<LedgerEntry> ledger;
        for (size_t i = 0 ; i < parts.strong.ledger.size() ; ++i)
            ledger.push_back({ "boxicity-" + to_string(i + 1), parts.strong.ledger[i].dimensions });
        if (parts.colour_stage == "direct-colour-product")
            for (size_t i = 0 ; i < parts.chis.size() ; ++i)
                ledger.push_back({ "chromatic-" + to_string(i + 1), parts.chis[i] });
        else
            ledger.push_back({ parts.colour_stage, dimensions(parts.colour_rep) });

        auto rep = concat(parts.strong.rep, pull(parts.colour_rep, parts.image));
        return certify("cor9", std::move(parts.target), std::move(rep), std::move(ledger));
    }

    auto obs7_star_cube(int n) -> Certificate
    {
        if (n < 1)
            throw InvalidArgument("star needs n >= 1");
        int bits = ceil_log2(n);
        CubeRepresentation rep(n + 1, bits);
        for (int b = 0 ; b < bits ; ++b) {
            rep.set(0, b, Dyadic(1));
            for (int leaf = 1 ; leaf <= n ; ++leaf)
                rep.set(leaf, b, Dyadic(((leaf - 1) >> (bits - 1 - b) & 1) ? 2 : 0));
        }
        vector<LedgerEntry> ledger;
        for (int b = 0 ; b < bits ; ++b)
            ledger.push_back({ "bit-" + to_string(b + 1), 1 });
        return certify("obs7", star_graph(n), std::move(rep), std::move(ledger));
    }

    auto write_provenance(std::ostream & out, const Certificate & cert) -> void
    {
        out << "theorem " << cert.theorem << '\n';
        out << "vertices " << cert.target.size() << '\n';
        out << "dimensions " << cert.dimensions() << '\n';
        out << "verified " << (cert.report.ok ? "yes" : "no") << '\n';
        for (auto & n : cert.notes)
            out << n << '\n';
        out << "ledger\n";
        for (auto & e : cert.ledger)
            out << e.stage << ' ' << e.dimensions << '\n';
    }

    auto write_certificate(const string & directory, const Certificate & cert) -> void
    {
        std::filesystem::path dir(directory);
        std::filesystem::create_directories(dir);

        std::ostringstream graph, rep, provenance;
        write_graph(graph, cert.target);
        write_representation(rep, cert.rep);
        write_provenance(provenance, cert);

        write_atomically(dir / "graph.txt", graph.str());
        write_atomically(dir / "rep.txt", rep.str());
        write_atomically(dir / "provenance.txt", provenance.str());
    }
}
