#include <boxcert/graph.hh>
#include <boxcert/errors.hh>

#include <algorithm>
#include <numeric>

using std::size_t;
using std::span;
using std::string;
using std::vector;

namespace boxcert
{
    Graph::Graph(int size) :
        Graph(size, span<const Edge>{})
    {
    }

    Graph::Graph(int size, span<const Edge> edges, vector<Label> labels) :
        _size(size),
        _words((size + 63) / 64),
        _matrix(size_t(size) * size_t((size + 63) / 64), 0),
        _neighbours(size),
        _labels(std::move(labels))
    {
        if (size < 0)
            throw InvalidArgument("graph size must be non-negative");
        if (! _labels.empty() && int(_labels.size()) != size)
            throw InvalidArgument("label count does not match vertex count");

        for (auto [u, v] : edges) {
            if (u < 0 || v < 0 || u >= size || v >= size)
                throw InvalidArgument("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
            if (u == v)
                throw InvalidArgument("self-loop at vertex " + std::to_string(u));
            if (adjacent(u, v))
                throw InvalidArgument("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
            _matrix[size_t(u) * _words + (v >> 6)] |= std::uint64_t(1) << (v & 63);
            _matrix[size_t(v) * _words + (u >> 6)] |= std::uint64_t(1) << (u & 63);
            _neighbours[u].push_back(v);
            _neighbours[v].push_back(u);
            ++_edge_count;
        }

        for (auto & n : _neighbours)
            std::sort(n.begin(), n.end());
    }

    auto Graph::label(int v) const -> Label
    {
        if (_labels.empty())
            return Label{ v };
        return _labels[v];
    }

    auto Graph::with_labels(vector<Label> labels) const -> Graph
    {
        if (! labels.empty() && int(labels.size()) != _size)
            throw InvalidArgument("label count does not match vertex count");
        Graph result = *this;
        result._labels = std::move(labels);
        return result;
    }

    auto Graph::edges() const -> vector<Edge>
    {
        vector<Edge> result;
        result.reserve(_edge_count);
        for (int u = 0 ; u < _size ; ++u)
            for (int v : _neighbours[u])
                if (u < v)
                    result.emplace_back(u, v);
        return result;
    }

    auto Graph::non_edges() const -> vector<Edge>
    {
        vector<Edge> result;
        for (int u = 0 ; u < _size ; ++u)
            for (int v = u + 1 ; v < _size ; ++v)
                if (! adjacent(u, v))
                    result.emplace_back(u, v);
        return result;
    }

    auto Graph::is_complete() const -> bool
    {
        return _edge_count == long(_size) * (_size - 1) / 2;
    }

    auto Graph::has_universal_vertex() const -> bool
    {
        for (int v = 0 ; v < _size ; ++v)
            if (degree(v) == _size - 1)
                return true;
        return false;
    }

    auto operator== (const Graph & a, const Graph & b) -> bool
    {
        return a._size == b._size && a._matrix == b._matrix;
    }

    auto to_string(ProductKind kind) -> string
    {
        switch (kind) {
            case ProductKind::strong: return "strong";
            case ProductKind::cartesian: return "cartesian";
            case ProductKind::direct: return "direct";
        }
        return "?";
    }

    auto parse_product_kind(const string & s) -> ProductKind
    {
        if (s == "strong")
            return ProductKind::strong;
        if (s == "cartesian")
            return ProductKind::cartesian;
        if (s == "direct")
            return ProductKind::direct;
        throw ParseError("unknown product kind '" + s + "'");
    }

    auto complete_graph(int q) -> Graph
    {
        if (q < 1)
            throw InvalidArgument("complete graph needs q >= 1");
        vector<Edge> edges;
        for (int u = 0 ; u < q ; ++u)
            for (int v = u + 1 ; v < q ; ++v)
                edges.emplace_back(u, v);
        return Graph(q, edges);
    }

    auto path_graph(int n) -> Graph
    {
        if (n < 1)
            throw InvalidArgument("path needs n >= 1");
        vector<Edge> edges;
        for (int v = 0 ; v + 1 < n ; ++v)
            edges.emplace_back(v, v + 1);
        return Graph(n, edges);
    }

    auto cycle_graph(int n) -> Graph
    {
        if (n < 3)
            throw InvalidArgument("cycle needs n >= 3");
        vector<Edge> edges;
        for (int v = 0 ; v + 1 < n ; ++v)
            edges.emplace_back(v, v + 1);
        edges.emplace_back(0, n - 1);
        return Graph(n, edges);
    }

    auto star_graph(int n) -> Graph
    {
        if (n < 1)
            throw InvalidArgument("star needs n >= 1");
        vector<Edge> edges;
        for (int l = 1 ; l <= n ; ++l)
            edges.emplace_back(0, l);
        return Graph(n + 1, edges);
    }

    auto hamming_graph(int q, int d) -> Graph
    {
        if (q < 2 || d < 1)
            throw InvalidArgument("hamming graph needs q >= 2 and d >= 1");
        return power(complete_graph(q), d, ProductKind::cartesian);
    }

    auto hypercube_graph(int d) -> Graph
    {
        if (d < 1)
            throw InvalidArgument("hypercube needs d >= 1");
        return hamming_graph(2, d);
    }

    auto crown_graph(int q) -> Graph
    {
        if (q < 2)
            throw InvalidArgument("crown graph needs q >= 2");
        return product(complete_graph(q), complete_graph(2), ProductKind::direct);
    }

    auto empty_graph(int n) -> Graph
    {
        if (n < 0)
            throw InvalidArgument("graph size must be non-negative");
        return Graph(n);
    }

    auto product(const Graph & g1, const Graph & g2, ProductKind kind, int max_vertices) -> Graph
    {
        if (g1.size() == 0 || g2.size() == 0)
            throw InvalidArgument("product factors must be nonempty");
        long n = long(g1.size()) * g2.size();
        if (n > max_vertices)
            throw SizeLimitError("product has " + std::to_string(n) + " vertices, limit " + std::to_string(max_vertices));

        int n2 = g2.size();
        auto index = [n2] (int a, int b) { return a * n2 + b; };

        vector<Label> labels;
        labels.reserve(n);
        for (int a = 0 ; a < g1.size() ; ++a)
            for (int b = 0 ; b < n2 ; ++b) {
                Label l = g1.label(a);
                Label r = g2.label(b);
                l.insert(l.end(), r.begin(), r.end());
                labels.push_back(std::move(l));
            }

        vector<Edge> edges;
        for (int u1 = 0 ; u1 < g1.size() ; ++u1)
            for (int u2 = 0 ; u2 < n2 ; ++u2)
                for (int v1 = u1 ; v1 < g1.size() ; ++v1)
                    for (int v2 = 0 ; v2 < n2 ; ++v2) {
                        if (index(v1, v2) <= index(u1, u2))
                            continue;
                        bool eq1 = u1 == v1, adj1 = g1.adjacent(u1, v1) && ! eq1;
                        bool eq2 = u2 == v2, adj2 = g2.adjacent(u2, v2) && ! eq2;
                        bool edge = false;
                        switch (kind) {
                            case ProductKind::strong: edge = (eq1 || adj1) && (eq2 || adj2); break;
                            case ProductKind::cartesian: edge = (eq1 && adj2) || (adj1 && eq2); break;
                            case ProductKind::direct: edge = adj1 && adj2; break;
                        }
                        if (edge)
                            edges.emplace_back(index(u1, u2), index(v1, v2));
                    }

        return Graph(int(n), edges, std::move(labels));
    }

    auto power(const Graph & g, int d, ProductKind kind, int max_vertices) -> Graph
    {
        if (d < 1)
            throw InvalidArgument("power needs d >= 1");
        if (g.size() == 0)
            throw InvalidArgument("power of an empty graph");
        double n = 1;
        for (int i = 0 ; i < d ; ++i)
            n *= g.size();
        if (n > max_vertices)
            throw SizeLimitError("power has " + std::to_string(long(n)) + " vertices, limit " + std::to_string(max_vertices));

        Graph result = g;
        if (! result.has_labels()) {
            vector<Label> labels;
            for (int v = 0 ; v < g.size() ; ++v)
                labels.push_back(Label{ v });
            result = result.with_labels(std::move(labels));
        }
        for (int i = 1 ; i < d ; ++i)
            result = product(result, g, kind, max_vertices);
        return result;
    }

    auto product_all(span<const Graph> gs, ProductKind kind, int max_vertices) -> Graph
    {
        if (gs.empty())
            throw InvalidArgument("product of no factors");
        Graph result = gs[0];
        if (! result.has_labels()) {
            vector<Label> labels;
            for (int v = 0 ; v < result.size() ; ++v)
                labels.push_back(result.label(v));
            result = result.with_labels(std::move(labels));
        }
        for (size_t i = 1 ; i < gs.size() ; ++i)
            result = product(result, gs[i], kind, max_vertices);
        return result;
    }

    namespace
    {
        auto combine(const Graph & g1, const Graph & g2, bool all_cross) -> Graph
        {
            int n1 = g1.size();
            vector<Edge> edges = g1.edges();
            for (auto [u, v] : g2.edges())
                edges.emplace_back(u + n1, v + n1);
            if (all_cross)
                for (int u = 0 ; u < n1 ; ++u)
                    for (int v = 0 ; v < g2.size() ; ++v)
                        edges.emplace_back(u, v + n1);
            return Graph(n1 + g2.size(), edges);
        }
    }

    auto join(const Graph & g1, const Graph & g2) -> Graph
    {
        return combine(g1, g2, true);
    }

    auto disjoint_union(const Graph & g1, const Graph & g2) -> Graph
    {
        return combine(g1, g2, false);
    }

    auto induced(const Graph & g, span<const int> vertices) -> Graph
    {
        vector<int> position(g.size(), -1);
        for (size_t i = 0 ; i < vertices.size() ; ++i) {
            int v = vertices[i];
            if (v < 0 || v >= g.size())
                throw InvalidArgument("induced: vertex " + std::to_string(v) + " not in graph");
            if (position[v] != -1)
                throw InvalidArgument("induced: vertex " + std::to_string(v) + " listed twice");
            position[v] = int(i);
        }

        vector<Edge> edges;
        for (size_t i = 0 ; i < vertices.size() ; ++i)
            for (int w : g.neighbours(vertices[i]))
                if (position[w] > int(i))
                    edges.emplace_back(int(i), position[w]);

        vector<Label> labels;
        if (g.has_labels())
            for (int v : vertices)
                labels.push_back(g.label(v));
        return Graph(int(vertices.size()), edges, std::move(labels));
    }

    auto add_universal(const Graph & g, int m) -> Graph
    {
        if (m < 0)
            throw InvalidArgument("add_universal needs m >= 0");
        if (m == 0)
            return g;
        return join(g, complete_graph(m));
    }

    auto complement(const Graph & g) -> Graph
    {
        return Graph(g.size(), g.non_edges(), g.labels());
    }

    auto mixed_radix_index(span<const int> digits, span<const int> radices) -> int
    {
        if (digits.size() != radices.size())
            throw InvalidArgument("mixed radix: digit count does not match radix count");
        int index = 0;
        for (size_t i = 0 ; i < digits.size() ; ++i) {
            if (digits[i] < 0 || digits[i] >= radices[i])
                throw InvalidArgument("mixed radix: digit out of range");
            index = index * radices[i] + digits[i];
        }
        return index;
    }

    auto mixed_radix_digits(int index, span<const int> radices) -> vector<int>
    {
        vector<int> digits(radices.size());
        for (size_t i = radices.size() ; i-- > 0 ; ) {
            digits[i] = index % radices[i];
            index /= radices[i];
        }
        if (index != 0)
            throw InvalidArgument("mixed radix: index out of range");
        return digits;
    }

    auto greedy_coloring(const Graph & g) -> ProperColoring
    {
        ProperColoring result;
        result.colors.assign(g.size(), -1);
        vector<char> used;
        for (int v = 0 ; v < g.size() ; ++v) {
            used.assign(g.size() + 1, 0);
            for (int w : g.neighbours(v))
                if (result.colors[w] >= 0)
                    used[result.colors[w]] = 1;
            int c = 0;
            while (used[c])
                ++c;
            result.colors[v] = c;
            result.k = std::max(result.k, c + 1);
        }
        return result;
    }

    namespace
    {
        struct ColoringSearch
        {
            const Graph & g;
            vector<int> order;
            vector<int> colors;
            int limit;

            auto extend(int depth, int used) -> bool
            {
                if (depth == int(order.size()))
                    return true;
                int v = order[depth];
                for (int c = 0 ; c < std::min(used + 1, limit) ; ++c) {
                    bool ok = true;
                    for (int w : g.neighbours(v))
                        if (colors[w] == c) {
                            ok = false;
                            break;
                        }
                    if (! ok)
                        continue;
                    colors[v] = c;
                    if (extend(depth + 1, std::max(used, c + 1)))
                        return true;
                    colors[v] = -1;
                }
                return false;
            }
        };
    }

    auto exact_coloring(const Graph & g, int max_vertices) -> ProperColoring
    {
        if (g.size() > max_vertices)
            throw SizeLimitError("exact colouring limited to " + std::to_string(max_vertices) + " vertices, got " + std::to_string(g.size()));

        ProperColoring best = greedy_coloring(g);
        if (g.size() == 0)
            return best;

        // Colour high-degree vertices first; ties in natural order keep the result deterministic.
        vector<int> order(g.size());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&] (int a, int b) { return g.degree(a) > g.degree(b); });

        for (int k = 1 ; k < best.k ; ++k) {
            ColoringSearch search{ g, order, vector<int>(g.size(), -1), k };
            if (search.extend(0, 0)) {
                best.colors = search.colors;
                best.k = k;
                break;
            }
        }
        return best;
    }

    auto coloring(const Graph & g, ColoringMode mode, int max_vertices) -> ProperColoring
    {
        return mode == ColoringMode::exact ? exact_coloring(g, max_vertices) : greedy_coloring(g);
    }

    auto is_proper_coloring(const Graph & g, const ProperColoring & c) -> bool
    {
        if (int(c.colors.size()) != g.size())
            return false;
        for (int v = 0 ; v < g.size() ; ++v)
            if (c.colors[v] < 0 || c.colors[v] >= c.k)
                return false;
        for (auto [u, v] : g.edges())
            if (c.colors[u] == c.colors[v])
                return false;
        return true;
    }

    auto isomorphic(const Graph & a, const Graph & b) -> bool
    {
        if (a.size() > 10 || b.size() > 10)
            throw SizeLimitError("brute-force isomorphism limited to 10 vertices");
        if (a.size() != b.size() || a.edge_count() != b.edge_count())
            return false;

        vector<int> da, db;
        for (int v = 0 ; v < a.size() ; ++v) {
            da.push_back(a.degree(v));
            db.push_back(b.degree(v));
        }
        std::sort(da.begin(), da.end());
        std::sort(db.begin(), db.end());
        if (da != db)
            return false;

        vector<int> perm(a.size());
        std::iota(perm.begin(), perm.end(), 0);
        do {
            bool ok = true;
            for (auto [u, v] : a.edges())
                if (! b.adjacent(perm[u], perm[v])) {
                    ok = false;
                    break;
                }
            if (ok)
                return true;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return false;
    }
}
