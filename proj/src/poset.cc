#include <boxcert/poset.hh>
#include <boxcert/errors.hh>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <queue>
#include <sstream>

using std::pair;
using std::size_t;
using std::span;
using std::string;
using std::uint64_t;
using std::vector;

namespace boxcert
{
    Poset::Poset(int size, span<const pair<int, int>> relations) :
        _size(size),
        _less(size_t(size) * size_t(size), 0)
    {
        if (size < 0)
            throw InvalidArgument("poset size must be non-negative");
        for (auto [x, y] : relations) {
            if (x < 0 || y < 0 || x >= size || y >= size)
                throw InvalidArgument("poset relation out of range");
            if (x == y)
                throw InvalidArgument("poset relation " + std::to_string(x) + " < " + std::to_string(x) + " is reflexive");
            _less[size_t(x) * size + y] = 1;
        }

        for (int m = 0 ; m < size ; ++m)
            for (int x = 0 ; x < size ; ++x)
                if (less(x, m))
                    for (int y = 0 ; y < size ; ++y)
                        if (less(m, y))
                            _less[size_t(x) * size + y] = 1;

        for (int x = 0 ; x < size ; ++x)
            if (less(x, x))
                throw InvalidArgument("poset relations contain a cycle through " + std::to_string(x));
    }

    auto Poset::relations() const -> vector<pair<int, int>>
    {
        vector<pair<int, int>> result;
        for (int x = 0 ; x < _size ; ++x)
            for (int y = 0 ; y < _size ; ++y)
                if (less(x, y))
                    result.emplace_back(x, y);
        return result;
    }

    auto Poset::is_minimal(int x) const -> bool
    {
        for (int y = 0 ; y < _size ; ++y)
            if (less(y, x))
                return false;
        return true;
    }

    auto Poset::has_height_at_most_two() const -> bool
    {
        for (int x = 0 ; x < _size ; ++x)
            for (int y = 0 ; y < _size ; ++y)
                if (less(x, y))
                    for (int z = 0 ; z < _size ; ++z)
                        if (less(y, z))
                            return false;
        return true;
    }

    LinearExtension::LinearExtension(vector<int> order) :
        _order(std::move(order)),
        _position(_order.size(), -1)
    {
        for (size_t i = 0 ; i < _order.size() ; ++i) {
            int x = _order[i];
            if (x < 0 || x >= int(_order.size()) || _position[x] != -1)
                throw InvalidArgument("linear extension is not a permutation");
            _position[x] = int(i);
        }
    }

    auto LinearExtension::extends(const Poset & p) const -> bool
    {
        if (size() != p.size())
            return false;
        for (auto [x, y] : p.relations())
            if (_position[x] >= _position[y])
                return false;
        return true;
    }

    auto is_realizer(const Poset & p, const Realizer & r) -> bool
    {
        if (r.extensions.empty())
            return false;
        for (auto & l : r.extensions)
            if (! l.extends(p))
                return false;
        for (int x = 0 ; x < p.size() ; ++x)
            for (int y = 0 ; y < p.size() ; ++y) {
                if (x == y || p.less(x, y))
                    continue;
                bool everywhere = std::all_of(r.extensions.begin(), r.extensions.end(),
                        [&] (const LinearExtension & l) { return l.position(x) < l.position(y); });
                if (everywhere)
                    return false;
            }
        return true;
    }

    auto comparability_graph(const Poset & p) -> Graph
    {
        vector<Edge> edges;
        for (int x = 0 ; x < p.size() ; ++x)
            for (int y = x + 1 ; y < p.size() ; ++y)
                if (p.comparable(x, y))
                    edges.emplace_back(x, y);
        return Graph(p.size(), edges);
    }

    auto hamming_weight(int vertex) -> int
    {
        return std::popcount(unsigned(vertex));
    }

    auto boolean_layer_poset(int d, int lower, int upper) -> LayerPoset
    {
        if (d < 1 || d > 20)
            throw InvalidArgument("boolean layer poset needs 1 <= d <= 20");
        if (! (0 <= lower && lower < upper && upper <= d))
            throw InvalidArgument("boolean layer poset needs 0 <= i < j <= d");

        LayerPoset result;
        result.d = d;
        result.lower = lower;
        result.upper = upper;
        for (int layer : { lower, upper })
            for (int v = 0 ; v < (1 << d) ; ++v)
                if (hamming_weight(v) == layer)
                    result.vertex.push_back(v);

        vector<pair<int, int>> relations;
        int n = int(result.vertex.size());
        for (int x = 0 ; x < n ; ++x)
            for (int y = 0 ; y < n ; ++y) {
                int u = result.vertex[x], v = result.vertex[y];
                if (u != v && (u & ~v) == 0)
                    relations.emplace_back(x, y);
            }
        result.poset = Poset(n, relations);
        result.comparability = comparability_graph(result.poset);
        return result;
    }

    namespace
    {
        // Critical pair (a, b): incomparable, everything below a is below b, everything above b is above a.
        // Some extension of every realizer must put b before a.
        auto critical_pairs(const Poset & p) -> vector<pair<int, int>>
        {
            vector<pair<int, int>> result;
            int n = p.size();
            for (int a = 0 ; a < n ; ++a)
                for (int b = 0 ; b < n ; ++b) {
                    if (a == b || p.comparable(a, b))
                        continue;
                    bool critical = true;
                    for (int z = 0 ; z < n && critical ; ++z) {
                        if (p.less(z, a) && ! p.less(z, b))
                            critical = false;
                        if (p.less(b, z) && ! p.less(a, z))
                            critical = false;
                    }
                    if (critical)
                        result.emplace_back(a, b);
                }
            return result;
        }

        // above[x] = elements strictly above x in the order P plus the reversals added so far.
        using Closure = vector<uint64_t>;

        auto closure_of(const Poset & p) -> Closure
        {
            Closure above(p.size(), 0);
            for (auto [x, y] : p.relations())
                above[x] |= uint64_t(1) << y;
            return above;
        }

        // Adds b below a; false if that closes a cycle.
        auto add_relation(Closure & above, int b, int a) -> bool
        {
            if (above[a] >> b & 1)
                return false;
            uint64_t gained = above[a] | (uint64_t(1) << a);
            for (size_t x = 0 ; x < above.size() ; ++x)
                if (int(x) == b || (above[x] >> b & 1))
                    above[x] |= gained;
            return true;
        }

        // Topological order of the closure, smallest free element first.
        auto extension_of(const Closure & above) -> LinearExtension
        {
            int n = int(above.size());
            vector<int> indegree(n, 0);
            for (int x = 0 ; x < n ; ++x)
                for (int y = 0 ; y < n ; ++y)
                    if (above[x] >> y & 1)
                        ++indegree[y];
            std::priority_queue<int, vector<int>, std::greater<int>> ready;
            for (int x = 0 ; x < n ; ++x)
                if (indegree[x] == 0)
                    ready.push(x);
            vector<int> order;
            while (! ready.empty()) {
                int x = ready.top();
                ready.pop();
                order.push_back(x);
                for (int y = 0 ; y < n ; ++y)
                    if ((above[x] >> y & 1) && --indegree[y] == 0)
                        ready.push(y);
            }
            return LinearExtension(std::move(order));
        }

        struct PdimSearch
        {
            const vector<pair<int, int>> & pairs;
            int k;
            vector<Closure> classes;
            long nodes = 0;

            auto assign(size_t i, int used) -> bool
            {
                ++nodes;
                if (i == pairs.size())
                    return true;
                auto [a, b] = pairs[i];

                // Already reversed by an existing class: no branching needed.
                for (int c = 0 ; c < used ; ++c)
                    if (classes[c][b] >> a & 1)
                        return assign(i + 1, used);

                for (int c = 0 ; c < std::min(used + 1, k) ; ++c) {
                    Closure saved = classes[c];
                    if (add_relation(classes[c], b, a) && assign(i + 1, std::max(used, c + 1)))
                        return true;
                    classes[c] = std::move(saved);
                }
                return false;
            }
        };
    }

    auto exact_pdim(const Poset & p, int kmax, int max_elements) -> PdimResult
    {
        if (kmax < 1)
            throw InvalidArgument("exact_pdim needs kmax >= 1");
        if (p.size() > max_elements || p.size() > 64)
            throw SizeLimitError("exact_pdim limited to " + std::to_string(std::min(max_elements, 64)) + " elements, got " + std::to_string(p.size()));

        PdimResult result;
        auto pairs = critical_pairs(p);
        auto base = closure_of(p);

        for (int k = 1 ; k <= kmax ; ++k) {
            PdimSearch search{ pairs, k, vector<Closure>(k, base) };
            bool found = search.assign(0, 0);
            result.nodes += search.nodes;
            if (found) {
                Realizer r;
                for (auto & c : search.classes)
                    r.extensions.push_back(extension_of(c));
                if (! is_realizer(p, r))
                    throw VerificationError("exact_pdim produced an invalid realizer");
                result.dimension = k;
                result.realizer = std::move(r);
                result.exhausted_below = true;
                return result;
            }
        }

        result.dimension = kmax + 1;
        result.exhausted_below = true;
        return result;
    }

    auto realizer_to_box(const Poset & p, const Realizer & r) -> BoxRepresentation
    {
        if (! is_realizer(p, r))
            throw VerificationError("realizer_to_box: not a realizer of the poset");
        if (! p.has_height_at_most_two())
            throw InvalidArgument("realizer_to_box: poset has height greater than two");

        int n = p.size();
        int k = int(r.extensions.size());
        BoxRepresentation rep(n, 2 * k);
        Dyadic top(n + 1);
        for (int e = 0 ; e < k ; ++e) {
            auto & l = r.extensions[e];
            for (int x = 0 ; x < n ; ++x) {
                Dyadic pi(l.position(x) + 1);
                if (p.is_minimal(x)) {
                    rep.set(x, 2 * e, Interval(pi, pi));
                    rep.set(x, 2 * e + 1, Interval(pi, top));
                }
                else {
                    rep.set(x, 2 * e, Interval(0, pi));
                    rep.set(x, 2 * e + 1, Interval(pi, pi));
                }
            }
        }
        return rep;
    }

    auto read_poset(std::istream & in) -> pair<Poset, std::optional<Realizer>>
    {
        string line;
        int line_number = 0;
        long n = -1;
        vector<pair<int, int>> relations;
        std::optional<Realizer> realizer;
        vector<vector<int>> orders;

        auto fail = [&] (const string & what) {
            return ParseError("poset line " + std::to_string(line_number) + ": " + what);
        };

        while (std::getline(in, line)) {
            ++line_number;
            auto first = line.find_first_not_of(" \t\r");
            if (first == string::npos || line[first] == '#')
                continue;
            std::istringstream row(line);
            if (n < 0) {
                string rest;
                if (! (row >> n) || (row >> rest) || n < 0)
                    throw fail("expected element count");
                continue;
            }
            if (line.compare(first, 2, "L:") == 0) {
                std::istringstream items(line.substr(first + 2));
                vector<int> order;
                long x;
                while (items >> x)
                    order.push_back(int(x));
                if (! items.eof())
                    throw fail("bad extension entry");
                if (long(order.size()) != n)
                    throw fail("extension must list all " + std::to_string(n) + " elements");
                orders.push_back(std::move(order));
                continue;
            }
            if (! orders.empty())
                throw fail("relation after extension lines");
            long x, y;
            string op, rest;
            if (! (row >> x >> op >> y) || op != "<" || (row >> rest))
                throw fail("expected 'x < y'");
            if (x < 0 || y < 0 || x >= n || y >= n)
                throw fail("element out of range");
            relations.emplace_back(int(x), int(y));
        }
        if (n < 0)
            throw ParseError("poset: missing element count");

        Poset p(int(n), relations);
        if (! orders.empty()) {
            Realizer r;
            for (auto & o : orders) {
                try {
                    r.extensions.emplace_back(o);
                }
                catch (const InvalidArgument & e) {
                    throw ParseError(string("poset: ") + e.what());
                }
            }
            realizer = std::move(r);
        }
        return { std::move(p), std::move(realizer) };
    }

    auto write_poset(std::ostream & out, const Poset & p, const Realizer * r) -> void
    {
        out << p.size() << '\n';
        for (auto [x, y] : p.relations())
            out << x << " < " << y << '\n';
        if (r)
            for (auto & l : r->extensions) {
                out << "L:";
                for (int x : l.order())
                    out << ' ' << x;
                out << '\n';
            }
    }
}
