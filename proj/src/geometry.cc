#include <boxcert/geometry.hh>
#include <boxcert/errors.hh>

#include <algorithm>
#include <map>

using std::size_t;
using std::span;
using std::string;
using std::vector;

namespace boxcert
{
    Interval::Interval(Dyadic l, Dyadic h) :
        lo(l),
        hi(h)
    {
        if (hi < lo)
            throw InvalidArgument("interval with hi < lo: [" + lo.to_string() + ", " + hi.to_string() + "]");
    }

    BoxRepresentation::BoxRepresentation(int size, int dimensions) :
        _size(size),
        _dimensions(dimensions),
        _intervals(size_t(size) * size_t(dimensions))
    {
        if (size < 0 || dimensions < 0)
            throw InvalidArgument("representation size and dimension must be non-negative");
    }

    CubeRepresentation::CubeRepresentation(int size, int dimensions) :
        _size(size),
        _dimensions(dimensions),
        _origins(size_t(size) * size_t(dimensions))
    {
        if (size < 0 || dimensions < 0)
            throw InvalidArgument("representation size and dimension must be non-negative");
    }

    auto dimensions(const Representation & rep) -> int
    {
        return std::visit([] (const auto & r) { return r.dimensions(); }, rep);
    }

    auto size(const Representation & rep) -> int
    {
        return std::visit([] (const auto & r) { return r.size(); }, rep);
    }

    auto to_string(ViolationKind kind) -> string
    {
        return kind == ViolationKind::missing_edge ? "missing-edge" : "spurious-edge";
    }

    namespace
    {
        auto boxes_meet(const BoxRepresentation & rep, int u, int v) -> bool
        {
            for (int t = 0 ; t < rep.dimensions() ; ++t)
                if (! rep.interval(u, t).intersects(rep.interval(v, t)))
                    return false;
            return true;
        }

        auto cubes_meet(const CubeRepresentation & rep, int u, int v) -> bool
        {
            const Dyadic one(1);
            for (int t = 0 ; t < rep.dimensions() ; ++t) {
                auto a = rep.origin(u, t), b = rep.origin(v, t);
                if ((a < b ? b - a : a - b) > one)
                    return false;
            }
            return true;
        }

        template <typename Meet_>
        auto realize_with(int n, Meet_ && meet) -> Graph
        {
            vector<Edge> edges;
            for (int u = 0 ; u < n ; ++u)
                for (int v = u + 1 ; v < n ; ++v)
                    if (meet(u, v))
                        edges.emplace_back(u, v);
            return Graph(n, edges);
        }

        template <typename Meet_>
        auto verify_with(const Graph & g, int n, Meet_ && meet) -> VerificationReport
        {
            if (n != g.size())
                throw InvalidArgument("representation covers " + std::to_string(n) + " vertices, graph has " + std::to_string(g.size()));
            VerificationReport report;
            for (int u = 0 ; u < n ; ++u)
                for (int v = u + 1 ; v < n ; ++v) {
                    bool e = g.adjacent(u, v), m = meet(u, v);
                    if (e && ! m)
                        report.violations.push_back({ u, v, ViolationKind::missing_edge });
                    else if (m && ! e)
                        report.violations.push_back({ u, v, ViolationKind::spurious_edge });
                }
            report.ok = report.violations.empty();
            return report;
        }
    }

    auto realize(const BoxRepresentation & rep) -> Graph
    {
        return realize_with(rep.size(), [&] (int u, int v) { return boxes_meet(rep, u, v); });
    }

    auto realize_cubes(const CubeRepresentation & rep) -> Graph
    {
        return realize_with(rep.size(), [&] (int u, int v) { return cubes_meet(rep, u, v); });
    }

    auto realize(const Representation & rep) -> Graph
    {
        if (auto b = std::get_if<BoxRepresentation>(&rep))
            return realize(*b);
        return realize_cubes(std::get<CubeRepresentation>(rep));
    }

    auto to_boxes(const CubeRepresentation & rep) -> BoxRepresentation
    {
        BoxRepresentation result(rep.size(), rep.dimensions());
        for (int v = 0 ; v < rep.size() ; ++v)
            for (int t = 0 ; t < rep.dimensions() ; ++t)
                result.set(v, t, Interval(rep.origin(v, t), rep.origin(v, t) + Dyadic(1)));
        return result;
    }

    auto verify(const Graph & g, const BoxRepresentation & rep) -> VerificationReport
    {
        return verify_with(g, rep.size(), [&] (int u, int v) { return boxes_meet(rep, u, v); });
    }

    auto verify(const Graph & g, const CubeRepresentation & rep) -> VerificationReport
    {
        return verify_with(g, rep.size(), [&] (int u, int v) { return cubes_meet(rep, u, v); });
    }

    auto verify(const Graph & g, const Representation & rep) -> VerificationReport
    {
        return std::visit([&] (const auto & r) { return verify(g, r); }, rep);
    }

    auto project(const BoxRepresentation & rep, int t) -> Graph
    {
        if (t < 0 || t >= rep.dimensions())
            throw InvalidArgument("projection axis " + std::to_string(t) + " out of range for " + std::to_string(rep.dimensions()) + " dimensions");
        return realize_with(rep.size(), [&] (int u, int v) { return rep.interval(u, t).intersects(rep.interval(v, t)); });
    }

    auto intersect_graphs(span<const Graph> graphs) -> Graph
    {
        if (graphs.empty())
            throw InvalidArgument("intersection of no graphs");
        int n = graphs[0].size();
        for (auto & g : graphs)
            if (g.size() != n)
                throw InvalidArgument("intersection needs a common vertex set");
        vector<Edge> edges;
        for (auto e : graphs[0].edges())
            if (std::all_of(graphs.begin(), graphs.end(), [&] (const Graph & g) { return g.adjacent(e.first, e.second); }))
                edges.push_back(e);
        return Graph(n, edges);
    }

    auto concat_reps(span<const BoxRepresentation> reps) -> BoxRepresentation
    {
        if (reps.empty())
            throw InvalidArgument("concatenation of no representations");
        int n = reps[0].size(), k = 0;
        for (auto & r : reps) {
            if (r.size() != n)
                throw InvalidArgument("concatenation needs a common vertex set");
            k += r.dimensions();
        }
        BoxRepresentation result(n, k);
        int offset = 0;
        for (auto & r : reps) {
            for (int v = 0 ; v < n ; ++v)
                for (int t = 0 ; t < r.dimensions() ; ++t)
                    result.set(v, offset + t, r.interval(v, t));
            offset += r.dimensions();
        }
        return result;
    }

    auto concat_cubes(span<const CubeRepresentation> reps) -> CubeRepresentation
    {
        if (reps.empty())
            throw InvalidArgument("concatenation of no representations");
        int n = reps[0].size(), k = 0;
        for (auto & r : reps) {
            if (r.size() != n)
                throw InvalidArgument("concatenation needs a common vertex set");
            k += r.dimensions();
        }
        CubeRepresentation result(n, k);
        int offset = 0;
        for (auto & r : reps) {
            for (int v = 0 ; v < n ; ++v)
                for (int t = 0 ; t < r.dimensions() ; ++t)
                    result.set(v, offset + t, r.origin(v, t));
            offset += r.dimensions();
        }
        return result;
    }

    auto strong_product_rep(const BoxRepresentation & rep1, const BoxRepresentation & rep2) -> BoxRepresentation
    {
        int n2 = rep2.size();
        BoxRepresentation result(rep1.size() * n2, rep1.dimensions() + rep2.dimensions());
        for (int a = 0 ; a < rep1.size() ; ++a)
            for (int b = 0 ; b < n2 ; ++b) {
                int v = a * n2 + b;
                for (int t = 0 ; t < rep1.dimensions() ; ++t)
                    result.set(v, t, rep1.interval(a, t));
                for (int t = 0 ; t < rep2.dimensions() ; ++t)
                    result.set(v, rep1.dimensions() + t, rep2.interval(b, t));
            }
        return result;
    }

    auto strong_product_rep(const CubeRepresentation & rep1, const CubeRepresentation & rep2) -> CubeRepresentation
    {
        int n2 = rep2.size();
        CubeRepresentation result(rep1.size() * n2, rep1.dimensions() + rep2.dimensions());
        for (int a = 0 ; a < rep1.size() ; ++a)
            for (int b = 0 ; b < n2 ; ++b) {
                int v = a * n2 + b;
                for (int t = 0 ; t < rep1.dimensions() ; ++t)
                    result.set(v, t, rep1.origin(a, t));
                for (int t = 0 ; t < rep2.dimensions() ; ++t)
                    result.set(v, rep1.dimensions() + t, rep2.origin(b, t));
            }
        return result;
    }

    namespace
    {
        template <typename Rep_>
        auto require_verified(const Graph & g, const Rep_ & rep, const char * which) -> void
        {
            auto report = verify(g, rep);
            if (! report.ok) {
                auto & w = report.violations.front();
                throw VerificationError(string(which) + " representation fails verification: " + to_string(w.kind)
                        + " " + std::to_string(w.u) + " " + std::to_string(w.v));
            }
        }
    }

    auto strong_product_rep(const Graph & g1, const BoxRepresentation & rep1,
            const Graph & g2, const BoxRepresentation & rep2) -> BoxRepresentation
    {
        require_verified(g1, rep1, "first factor");
        require_verified(g2, rep2, "second factor");
        return strong_product_rep(rep1, rep2);
    }

    auto strong_product_rep(const Graph & g1, const CubeRepresentation & rep1,
            const Graph & g2, const CubeRepresentation & rep2) -> CubeRepresentation
    {
        require_verified(g1, rep1, "first factor");
        require_verified(g2, rep2, "second factor");
        return strong_product_rep(rep1, rep2);
    }

    auto pullback(const BoxRepresentation & rep, span<const int> image) -> BoxRepresentation
    {
        BoxRepresentation result(int(image.size()), rep.dimensions());
        for (size_t v = 0 ; v < image.size() ; ++v) {
            if (image[v] < 0 || image[v] >= rep.size())
                throw InvalidArgument("pullback image out of range");
            for (int t = 0 ; t < rep.dimensions() ; ++t)
                result.set(int(v), t, rep.interval(image[v], t));
        }
        return result;
    }

    auto pullback(const CubeRepresentation & rep, span<const int> image) -> CubeRepresentation
    {
        CubeRepresentation result(int(image.size()), rep.dimensions());
        for (size_t v = 0 ; v < image.size() ; ++v) {
            if (image[v] < 0 || image[v] >= rep.size())
                throw InvalidArgument("pullback image out of range");
            for (int t = 0 ; t < rep.dimensions() ; ++t)
                result.set(int(v), t, rep.origin(image[v], t));
        }
        return result;
    }

    auto normalize(const BoxRepresentation & rep) -> BoxRepresentation
    {
        BoxRepresentation result(rep.size(), rep.dimensions());
        for (int t = 0 ; t < rep.dimensions() ; ++t) {
            vector<Dyadic> values;
            for (int v = 0 ; v < rep.size() ; ++v) {
                values.push_back(rep.interval(v, t).lo);
                values.push_back(rep.interval(v, t).hi);
            }
            std::sort(values.begin(), values.end());
            values.erase(std::unique(values.begin(), values.end()), values.end());
            auto rank = [&] (const Dyadic & x) {
                return Dyadic(std::lower_bound(values.begin(), values.end(), x) - values.begin());
            };
            for (int v = 0 ; v < rep.size() ; ++v)
                result.set(v, t, Interval(rank(rep.interval(v, t).lo), rank(rep.interval(v, t).hi)));
        }
        return result;
    }

    auto span_of(const BoxRepresentation & rep, int t) -> Interval
    {
        if (rep.size() == 0)
            return Interval(0, 0);
        Dyadic lo = rep.interval(0, t).lo, hi = rep.interval(0, t).hi;
        for (int v = 1 ; v < rep.size() ; ++v) {
            lo = std::min(lo, rep.interval(v, t).lo);
            hi = std::max(hi, rep.interval(v, t).hi);
        }
        return Interval(lo, hi);
    }
}
