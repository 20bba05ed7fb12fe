#pragma once

#include <boxcert/dyadic.hh>
#include <boxcert/graph.hh>

#include <iosfwd>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace boxcert
{
    /// Closed interval [lo, hi] with lo <= hi.
    struct Interval
    {
        Dyadic lo, hi;

        Interval() = default;
        Interval(Dyadic lo, Dyadic hi);

        auto intersects(const Interval & other) const -> bool
        {
            return lo <= other.hi && other.lo <= hi;
        }

        friend auto operator== (const Interval &, const Interval &) -> bool = default;
    };

    /// Every vertex gets exactly k intervals. k = 0 realizes the complete graph.
    class BoxRepresentation
    {
        private:
            int _size = 0;
            int _dimensions = 0;
            std::vector<Interval> _intervals;

        public:
            BoxRepresentation() = default;
            /// All intervals start as [0, 0].
            BoxRepresentation(int size, int dimensions);

            auto size() const -> int { return _size; }
            auto dimensions() const -> int { return _dimensions; }

            auto interval(int v, int t) const -> const Interval & { return _intervals[std::size_t(v) * _dimensions + t]; }
            auto set(int v, int t, Interval i) -> void { _intervals[std::size_t(v) * _dimensions + t] = i; }
            auto box(int v) const -> std::span<const Interval>
            {
                return { _intervals.data() + std::size_t(v) * _dimensions, std::size_t(_dimensions) };
            }

            friend auto operator== (const BoxRepresentation &, const BoxRepresentation &) -> bool = default;
    };

    /// Cube of vertex v in dimension t is [origin, origin + 1].
    class CubeRepresentation
    {
        private:
            int _size = 0;
            int _dimensions = 0;
            std::vector<Dyadic> _origins;

        public:
            CubeRepresentation() = default;
            CubeRepresentation(int size, int dimensions);

            auto size() const -> int { return _size; }
            auto dimensions() const -> int { return _dimensions; }

            auto origin(int v, int t) const -> const Dyadic & { return _origins[std::size_t(v) * _dimensions + t]; }
            auto set(int v, int t, Dyadic o) -> void { _origins[std::size_t(v) * _dimensions + t] = o; }

            friend auto operator== (const CubeRepresentation &, const CubeRepresentation &) -> bool = default;
    };

    using Representation = std::variant<BoxRepresentation, CubeRepresentation>;

    auto dimensions(const Representation & rep) -> int;
    auto size(const Representation & rep) -> int;

    enum class ViolationKind { missing_edge, spurious_edge };

    struct Violation
    {
        int u, v;
        ViolationKind kind;

        friend auto operator== (const Violation &, const Violation &) -> bool = default;
    };

    struct VerificationReport
    {
        bool ok = true;
        std::vector<Violation> violations;
    };

    auto to_string(ViolationKind kind) -> std::string;

    auto realize(const BoxRepresentation & rep) -> Graph;
    /// Edge iff the sup-norm distance between origins is at most 1.
    auto realize_cubes(const CubeRepresentation & rep) -> Graph;
    auto realize(const Representation & rep) -> Graph;

    /// Each origin o becomes the interval [o, o + 1].
    auto to_boxes(const CubeRepresentation & rep) -> BoxRepresentation;

    /// Pair-by-pair comparison; InvalidArgument if rep does not cover exactly V(g).
    auto verify(const Graph & g, const BoxRepresentation & rep) -> VerificationReport;
    auto verify(const Graph & g, const CubeRepresentation & rep) -> VerificationReport;
    auto verify(const Graph & g, const Representation & rep) -> VerificationReport;

    /// Interval graph of one coordinate axis.
    auto project(const BoxRepresentation & rep, int t) -> Graph;

    auto intersect_graphs(std::span<const Graph> graphs) -> Graph;
    auto concat_reps(std::span<const BoxRepresentation> reps) -> BoxRepresentation;
    auto concat_cubes(std::span<const CubeRepresentation> reps) -> CubeRepresentation;

    /// f((v1, v2)) = f1(v1) x f2(v2), with the product's vertex numbering. Both factors are verified first.
    auto strong_product_rep(const Graph & g1, const BoxRepresentation & rep1,
            const Graph & g2, const BoxRepresentation & rep2) -> BoxRepresentation;
    auto strong_product_rep(const Graph & g1, const CubeRepresentation & rep1,
            const Graph & g2, const CubeRepresentation & rep2) -> CubeRepresentation;
    /// Unchecked form: plain coordinate concatenation over the product numbering.
    auto strong_product_rep(const BoxRepresentation & rep1, const BoxRepresentation & rep2) -> BoxRepresentation;
    auto strong_product_rep(const CubeRepresentation & rep1, const CubeRepresentation & rep2) -> CubeRepresentation;

    /// result(v) = rep(image[v]).
    auto pullback(const BoxRepresentation & rep, std::span<const int> image) -> BoxRepresentation;
    auto pullback(const CubeRepresentation & rep, std::span<const int> image) -> CubeRepresentation;

    /// Rank-compresses every axis to integers in [0, 2n), preserving the realized graph.
    auto normalize(const BoxRepresentation & rep) -> BoxRepresentation;

    /// Smallest lo and largest hi over all vertices on axis t; [0, 0] when empty.
    auto span_of(const BoxRepresentation & rep, int t) -> Interval;

    auto read_representation(std::istream & in) -> Representation;
    auto write_representation(std::ostream & out, const Representation & rep) -> void;
    auto read_representation_file(const std::string & path) -> Representation;
    auto write_representation_file(const std::string & path, const Representation & rep) -> void;
    auto to_text(const Representation & rep) -> std::string;
}
