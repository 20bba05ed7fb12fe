#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace boxcert
{
    using Edge = std::pair<int, int>;
    using Label = std::vector<int>;

    inline constexpr int default_max_vertices = 4096;

    /**
     * Finite simple undirected graph on dense vertices 0..n-1.
     *
     * Product graphs carry a coordinate tuple per vertex. Unlabelled graphs
     * report the one-tuple (v) for vertex v, so products can always flatten
     * their factor labels.
     */
    class Graph
    {
        private:
            int _size = 0;
            int _words = 0;
            std::vector<std::uint64_t> _matrix;
            std::vector<std::vector<int>> _neighbours;
            std::vector<Label> _labels;
            long _edge_count = 0;

        public:
            Graph() = default;
            explicit Graph(int size);

            /// Edges may be listed in either orientation; self-loops and duplicates throw InvalidArgument.
            Graph(int size, std::span<const Edge> edges, std::vector<Label> labels = {});

            auto size() const -> int { return _size; }
            auto edge_count() const -> long { return _edge_count; }
            auto adjacent(int a, int b) const -> bool
            {
                return (_matrix[std::size_t(a) * _words + (b >> 6)] >> (b & 63)) & 1;
            }
            auto neighbours(int v) const -> const std::vector<int> & { return _neighbours[v]; }
            auto degree(int v) const -> int { return int(_neighbours[v].size()); }

            auto has_labels() const -> bool { return ! _labels.empty(); }
            auto label(int v) const -> Label;
            auto labels() const -> const std::vector<Label> & { return _labels; }
            auto with_labels(std::vector<Label> labels) const -> Graph;

            /// Edges as (u, v) with u < v, sorted lexicographically.
            auto edges() const -> std::vector<Edge>;
            /// Non-adjacent distinct pairs (u, v), u < v, sorted lexicographically.
            auto non_edges() const -> std::vector<Edge>;

            auto is_complete() const -> bool;
            auto has_universal_vertex() const -> bool;

            friend auto operator== (const Graph & a, const Graph & b) -> bool;
    };

    enum class ProductKind { strong, cartesian, direct };

    auto to_string(ProductKind kind) -> std::string;
    auto parse_product_kind(const std::string & s) -> ProductKind;

    auto complete_graph(int q) -> Graph;
    auto path_graph(int n) -> Graph;
    auto cycle_graph(int n) -> Graph;
    /// Root is vertex 0, leaves are 1..n.
    auto star_graph(int n) -> Graph;
    auto hamming_graph(int q, int d) -> Graph;
    auto hypercube_graph(int d) -> Graph;
    /// K_{q,q} minus a perfect matching, built as K_q x K_2.
    auto crown_graph(int q) -> Graph;
    auto empty_graph(int n) -> Graph;

    /// Vertex (u1, u2) gets index u1 * |G2| + u2; labels are the concatenated factor labels.
    auto product(const Graph & g1, const Graph & g2, ProductKind kind, int max_vertices = default_max_vertices) -> Graph;
    /// Left-associated product of d copies of g.
    auto power(const Graph & g, int d, ProductKind kind, int max_vertices = default_max_vertices) -> Graph;
    auto product_all(std::span<const Graph> gs, ProductKind kind, int max_vertices = default_max_vertices) -> Graph;

    /// Vertices of g2 follow those of g1.
    auto join(const Graph & g1, const Graph & g2) -> Graph;
    auto disjoint_union(const Graph & g1, const Graph & g2) -> Graph;
    /// Subgraph induced on the listed vertices, renumbered in the given order; labels carried over.
    auto induced(const Graph & g, std::span<const int> vertices) -> Graph;
    /// Appends m vertices adjacent to everything, including each other.
    auto add_universal(const Graph & g, int m) -> Graph;
    auto complement(const Graph & g) -> Graph;

    /// Index of a tuple in the mixed-radix order used by products of graphs with the given sizes.
    auto mixed_radix_index(std::span<const int> digits, std::span<const int> radices) -> int;
    /// Inverse of mixed_radix_index.
    auto mixed_radix_digits(int index, std::span<const int> radices) -> std::vector<int>;

    struct ProperColoring
    {
        std::vector<int> colors;
        int k = 0;
    };

    enum class ColoringMode { greedy, exact };

    inline constexpr int default_exact_coloring_limit = 16;

    auto greedy_coloring(const Graph & g) -> ProperColoring;
    /// Minimum colouring by branch and bound; SizeLimitError above the limit.
    auto exact_coloring(const Graph & g, int max_vertices = default_exact_coloring_limit) -> ProperColoring;
    auto coloring(const Graph & g, ColoringMode mode, int max_vertices = default_exact_coloring_limit) -> ProperColoring;
    auto is_proper_coloring(const Graph & g, const ProperColoring & c) -> bool;

    /// Brute force over permutations; refuses graphs with more than 10 vertices.
    auto isomorphic(const Graph & a, const Graph & b) -> bool;

    auto read_graph(std::istream & in) -> Graph;
    auto write_graph(std::ostream & out, const Graph & g) -> void;
    auto read_graph_file(const std::string & path) -> Graph;
    auto write_graph_file(const std::string & path, const Graph & g) -> void;
    auto to_text(const Graph & g) -> std::string;
}
