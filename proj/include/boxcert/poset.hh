#pragma once

#include <boxcert/geometry.hh>
#include <boxcert/graph.hh>

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace boxcert
{
    /// Strict partial order on 0..n-1, transitively closed at construction.
    class Poset
    {
        private:
            int _size = 0;
            std::vector<char> _less;

        public:
            Poset() = default;
            /// Relations are (x, y) meaning x below y. Throws InvalidArgument on a cycle or x < x.
            Poset(int size, std::span<const std::pair<int, int>> relations);

            auto size() const -> int { return _size; }
            auto less(int x, int y) const -> bool { return _less[std::size_t(x) * _size + y]; }
            auto comparable(int x, int y) const -> bool { return less(x, y) || less(y, x); }

            /// All (x, y) with x below y, sorted.
            auto relations() const -> std::vector<std::pair<int, int>>;
            auto is_minimal(int x) const -> bool;
            /// No chain of three elements.
            auto has_height_at_most_two() const -> bool;

            friend auto operator== (const Poset &, const Poset &) -> bool = default;
    };

    class LinearExtension
    {
        private:
            std::vector<int> _order;
            std::vector<int> _position;

        public:
            LinearExtension() = default;
            /// Order must be a permutation of 0..n-1.
            explicit LinearExtension(std::vector<int> order);

            auto order() const -> const std::vector<int> & { return _order; }
            auto position(int x) const -> int { return _position[x]; }
            auto size() const -> int { return int(_order.size()); }
            auto extends(const Poset & p) const -> bool;

            friend auto operator== (const LinearExtension &, const LinearExtension &) -> bool = default;
    };

    struct Realizer
    {
        std::vector<LinearExtension> extensions;
    };

    /// Checks the definition directly: x below y in every extension iff x below y in p.
    auto is_realizer(const Poset & p, const Realizer & r) -> bool;

    /// Comparability graph of p on the same element numbering.
    auto comparability_graph(const Poset & p) -> Graph;

    /// The subposet of the Boolean lattice on two layers.
    struct LayerPoset
    {
        int d = 0, lower = 0, upper = 0;
        Poset poset;
        /// Hypercube vertex of each element, using hypercube_graph(d)'s numbering.
        std::vector<int> vertex;
        Graph comparability;
    };

    auto hamming_weight(int vertex) -> int;
    /// Elements of the lower layer first, each layer in increasing vertex order.
    auto boolean_layer_poset(int d, int lower, int upper) -> LayerPoset;

    inline constexpr int default_pdim_element_limit = 24;

    struct PdimResult
    {
        /// Minimum realizer size, or kmax + 1 when the search ran out.
        int dimension = 0;
        std::optional<Realizer> realizer;
        /// True when every size below `dimension` was refuted by exhausted search.
        bool exhausted_below = false;
        long nodes = 0;
    };

    /// Iterative deepening over realizer size; critical pairs are split into reversible classes.
    auto exact_pdim(const Poset & p, int kmax, int max_elements = default_pdim_element_limit) -> PdimResult;

    /// Height-two bridge: two dimensions per extension, realizing the comparability graph exactly.
    auto realizer_to_box(const Poset & p, const Realizer & r) -> BoxRepresentation;

    auto read_poset(std::istream & in) -> std::pair<Poset, std::optional<Realizer>>;
    auto write_poset(std::ostream & out, const Poset & p, const Realizer * r = nullptr) -> void;
}
