#pragma once

#include <boxcert/geometry.hh>
#include <boxcert/graph.hh>

#include <optional>
#include <span>

namespace boxcert
{
    inline constexpr int default_boxicity_limit = 12;
    inline constexpr int default_cubicity_limit = 10;
    /// Hard ceiling for the subset-lattice searches below.
    inline constexpr int oracle_hard_limit = 16;

    /// Exact interval recognition; on success a 1-dimensional model whose realization is g.
    auto interval_recognition(const Graph & g) -> std::optional<BoxRepresentation>;
    /// Unit interval iff interval and claw-free; on success a 1-dimensional unit model.
    auto unit_interval_recognition(const Graph & g) -> std::optional<CubeRepresentation>;

    /// Independent characterizations, used for cross-checking and lower bounds.
    auto is_chordal(const Graph & g) -> bool;
    auto is_asteroidal_triple_free(const Graph & g) -> bool;
    auto has_induced_claw(const Graph & g) -> bool;
    auto has_induced_four_cycle(const Graph & g) -> bool;

    /**
     * Interval sandwich: is there an interval graph containing every edge of g
     * and none of the listed pairs? Returns its 1-dimensional model.
     */
    auto interval_sandwich(const Graph & g, std::span<const Edge> forbidden) -> std::optional<BoxRepresentation>;
    /// Same with a unit interval graph; the model is returned as origins.
    auto unit_interval_sandwich(const Graph & g, std::span<const Edge> forbidden) -> std::optional<CubeRepresentation>;

    struct OracleResult
    {
        /// Minimum dimension, or kmax + 1 when no representation of dimension <= kmax exists.
        int value = 0;
        bool exceeded = false;
        /// Every smaller dimension was refuted by exhausted search.
        bool optimal = false;
        std::optional<Representation> witness;
        long nodes = 0;
    };

    auto exact_boxicity(const Graph & g, int kmax, int max_vertices = default_boxicity_limit) -> OracleResult;
    auto exact_cubicity(const Graph & g, int kmax, int max_vertices = default_cubicity_limit) -> OracleResult;
}
