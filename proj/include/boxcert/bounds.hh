#pragma once

#include <boxcert/constructions.hh>
#include <boxcert/expression.hh>
#include <boxcert/graph.hh>

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace boxcert
{
    enum class Parameter { boxicity, cubicity };

    auto to_string(Parameter p) -> std::string;
    auto parse_parameter(const std::string & s) -> Parameter;

    enum class BoundSide { lower, upper };

    /**
     * witnessed: a pipeline here builds a certificate of exactly this dimension.
     * proved: a theorem with every input computed exactly, no certificate built.
     * reported: an external result quoted with its explicit constant; never tightens upper.
     * asymptotic: an order-of-growth shape without constants; never enters either column.
     */
    enum class Standing { witnessed, proved, reported, asymptotic };

    auto to_string(Standing s) -> std::string;

    struct BoundEntry
    {
        std::string tag;
        std::string formula;
        BoundSide side;
        double raw;
        /// raw rounded up.
        long value;
        Standing standing;
    };

    struct BoundReport
    {
        Parameter parameter = Parameter::boxicity;
        long lower = 0;
        /// Absent means no applicable finite bound.
        std::optional<long> upper;
        std::optional<long> witnessed_upper;
        /// Oracle value when the whole graph was small enough.
        std::optional<long> exact;
        std::vector<BoundEntry> entries;
    };

    /// Per-factor inputs to the formulas; unknown values stay empty.
    struct FactorInvariants
    {
        std::string name;
        Graph graph;
        bool complete = false;
        bool universal = false;
        bool has_edge = false;
        int chi = 1;
        std::optional<int> boxicity, cubicity;
    };

    struct BoundOptions
    {
        ConstructionOptions construction;
        /// Largest whole graph handed to the exact oracle.
        int oracle_vertices = 10;
    };

    auto factor_invariants(const Graph & g, std::string name, const BoundOptions & options = {}) -> FactorInvariants;

    auto bound_product(std::span<const FactorInvariants> factors, ProductKind kind, Parameter parameter,
            const BoundOptions & options = {}) -> BoundReport;
    auto bound_graph(const Graph & g, Parameter parameter, const BoundOptions & options = {}) -> BoundReport;
    auto bound(const Expression & e, Parameter parameter, const BoundOptions & options = {}) -> BoundReport;

    auto write_bound_report(std::ostream & out, const BoundReport & report) -> void;

    struct GrowthRow
    {
        int d;
        long lower;
        std::optional<long> upper, witnessed_upper;
        std::string provenance;
    };

    auto growth_table(const Graph & g, ProductKind kind, Parameter parameter, int dmax,
            const BoundOptions & options = {}) -> std::vector<GrowthRow>;
    /// CSV with header d,lower,upper,witnessed_upper,provenance; empty cells mean unbounded.
    auto write_growth_table(std::ostream & out, std::span<const GrowthRow> rows) -> void;
}
