#pragma once

#include <boxcert/graph.hh>

#include <optional>
#include <string>
#include <vector>

namespace boxcert
{
    /**
     * Graph expression over the named generators.
     *
     * Grammar: K3 P4 C5 S4 Q3 E2 (shorthands), complete(q) path(n) cycle(n)
     * star(n) hypercube(d) hamming(q,d) crown(q) empty(n), strong(e, ...)
     * cartesian(e, ...) direct(e, ...), power(kind, e, d), join(e, e),
     * union(e, e), universal(e, m).
     */
    struct Expression
    {
        enum class Kind { generator, product, join, disjoint_union, universal };

        Kind kind = Kind::generator;
        std::string generator;
        std::vector<int> parameters;
        ProductKind product = ProductKind::strong;
        std::vector<Expression> operands;
    };

    auto parse_expression(const std::string & text) -> Expression;
    auto to_string(const Expression & e) -> std::string;
    auto build_graph(const Expression & e, int max_vertices = default_max_vertices) -> Graph;

    /// A product with its factors flattened; power, hypercube, hamming and crown expand into factors.
    struct ProductView
    {
        ProductKind kind;
        std::vector<Expression> factors;
    };

    auto product_view(const Expression & e) -> std::optional<ProductView>;

    auto generator_expression(const std::string & name, std::vector<int> parameters) -> Expression;
}
