#pragma once

#include <boxcert/geometry.hh>
#include <boxcert/graph.hh>
#include <boxcert/oracle.hh>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace boxcert
{
    enum class RepKind { box, cube };

    auto to_string(RepKind kind) -> std::string;
    auto parse_rep_kind(const std::string & s) -> RepKind;

    struct LedgerEntry
    {
        std::string stage;
        int dimensions;
    };

    /**
     * A representation of the target together with its verification report and
     * the per-stage dimension ledger. Pipelines only return certificates whose
     * report is ok; the ledger always sums to the representation's dimension.
     */
    struct Certificate
    {
        std::string theorem;
        Graph target;
        Representation rep;
        VerificationReport report;
        std::vector<LedgerEntry> ledger;
        /// Free-form provenance lines, e.g. "seed 7".
        std::vector<std::string> notes;

        auto dimensions() const -> int { return boxcert::dimensions(rep); }
        auto ledger_total() const -> int;
    };

    struct ConstructionOptions
    {
        std::uint64_t seed = 0;
        int retries = 64;
        int kmax = 8;
        int box_oracle_limit = default_boxicity_limit;
        int cube_oracle_limit = default_cubicity_limit;
        int hypercube_limit = 5;
        int max_vertices = default_max_vertices;
    };

    /// Verifies rep against target and packages it; VerificationError if it does not realize target.
    auto certify(std::string theorem, Graph target, Representation rep,
            std::vector<LedgerEntry> ledger, std::vector<std::string> notes = {}) -> Certificate;

    /// Oracle-minimal witness for a small factor graph.
    auto minimal_representation(const Graph & g, RepKind kind, const ConstructionOptions & options = {}) -> Representation;

    auto thm1_strong(std::span<const Graph> factors, RepKind kind, const ConstructionOptions & options = {},
            std::span<const Representation> supplied = {}) -> Certificate;

    auto thm2_cartesian_via_strong(std::span<const Graph> factors, RepKind kind, const ConstructionOptions & options = {}) -> Certificate;

    auto thm3_cartesian_via_cubes(std::span<const Graph> factors, RepKind kind, const ConstructionOptions & options = {}) -> Certificate;

    /// Classified check of a thm3 certificate: which block kills each non-edge.
    struct NonEdgeAudit
    {
        long layer_non_edges = 0, cross_non_edges = 0;
        long layer_killed_in_h = 0, cross_killed_in_k = 0;
        auto ok() const -> bool
        {
            return layer_killed_in_h == layer_non_edges && cross_killed_in_k == cross_non_edges;
        }
    };

    auto audit_thm3(const Certificate & cert, std::span<const int> factor_sizes) -> NonEdgeAudit;

    auto thm4_hypercube(int d, const ConstructionOptions & options = {}) -> Certificate;

    auto thm6_hamming(int q, int d, RepKind kind, const ConstructionOptions & options = {}) -> Certificate;

    /// Certificate for the Cartesian product of K_{q_i}, restricted from the uniform Hamming certificate.
    auto cartesian_complete_product(std::span<const int> qs, RepKind kind, const ConstructionOptions & options = {}) -> Certificate;

    auto thm8_direct_complete(std::span<const int> qs, RepKind kind, const ConstructionOptions & options = {}) -> Certificate;

    auto thm7_direct_via_strong(std::span<const Graph> factors, RepKind kind, const ConstructionOptions & options = {}) -> Certificate;

    /// Box certificate whose ledger splits into per-factor boxicity and chromatic terms.
    auto cor9_direct_general(std::span<const Graph> factors, const ConstructionOptions & options = {}) -> Certificate;

    auto obs7_star_cube(int n) -> Certificate;

    auto write_provenance(std::ostream & out, const Certificate & cert) -> void;
    /// Writes graph.txt, rep.txt and provenance.txt into an existing or new directory.
    auto write_certificate(const std::string & directory, const Certificate & cert) -> void;
}
