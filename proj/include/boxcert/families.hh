#pragma once

#include <boxcert/geometry.hh>
#include <boxcert/graph.hh>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace boxcert
{
    /// Ordered list of subsets of the universe {1..n}, n <= 64; element u is bit u - 1.
    class SetFamily
    {
        private:
            int _universe = 0;
            std::vector<std::uint64_t> _sets;

        public:
            SetFamily() = default;
            SetFamily(int universe, std::vector<std::uint64_t> sets);

            auto universe() const -> int { return _universe; }
            auto size() const -> int { return int(_sets.size()); }
            auto set(int i) const -> std::uint64_t { return _sets[i]; }
            auto sets() const -> const std::vector<std::uint64_t> & { return _sets; }
            auto contains(int i, int element) const -> bool { return _sets[i] >> (element - 1) & 1; }

            friend auto operator== (const SetFamily &, const SetFamily &) -> bool = default;
    };

    /// Indices i < i', j < j' of a pair of pairs whose symmetric differences are disjoint.
    struct Quadruple
    {
        int a, a_prime, b, b_prime;
    };

    struct DoubleDistinguishingCheck
    {
        bool ok = true;
        std::optional<Quadruple> witness;
    };

    auto verify_double_distinguishing(const SetFamily & f) -> DoubleDistinguishingCheck;

    inline constexpr int default_family_retries = 64;
    inline constexpr int exhaustive_fallback_universe = 16;

    struct FamilySearch
    {
        SetFamily family;
        std::uint64_t seed = 0;
        /// Random trials used, counting the successful one.
        int attempts = 0;
        bool from_fallback = false;
    };

    /// Each element joins each set with probability 1/2; trial r uses seed + r. Throws NotFoundError.
    auto random_double_distinguishing(int universe, int q, std::uint64_t seed, int retries = default_family_retries) -> FamilySearch;

    /// floor(((4/3)^(1/4))^n), a size at which random families succeed with good probability.
    auto guaranteed_family_size(int universe) -> long;
    /// ceil(10 log2 q).
    auto hamming_universe_size(int q) -> int;

    /// Maps from source to target, each stored as an image table.
    struct WeakHomFamily
    {
        Graph source, target;
        std::vector<std::vector<int>> maps;
    };

    enum class RealizerFailure { not_weak_homomorphism, unkilled_non_edge };

    struct RealizerCheck
    {
        bool ok = true;
        RealizerFailure failure = RealizerFailure::unkilled_non_edge;
        /// Map index for a broken weak homomorphism, -1 otherwise.
        int map = -1;
        int u = -1, v = -1;
    };

    auto verify_realizer(const WeakHomFamily & family) -> RealizerCheck;

    /// One map per universe element u: coordinate x goes to 0 if u is in S_x, else 1.
    auto hamming_realizer(int q, int d, const SetFamily & f) -> WeakHomFamily;

    /// Dimension block (u, t) assigns x the axis-t data of rep_h at F_u(x). Preconditions verified.
    auto compose_realizer(const WeakHomFamily & family, const BoxRepresentation & rep_h) -> BoxRepresentation;
    auto compose_realizer(const WeakHomFamily & family, const CubeRepresentation & rep_h) -> CubeRepresentation;

    auto read_family(std::istream & in) -> SetFamily;
    auto write_family(std::ostream & out, const SetFamily & f) -> void;
    auto to_text(const SetFamily & f) -> std::string;
}
