#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace boxcert
{
    /**
     * Exact dyadic rational numerator / 2^exponent.
     *
     * Kept normalized: exponent is zero or the numerator is odd, so equal values
     * have equal representations. Arithmetic throws std::overflow_error rather
     * than wrapping.
     */
    class Dyadic
    {
        private:
            std::int64_t _numerator = 0;
            int _exponent = 0;

        public:
            static constexpr int max_exponent = 62;

            constexpr Dyadic() = default;
            constexpr Dyadic(std::int64_t value) : _numerator(value) { }

            static auto from_parts(std::int64_t numerator, int exponent) -> Dyadic;

            auto numerator() const -> std::int64_t { return _numerator; }
            auto exponent() const -> int { return _exponent; }
            auto is_integer() const -> bool { return _exponent == 0; }
            auto to_double() const -> double;

            /// Integers print plainly, everything else as p/2^e.
            auto to_string() const -> std::string;
            /// Accepts "p", "-p" and "p/2^e".
            static auto parse(const std::string & text) -> Dyadic;

            friend auto operator+ (const Dyadic & a, const Dyadic & b) -> Dyadic;
            friend auto operator- (const Dyadic & a, const Dyadic & b) -> Dyadic;
            friend auto operator- (const Dyadic & a) -> Dyadic;
            friend auto operator<=> (const Dyadic & a, const Dyadic & b) -> std::strong_ordering;
            friend auto operator== (const Dyadic & a, const Dyadic & b) -> bool = default;
    };
}
