#include <boxcert/dyadic.hh>
#include <boxcert/errors.hh>

#include <cmath>
#include <limits>
#include <stdexcept>

using std::int64_t;
using std::string;

namespace boxcert
{
    namespace
    {
        using Wide = __int128;

        auto normalized(Wide numerator, int exponent) -> Dyadic
        {
            while (exponent > 0 && (numerator & 1) == 0) {
                numerator /= 2;
                --exponent;
            }
            if (numerator > std::numeric_limits<int64_t>::max() || numerator < std::numeric_limits<int64_t>::min())
                throw std::overflow_error("dyadic numerator overflow");
            return Dyadic::from_parts(int64_t(numerator), exponent);
        }

        auto scaled(const Dyadic & x, int exponent) -> Wide
        {
            return Wide(x.numerator()) << (exponent - x.exponent());
        }
    }

    auto Dyadic::from_parts(int64_t numerator, int exponent) -> Dyadic
    {
        if (exponent < 0 || exponent > max_exponent)
            throw std::overflow_error("dyadic exponent out of range");
        Dyadic result;
        result._numerator = numerator;
        result._exponent = exponent;
        while (result._exponent > 0 && (result._numerator & 1) == 0) {
            result._numerator /= 2;
            --result._exponent;
        }
        return result;
    }

    auto Dyadic::to_double() const -> double
    {
        return std::ldexp(double(_numerator), -_exponent);
    }

    auto Dyadic::to_string() const -> string
    {
        if (_exponent == 0)
            return std::to_string(_numerator);
        return std::to_string(_numerator) + "/2^" + std::to_string(_exponent);
    }

    auto Dyadic::parse(const string & text) -> Dyadic
    {
        auto parse_int = [&] (const string & s) -> int64_t {
            if (s.empty())
                throw ParseError("bad dyadic value '" + text + "'");
            size_t used = 0;
            int64_t value = 0;
            try {
                value = std::stoll(s, &used);
            }
            catch (const std::exception &) {
                throw ParseError("bad dyadic value '" + text + "'");
            }
            if (used != s.size())
                throw ParseError("bad dyadic value '" + text + "'");
            return value;
        };

        auto slash = text.find('/');
        if (slash == string::npos)
            return Dyadic(parse_int(text));

        auto denominator = text.substr(slash + 1);
        if (denominator.rfind("2^", 0) != 0)
            throw ParseError("bad dyadic denominator in '" + text + "' (expected 2^e)");
        auto exponent = parse_int(denominator.substr(2));
        if (exponent < 0 || exponent > max_exponent)
            throw ParseError("dyadic exponent out of range in '" + text + "'");
        return from_parts(parse_int(text.substr(0, slash)), int(exponent));
    }

    auto operator+ (const Dyadic & a, const Dyadic & b) -> Dyadic
    {
        int e = std::max(a.exponent(), b.exponent());
        return normalized(scaled(a, e) + scaled(b, e), e);
    }

    auto operator- (const Dyadic & a, const Dyadic & b) -> Dyadic
    {
        int e = std::max(a.exponent(), b.exponent());
        return normalized(scaled(a, e) - scaled(b, e), e);
    }

    auto operator- (const Dyadic & a) -> Dyadic
    {
        return Dyadic(0) - a;
    }

    auto operator<=> (const Dyadic & a, const Dyadic & b) -> std::strong_ordering
    {
        int e = std::max(a.exponent(), b.exponent());
        Wide x = scaled(a, e), y = scaled(b, e);
        if (x < y)
            return std::strong_ordering::less;
        if (x > y)
            return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }
}
