#include <boxcert/families.hh>
#include <boxcert/errors.hh>

#include <bit>
#include <cmath>
#include <random>
#include <sstream>

using std::size_t;
using std::string;
using std::uint64_t;
using std::vector;

namespace boxcert
{
    SetFamily::SetFamily(int universe, vector<uint64_t> sets) :
        _universe(universe),
        _sets(std::move(sets))
    {
        if (universe < 1 || universe > 64)
            throw InvalidArgument("set family universe must be in 1..64");
        uint64_t mask = universe == 64 ? ~uint64_t(0) : (uint64_t(1) << universe) - 1;
        for (auto s : _sets)
            if (s & ~mask)
                throw InvalidArgument("set family member outside the universe");
    }

    auto verify_double_distinguishing(const SetFamily & f) -> DoubleDistinguishingCheck
    {
        int q = f.size();
        vector<std::pair<int, int>> pairs;
        vector<uint64_t> deltas;
        for (int i = 0 ; i < q ; ++i)
            for (int j = i + 1 ; j < q ; ++j) {
                pairs.emplace_back(i, j);
                deltas.push_back(f.set(i) ^ f.set(j));
            }

        for (size_t x = 0 ; x < pairs.size() ; ++x)
            for (size_t y = 0 ; y < pairs.size() ; ++y)
                if ((deltas[x] & deltas[y]) == 0)
                    return { false, Quadruple{ pairs[x].first, pairs[x].second, pairs[y].first, pairs[y].second } };
        return { true, std::nullopt };
    }

    auto guaranteed_family_size(int universe) -> long
    {
        return long(std::floor(std::pow(4.0 / 3.0, universe / 4.0) + 1e-12));
    }

    auto hamming_universe_size(int q) -> int
    {
        if (q < 2)
            throw InvalidArgument("alphabet size must be at least 2");
        // ceil(10 log2 q), exact at powers of two.
        int floor_log = std::bit_width(unsigned(q)) - 1;
        if ((q & (q - 1)) == 0)
            return 10 * floor_log;
        return int(std::ceil(10.0 * std::log2(double(q))));
    }

    namespace
    {
        // Adding `candidate` as the last member keeps the family double distinguishing.
        auto extends_cleanly(const vector<uint64_t> & chosen, uint64_t candidate) -> bool
        {
            vector<uint64_t> deltas;
            for (size_t i = 0 ; i < chosen.size() ; ++i)
                for (size_t j = i + 1 ; j < chosen.size() ; ++j)
                    deltas.push_back(chosen[i] ^ chosen[j]);
            vector<uint64_t> fresh;
            for (auto s : chosen) {
                uint64_t d = s ^ candidate;
                if (d == 0)
                    return false;
                fresh.push_back(d);
            }
            for (size_t x = 0 ; x < fresh.size() ; ++x) {
                for (size_t y = x ; y < fresh.size() ; ++y)
                    if ((fresh[x] & fresh[y]) == 0)
                        return false;
                for (auto d : deltas)
                    if ((fresh[x] & d) == 0)
                        return false;
            }
            return true;
        }

        struct Exhaustive
        {
            int universe, q;
            long budget;
            vector<uint64_t> chosen;

            auto extend(uint64_t from) -> bool
            {
                if (int(chosen.size()) == q)
                    return true;
                uint64_t limit = uint64_t(1) << universe;
                for (uint64_t s = from ; s < limit ; ++s) {
                    if (--budget < 0)
                        return false;
                    if (! extends_cleanly(chosen, s))
                        continue;
                    chosen.push_back(s);
                    if (extend(s + 1))
                        return true;
                    chosen.pop_back();
                }
                return false;
            }
        };
    }

    auto random_double_distinguishing(int universe, int q, uint64_t seed, int retries) -> FamilySearch
    {
        if (universe < 1 || universe > 64)
            throw InvalidArgument("universe size must be in 1..64");
        if (q < 1)
            throw InvalidArgument("family size must be at least 1");
        if (retries < 1)
            throw InvalidArgument("retries must be at least 1");

        uint64_t mask = universe == 64 ? ~uint64_t(0) : (uint64_t(1) << universe) - 1;
        for (int r = 0 ; r < retries ; ++r) {
            std::mt19937_64 rng(seed + uint64_t(r));
            vector<uint64_t> sets(q);
            for (auto & s : sets)
                s = rng() & mask;
            SetFamily f(universe, std::move(sets));
            if (verify_double_distinguishing(f).ok)
                return { std::move(f), seed + uint64_t(r), r + 1, false };
        }

        if (universe <= exhaustive_fallback_universe) {
            Exhaustive search{ universe, q, 20'000'000, {} };
            if (search.extend(0)) {
                SetFamily f(universe, search.chosen);
                if (! verify_double_distinguishing(f).ok)
                    throw VerificationError("exhaustive fallback produced a family that fails the check");
                return { std::move(f), seed, retries, true };
            }
            throw NotFoundError("no double distinguishing family of size " + std::to_string(q) + " over "
                    + std::to_string(universe) + " elements after " + std::to_string(retries)
                    + " random attempts and the exhaustive fallback");
        }

        throw NotFoundError("no double distinguishing family of size " + std::to_string(q) + " over "
                + std::to_string(universe) + " elements after " + std::to_string(retries) + " random attempts");
    }

    auto verify_realizer(const WeakHomFamily & family) -> RealizerCheck
    {
        auto & g = family.source;
        auto & h = family.target;
        for (size_t m = 0 ; m < family.maps.size() ; ++m) {
            auto & image = family.maps[m];
            if (int(image.size()) != g.size())
                throw InvalidArgument("weak homomorphism image table has the wrong length");
            for (int x : image)
                if (x < 0 || x >= h.size())
                    throw InvalidArgument("weak homomorphism image out of range");
            for (auto [u, v] : g.edges())
                if (image[u] != image[v] && ! h.adjacent(image[u], image[v]))
                    return { false, RealizerFailure::not_weak_homomorphism, int(m), u, v };
        }

        for (auto [u, v] : g.non_edges()) {
            bool killed = false;
            for (auto & image : family.maps)
                if (image[u] != image[v] && ! h.adjacent(image[u], image[v])) {
                    killed = true;
                    break;
                }
            if (! killed)
                return { false, RealizerFailure::unkilled_non_edge, -1, u, v };
        }
        return {};
    }

    auto hamming_realizer(int q, int d, const SetFamily & f) -> WeakHomFamily
    {
        if (q < 2 || d < 1)
            throw InvalidArgument("hamming realizer needs q >= 2 and d >= 1");
        if (f.size() < q)
            throw InvalidArgument("family has " + std::to_string(f.size()) + " sets, need at least " + std::to_string(q));
        SetFamily used(f.universe(), vector<uint64_t>(f.sets().begin(), f.sets().begin() + q));
        auto check = verify_double_distinguishing(used);
        if (! check.ok)
            throw VerificationError("family is not double distinguishing");

        WeakHomFamily result{ hamming_graph(q, d), hypercube_graph(d), {} };
        vector<int> radices(d, 2);
        for (int u = 1 ; u <= f.universe() ; ++u) {
            vector<int> image(result.source.size());
            for (int x = 0 ; x < result.source.size() ; ++x) {
                auto word = result.source.label(x);
                vector<int> bits(d);
                for (int i = 0 ; i < d ; ++i)
                    bits[i] = used.contains(word[i], u) ? 0 : 1;
                image[x] = mixed_radix_index(bits, radices);
            }
            result.maps.push_back(std::move(image));
        }
        return result;
    }

    namespace
    {
        template <typename Rep_>
        auto compose_with(const WeakHomFamily & family, const Rep_ & rep_h, auto && concat) -> Rep_
        {
            auto check = verify_realizer(family);
            if (! check.ok)
                throw VerificationError("compose_realizer: family is not a realizer (pair "
                        + std::to_string(check.u) + " " + std::to_string(check.v) + ")");
            if (! verify(family.target, rep_h).ok)
                throw VerificationError("compose_realizer: target representation fails verification");

            vector<Rep_> blocks;
            for (auto & image : family.maps)
                blocks.push_back(pullback(rep_h, image));
            if (blocks.empty())
                return Rep_(family.source.size(), 0);
            return concat(blocks);
        }
    }

    auto compose_realizer(const WeakHomFamily & family, const BoxRepresentation & rep_h) -> BoxRepresentation
    {
        return compose_with(family, rep_h, [] (const vector<BoxRepresentation> & b) { return concat_reps(b); });
    }

    auto compose_realizer(const WeakHomFamily & family, const CubeRepresentation & rep_h) -> CubeRepresentation
    {
        return compose_with(family, rep_h, [] (const vector<CubeRepresentation> & b) { return concat_cubes(b); });
    }

    auto read_family(std::istream & in) -> SetFamily
    {
        string line;
        int line_number = 0;
        long n = -1, q = -1;
        while (std::getline(in, line)) {
            ++line_number;
            auto first = line.find_first_not_of(" \t\r");
            if (first == string::npos || line[first] == '#')
                continue;
            std::istringstream header(line);
            string rest;
            if (! (header >> n >> q) || (header >> rest))
                throw ParseError("family line " + std::to_string(line_number) + ": expected 'n q'");
            break;
        }
        if (n < 1 || n > 64 || q < 1)
            throw ParseError("family: header needs 1 <= n <= 64 and q >= 1");

        vector<uint64_t> sets;
        for (long i = 0 ; i < q ; ++i) {
            if (! std::getline(in, line))
                throw ParseError("family: expected " + std::to_string(q) + " set lines, got " + std::to_string(i));
            ++line_number;
            std::istringstream row(line);
            uint64_t s = 0;
            long element, previous = 0;
            while (row >> element) {
                if (element < 1 || element > n)
                    throw ParseError("family line " + std::to_string(line_number) + ": element out of range");
                if (element <= previous)
                    throw ParseError("family line " + std::to_string(line_number) + ": elements must be sorted and distinct");
                previous = element;
                s |= uint64_t(1) << (element - 1);
            }
            if (! row.eof())
                throw ParseError("family line " + std::to_string(line_number) + ": bad element");
            sets.push_back(s);
        }
        while (std::getline(in, line)) {
            ++line_number;
            if (line.find_first_not_of(" \t\r") != string::npos)
                throw ParseError("family line " + std::to_string(line_number) + ": trailing content");
        }
        return SetFamily(int(n), std::move(sets));
    }

    auto write_family(std::ostream & out, const SetFamily & f) -> void
    {
        out << f.universe() << ' ' << f.size() << '\n';
        for (auto s : f.sets()) {
            bool first = true;
            for (int u = 1 ; u <= f.universe() ; ++u)
                if (s >> (u - 1) & 1) {
                    out << (first ? "" : " ") << u;
                    first = false;
                }
            out << '\n';
        }
    }

    auto to_text(const SetFamily & f) -> string
    {
        std::ostringstream out;
        write_family(out, f);
        return out.str();
    }
}
