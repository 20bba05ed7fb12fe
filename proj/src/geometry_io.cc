#include <boxcert/geometry.hh>
#include <boxcert/errors.hh>

#include <fstream>
#include <sstream>

using std::string;
using std::vector;

namespace boxcert
{
    namespace
    {
        auto next_content_line(std::istream & in, string & line, int & line_number) -> bool
        {
            while (std::getline(in, line)) {
                ++line_number;
                auto first = line.find_first_not_of(" \t\r");
                if (first == string::npos || line[first] == '#')
                    continue;
                return true;
            }
            return false;
        }

        auto tokens(const string & line) -> vector<string>
        {
            std::istringstream s(line);
            vector<string> result;
            string t;
            while (s >> t)
                result.push_back(t);
            return result;
        }

        auto parse_error(int line_number, const string & what) -> ParseError
        {
            return ParseError("representation line " + std::to_string(line_number) + ": " + what);
        }
    }

    auto read_representation(std::istream & in) -> Representation
    {
        string line;
        int line_number = 0;
        if (! next_content_line(in, line, line_number))
            throw ParseError("representation: missing header 'BOX k n' or 'CUBE k n'");

        auto header = tokens(line);
        if (header.size() != 3 || (header[0] != "BOX" && header[0] != "CUBE"))
            throw parse_error(line_number, "expected 'BOX k n' or 'CUBE k n'");
        long k = -1, n = -1;
        try {
            k = std::stol(header[1]);
            n = std::stol(header[2]);
        }
        catch (const std::exception &) {
            throw parse_error(line_number, "bad k or n");
        }
        if (k < 0 || n < 0)
            throw parse_error(line_number, "k and n must be non-negative");
        if (n > default_max_vertices)
            throw SizeLimitError("representation has " + std::to_string(n) + " vertices, limit " + std::to_string(default_max_vertices));

        bool box = header[0] == "BOX";
        long per_line = box ? 2 * k : k;

        auto read_values = [&] () -> vector<Dyadic> {
            vector<Dyadic> values;
            if (per_line == 0) {
                // k = 0 rows are empty and may be omitted entirely.
                return values;
            }
            if (! next_content_line(in, line, line_number))
                throw ParseError("representation: expected " + std::to_string(n) + " vertex lines");
            auto row = tokens(line);
            if (long(row.size()) != per_line)
                throw parse_error(line_number, "expected " + std::to_string(per_line) + " values, got " + std::to_string(row.size()));
            for (auto & t : row) {
                try {
                    values.push_back(Dyadic::parse(t));
                }
                catch (const ParseError & e) {
                    throw parse_error(line_number, e.what());
                }
            }
            return values;
        };

        Representation result;
        if (box) {
            BoxRepresentation rep{ int(n), int(k) };
            for (int v = 0 ; v < n ; ++v) {
                auto values = read_values();
                for (int t = 0 ; t < k ; ++t) {
                    if (values[2 * t + 1] < values[2 * t])
                        throw parse_error(line_number, "interval with hi < lo");
                    rep.set(v, t, Interval(values[2 * t], values[2 * t + 1]));
                }
            }
            result = rep;
        }
        else {
            CubeRepresentation rep{ int(n), int(k) };
            for (int v = 0 ; v < n ; ++v) {
                auto values = read_values();
                for (int t = 0 ; t < k ; ++t)
                    rep.set(v, t, values[t]);
            }
            result = rep;
        }

        if (next_content_line(in, line, line_number))
            throw parse_error(line_number, "trailing content after vertex lines");
        return result;
    }

    auto write_representation(std::ostream & out, const Representation & rep) -> void
    {
        if (auto b = std::get_if<BoxRepresentation>(&rep)) {
            out << "BOX " << b->dimensions() << ' ' << b->size() << '\n';
            if (b->dimensions() == 0)
                return;
            for (int v = 0 ; v < b->size() ; ++v) {
                for (int t = 0 ; t < b->dimensions() ; ++t)
                    out << (t ? " " : "") << b->interval(v, t).lo.to_string() << ' ' << b->interval(v, t).hi.to_string();
                out << '\n';
            }
        }
        else {
            auto & c = std::get<CubeRepresentation>(rep);
            out << "CUBE " << c.dimensions() << ' ' << c.size() << '\n';
            if (c.dimensions() == 0)
                return;
            for (int v = 0 ; v < c.size() ; ++v) {
                for (int t = 0 ; t < c.dimensions() ; ++t)
                    out << (t ? " " : "") << c.origin(v, t).to_string();
                out << '\n';
            }
        }
    }

    auto to_text(const Representation & rep) -> string
    {
        std::ostringstream out;
        write_representation(out, rep);
        return out.str();
    }

    auto read_representation_file(const string & path) -> Representation
    {
        std::ifstream in(path);
        if (! in)
            throw ParseError("cannot open representation file '" + path + "'");
        return read_representation(in);
    }

    auto write_representation_file(const string & path, const Representation & rep) -> void
    {
        std::ofstream out(path);
        if (! out)
            throw InvalidArgument("cannot write representation file '" + path + "'");
        write_representation(out, rep);
    }
}
