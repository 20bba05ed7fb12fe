#include <boxcert/graph.hh>
#include <boxcert/errors.hh>

#include <fstream>
#include <set>
#include <sstream>

using std::string;
using std::vector;

namespace boxcert
{
    namespace
    {
        // Next line that is neither blank nor a '#' comment.
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

        auto parse_error(int line_number, const string & what) -> ParseError
        {
            return ParseError("graph line " + std::to_string(line_number) + ": " + what);
        }
    }

    auto read_graph(std::istream & in) -> Graph
    {
        string line;
        int line_number = 0;
        if (! next_content_line(in, line, line_number))
            throw ParseError("graph: missing header line 'n m'");

        long n = -1, m = -1;
        {
            std::istringstream header(line);
            string rest;
            if (! (header >> n >> m) || (header >> rest) || n < 0 || m < 0)
                throw parse_error(line_number, "expected header 'n m'");
        }
        if (n > default_max_vertices)
            throw SizeLimitError("graph has " + std::to_string(n) + " vertices, limit " + std::to_string(default_max_vertices));

        vector<Edge> edges;
        std::set<Edge> seen;
        for (long i = 0 ; i < m ; ++i) {
            if (! next_content_line(in, line, line_number))
                throw ParseError("graph: expected " + std::to_string(m) + " edge lines, got " + std::to_string(i));
            std::istringstream row(line);
            long u = -1, v = -1;
            string rest;
            if (! (row >> u >> v) || (row >> rest))
                throw parse_error(line_number, "expected 'u v'");
            if (u == v)
                throw parse_error(line_number, "self-loop");
            if (! (0 <= u && u < v && v < n))
                throw parse_error(line_number, "edge must satisfy 0 <= u < v < n");
            if (! seen.emplace(int(u), int(v)).second)
                throw parse_error(line_number, "duplicate edge");
            edges.emplace_back(int(u), int(v));
        }
        if (next_content_line(in, line, line_number))
            throw parse_error(line_number, "trailing content after edge list");

        return Graph(int(n), edges);
    }

    auto write_graph(std::ostream & out, const Graph & g) -> void
    {
        out << g.size() << ' ' << g.edge_count() << '\n';
        for (auto [u, v] : g.edges())
            out << u << ' ' << v << '\n';
    }

    auto to_text(const Graph & g) -> string
    {
        std::ostringstream out;
        write_graph(out, g);
        return out.str();
    }

    auto read_graph_file(const string & path) -> Graph
    {
        std::ifstream in(path);
        if (! in)
            throw ParseError("cannot open graph file '" + path + "'");
        return read_graph(in);
    }

    auto write_graph_file(const string & path, const Graph & g) -> void
    {
        std::ofstream out(path);
        if (! out)
            throw InvalidArgument("cannot write graph file '" + path + "'");
        write_graph(out, g);
    }
}
