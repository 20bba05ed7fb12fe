#include <boxcert/expression.hh>
#include <boxcert/errors.hh>

#include <cctype>
#include <map>

using std::optional;
using std::string;
using std::vector;

namespace boxcert
{
    namespace
    {
        const std::map<string, int> generator_arity{
            { "complete", 1 }, { "path", 1 }, { "cycle", 1 }, { "star", 1 }, { "hypercube", 1 },
            { "hamming", 2 }, { "crown", 1 }, { "empty", 1 } };

        const std::map<char, string> shorthand{
            { 'K', "complete" }, { 'P', "path" }, { 'C', "cycle" }, { 'S', "star" }, { 'Q', "hypercube" }, { 'E', "empty" } };

        class Parser
        {
            private:
                const string & _text;
                size_t _pos = 0;

                auto fail(const string & what) -> ParseError
                {
                    return ParseError("expression: " + what + " at offset " + std::to_string(_pos));
                }

                auto skip() -> void
                {
                    while (_pos < _text.size() && std::isspace(static_cast<unsigned char>(_text[_pos])))
                        ++_pos;
                }

                auto peek() -> char
                {
                    skip();
                    return _pos < _text.size() ? _text[_pos] : '\0';
                }

                auto expect(char c) -> void
                {
                    if (peek() != c)
                        throw fail(string("expected '") + c + "'");
                    ++_pos;
                }

                auto word() -> string
                {
                    skip();
                    size_t start = _pos;
                    while (_pos < _text.size() && (std::isalpha(static_cast<unsigned char>(_text[_pos])) || _text[_pos] == '_'))
                        ++_pos;
                    if (start == _pos)
                        throw fail("expected a name");
                    return _text.substr(start, _pos - start);
                }

                auto digits() -> optional<int>
                {
                    size_t start = _pos;
                    long value = 0;
                    while (_pos < _text.size() && std::isdigit(static_cast<unsigned char>(_text[_pos]))) {
                        value = value * 10 + (_text[_pos] - '0');
                        if (value > 1'000'000)
                            throw fail("number too large");
                        ++_pos;
                    }
                    if (start == _pos)
                        return std::nullopt;
                    return int(value);
                }

                auto number() -> int
                {
                    skip();
                    auto n = digits();
                    if (! n)
                        throw fail("expected a number");
                    return *n;
                }

            public:
                explicit Parser(const string & text) : _text(text) { }

                auto parse() -> Expression
                {
                    auto e = expression();
                    if (peek() != '\0')
                        throw fail("trailing input");
                    return e;
                }

                auto expression() -> Expression
                {
                    auto name = word();

                    if (name.size() == 1 && shorthand.contains(name[0])) {
                        auto n = digits();
                        if (! n)
                            throw fail("expected a size after '" + name + "'");
                        return generator_expression(shorthand.at(name[0]), { *n });
                    }

                    expect('(');
                    Expression e;
                    if (generator_arity.contains(name)) {
                        vector<int> params{ number() };
                        while (peek() == ',') {
                            ++_pos;
                            params.push_back(number());
                        }
                        if (int(params.size()) != generator_arity.at(name))
                            throw fail(name + " takes " + std::to_string(generator_arity.at(name)) + " parameters");
                        e = generator_expression(name, std::move(params));
                    }
                    else if (name == "strong" || name == "cartesian" || name == "direct") {
                        e.kind = Expression::Kind::product;
                        e.product = parse_product_kind(name);
                        e.operands.push_back(expression());
                        while (peek() == ',') {
                            ++_pos;
                            e.operands.push_back(expression());
                        }
                    }
                    else if (name == "power") {
                        e.kind = Expression::Kind::product;
                        e.product = parse_product_kind(word());
                        expect(',');
                        auto base = expression();
                        expect(',');
                        int d = number();
                        if (d < 1)
                            throw fail("power needs d >= 1");
                        e.operands.assign(d, base);
                    }
                    else if (name == "join" || name == "union") {
                        e.kind = name == "join" ? Expression::Kind::join : Expression::Kind::disjoint_union;
                        e.operands.push_back(expression());
                        expect(',');
                        e.operands.push_back(expression());
                    }
                    else if (name == "universal") {
                        e.kind = Expression::Kind::universal;
                        e.operands.push_back(expression());
                        expect(',');
                        e.parameters.push_back(number());
                    }
                    else
                        throw fail("unknown name '" + name + "'");
                    expect(')');
                    return e;
                }
        };

        auto build_generator(const Expression & e) -> Graph
        {
            auto & p = e.parameters;
            auto & g = e.generator;
            if (g == "complete") return complete_graph(p[0]);
            if (g == "path") return path_graph(p[0]);
            if (g == "cycle") return cycle_graph(p[0]);
            if (g == "star") return star_graph(p[0]);
            if (g == "hypercube") return hypercube_graph(p[0]);
            if (g == "hamming") return hamming_graph(p[0], p[1]);
            if (g == "crown") return crown_graph(p[0]);
            if (g == "empty") return empty_graph(p[0]);
            throw InvalidArgument("unknown generator '" + g + "'");
        }

        auto flatten(const Expression & e, ProductKind kind, vector<Expression> & out) -> void
        {
            if (e.kind == Expression::Kind::product && e.product == kind) {
                for (auto & o : e.operands)
                    flatten(o, kind, out);
                return;
            }
            if (e.kind == Expression::Kind::generator) {
                auto & p = e.parameters;
                if (kind == ProductKind::cartesian && e.generator == "hypercube" && p[0] >= 1) {
                    out.insert(out.end(), p[0], generator_expression("complete", { 2 }));
                    return;
                }
                if (kind == ProductKind::cartesian && e.generator == "hamming" && p[0] >= 2 && p[1] >= 1) {
                    out.insert(out.end(), p[1], generator_expression("complete", { p[0] }));
                    return;
                }
                if (kind == ProductKind::direct && e.generator == "crown" && p[0] >= 2) {
                    out.push_back(generator_expression("complete", { p[0] }));
                    out.push_back(generator_expression("complete", { 2 }));
                    return;
                }
            }
            out.push_back(e);
        }
    }

    auto generator_expression(const string & name, vector<int> parameters) -> Expression
    {
        Expression e;
        e.kind = Expression::Kind::generator;
        e.generator = name;
        e.parameters = std::move(parameters);
        return e;
    }

    auto parse_expression(const string & text) -> Expression
    {
        return Parser(text).parse();
    }

    auto to_string(const Expression & e) -> string
    {
        string s;
        auto operands = [&] (const string & sep) {
            for (size_t i = 0 ; i < e.operands.size() ; ++i)
                s += (i ? sep : "") + to_string(e.operands[i]);
        };
        switch (e.kind) {
            case Expression::Kind::generator:
                s = e.generator + "(";
                for (size_t i = 0 ; i < e.parameters.size() ; ++i)
                    s += (i ? "," : "") + std::to_string(e.parameters[i]);
                return s + ")";
            case Expression::Kind::product:
                s = to_string(e.product) + "(";
                operands(",");
                return s + ")";
            case Expression::Kind::join:
                s = "join(";
                operands(",");
                return s + ")";
            case Expression::Kind::disjoint_union:
                s = "union(";
                operands(",");
                return s + ")";
            case Expression::Kind::universal:
                s = "universal(";
                operands(",");
                return s + "," + std::to_string(e.parameters.at(0)) + ")";
        }
        return s;
    }

    auto build_graph(const Expression & e, int max_vertices) -> Graph
    {
        switch (e.kind) {
            case Expression::Kind::generator: {
                auto g = build_generator(e);
                if (g.size() > max_vertices)
                    throw SizeLimitError("graph has " + std::to_string(g.size()) + " vertices, limit " + std::to_string(max_vertices));
                return g;
            }
            case Expression::Kind::product: {
                vector<Graph> factors;
                for (auto & o : e.operands)
                    factors.push_back(build_graph(o, max_vertices));
                return product_all(factors, e.product, max_vertices);
            }
            case Expression::Kind::join:
                return join(build_graph(e.operands[0], max_vertices), build_graph(e.operands[1], max_vertices));
            case Expression::Kind::disjoint_union:
                return disjoint_union(build_graph(e.operands[0], max_vertices), build_graph(e.operands[1], max_vertices));
            case Expression::Kind::universal: {
                auto g = add_universal(build_graph(e.operands[0], max_vertices), e.parameters.at(0));
                if (g.size() > max_vertices)
                    throw SizeLimitError("graph exceeds vertex limit");
                return g;
            }
        }
        throw InvalidArgument("malformed expression");
    }

    auto product_view(const Expression & e) -> optional<ProductView>
    {
        optional<ProductKind> kind;
        if (e.kind == Expression::Kind::product)
            kind = e.product;
        else if (e.kind == Expression::Kind::generator && (e.generator == "hypercube" || e.generator == "hamming"))
            kind = ProductKind::cartesian;
        else if (e.kind == Expression::Kind::generator && e.generator == "crown")
            kind = ProductKind::direct;
        if (! kind)
            return std::nullopt;

        ProductView view{ *kind, {} };
        flatten(e, *kind, view.factors);
        return view;
    }
}
