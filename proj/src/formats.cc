/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <ordcore/errors.hh>
#include <ordcore/formats.hh>

#include <fstream>
#include <sstream>
#include <stdexcept>

using std::string;
using std::string_view;
using std::to_string;
using std::vector;

namespace ordcore
{
    namespace
    {
        struct Line
        {
            int number;
            vector<long long> values;
        };

        /// Non-blank lines with comments stripped, each split into integers.
        auto tokenise(string_view text) -> vector<Line>
        {
            vector<Line> result;
            int number = 0;
            std::size_t start = 0;
            while (start <= text.size()) {
                auto end = text.find('\n', start);
                if (end == string_view::npos)
                    end = text.size();
                ++number;
                auto line = text.substr(start, end - start);
                if (auto hash = line.find('#'); hash != string_view::npos)
                    line = line.substr(0, hash);

                std::istringstream in{ string(line) };
                Line parsed{ number, { } };
                string word;
                while (in >> word) {
                    std::size_t used = 0;
                    long long value = 0;
                    try {
                        value = std::stoll(word, &used);
                    }
                    catch (const std::logic_error &) {
                        used = 0;
                    }
                    if (used != word.size())
                        throw ParseError(number, "expected an integer, found '" + word + "'");
                    parsed.values.push_back(value);
                }
                if (! parsed.values.empty())
                    result.push_back(std::move(parsed));
                start = end + 1;
            }
            return result;
        }

        /// Splits off the header "<keyword> <ints...>", checking its keyword and arity.
        auto header(string_view text, const string & keyword, std::size_t arity) -> std::pair<Line, vector<Line>>
        {
            // the keyword is not an integer, so peel it off before tokenising
            int number = 0;
            std::size_t start = 0;
            while (start <= text.size()) {
                auto end = text.find('\n', start);
                if (end == string_view::npos)
                    end = text.size();
                ++number;
                auto line = text.substr(start, end - start);
                if (auto hash = line.find('#'); hash != string_view::npos)
                    line = line.substr(0, hash);

                std::istringstream in{ string(line) };
                string word;
                if (in >> word) {
                    if (word != keyword)
                        throw ParseError(number, "expected header '" + keyword + "', found '" + word + "'");
                    string rest;
                    std::getline(in, rest);
                    auto values = tokenise(rest);
                    Line head{ number, values.empty() ? vector<long long>{ } : values.front().values };
                    if (head.values.size() != arity)
                        throw ParseError(number, "header '" + keyword + "' takes " + to_string(arity) + " numbers");

                    auto body = tokenise(end < text.size() ? text.substr(end + 1) : string_view{ });
                    for (auto & l : body)
                        l.number += number;
                    return { std::move(head), std::move(body) };
                }
                start = end + 1;
            }
            throw ParseError(number, "missing '" + keyword + "' header");
        }

        auto as_int(const Line & line, long long value, long long lo, long long hi, const string & what) -> int
        {
            if (value < lo || value > hi)
                throw ParseError(line.number, what + " " + to_string(value) + " out of range ["
                        + to_string(lo) + ", " + to_string(hi) + "]");
            return static_cast<int>(value);
        }

        auto check_count(const Line & head, const vector<Line> & body, long long expected, const string & what) -> void
        {
            if (static_cast<long long>(body.size()) != expected) {
                int where = body.empty() ? head.number
                    : static_cast<long long>(body.size()) > expected ? body[expected].number : body.back().number;
                throw ParseError(where, "expected " + to_string(expected) + " " + what + ", found "
                        + to_string(body.size()));
            }
        }

        constexpr long long max_count = 1'000'000;
    }

    auto parse_graph(string_view text) -> OrderedGraph
    {
        auto [head, body] = header(text, "og", 2);
        int n = as_int(head, head.values[0], 1, max_count, "vertex count");
        int m = as_int(head, head.values[1], 0, max_count, "edge count");
        check_count(head, body, m, "edges");

        vector<Edge> edges;
        for (auto & l : body) {
            if (l.values.size() != 2)
                throw ParseError(l.number, "an edge line has two vertices");
            Vertex u = as_int(l, l.values[0], 0, n - 1, "vertex");
            Vertex v = as_int(l, l.values[1], 0, n - 1, "vertex");
            if (u == v)
                throw ParseError(l.number, "self-loop at vertex " + to_string(u));
            edges.emplace_back(u, v);
        }
        return OrderedGraph{ n, edges };
    }

    auto parse_hypergraph(string_view text) -> OrderedHypergraph
    {
        auto [head, body] = header(text, "ohg", 3);
        int n = as_int(head, head.values[0], 1, max_count, "vertex count");
        int m = as_int(head, head.values[1], 0, max_count, "hyperedge count");
        int k = as_int(head, head.values[2], 1, n, "uniformity");
        check_count(head, body, m, "hyperedges");

        vector<Hyperedge> hyperedges;
        for (auto & l : body) {
            if (static_cast<int>(l.values.size()) != k)
                throw ParseError(l.number, "a hyperedge line has " + to_string(k) + " vertices");
            Hyperedge e;
            for (auto x : l.values)
                e.push_back(as_int(l, x, 0, n - 1, "vertex"));
            try {
                OrderedHypergraph{ n, k, { e } };
            }
            catch (const InvalidArgument & err) {
                throw ParseError(l.number, err.what());
            }
            hyperedges.push_back(std::move(e));
        }
        return OrderedHypergraph{ n, k, std::move(hyperedges) };
    }

    auto parse_x13(string_view text) -> X13Formula
    {
        auto [head, body] = header(text, "x13", 2);
        int v = as_int(head, head.values[0], 0, max_count, "variable count");
        int c = as_int(head, head.values[1], 0, max_count, "clause count");
        check_count(head, body, c, "clauses");

        X13Formula formula{ v, { } };
        for (auto & l : body) {
            if (l.values.size() != 3)
                throw ParseError(l.number, "a clause line has three variables");
            std::array<int, 3> clause{ };
            for (int i = 0; i < 3; ++i)
                clause[i] = as_int(l, l.values[i], 0, v - 1, "variable");
            if (clause[0] == clause[1] || clause[0] == clause[2] || clause[1] == clause[2])
                throw ParseError(l.number, "a clause repeats a variable");
            formula.clauses.push_back(clause);
        }
        return formula;
    }

    auto parse_partitioned(string_view text) -> PartitionedGraph
    {
        auto [head, body] = header(text, "mcg", 2);
        int k = as_int(head, head.values[0], 1, max_count, "part count");
        int l = as_int(head, head.values[1], 1, max_count, "part size");

        PartitionedGraph graph{ k, l, { } };
        for (auto & line : body) {
            if (line.values.size() != 4)
                throw ParseError(line.number, "an edge line has four numbers");
            PartVertex a{ as_int(line, line.values[0], 0, k - 1, "part"), as_int(line, line.values[1], 0, l - 1, "index") };
            PartVertex b{ as_int(line, line.values[2], 0, k - 1, "part"), as_int(line, line.values[3], 0, l - 1, "index") };
            if (a.part == b.part)
                throw ParseError(line.number, "edge inside part " + to_string(a.part));
            graph.edges.emplace_back(a, b);
        }
        return graph;
    }

    auto serialise(const OrderedGraph & graph) -> string
    {
        std::ostringstream out;
        out << "og " << graph.size() << ' ' << graph.edge_count() << '\n';
        for (auto [u, v] : graph.edges())
            out << u << ' ' << v << '\n';
        return out.str();
    }

    auto serialise(const OrderedHypergraph & graph) -> string
    {
        std::ostringstream out;
        out << "ohg " << graph.size() << ' ' << graph.edge_count() << ' ' << graph.uniformity() << '\n';
        for (auto & e : graph.hyperedges()) {
            for (std::size_t i = 0; i < e.size(); ++i)
                out << (i == 0 ? "" : " ") << e[i];
            out << '\n';
        }
        return out.str();
    }

    auto serialise(const X13Formula & formula) -> string
    {
        std::ostringstream out;
        out << "x13 " << formula.var_count << ' ' << formula.clauses.size() << '\n';
        for (auto & c : formula.clauses)
            out << c[0] << ' ' << c[1] << ' ' << c[2] << '\n';
        return out.str();
    }

    auto serialise(const PartitionedGraph & graph) -> string
    {
        std::ostringstream out;
        out << "mcg " << graph.parts << ' ' << graph.part_size << '\n';
        for (auto & [a, b] : graph.edges)
            out << a.part << ' ' << a.index << ' ' << b.part << ' ' << b.index << '\n';
        return out.str();
    }

    namespace
    {
        auto write_list(std::ostream & out, const string & key, const vector<Vertex> & values) -> void
        {
            out << key << ':';
            for (auto v : values)
                out << ' ' << v;
            out << '\n';
        }

        auto write_edges(std::ostream & out, const string & key, const vector<Edge> & edges) -> void
        {
            out << key << ':';
            for (auto [u, v] : edges)
                out << ' ' << u << '-' << v;
            out << '\n';
        }

        auto write_hyperedges(std::ostream & out, const string & key, const vector<Hyperedge> & edges) -> void
        {
            out << key << ':';
            for (auto & e : edges) {
                out << ' ';
                for (std::size_t i = 0; i < e.size(); ++i)
                    out << (i == 0 ? "" : "-") << e[i];
            }
            out << '\n';
        }
    }

    auto serialise_layout(const HyperGadgetLayout & layout) -> string
    {
        std::ostringstream out;
        out << "gadget: x13-hyper\n";
        out << "uniformity: " << layout.uniformity << '\n';
        for (std::size_t x = 0; x < layout.variables.size(); ++x) {
            auto & b = layout.variables[x];
            write_list(out, "variable." + to_string(x), { b.first, b.second, b.third, b.fourth });
            write_list(out, "variable." + to_string(x) + ".padding", b.padding);
        }
        write_hyperedges(out, "edges.variable", layout.variable_edges);
        write_hyperedges(out, "edges.dynamic", layout.dynamic_edges);
        write_hyperedges(out, "edges.static", layout.static_edges);
        return out.str();
    }

    auto serialise_layout(const SliceGadgetLayout & layout, const SliceTargets & targets) -> string
    {
        std::ostringstream out;
        out << "gadget: slice\n";
        out << "target.vertices: " << targets.vertices << '\n';
        out << "target.edges: " << targets.edges << '\n';
        for (auto & g : layout.gadgets)
            write_list(out, "clause." + to_string(g.clause) + ".variable." + to_string(g.variable),
                    { g.first, g.second, g.third, g.fourth });
        write_edges(out, "edges.variable", layout.variable_edges);
        write_edges(out, "edges.clause", layout.clause_edges);
        write_edges(out, "edges.external", layout.external_edges);
        return out.str();
    }

    auto serialise_layout(const CliqueGadgetLayout & layout) -> string
    {
        std::ostringstream out;
        out << "gadget: clique\n";
        write_list(out, "p", layout.p);
        for (std::size_t i = 0; i < layout.d_blocks.size(); ++i) {
            auto suffix = to_string(i + 1);
            write_list(out, "D" + suffix, layout.d_blocks[i]);
            write_list(out, "C" + suffix, layout.c_blocks[i]);
            write_list(out, "B" + suffix, layout.b_blocks[i]);
        }
        write_edges(out, "edges.path", layout.path_edges);
        write_edges(out, "edges.complete", layout.complete_edges);
        write_edges(out, "edges.original", layout.original_edges);
        write_edges(out, "edges.collapsible", layout.collapsible_edges);
        return out.str();
    }

    auto format_map(const MonotoneMap & map) -> string
    {
        string result = "map:";
        for (Vertex v = 0; v < map.size(); ++v)
            result += " f(" + to_string(v) + ")=" + to_string(map[v]);
        return result;
    }

    auto read_file(const string & path) -> string
    {
        std::ifstream in{ path };
        if (! in)
            throw std::runtime_error("cannot open '" + path + "'");
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    }
}
