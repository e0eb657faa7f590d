/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <ordcore/errors.hh>
#include <ordcore/gadgets.hh>
#include <ordcore/matchings.hh>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

using std::nullopt;
using std::optional;
using std::string;
using std::to_string;
using std::vector;

namespace ordcore
{
    auto X13Formula::validate() const -> void
    {
        if (var_count < 0)
            throw InvalidArgument("negative variable count");
        for (std::size_t c = 0; c < clauses.size(); ++c) {
            auto & [a, b, d] = clauses[c];
            for (auto x : clauses[c])
                if (x < 0 || x >= var_count)
                    throw InvalidArgument("clause " + to_string(c) + " names variable " + to_string(x)
                            + " out of range");
            if (a == b || a == d || b == d)
                throw InvalidArgument("clause " + to_string(c) + " repeats a variable");
        }
    }

    auto X13Formula::is_connected() const -> bool
    {
        if (var_count <= 1)
            return true;

        vector<int> parent(var_count);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x)
                x = parent[x] = parent[parent[x]];
            return x;
        };
        for (auto & c : clauses) {
            parent[find(c[1])] = find(c[0]);
            parent[find(c[2])] = find(c[0]);
        }

        int root = find(0);
        for (int x = 1; x < var_count; ++x)
            if (find(x) != root)
                return false;
        return true;
    }

    auto X13Formula::occurrences(int variable) const -> int
    {
        int result = 0;
        for (auto & c : clauses)
            result += static_cast<int>(std::count(c.begin(), c.end(), variable));
        return result;
    }

    auto satisfies(const X13Formula & formula, const X13Assignment & assignment) -> bool
    {
        if (static_cast<int>(assignment.size()) != formula.var_count)
            return false;
        for (auto & c : formula.clauses)
            if (assignment[c[0]] + assignment[c[1]] + assignment[c[2]] != 1)
                return false;
        return true;
    }

    auto brute_force_x13(const X13Formula & formula) -> optional<X13Assignment>
    {
        formula.validate();
        if (formula.var_count > 20)
            throw InvalidArgument("brute force over " + to_string(formula.var_count) + " variables is too large");

        X13Assignment assignment(formula.var_count);
        for (unsigned long mask = 0; mask < (1ul << formula.var_count); ++mask) {
            for (int x = 0; x < formula.var_count; ++x)
                assignment[x] = (mask >> x) & 1;
            if (satisfies(formula, assignment))
                return assignment;
        }
        return nullopt;
    }

    auto PartitionedGraph::validate() const -> void
    {
        if (parts < 1 || part_size < 1)
            throw InvalidArgument("partitioned graph needs at least one part of at least one vertex");
        auto check = [&](PartVertex x) {
            if (x.part < 0 || x.part >= parts || x.index < 0 || x.index >= part_size)
                throw InvalidArgument("vertex (" + to_string(x.part) + "," + to_string(x.index) + ") out of range");
        };
        for (auto & [a, b] : edges) {
            check(a);
            check(b);
            if (a.part == b.part)
                throw InvalidArgument("edge inside part " + to_string(a.part));
        }
    }

    auto PartitionedGraph::adjacent(PartVertex a, PartVertex b) const -> bool
    {
        return std::any_of(edges.begin(), edges.end(), [&](const auto & e) {
            return (e.first == a && e.second == b) || (e.first == b && e.second == a);
        });
    }

    auto brute_force_multicolored_clique(const PartitionedGraph & graph) -> optional<vector<PartVertex>>
    {
        graph.validate();
        double choices = std::pow(static_cast<double>(graph.part_size), graph.parts);
        if (choices > 1e7)
            throw InvalidArgument("brute force over " + to_string(choices) + " choices is too large");

        int k = graph.parts;
        vector<vector<bool>> adjacent(k * graph.part_size, vector<bool>(k * graph.part_size, false));
        auto id = [&](PartVertex x) { return x.part * graph.part_size + x.index; };
        for (auto & [a, b] : graph.edges)
            adjacent[id(a)][id(b)] = adjacent[id(b)][id(a)] = true;

        vector<PartVertex> chosen(k);
        for (int i = 0; i < k; ++i)
            chosen[i] = { i, 0 };

        while (true) {
            bool clique = true;
            for (int i = 0; i < k && clique; ++i)
                for (int j = i + 1; j < k && clique; ++j)
                    clique = adjacent[id(chosen[i])][id(chosen[j])];
            if (clique)
                return chosen;

            int i = k - 1;
            while (i >= 0 && chosen[i].index == graph.part_size - 1)
                chosen[i--].index = 0;
            if (i < 0)
                return nullopt;
            ++chosen[i].index;
        }
    }

    auto hypergraph_gadget(const X13Formula & formula, int uniformity) -> HyperGadget
    {
        formula.validate();
        if (uniformity < 3)
            throw InvalidArgument("hypergraph gadget needs uniformity at least 3, got " + to_string(uniformity));
        if (! formula.is_connected())
            throw InvalidArgument("hypergraph gadget needs a connected formula");

        HyperGadgetLayout layout{ formula, uniformity, { }, { }, { }, { } };
        int block = uniformity + 1;
        for (int x = 0; x < formula.var_count; ++x) {
            Vertex base = x * block;
            HyperGadgetLayout::VariableBlock b{ base, base + uniformity - 2, base + uniformity - 1, base + uniformity, { } };
            for (Vertex p = base + 1; p < b.second; ++p)
                b.padding.push_back(p);
            layout.variables.push_back(b);

            Hyperedge e{ b.first, b.second, b.fourth };
            e.insert(e.end(), b.padding.begin(), b.padding.end());
            std::sort(e.begin(), e.end());
            layout.variable_edges.push_back(e);
        }

        for (auto & c : formula.clauses) {
            auto & padding = layout.variables[*std::min_element(c.begin(), c.end())].padding;
            auto extend = [&](Hyperedge e) {
                e.insert(e.end(), padding.begin(), padding.end());
                std::sort(e.begin(), e.end());
                return e;
            };

            layout.dynamic_edges.push_back(extend({ layout.variables[c[0]].third, layout.variables[c[1]].third,
                        layout.variables[c[2]].third }));
            for (int t = 0; t < 3; ++t) {
                Hyperedge e;
                for (int s = 0; s < 3; ++s)
                    e.push_back(s == t ? layout.variables[c[s]].second : layout.variables[c[s]].fourth);
                layout.static_edges.push_back(extend(e));
            }
        }

        vector<Hyperedge> all = layout.variable_edges;
        all.insert(all.end(), layout.dynamic_edges.begin(), layout.dynamic_edges.end());
        all.insert(all.end(), layout.static_edges.begin(), layout.static_edges.end());
        OrderedHypergraph graph{ formula.var_count * block, uniformity, std::move(all) };
        return HyperGadget{ std::move(graph), std::move(layout) };
    }

    auto extract_assignment(const HyperGadgetLayout & layout, const MonotoneMap & map) -> X13Assignment
    {
        int size = layout.formula.var_count * (layout.uniformity + 1);
        if (map.size() != size)
            throw GadgetError("map has length " + to_string(map.size()) + " but the gadget has "
                    + to_string(size) + " vertices");
        if (map.is_identity())
            throw GadgetError("the identity is surjective and encodes no assignment");

        X13Assignment result(layout.formula.var_count);
        for (int x = 0; x < layout.formula.var_count; ++x) {
            auto & b = layout.variables[x];
            if (map[b.third] == b.second)
                result[x] = true;
            else if (map[b.third] == b.fourth)
                result[x] = false;
            else
                throw GadgetError("third vertex of variable " + to_string(x) + " maps to " + to_string(map[b.third])
                        + ", neither its second nor its fourth vertex");
        }
        return result;
    }

    auto static_part(const HyperGadgetLayout & layout) -> vector<Vertex>
    {
        vector<Vertex> result;
        int size = layout.formula.var_count * (layout.uniformity + 1);
        VertexSet third(size);
        for (auto & b : layout.variables)
            third.set(b.third);
        for (Vertex v = 0; v < size; ++v)
            if (! third.test(v))
                result.push_back(v);
        return result;
    }

    auto slice_gadget(const X13Formula & formula) -> SliceGadget
    {
        formula.validate();
        if (formula.clauses.empty())
            throw InvalidArgument("slice gadget needs at least one clause");
        for (int x = 0; x < formula.var_count; ++x)
            if (formula.occurrences(x) < 3)
                throw InvalidArgument("variable " + to_string(x) + " occurs in " + to_string(formula.occurrences(x))
                        + " clauses, the slice gadget needs at least three");

        int c = static_cast<int>(formula.clauses.size());
        SliceGadgetLayout layout{ formula, { }, { }, { }, { } };
        vector<vector<int>> occurrences(formula.var_count);

        for (int j = 0; j < c; ++j)
            for (int t = 0; t < 3; ++t) {
                Vertex b = 9 * j + 3 * t;
                occurrences[formula.clauses[j][t]].push_back(static_cast<int>(layout.gadgets.size()));
                layout.gadgets.push_back({ formula.clauses[j][t], j, b, b + 1, b + 2, b + 3 });
                layout.variable_edges.insert(layout.variable_edges.end(), { { b, b + 2 }, { b + 1, b + 3 }, { b + 2, b + 3 } });
            }

        for (int j = 0; j < c; ++j)
            for (int t = 0; t < 3; ++t)
                for (int s = t + 1; s < 3; ++s) {
                    auto & a = layout.gadgets[3 * j + t];
                    auto & b = layout.gadgets[3 * j + s];
                    for (auto u : { a.second, a.third })
                        for (auto v : { b.second, b.third })
                            layout.clause_edges.emplace_back(u, v);
                }

        for (auto & occ : occurrences) {
            int o = static_cast<int>(occ.size());
            for (int i = 0; i < o; ++i) {
                auto & a = layout.gadgets[occ[i]];
                auto & b = layout.gadgets[occ[(i + 1) % o]];
                layout.external_edges.emplace_back(std::min(a.second, b.second), std::max(a.second, b.second));
                layout.external_edges.emplace_back(std::min(a.third, b.third), std::max(a.third, b.third));
            }
        }

        vector<Edge> all = layout.variable_edges;
        all.insert(all.end(), layout.clause_edges.begin(), layout.clause_edges.end());
        all.insert(all.end(), layout.external_edges.begin(), layout.external_edges.end());
        int n = 9 * c + 1;
        OrderedGraph graph{ n, all };
        SliceTargets targets{ n - c, graph.edge_count() - 6 * c };
        return SliceGadget{ std::move(graph), targets, std::move(layout) };
    }

    auto extract_slice_assignment(const SliceGadgetLayout & layout, const vector<Vertex> & kept) -> X13Assignment
    {
        VertexSet in(9 * layout.formula.clauses.size() + 1);
        for (auto v : kept) {
            if (v < 0 || v >= static_cast<int>(in.size()))
                throw GadgetError("kept vertex " + to_string(v) + " out of range");
            in.set(v);
        }

        vector<optional<bool>> value(layout.formula.var_count);
        for (auto & g : layout.gadgets) {
            bool collapsed = ! in.test(g.second);
            if (value[g.variable] && *value[g.variable] != collapsed)
                throw GadgetError("occurrences of variable " + to_string(g.variable) + " collapse inconsistently");
            value[g.variable] = collapsed;
        }

        X13Assignment result(layout.formula.var_count);
        for (int x = 0; x < layout.formula.var_count; ++x)
            result[x] = value[x].value_or(false);
        return result;
    }

    auto CliqueGadgetLayout::w(int i, int j) const -> Vertex
    {
        if (i == j)
            throw InvalidArgument("B_" + to_string(i) + " has no vertex for its own part");
        return b_blocks.at(i).at(j < i ? j : j - 1);
    }

    auto clique_gadget(const PartitionedGraph & source) -> CliqueGadget
    {
        source.validate();
        int k = source.parts, l = source.part_size;
        if (l <= 3)
            throw InvalidArgument("clique gadget needs parts of more than 3 vertices, got " + to_string(l));

        int width = l + k - 1;
        CliqueGadgetLayout layout{ source, { }, { }, { }, { }, { }, { }, { }, { }, { } };
        Vertex next = 0;
        auto take = [&](int count) {
            vector<Vertex> block(count);
            std::iota(block.begin(), block.end(), next);
            next += count;
            return block;
        };

        for (int i = 0; i < k; ++i) {
            layout.p.push_back(next++);
            layout.d_blocks.push_back(take(width));
        }
        for (int i = 0; i < k; ++i) {
            layout.p.push_back(next++);
            layout.c_blocks.push_back(take(l));
            layout.b_blocks.push_back(take(k - 1));
            auto & a = layout.a_blocks.emplace_back(layout.c_blocks.back());
            a.insert(a.end(), layout.b_blocks.back().begin(), layout.b_blocks.back().end());
        }
        layout.p.push_back(next++);

        for (int i = 0; i < k; ++i) {
            for (auto d : layout.d_blocks[i]) {
                layout.path_edges.emplace_back(layout.p[i], d);
                layout.path_edges.emplace_back(layout.p[i + 1], d);
            }
            for (auto v : layout.c_blocks[i]) {
                layout.path_edges.emplace_back(layout.p[k + i], v);
                layout.path_edges.emplace_back(layout.p[k + i + 1], v);
            }
        }

        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                layout.complete_edges.emplace_back(layout.w(i, j), layout.w(j, i));

        for (auto & [a, b] : source.edges)
            layout.original_edges.emplace_back(layout.c_blocks[a.part][a.index], layout.c_blocks[b.part][b.index]);

        auto matching = mc(width);
        for (int i = 0; i < k; ++i)
            for (auto [u, v] : matching.graph().edges()) {
                if (u >= width || v < width)
                    throw GadgetError("collapsible matching is not split between its two halves");
                layout.collapsible_edges.emplace_back(layout.d_blocks[i][u], layout.a_blocks[i][v - width]);
            }

        vector<Edge> all = layout.path_edges;
        for (auto * family : { &layout.complete_edges, &layout.original_edges, &layout.collapsible_edges })
            all.insert(all.end(), family->begin(), family->end());
        OrderedGraph graph{ next, all };
        return CliqueGadget{ std::move(graph), std::move(layout) };
    }

    auto extract_clique(const CliqueGadgetLayout & layout, const MonotoneMap & map) -> vector<PartVertex>
    {
        int k = layout.source.parts;
        int size = 2 * k + 1 + 2 * k * (layout.source.part_size + k - 1);
        if (map.size() != size)
            throw GadgetError("map has length " + to_string(map.size()) + " but the gadget has "
                    + to_string(size) + " vertices");
        if (map.is_identity())
            throw GadgetError("the identity is surjective and encodes no clique");

        for (std::size_t i = 0; i < layout.p.size(); ++i)
            if (map[layout.p[i]] != layout.p[i])
                throw GadgetError("p_" + to_string(i + 1) + " is not fixed");

        auto single_image = [&](const vector<Vertex> & block, const string & name) {
            Vertex t = map[block.front()];
            for (auto v : block)
                if (map[v] != t)
                    throw GadgetError(name + " does not collapse to a single vertex");
            return t;
        };

        vector<PartVertex> result;
        for (int i = 0; i < k; ++i) {
            string suffix = "_" + to_string(i + 1);
            Vertex a = single_image(layout.a_blocks[i], "A" + suffix);
            Vertex d = single_image(layout.d_blocks[i], "D" + suffix);

            auto & c = layout.c_blocks[i];
            auto in_c = std::find(c.begin(), c.end(), a);
            if (in_c == c.end())
                throw GadgetError("A" + suffix + " collapses outside C" + suffix);
            auto & dblock = layout.d_blocks[i];
            if (std::find(dblock.begin(), dblock.end(), d) == dblock.end())
                throw GadgetError("D" + suffix + " collapses outside itself");
            if (std::find(layout.collapsible_edges.begin(), layout.collapsible_edges.end(), Edge{ d, a })
                    == layout.collapsible_edges.end())
                throw GadgetError("images of D" + suffix + " and A" + suffix + " are not joined by a collapsible edge");

            result.push_back({ i, static_cast<int>(in_c - c.begin()) });
        }

        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (! layout.source.adjacent(result[i], result[j]))
                    throw GadgetError("chosen vertices of parts " + to_string(i) + " and " + to_string(j)
                            + " are not adjacent");
        return result;
    }

    auto verify_hypergraph_round_trip(const X13Formula & formula, int uniformity) -> RoundTripReport
    {
        RoundTripReport report;
        auto gadget = hypergraph_gadget(formula, uniformity);
        report.oracle_yes = brute_force_x13(formula).has_value();

        if (auto f = find_nonsurjective_hyper_endomorphism(gadget.graph)) {
            report.solver_yes = true;
            try {
                auto assignment = extract_assignment(gadget.layout, *f);
                report.witness_ok = is_ordered_hyperhom(gadget.graph, gadget.graph, *f)
                    && satisfies(formula, assignment);
                if (! report.witness_ok)
                    report.detail = "extracted assignment does not satisfy the formula";
            }
            catch (const GadgetError & e) {
                report.detail = e.what();
            }
        }

        bool retracts = decide_hyper_retraction(gadget.graph, static_part(gadget.layout)).has_value();
        report.secondary_agrees = retracts == report.oracle_yes;
        if (! report.secondary_agrees)
            report.detail += (report.detail.empty() ? "" : "; ") + string("static-part retraction disagrees with the oracle");
        return report;
    }

    auto verify_slice_round_trip(const X13Formula & formula, const SubsetSearchOptions & options) -> RoundTripReport
    {
        RoundTripReport report;
        auto gadget = slice_gadget(formula);
        report.oracle_yes = brute_force_x13(formula).has_value();

        SliceOptions slice;
        slice.jobs = options.jobs;
        if (auto w = solve_slice(gadget.graph, gadget.targets, slice)) {
            report.solver_yes = true;
            try {
                auto assignment = extract_slice_assignment(gadget.layout, w->kept);
                report.witness_ok = static_cast<int>(w->kept.size()) == gadget.targets.vertices
                    && static_cast<int>(w->edges.size()) == gadget.targets.edges
                    && is_retraction(gadget.graph, w->kept, w->map)
                    && satisfies(formula, assignment);
                if (! report.witness_ok)
                    report.detail = "slice witness does not decode to a satisfying assignment";
            }
            catch (const GadgetError & e) {
                report.detail = e.what();
            }
        }
        return report;
    }

    auto verify_clique_round_trip(const PartitionedGraph & source, const SubsetSearchOptions & options)
        -> RoundTripReport
    {
        RoundTripReport report;
        auto gadget = clique_gadget(source);
        report.oracle_yes = brute_force_multicolored_clique(source).has_value();

        auto verdict = decide_core_chi(gadget.graph, options);
        if (auto * yes = std::get_if<CoreHasChiVertices>(&verdict)) {
            report.solver_yes = true;
            try {
                extract_clique(gadget.layout, yes->witness.map);
                report.witness_ok = static_cast<int>(yes->witness.kept.size()) == 4 * source.parts + 1;
                if (! report.witness_ok)
                    report.detail = "retract has the wrong size";
            }
            catch (const GadgetError & e) {
                report.detail = e.what();
            }
        }
        else if (std::holds_alternative<Neither>(verdict)) {
            report.secondary_agrees = false;
            report.detail = "gadget is neither a core nor retracts onto chi vertices";
        }
        return report;
    }
}
