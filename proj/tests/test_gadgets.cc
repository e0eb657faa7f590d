#include <ordcore/errors.hh>
#include <ordcore/gadgets.hh>

#include "oracles.hh"

#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

using namespace ordcore;
using std::vector;

namespace
{
    /// Every connected formula on v variables with 1..max_clauses clauses, clauses as nondecreasing triple indices.
    auto for_each_formula(int v, int max_clauses, const std::function<void (const X13Formula &)> & visit) -> void
    {
        vector<std::array<int, 3>> triples;
        for (int a = 0; a < v; ++a)
            for (int b = a + 1; b < v; ++b)
                for (int c = b + 1; c < v; ++c)
                    triples.push_back({ a, b, c });
        vector<std::array<int, 3>> chosen;
        std::function<void (std::size_t)> rec = [&](std::size_t from) {
            if (! chosen.empty()) {
                X13Formula f{ v, chosen };
                if (f.is_connected())
                    visit(f);
            }
            if (static_cast<int>(chosen.size()) == max_clauses)
                return;
            for (auto i = from; i < triples.size(); ++i) {
                chosen.push_back(triples[i]);
                rec(i);
                chosen.pop_back();
            }
        };
        rec(0);
    }

    /// Satisfiability by counting, independent of the library's brute force.
    auto count_models(const X13Formula & f) -> int
    {
        int count = 0;
        for (unsigned long mask = 0; mask < (1ul << f.var_count); ++mask) {
            bool ok = true;
            for (auto & c : f.clauses)
                ok = ok && ((mask >> c[0] & 1) + (mask >> c[1] & 1) + (mask >> c[2] & 1)) == 1;
            count += ok;
        }
        return count;
    }

    auto all_four_triples() -> X13Formula
    {
        return X13Formula{ 4, { { 0, 1, 2 }, { 0, 1, 3 }, { 0, 2, 3 }, { 1, 2, 3 } } };
    }

    auto random_partitioned(std::mt19937 & rng, int k, int l, double p) -> PartitionedGraph
    {
        PartitionedGraph f{ k, l, { } };
        std::bernoulli_distribution coin(p);
        for (int a = 0; a < k; ++a)
            for (int b = a + 1; b < k; ++b)
                for (int i = 0; i < l; ++i)
                    for (int j = 0; j < l; ++j)
                        if (coin(rng))
                            f.edges.push_back({ { a, i }, { b, j } });
        return f;
    }

    auto has_clique(const PartitionedGraph & f) -> bool
    {
        vector<int> pick(f.parts, 0);
        while (true) {
            bool ok = true;
            for (int a = 0; a < f.parts && ok; ++a)
                for (int b = a + 1; b < f.parts && ok; ++b)
                    ok = std::any_of(f.edges.begin(), f.edges.end(), [&](auto & e) {
                        PartVertex x{ a, pick[a] }, y{ b, pick[b] };
                        return (e.first == x && e.second == y) || (e.first == y && e.second == x);
                    });
            if (ok)
                return true;
            int i = f.parts - 1;
            while (i >= 0 && ++pick[i] == f.part_size)
                pick[i--] = 0;
            if (i < 0)
                return false;
        }
    }
}

TEST_CASE("formulas")
{
    X13Formula f{ 3, { { 0, 1, 2 } } };
    CHECK(f.is_connected());
    CHECK(f.occurrences(1) == 1);
    CHECK(satisfies(f, { true, false, false }));
    CHECK(! satisfies(f, { true, true, false }));
    CHECK(*brute_force_x13(f) == X13Assignment{ true, false, false });

    CHECK(! X13Formula(4, { { 0, 1, 2 } }).is_connected());
    CHECK(*brute_force_x13(X13Formula{ 2, { } }) == X13Assignment{ false, false });
    CHECK(! brute_force_x13(all_four_triples()));
    CHECK(! brute_force_x13(X13Formula{ 5, { { 0, 1, 2 }, { 0, 3, 4 }, { 1, 3, 4 }, { 2, 3, 4 } } }));

    CHECK_THROWS_AS(X13Formula(3, { { 0, 1, 1 } }).validate(), InvalidArgument);
    CHECK_THROWS_AS(X13Formula(3, { { 0, 1, 3 } }).validate(), InvalidArgument);
    CHECK_THROWS_AS(brute_force_x13(X13Formula{ 21, { } }), InvalidArgument);
}

TEST_CASE("brute force agrees with model counting")
{
    for (int v = 3; v <= 4; ++v)
        for_each_formula(v, 3, [&](const X13Formula & f) {
            auto a = brute_force_x13(f);
            REQUIRE(a.has_value() == (count_models(f) > 0));
            if (a)
                REQUIRE(satisfies(f, *a));
        });
}

TEST_CASE("partitioned graphs")
{
    PartitionedGraph f{ 2, 2, { { { 0, 1 }, { 1, 0 } } } };
    CHECK(f.adjacent({ 1, 0 }, { 0, 1 }));
    CHECK(! f.adjacent({ 0, 0 }, { 1, 0 }));
    CHECK(*brute_force_multicolored_clique(f) == vector<PartVertex>{ { 0, 1 }, { 1, 0 } });
    CHECK(! brute_force_multicolored_clique(PartitionedGraph{ 2, 2, { } }));
    CHECK(brute_force_multicolored_clique(PartitionedGraph{ 1, 3, { } })->size() == 1);

    CHECK_THROWS_AS(PartitionedGraph(2, 2, { { { 0, 0 }, { 0, 1 } } }).validate(), InvalidArgument);
    CHECK_THROWS_AS(PartitionedGraph(2, 2, { { { 0, 0 }, { 2, 1 } } }).validate(), InvalidArgument);
    CHECK_THROWS_AS(PartitionedGraph(0, 2, { }).validate(), InvalidArgument);
}

TEST_CASE("hypergraph gadget shape")
{
    X13Formula f{ 3, { { 0, 1, 2 } } };
    auto three = hypergraph_gadget(f);
    CHECK(three.graph.size() == 12);
    CHECK(three.graph.uniformity() == 3);
    // three variable triples, one dynamic triple, three static triples
    CHECK(three.layout.variable_edges.size() == 3);
    CHECK(three.layout.dynamic_edges.size() == 1);
    CHECK(three.layout.static_edges.size() == 3);
    CHECK(three.graph.edge_count() == 7);
    CHECK(three.layout.dynamic_edges.front() == Hyperedge{ 2, 6, 10 });
    CHECK(three.layout.variables[1].padding.empty());

    auto four = hypergraph_gadget(f, 4);
    CHECK(four.graph.size() == 15);
    CHECK(four.graph.edge_count() == 7);
    CHECK(four.layout.variables[0].padding == vector<Vertex>{ 1 });
    for (auto & e : four.graph.hyperedges())
        CHECK(e.size() == 4);
    // every clause edge carries the padding of the clause's smallest variable
    for (auto & e : four.layout.static_edges)
        CHECK(std::find(e.begin(), e.end(), 1) != e.end());

    auto sp = static_part(three.layout);
    CHECK(sp.size() == 9);
    CHECK(std::find(sp.begin(), sp.end(), 2) == sp.end());

    CHECK_THROWS_AS(hypergraph_gadget(f, 2), InvalidArgument);
    CHECK_THROWS_AS(hypergraph_gadget(X13Formula{ 4, { { 0, 1, 2 } } }), InvalidArgument);
}

TEST_CASE("hypergraph round trips on every connected formula up to 5 variables and 4 clauses")
{
    for (int k : { 3, 4 }) {
        int total = 0, satisfiable = 0;
        for (int v = 3; v <= 5; ++v)
            for_each_formula(v, 4, [&](const X13Formula & f) {
                auto r = verify_hypergraph_round_trip(f, k);
                REQUIRE_MESSAGE(r.consistent(), r.detail);
                REQUIRE(r.oracle_yes == (count_models(f) > 0));
                ++total;
                satisfiable += r.oracle_yes;
            });
        CHECK(total > 700);
        CHECK(satisfiable < total);
    }
    auto r = verify_hypergraph_round_trip(all_four_triples());
    CHECK(r.consistent());
    CHECK(! r.solver_yes);
}

TEST_CASE("assignment extraction")
{
    auto g = hypergraph_gadget(X13Formula{ 3, { { 0, 1, 2 } } });
    auto f = find_nonsurjective_hyper_endomorphism(g.graph);
    REQUIRE(f);
    auto a = extract_assignment(g.layout, *f);
    CHECK(satisfies(g.layout.formula, a));

    CHECK_THROWS_AS(extract_assignment(g.layout, MonotoneMap::identity(12)), GadgetError);
    CHECK_THROWS_AS(extract_assignment(g.layout, MonotoneMap::identity(11)), GadgetError);
    // collapse the final fourth vertex only: the third vertices stay where they are
    auto image = MonotoneMap::identity(12).image();
    image[11] = 10;
    CHECK_THROWS_AS(extract_assignment(g.layout, MonotoneMap{ image }), GadgetError);
}

TEST_CASE("slice gadget shape")
{
    X13Formula f{ 3, { { 0, 1, 2 }, { 0, 1, 2 }, { 0, 1, 2 } } };
    auto s = slice_gadget(f);
    int c = 3;
    CHECK(s.graph.size() == 9 * c + 1);
    CHECK(s.targets.vertices == 9 * c + 1 - c);
    CHECK(s.targets.edges == s.graph.edge_count() - 6 * c);
    CHECK(s.layout.gadgets.size() == 3 * static_cast<std::size_t>(c));
    CHECK(s.layout.variable_edges.size() == 9 * static_cast<std::size_t>(c));
    CHECK(s.layout.clause_edges.size() == 12 * static_cast<std::size_t>(c));
    std::size_t external = 0;
    for (int x = 0; x < f.var_count; ++x)
        external += 2 * f.occurrences(x);
    CHECK(s.layout.external_edges.size() == external);

    // consecutive gadgets share a vertex
    for (std::size_t i = 0; i + 1 < s.layout.gadgets.size(); ++i)
        CHECK(s.layout.gadgets[i].fourth == s.layout.gadgets[i + 1].first);

    CHECK_THROWS_AS(slice_gadget(X13Formula{ 3, { { 0, 1, 2 } } }), InvalidArgument);
    CHECK_THROWS_AS(slice_gadget(X13Formula{ 0, { } }), InvalidArgument);
}

TEST_CASE("slice round trips")
{
    vector<std::array<int, 3>> perms;
    std::array<int, 3> p{ 0, 1, 2 };
    do
        perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    for (auto & a : perms)
        for (auto & b : perms)
            for (auto & c : perms) {
                auto r = verify_slice_round_trip(X13Formula{ 3, { a, b, c } });
                REQUIRE_MESSAGE(r.consistent(), r.detail);
                REQUIRE(r.solver_yes);
            }

    auto unsat = verify_slice_round_trip(all_four_triples());
    CHECK(unsat.consistent());
    CHECK(! unsat.oracle_yes);
    CHECK(! unsat.solver_yes);
}

TEST_CASE("slice assignment extraction")
{
    auto s = slice_gadget(X13Formula{ 3, { { 0, 1, 2 }, { 0, 1, 2 }, { 0, 1, 2 } } });
    auto w = solve_slice(s.graph, s.targets);
    REQUIRE(w);
    CHECK(satisfies(s.layout.formula, extract_slice_assignment(s.layout, w->kept)));

    CHECK_THROWS_AS(extract_slice_assignment(s.layout, { 28 }), GadgetError);
    // drop the second vertex of variable 0 in its first clause but not in the others
    vector<Vertex> kept;
    for (Vertex v = 0; v < s.graph.size(); ++v)
        if (v != s.layout.gadgets.front().second)
            kept.push_back(v);
    CHECK_THROWS_AS(extract_slice_assignment(s.layout, kept), GadgetError);
}

TEST_CASE("clique gadget shape")
{
    for (auto [k, l] : { std::pair{ 2, 4 }, { 3, 4 }, { 2, 5 } }) {
        auto g = clique_gadget(PartitionedGraph{ k, l, { } });
        CHECK(g.graph.size() == 2 * k + 1 + 2 * k * (l + k - 1));
        CHECK(interval_chromatic_number(g.graph) == 4 * k + 1);
        CHECK(g.layout.p.size() == static_cast<std::size_t>(2 * k + 1));
        for (int i = 0; i < k; ++i) {
            CHECK(g.layout.c_blocks[i].size() == static_cast<std::size_t>(l));
            CHECK(g.layout.b_blocks[i].size() == static_cast<std::size_t>(k - 1));
            for (int j = 0; j < k; ++j)
                if (j != i)
                    CHECK(std::find(g.layout.b_blocks[i].begin(), g.layout.b_blocks[i].end(), g.layout.w(i, j))
                            != g.layout.b_blocks[i].end());
            CHECK_THROWS_AS(g.layout.w(i, i), InvalidArgument);
        }
    }
    CHECK(clique_gadget(PartitionedGraph{ 2, 4, { } }).graph.size() == 25);
    CHECK(clique_gadget(PartitionedGraph{ 3, 4, { } }).graph.size() == 43);
    CHECK_THROWS_AS(clique_gadget(PartitionedGraph{ 2, 3, { } }), InvalidArgument);
}

TEST_CASE("clique round trips")
{
    auto check = [](const PartitionedGraph & f) {
        auto r = verify_clique_round_trip(f);
        REQUIRE_MESSAGE(r.consistent(), r.detail);
        REQUIRE(r.oracle_yes == has_clique(f));
    };

    PartitionedGraph empty{ 2, 4, { } };
    check(empty);
    PartitionedGraph full{ 2, 4, { } };
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            full.edges.push_back({ { 0, i }, { 1, j } });
    check(full);
    check(PartitionedGraph{ 2, 4, { { { 0, 3 }, { 1, 3 } } } });

    std::mt19937 rng(oracle::seed());
    for (int i = 0; i < 200; ++i)
        check(random_partitioned(rng, 2, 4, std::uniform_real_distribution<double>(0.0, 0.4)(rng)));
    for (int i = 0; i < 6; ++i)
        check(random_partitioned(rng, 3, 4, 0.3 + 0.1 * i));
}

TEST_CASE("clique extraction")
{
    PartitionedGraph f{ 2, 4, { { { 0, 1 }, { 1, 2 } } } };
    auto g = clique_gadget(f);
    auto w = decide_core_with_k_vertices(g.graph, 4 * 2 + 1);
    REQUIRE(w);
    CHECK(extract_clique(g.layout, w->map) == vector<PartVertex>{ { 0, 1 }, { 1, 2 } });

    CHECK_THROWS_AS(extract_clique(g.layout, MonotoneMap::identity(25)), GadgetError);
    CHECK_THROWS_AS(extract_clique(g.layout, MonotoneMap::identity(24)), GadgetError);
    auto image = MonotoneMap::identity(25).image();
    image[g.layout.p.front()] = g.layout.p.front() + 1;
    for (Vertex v = g.layout.p.front() + 1; v < 25 && image[v] < image[v - 1]; ++v)
        image[v] = image[v - 1];
    CHECK_THROWS_AS(extract_clique(g.layout, MonotoneMap{ image }), GadgetError);
}
