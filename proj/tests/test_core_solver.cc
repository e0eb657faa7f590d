#include <ordcore/core_solver.hh>
#include <ordcore/errors.hh>
#include <ordcore/matchings.hh>

#include "oracles.hh"

#include <doctest.h>

using namespace ordcore;
using std::vector;

namespace
{
    auto mc4_graph() -> OrderedGraph
    {
        return mc4().graph();
    }

    /// The two-edge matching (0,2),(1,3): not a core, yet it has no retract on three vertices.
    auto crossing() -> OrderedGraph
    {
        return new_graph(4, { { 0, 2 }, { 1, 3 } });
    }
}

TEST_CASE("non-surjective endomorphisms")
{
    CHECK(! find_nonsurjective_endomorphism(path_graph(2)));
    CHECK(find_nonsurjective_endomorphism(mc4_graph())->image() == vector<Vertex>{ 0, 0, 0, 0, 5, 5, 5, 5 });
    CHECK(find_nonsurjective_endomorphism(edgeless_graph(2))->image() == vector<Vertex>{ 0, 0 });

    for (int m = 1; m <= 6; ++m)
        CHECK(is_core(path_graph(m)));
    CHECK(! is_core(mc4_graph()));
    CHECK(is_core(edgeless_graph(1)));
}

TEST_CASE("core computation examples")
{
    auto p4 = path_graph(4);
    auto same = compute_core(p4);
    CHECK(same.core == p4);
    CHECK(same.retraction.is_identity());

    auto collapsed = compute_core(mc4_graph());
    CHECK(collapsed.core == path_graph(2));
    CHECK(collapsed.core.size() == 2);
    CHECK(is_ordered_homomorphism(mc4_graph(), mc4_graph(), collapsed.retraction));

    auto point = compute_core(edgeless_graph(5));
    CHECK(point.core.size() == 1);
    CHECK(point.core.edge_count() == 0);
}

TEST_CASE("core computation agrees with the oracle and is unique, on all graphs up to 6 vertices")
{
    for (int n = 1; n <= 6; ++n) {
        long failures = 0;
        oracle::for_each_graph(n, [&](const OrderedGraph & g) {
            auto up = compute_core(g, SearchOrder::Ascending);
            auto down = compute_core(g, SearchOrder::Descending);
            int chi = interval_chromatic_number(g);

            bool ok = up.core == down.core
                && interval_chromatic_number(up.core) == chi
                && up.core.size() >= chi
                && is_core(up.core)
                && ! oracle::has_nonsurjective_endomorphism(up.core)
                && induced_subgraph(g, up.embedding).graph == up.core
                && is_retraction(g, up.embedding, up.retraction)
                && is_retraction(g, down.embedding, down.retraction)
                && is_core(g) == ! oracle::has_nonsurjective_endomorphism(g);
            if (! ok)
                ++failures;
        });
        CHECK_MESSAGE(failures == 0, "n = ", n);
    }
}

TEST_CASE("core with k vertices examples")
{
    auto r = decide_core_with_k_vertices(mc4_graph(), 2);
    REQUIRE(r);
    CHECK(r->kept == vector<Vertex>{ 0, 5 });

    CHECK(! decide_core_with_k_vertices(path_graph(3), 2));

    auto point = decide_core_with_k_vertices(edgeless_graph(3), 1);
    REQUIRE(point);
    CHECK(point->kept == vector<Vertex>{ 0 });

    CHECK_THROWS_AS(decide_core_with_k_vertices(path_graph(3), 3), InvalidArgument);
    CHECK_THROWS_AS(decide_core_with_k_vertices(path_graph(3), 0), InvalidArgument);
}

TEST_CASE("the k-vertex question is about the image size, not an exact retract size")
{
    // the core of the crossing matching is a single edge, so it maps onto a
    // proper subgraph on three vertices even though no 3-vertex retract exists
    auto g = crossing();
    CHECK(! is_core(g));
    for (unsigned long mask = 0; mask < 16; ++mask)
        if (std::popcount(mask) == 3)
            CHECK(oracle::retractions(g, oracle::subset(4, mask)).empty());

    auto r = decide_core_with_k_vertices(g, 3);
    REQUIRE(r);
    CHECK(r->kept.size() == 2);
    CHECK(is_retraction(g, r->kept, r->map));
}

TEST_CASE("the XP route agrees with direct search on all graphs up to 6 vertices")
{
    for (int n = 2; n <= 6; ++n) {
        long failures = 0;
        oracle::for_each_graph(n, [&](const OrderedGraph & g) {
            auto r = decide_core_with_k_vertices(g, n - 1);
            if (r.has_value() == is_core(g))
                ++failures;
            if (r && (! is_retraction(g, r->kept, r->map) || static_cast<int>(r->kept.size()) != compute_core(g).core.size()))
                ++failures;
        });
        CHECK_MESSAGE(failures == 0, "n = ", n);
    }
}

TEST_CASE("chromatic-size cores")
{
    auto m = decide_core_chi(mc4_graph());
    REQUIRE(std::holds_alternative<CoreHasChiVertices>(m));
    CHECK(std::get<CoreHasChiVertices>(m).witness.kept.size() == 2);

    CHECK(std::holds_alternative<InstanceIsCore>(decide_core_chi(path_graph(3))));

    auto g = new_graph(4, { { 0, 2 }, { 1, 3 }, { 2, 3 } });
    auto verdict = decide_core_chi(g);
    CHECK(interval_chromatic_number(g) == 3);
    CHECK(std::holds_alternative<CoreHasChiVertices>(verdict));
}

TEST_CASE("chromatic-size verdicts agree with the core size on all graphs up to 6 vertices")
{
    for (int n = 1; n <= 6; ++n) {
        long failures = 0;
        oracle::for_each_graph(n, [&](const OrderedGraph & g) {
            auto core = compute_core(g);
            int chi = interval_chromatic_number(g);
            auto verdict = decide_core_chi(g);
            bool ok = false;
            if (std::holds_alternative<CoreHasChiVertices>(verdict))
                ok = core.core.size() == chi && chi < n;
            else if (std::holds_alternative<InstanceIsCore>(verdict))
                ok = core.core.size() == n;
            else
                ok = core.core.size() > chi && core.core.size() < n;
            if (! ok)
                ++failures;
        });
        CHECK_MESSAGE(failures == 0, "n = ", n);
    }
}

TEST_CASE("parallel subset search returns the sequential answer")
{
    std::mt19937 rng(oracle::seed());
    for (int i = 0; i < 60; ++i) {
        auto g = oracle::random_graph(rng, std::uniform_int_distribution<int>(3, 9)(rng), 0.3);
        int k = std::uniform_int_distribution<int>(1, g.size() - 1)(rng);
        auto one = decide_core_with_k_vertices(g, k, { 1 });
        auto four = decide_core_with_k_vertices(g, k, { 4 });
        REQUIRE(one.has_value() == four.has_value());
        if (one) {
            REQUIRE(one->kept == four->kept);
            REQUIRE(one->map == four->map);
        }
    }
}

TEST_CASE("slice examples")
{
    auto g = new_graph(3, { { 0, 2 }, { 1, 2 } });
    auto w = solve_slice(g, { 2, 1 });
    REQUIRE(w);
    CHECK(w->kept == vector<Vertex>{ 0, 2 });
    CHECK(w->edges == vector<Edge>{ { 0, 2 } });
    CHECK(w->map.image() == vector<Vertex>{ 0, 0, 2 });

    CHECK_THROWS_AS(solve_slice(g, { 3, 1 }), InvalidArgument);
    CHECK_THROWS_AS(solve_slice(g, { 0, 1 }), InvalidArgument);
    CHECK_THROWS_AS(solve_slice(g, { 2, 2 }), InvalidArgument);
}

TEST_CASE("slice agrees with a brute-force retract scan on small graphs")
{
    std::mt19937 rng(oracle::seed() + 1);
    for (int i = 0; i < 300; ++i) {
        int n = std::uniform_int_distribution<int>(2, 6)(rng);
        auto g = oracle::random_graph(rng, n, 0.4);
        if (g.edge_count() == 0)
            continue;
        SliceTargets targets{ std::uniform_int_distribution<int>(1, n - 1)(rng),
            std::uniform_int_distribution<int>(0, g.edge_count() - 1)(rng) };

        bool expected = false;
        for (unsigned long mask = 1; mask < (1ul << n) && ! expected; ++mask) {
            auto keep = oracle::subset(n, mask);
            if (static_cast<int>(keep.size()) != targets.vertices)
                continue;
            if (oracle::retractions(g, keep).empty())
                continue;
            expected = induced_subgraph(g, keep).graph.edge_count() == targets.edges;
        }

        auto w = solve_slice(g, targets);
        REQUIRE(w.has_value() == expected);
        if (w) {
            REQUIRE(static_cast<int>(w->kept.size()) == targets.vertices);
            REQUIRE(static_cast<int>(w->edges.size()) == targets.edges);
            REQUIRE(is_retraction(g, w->kept, w->map));
        }
    }
}

TEST_CASE("strict slice semantics accepts any homomorphism into a subgraph of the right size")
{
    std::mt19937 rng(oracle::seed() + 2);
    SliceOptions strict;
    strict.semantics = SliceSemantics::Homomorphism;
    for (int i = 0; i < 200; ++i) {
        int n = std::uniform_int_distribution<int>(2, 5)(rng);
        auto g = oracle::random_graph(rng, n, 0.4);
        if (g.edge_count() == 0)
            continue;
        SliceTargets targets{ std::uniform_int_distribution<int>(1, n - 1)(rng),
            std::uniform_int_distribution<int>(0, g.edge_count() - 1)(rng) };

        // some g-set X and a hom into G[X] whose edge image fits inside h of G[X]'s edges
        bool expected = false;
        for (unsigned long mask = 1; mask < (1ul << n) && ! expected; ++mask) {
            auto keep = oracle::subset(n, mask);
            if (static_cast<int>(keep.size()) != targets.vertices)
                continue;
            int induced = induced_subgraph(g, keep).graph.edge_count();
            if (induced < targets.edges)
                continue;
            std::set<int> in(keep.begin(), keep.end());
            oracle::for_each_monotone(n, n, [&](const vector<int> & f) {
                for (auto x : f)
                    if (! in.contains(x))
                        return true;
                if (! oracle::preserves_edges(g, g, f))
                    return true;
                std::set<Edge> image;
                for (auto [u, v] : g.edges())
                    image.emplace(f[u], f[v]);
                if (static_cast<int>(image.size()) <= targets.edges)
                    expected = true;
                return ! expected;
            });
        }

        auto w = solve_slice(g, targets, strict);
        REQUIRE(w.has_value() == expected);
        if (w)
            REQUIRE(is_ordered_homomorphism(g, g, w->map));
        if (solve_slice(g, targets))
            REQUIRE(w);
    }
}

TEST_CASE("sub iterates deficits in the given order")
{
    auto g = new_graph(3, { { 0, 2 }, { 1, 2 } });
    auto single = solve_sub(g, { { 1 }, { 1 } });
    REQUIRE(single);
    CHECK(single->vertex_deficit == 1);
    CHECK(single->edge_deficit == 1);
    CHECK(single->slice.kept == solve_slice(g, { 2, 1 })->kept);

    auto m = mc4_graph();
    CHECK(! solve_sub(m, { { 1, 2 }, { 1, 2 } }));

    auto second = solve_sub(m, { { 1, 6 }, { 1, 3 } });
    REQUIRE(second);
    CHECK(second->vertex_deficit == 6);
    CHECK(second->edge_deficit == 3);

    CHECK_THROWS_AS(solve_sub(g, { { 0 }, { 1 } }), InvalidArgument);
    CHECK_THROWS_AS(solve_sub(g, { { 1 }, { 2 } }), InvalidArgument);
}
