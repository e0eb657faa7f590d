/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef ORDCORE_GUARD_CORE_SOLVER_HH
#define ORDCORE_GUARD_CORE_SOLVER_HH 1

#include <ordcore/ordered_graph.hh>

#include <optional>
#include <variant>
#include <vector>

namespace ordcore
{
    /// Exact vertex and edge counts asked of the image subgraph: 0 < vertices < n, 0 <= edges < m.
    struct SliceTargets
    {
        int vertices;
        int edges;
    };

    /// Already-evaluated deficits; targets are the product {n - t} x {m - u}.
    struct DoubleTuple
    {
        std::vector<int> vertex_deficits;
        std::vector<int> edge_deficits;
    };

    /// A vertex set together with a retraction of the graph onto it.
    struct Retract
    {
        std::vector<Vertex> kept;
        MonotoneMap map;
    };

    struct CoreResult
    {
        OrderedGraph core;
        /// Original index of each core vertex.
        std::vector<Vertex> embedding;
        /// A retraction of the input onto the core, in original indices.
        MonotoneMap retraction;
    };

    struct CoreHasChiVertices
    {
        Retract witness;
    };

    struct InstanceIsCore
    {
    };

    /// Outside the promise: not a core, but the core is larger than the chromatic bound.
    struct Neither
    {
        MonotoneMap endomorphism;
    };

    using CoreVerdict = std::variant<CoreHasChiVertices, InstanceIsCore, Neither>;

    struct SubsetSearchOptions
    {
        /// Worker threads for evaluating candidate vertex subsets. Results do not depend on it.
        unsigned jobs = 1;
    };

    enum class SliceSemantics
    {
        /// H is the induced subgraph on a retract of the right size.
        Retraction,
        /// Any ordered homomorphism into a g-vertex, h-edge subgraph counts.
        Homomorphism
    };

    struct SliceOptions : SubsetSearchOptions
    {
        SliceSemantics semantics = SliceSemantics::Retraction;
    };

    struct SliceWitness
    {
        std::vector<Vertex> kept;
        std::vector<Edge> edges;
        MonotoneMap map;
    };

    struct SubWitness
    {
        int vertex_deficit;
        int edge_deficit;
        SliceWitness slice;
    };

    /// A non-identity (equivalently non-surjective) ordered endomorphism, if any.
    auto find_nonsurjective_endomorphism(const OrderedGraph & graph, SearchOrder order = SearchOrder::Ascending)
        -> std::optional<MonotoneMap>;

    auto is_core(const OrderedGraph & graph) -> bool;

    /// Repeatedly replaces the graph by the image of a non-surjective endomorphism.
    auto compute_core(const OrderedGraph & graph, SearchOrder order = SearchOrder::Ascending) -> CoreResult;

    /**
     * Is there an ordered homomorphism onto a proper subgraph with k vertices?
     * Tries retracts of size chi^<(G), ..., k and returns the first one found,
     * so the witness is a smallest retract and has at most k vertices.
     * Requires 1 <= k < n.
     */
    auto decide_core_with_k_vertices(const OrderedGraph & graph, int k, const SubsetSearchOptions & options = { })
        -> std::optional<Retract>;

    auto decide_core_chi(const OrderedGraph & graph, const SubsetSearchOptions & options = { }) -> CoreVerdict;

    auto solve_slice(const OrderedGraph & graph, SliceTargets targets, const SliceOptions & options = { })
        -> std::optional<SliceWitness>;

    auto solve_sub(const OrderedGraph & graph, const DoubleTuple & deficits, const SliceOptions & options = { })
        -> std::optional<SubWitness>;
}

#endif
