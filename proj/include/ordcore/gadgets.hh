/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef ORDCORE_GUARD_GADGETS_HH
#define ORDCORE_GUARD_GADGETS_HH 1

#include <ordcore/core_solver.hh>
#include <ordcore/hypergraph.hh>
#include <ordcore/ordered_graph.hh>

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace ordcore
{
    /// Positive one-in-three SAT: every clause wants exactly one true variable.
    struct X13Formula
    {
        int var_count;
        std::vector<std::array<int, 3>> clauses;

        /// Throws unless every clause names three distinct in-range variables.
        auto validate() const -> void;

        /// The clause-variable incidence graph is connected (unused variables disconnect it).
        [[nodiscard]] auto is_connected() const -> bool;

        [[nodiscard]] auto occurrences(int variable) const -> int;
    };

    using X13Assignment = std::vector<bool>;

    auto satisfies(const X13Formula & formula, const X13Assignment & assignment) -> bool;

    /// Exhaustive oracle: the first satisfying assignment counting masks upward,
    /// bit i being variable i. Requires at most 20 variables.
    auto brute_force_x13(const X13Formula & formula) -> std::optional<X13Assignment>;

    struct PartVertex
    {
        int part;
        int index;

        auto operator<=>(const PartVertex &) const = default;
    };

    /// A graph on k parts of l vertices each, with edges only between parts.
    struct PartitionedGraph
    {
        int parts;
        int part_size;
        std::vector<std::pair<PartVertex, PartVertex>> edges;

        auto validate() const -> void;
        [[nodiscard]] auto adjacent(PartVertex a, PartVertex b) const -> bool;
    };

    /// Exhaustive oracle over all l^k choices, lexicographic in the chosen indices.
    auto brute_force_multicolored_clique(const PartitionedGraph & graph) -> std::optional<std::vector<PartVertex>>;

    // ---- one-in-three SAT to hypergraph cores ----

    struct HyperGadgetLayout
    {
        struct VariableBlock
        {
            Vertex first, second, third, fourth;
            std::vector<Vertex> padding;
        };

        X13Formula formula;
        int uniformity;
        std::vector<VariableBlock> variables;
        std::vector<Hyperedge> variable_edges, dynamic_edges, static_edges;
    };

    struct HyperGadget
    {
        OrderedHypergraph graph;
        HyperGadgetLayout layout;
    };

    /**
     * One block per variable: first, k-3 padding vertices, second, third,
     * fourth, with the hyperedge {first, second, fourth}. A clause (a, b, c)
     * adds the dynamic triple of the three third vertices and, for each
     * choice of true variable, a static triple of that variable's second
     * vertex and the others' fourth vertices. Triples of a clause are
     * extended by the padding of its smallest variable.
     */
    auto hypergraph_gadget(const X13Formula & formula, int uniformity = 3) -> HyperGadget;

    /// Reads the assignment off where each third vertex goes: second means true, fourth false.
    auto extract_assignment(const HyperGadgetLayout & layout, const MonotoneMap & map) -> X13Assignment;

    /// The kept set whose retract drops exactly the dynamic hyperedges.
    auto static_part(const HyperGadgetLayout & layout) -> std::vector<Vertex>;

    // ---- one-in-three SAT to SLICE ----

    struct SliceGadgetLayout
    {
        struct VariableGadget
        {
            int variable;
            int clause;
            Vertex first, second, third, fourth;
        };

        X13Formula formula;
        std::vector<VariableGadget> gadgets;
        std::vector<Edge> variable_edges, clause_edges, external_edges;
    };

    struct SliceGadget
    {
        OrderedGraph graph;
        SliceTargets targets;
        SliceGadgetLayout layout;
    };

    /// Requires every variable to occur in at least three clauses. n = 9c + 1,
    /// targets g = n - c and h = m - 6c.
    auto slice_gadget(const X13Formula & formula) -> SliceGadget;

    /// A variable is true iff its gadgets' second vertices were dropped.
    auto extract_slice_assignment(const SliceGadgetLayout & layout, const std::vector<Vertex> & kept) -> X13Assignment;

    // ---- multicolored clique to CORE with chi vertices ----

    struct CliqueGadgetLayout
    {
        PartitionedGraph source;
        /// p_1 .. p_{2k+1}.
        std::vector<Vertex> p;
        std::vector<std::vector<Vertex>> d_blocks, c_blocks, b_blocks, a_blocks;
        std::vector<Edge> path_edges, complete_edges, original_edges, collapsible_edges;

        /// w^i_j, the vertex of B_i reserved for part j.
        [[nodiscard]] auto w(int i, int j) const -> Vertex;
    };

    struct CliqueGadget
    {
        OrderedGraph graph;
        CliqueGadgetLayout layout;
    };

    /// Requires l > 3. |V| = 2k + 1 + 2k(l + k - 1), interval chromatic number 4k + 1.
    auto clique_gadget(const PartitionedGraph & source) -> CliqueGadget;

    /// Reads a multicolored clique off a non-surjective endomorphism, checking
    /// every structural constraint the reduction forces on it.
    auto extract_clique(const CliqueGadgetLayout & layout, const MonotoneMap & map) -> std::vector<PartVertex>;

    // ---- round trips ----

    struct RoundTripReport
    {
        bool oracle_yes = false;
        bool solver_yes = false;
        /// Witness decoded back to the source problem and checked there (only when solver_yes).
        bool witness_ok = false;
        /// Secondary check where a gadget has one (the static-part retraction for hypergraphs).
        bool secondary_agrees = true;
        std::string detail;

        [[nodiscard]] auto consistent() const -> bool
        {
            return oracle_yes == solver_yes && (! solver_yes || witness_ok) && secondary_agrees;
        }
    };

    auto verify_hypergraph_round_trip(const X13Formula & formula, int uniformity = 3) -> RoundTripReport;
    auto verify_slice_round_trip(const X13Formula & formula, const SubsetSearchOptions & options = { }) -> RoundTripReport;
    auto verify_clique_round_trip(const PartitionedGraph & source, const SubsetSearchOptions & options = { })
        -> RoundTripReport;
}

#endif
