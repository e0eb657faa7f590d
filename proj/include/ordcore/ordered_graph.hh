/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef ORDCORE_GUARD_ORDERED_GRAPH_HH
#define ORDCORE_GUARD_ORDERED_GRAPH_HH 1

#include <boost/dynamic_bitset.hpp>

#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace ordcore
{
    /// A vertex is identified by its position in the total order, starting at 0.
    using Vertex = int;
    using Edge = std::pair<Vertex, Vertex>;
    using VertexSet = boost::dynamic_bitset<>;

    /**
     * A simple undirected graph whose vertex order is the index order. Edges
     * are stored normalised (u < v), sorted and deduplicated, so two graphs
     * compare equal exactly when they are the same ordered graph.
     */
    class OrderedGraph
    {
    private:
        int _size;
        std::vector<Edge> _edges;
        std::vector<std::vector<Vertex>> _neighbours;
        std::vector<VertexSet> _adjacency;

    public:
        OrderedGraph(int size, std::span<const Edge> edges);

        [[nodiscard]] auto size() const noexcept -> int { return _size; }
        [[nodiscard]] auto edge_count() const noexcept -> int { return static_cast<int>(_edges.size()); }
        [[nodiscard]] auto edges() const noexcept -> const std::vector<Edge> & { return _edges; }

        /// Neighbours of v in increasing order.
        [[nodiscard]] auto neighbours(Vertex v) const -> const std::vector<Vertex> & { return _neighbours.at(v); }
        [[nodiscard]] auto adjacency_row(Vertex v) const -> const VertexSet & { return _adjacency.at(v); }
        [[nodiscard]] auto adjacent(Vertex u, Vertex v) const -> bool { return _adjacency.at(u).test(v); }

        auto operator==(const OrderedGraph & other) const -> bool
        {
            return _size == other._size && _edges == other._edges;
        }
    };

    /// Validating constructor: rejects n < 1, self-loops and out-of-range endpoints.
    auto new_graph(int size, const std::vector<Edge> & edges) -> OrderedGraph;

    /// The ordered path on m vertices, edges (i, i+1).
    auto path_graph(int m) -> OrderedGraph;

    auto edgeless_graph(int size) -> OrderedGraph;

    /**
     * An order-nondecreasing vertex map. The target size is not part of the
     * value; range checks happen where a target graph is known.
     */
    class MonotoneMap
    {
    private:
        std::vector<Vertex> _image;

    public:
        explicit MonotoneMap(std::vector<Vertex> image);

        static auto identity(int size) -> MonotoneMap;

        [[nodiscard]] auto size() const noexcept -> int { return static_cast<int>(_image.size()); }
        [[nodiscard]] auto operator[](Vertex v) const -> Vertex { return _image[v]; }
        [[nodiscard]] auto image() const noexcept -> const std::vector<Vertex> & { return _image; }
        [[nodiscard]] auto is_identity() const -> bool;

        /// Half-open interval [first, second) of source vertices mapped to t; empty if t is not hit.
        [[nodiscard]] auto preimage(Vertex t) const -> std::pair<Vertex, Vertex>;

        /// Distinct image vertices, increasing.
        [[nodiscard]] auto image_vertices() const -> std::vector<Vertex>;

        auto operator==(const MonotoneMap &) const -> bool = default;
    };

    /**
     * A partition of [0, n) into contiguous blocks. cuts holds the start of
     * every block except the first, strictly increasing.
     */
    struct IntervalPartition
    {
        int size;
        std::vector<Vertex> cuts;

        [[nodiscard]] auto block_count() const -> int { return static_cast<int>(cuts.size()) + 1; }

        /// Blocks as half-open intervals.
        [[nodiscard]] auto blocks() const -> std::vector<std::pair<Vertex, Vertex>>;
    };

    /// True iff no edge has both endpoints in the closed interval [lo, hi].
    auto is_independent_interval(const OrderedGraph & graph, Vertex lo, Vertex hi) -> bool;

    /// A minimum partition of the vertex order into independent intervals
    /// (greedy leftmost-maximal extension).
    auto interval_partition(const OrderedGraph & graph) -> IntervalPartition;

    auto interval_chromatic_number(const OrderedGraph & graph) -> int;

    auto is_valid_interval_partition(const OrderedGraph & graph, const IntervalPartition & partition) -> bool;

    /// Monotone and maps every edge of source onto an edge of target.
    auto is_ordered_homomorphism(const OrderedGraph & source, const OrderedGraph & target, const MonotoneMap & f) -> bool;

    enum class SearchOrder
    {
        Ascending,
        Descending
    };

    struct HomomorphismSearchOptions
    {
        /// Order in which candidate images are tried; ascending gives the
        /// lexicographically smallest image sequence first.
        SearchOrder order = SearchOrder::Ascending;

        /// Per source vertex, an optional forced image. Empty means no pins.
        std::vector<std::optional<Vertex>> pinned;

        /// If set, images are restricted to this set of target vertices.
        std::optional<VertexSet> allowed_targets;
    };

    /// Return false from the visitor to stop the enumeration.
    using HomomorphismVisitor = std::function<bool (const MonotoneMap &)>;

    /**
     * Backtracking enumeration of ordered homomorphisms, assigning source
     * vertices in order with forward checking on later neighbours.
     * Homomorphisms are visited in lexicographic order of their image
     * sequence (reversed for SearchOrder::Descending).
     */
    auto for_each_ordered_homomorphism(const OrderedGraph & source, const OrderedGraph & target,
            const HomomorphismSearchOptions & options, const HomomorphismVisitor & visitor) -> void;

    auto find_ordered_homomorphism(const OrderedGraph & source, const OrderedGraph & target,
            const HomomorphismSearchOptions & options = { }) -> std::optional<MonotoneMap>;

    /// A subgraph re-indexed in order; embedding[i] is the original index of vertex i.
    struct Subgraph
    {
        OrderedGraph graph;
        std::vector<Vertex> embedding;
    };

    /// The graph (f(V), f(E)) for an endomorphism f.
    auto image_subgraph(const OrderedGraph & graph, const MonotoneMap & f) -> Subgraph;

    auto induced_subgraph(const OrderedGraph & graph, const std::vector<Vertex> & vertices) -> Subgraph;

    /// f is an endomorphism of graph with image inside keep, fixing every vertex of keep.
    auto is_retraction(const OrderedGraph & graph, const std::vector<Vertex> & keep, const MonotoneMap & f) -> bool;
}

#endif
