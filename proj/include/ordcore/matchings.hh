/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef ORDCORE_GUARD_MATCHINGS_HH
#define ORDCORE_GUARD_MATCHINGS_HH 1

#include <ordcore/ordered_graph.hh>

#include <vector>

namespace ordcore
{
    /// An ordered graph in which every vertex has degree exactly one.
    class OrderedMatching
    {
    private:
        OrderedGraph _graph;

    public:
        explicit OrderedMatching(OrderedGraph graph);

        [[nodiscard]] auto graph() const noexcept -> const OrderedGraph & { return _graph; }
        [[nodiscard]] auto edge_count() const noexcept -> int { return _graph.edge_count(); }

        /// The other endpoint of the edge at v.
        [[nodiscard]] auto partner(Vertex v) const -> Vertex { return _graph.neighbours(v).front(); }
    };

    /// The eight-vertex base matching {0,5}, {1,7}, {2,4}, {3,6}.
    auto mc4() -> OrderedMatching;

    /**
     * The i-edge member of the family grown from mc4(). Each step prepends a
     * vertex v and adds a vertex w, joined by a new edge: for odd i, w goes
     * between the (i-1)-th and i-th vertices of the previous matching; for
     * even i, after its last vertex.
     */
    auto mc(int i) -> OrderedMatching;

    /// All perfect matchings on 2 * edges ordered vertices.
    auto all_matchings(int edges) -> std::vector<OrderedMatching>;

    /**
     * True iff the graph has a non-surjective endomorphism and every one of
     * them has a single edge as its image. Exhaustive; requires an edge.
     */
    auto is_edge_collapsible(const OrderedGraph & graph) -> bool;
}

#endif
