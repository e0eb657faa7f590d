/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef ORDCORE_GUARD_RETRACTION_HH
#define ORDCORE_GUARD_RETRACTION_HH 1

#include <ordcore/ordered_graph.hh>
#include <ordcore/twosat.hh>

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace ordcore
{
    /**
     * The vertex order split by the kept vertices ("anchors"):
     * segment 0, anchor 0, segment 1, ..., anchor h-1, segment h.
     * Segments may be empty; there are always anchors.size() + 1 of them.
     */
    struct SegmentDecomposition
    {
        std::vector<Vertex> anchors;
        std::vector<std::vector<Vertex>> segments;

        /// Anchor to the left of segment s, if any.
        [[nodiscard]] auto left_anchor(int s) const -> std::optional<Vertex>;
        /// Anchor to the right of segment s, if any.
        [[nodiscard]] auto right_anchor(int s) const -> std::optional<Vertex>;
    };

    auto decompose(const OrderedGraph & graph, const std::vector<Vertex> & keep) -> SegmentDecomposition;

    /**
     * Each non-anchor vertex x in segment s owns one variable: false sends x
     * to the left anchor of s, true to the right anchor.
     */
    struct RetractionEncoding
    {
        int vertex_count;
        SegmentDecomposition decomposition;
        TwoSatInstance instance;
        /// Variable per vertex, -1 for anchors.
        std::vector<int> variable_of;
        /// Segment per vertex, -1 for anchors.
        std::vector<int> segment_of;
    };

    /// Some edge has no admissible image; the instance would be unsatisfiable.
    struct EarlyUnsat
    {
        Edge edge;
        std::string reason;
    };

    struct EncodeOptions
    {
        /// Order clauses only between consecutive segment vertices instead of all pairs.
        bool adjacent_pairs_only = false;
    };

    auto encode(const OrderedGraph & graph, const std::vector<Vertex> & keep, const EncodeOptions & options = { })
        -> std::variant<RetractionEncoding, EarlyUnsat>;

    /// The worst-case clause count 2 sum C(|X_k|,2) + 3(n-h)^2 + h^2 + |X_1| + |X_{h+1}|.
    auto clause_bound(const SegmentDecomposition & decomposition) -> long long;

    /// Turns a satisfying assignment into a retraction, as a map V(G) -> V(G).
    auto decode(const RetractionEncoding & encoding, const Assignment & assignment) -> MonotoneMap;

    /// A monotone retraction of graph onto its induced subgraph on keep, if one exists.
    auto decide_retraction(const OrderedGraph & graph, const std::vector<Vertex> & keep,
            const EncodeOptions & options = { }) -> std::optional<MonotoneMap>;
}

#endif
