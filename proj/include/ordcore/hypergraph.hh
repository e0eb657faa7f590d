/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef ORDCORE_GUARD_HYPERGRAPH_HH
#define ORDCORE_GUARD_HYPERGRAPH_HH 1

#include <ordcore/ordered_graph.hh>

#include <optional>
#include <set>
#include <vector>

namespace ordcore
{
    using Hyperedge = std::vector<Vertex>;

    /// Hyperedges are stored sorted, deduplicated, each with exactly k distinct vertices.
    class OrderedHypergraph
    {
    private:
        int _size;
        int _uniformity;
        std::vector<Hyperedge> _hyperedges;
        std::set<Hyperedge> _lookup;
        std::vector<std::vector<int>> _incident;

    public:
        OrderedHypergraph(int size, int uniformity, std::vector<Hyperedge> hyperedges);

        [[nodiscard]] auto size() const noexcept -> int { return _size; }
        [[nodiscard]] auto uniformity() const noexcept -> int { return _uniformity; }
        [[nodiscard]] auto hyperedges() const noexcept -> const std::vector<Hyperedge> & { return _hyperedges; }
        [[nodiscard]] auto edge_count() const noexcept -> int { return static_cast<int>(_hyperedges.size()); }

        /// sorted must be increasing.
        [[nodiscard]] auto contains(const Hyperedge & sorted) const -> bool { return _lookup.contains(sorted); }

        /// Indices of the hyperedges containing v.
        [[nodiscard]] auto incident(Vertex v) const -> const std::vector<int> & { return _incident.at(v); }

        /// The vertex-hyperedge incidence structure is connected.
        [[nodiscard]] auto is_connected() const -> bool;

        auto operator==(const OrderedHypergraph & other) const -> bool
        {
            return _size == other._size && _uniformity == other._uniformity && _hyperedges == other._hyperedges;
        }
    };

    /// The 2-uniform hypergraph with the same edges.
    auto as_hypergraph(const OrderedGraph & graph) -> OrderedHypergraph;

    /// Monotone, and every hyperedge maps injectively onto a hyperedge of the target.
    auto is_ordered_hyperhom(const OrderedHypergraph & source, const OrderedHypergraph & target, const MonotoneMap & f)
        -> bool;

    auto find_nonsurjective_hyper_endomorphism(const OrderedHypergraph & graph,
            SearchOrder order = SearchOrder::Ascending) -> std::optional<MonotoneMap>;

    /// Retraction onto the hyperedges contained in keep, fixing keep pointwise.
    auto decide_hyper_retraction(const OrderedHypergraph & graph, const std::vector<Vertex> & keep)
        -> std::optional<MonotoneMap>;
}

#endif
