/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <ordcore/core_solver.hh>
#include <ordcore/errors.hh>
#include <ordcore/retraction.hh>

#include "subset_search.hh"

#include <algorithm>
#include <string>

using std::nullopt;
using std::optional;
using std::to_string;
using std::vector;

namespace ordcore
{
    auto find_nonsurjective_endomorphism(const OrderedGraph & graph, SearchOrder order) -> optional<MonotoneMap>
    {
        // a monotone surjection of a finite order onto itself is the identity
        optional<MonotoneMap> result;
        HomomorphismSearchOptions options;
        options.order = order;
        for_each_ordered_homomorphism(graph, graph, options, [&](const MonotoneMap & f) {
            if (f.is_identity())
                return true;
            result = f;
            return false;
        });
        return result;
    }

    auto is_core(const OrderedGraph & graph) -> bool
    {
        return ! find_nonsurjective_endomorphism(graph);
    }

    auto compute_core(const OrderedGraph & graph, SearchOrder order) -> CoreResult
    {
        OrderedGraph current = graph;
        vector<Vertex> embedding = MonotoneMap::identity(graph.size()).image();
        // where each original vertex currently sits, in current's indices
        vector<Vertex> position = embedding;

        while (auto f = find_nonsurjective_endomorphism(current, order)) {
            auto image = image_subgraph(current, *f);
            vector<Vertex> reindex(current.size(), -1);
            for (std::size_t i = 0; i < image.embedding.size(); ++i)
                reindex[image.embedding[i]] = static_cast<Vertex>(i);

            for (auto & p : position)
                p = reindex[(*f)[p]];

            vector<Vertex> new_embedding;
            for (auto e : image.embedding)
                new_embedding.push_back(embedding[e]);

            embedding = std::move(new_embedding);
            current = std::move(image.graph);
        }

        vector<Vertex> retraction(graph.size());
        for (Vertex v = 0; v < graph.size(); ++v)
            retraction[v] = embedding[position[v]];

        return CoreResult{ std::move(current), std::move(embedding), MonotoneMap{ std::move(retraction) } };
    }

    auto decide_core_with_k_vertices(const OrderedGraph & graph, int k, const SubsetSearchOptions & options)
        -> optional<Retract>
    {
        if (k < 1 || k >= graph.size())
            throw InvalidArgument("core size " + to_string(k) + " must lie in [1, " + to_string(graph.size()) + ")");

        // a homomorphism G -> G[X] forces chi^<(G[X]) >= chi^<(G)
        int chi = interval_chromatic_number(graph);
        for (int size = chi; size <= k; ++size) {
            auto result = detail::first_qualifying_subset<Retract>(graph, { size, chi, nullopt }, options.jobs,
                    [&](const vector<Vertex> & kept) -> optional<Retract> {
                        if (auto r = decide_retraction(graph, kept))
                            return Retract{ kept, *r };
                        return nullopt;
                    });
            if (result)
                return result;
        }
        return nullopt;
    }

    auto decide_core_chi(const OrderedGraph & graph, const SubsetSearchOptions & options) -> CoreVerdict
    {
        int chi = interval_chromatic_number(graph);
        if (chi < graph.size())
            if (auto r = decide_core_with_k_vertices(graph, chi, options))
                return CoreHasChiVertices{ std::move(*r) };

        if (auto f = find_nonsurjective_endomorphism(graph))
            return Neither{ std::move(*f) };
        return InstanceIsCore{ };
    }

    namespace
    {
        auto validate(const OrderedGraph & graph, SliceTargets targets) -> void
        {
            if (targets.vertices <= 0 || targets.vertices >= graph.size())
                throw InvalidArgument("slice vertex target " + to_string(targets.vertices) + " must lie in (0, "
                        + to_string(graph.size()) + ")");
            if (targets.edges < 0 || targets.edges >= graph.edge_count())
                throw InvalidArgument("slice edge target " + to_string(targets.edges) + " must lie in [0, "
                        + to_string(graph.edge_count()) + ")");
        }

        auto induced_edges(const OrderedGraph & graph, const vector<Vertex> & kept) -> vector<Edge>
        {
            VertexSet in(graph.size());
            for (auto v : kept)
                in.set(v);
            vector<Edge> result;
            for (auto [u, v] : graph.edges())
                if (in.test(u) && in.test(v))
                    result.emplace_back(u, v);
            return result;
        }

        auto image_edges(const OrderedGraph & graph, const MonotoneMap & f) -> vector<Edge>
        {
            vector<Edge> result;
            for (auto [u, v] : graph.edges())
                result.emplace_back(f[u], f[v]);
            std::sort(result.begin(), result.end());
            result.erase(std::unique(result.begin(), result.end()), result.end());
            return result;
        }

        /// The image edges, topped up with further induced edges until there are exactly h.
        auto pad_edges(vector<Edge> image, const vector<Edge> & induced, int h) -> vector<Edge>
        {
            for (auto & e : induced) {
                if (static_cast<int>(image.size()) >= h)
                    break;
                if (! std::binary_search(image.begin(), image.end(), e)) {
                    image.insert(std::lower_bound(image.begin(), image.end(), e), e);
                }
            }
            return image;
        }
    }

    auto solve_slice(const OrderedGraph & graph, SliceTargets targets, const SliceOptions & options)
        -> optional<SliceWitness>
    {
        validate(graph, targets);
        int chi = interval_chromatic_number(graph);
        int h = targets.edges;

        if (options.semantics == SliceSemantics::Retraction) {
            // a retraction fixes G[X], so its edge image is exactly E(G[X])
            detail::SubsetBounds bounds{ targets.vertices, chi, h };
            return detail::first_qualifying_subset<SliceWitness>(graph, bounds, options.jobs,
                    [&](const vector<Vertex> & kept) -> optional<SliceWitness> {
                        auto induced = induced_edges(graph, kept);
                        if (static_cast<int>(induced.size()) < h)
                            return nullopt;
                        auto r = decide_retraction(graph, kept);
                        if (! r)
                            return nullopt;
                        auto image = image_edges(graph, *r);
                        if (static_cast<int>(image.size()) > h)
                            return nullopt;
                        return SliceWitness{ kept, pad_edges(std::move(image), induced, h), *r };
                    });
        }

        detail::SubsetBounds bounds{ targets.vertices, chi, nullopt };
        return detail::first_qualifying_subset<SliceWitness>(graph, bounds, options.jobs,
                [&](const vector<Vertex> & kept) -> optional<SliceWitness> {
                    auto induced = induced_edges(graph, kept);
                    if (static_cast<int>(induced.size()) < h)
                        return nullopt;
                    HomomorphismSearchOptions search;
                    search.allowed_targets = VertexSet(graph.size());
                    for (auto v : kept)
                        search.allowed_targets->set(v);
                    optional<SliceWitness> witness;
                    for_each_ordered_homomorphism(graph, graph, search, [&](const MonotoneMap & f) {
                        auto image = image_edges(graph, f);
                        if (static_cast<int>(image.size()) > h)
                            return true;
                        witness = SliceWitness{ kept, pad_edges(std::move(image), induced, h), f };
                        return false;
                    });
                    return witness;
                });
    }

    auto solve_sub(const OrderedGraph & graph, const DoubleTuple & deficits, const SliceOptions & options)
        -> optional<SubWitness>
    {
        int n = graph.size(), m = graph.edge_count();
        for (auto t : deficits.vertex_deficits)
            if (t <= 0 || t >= n)
                throw InvalidArgument("vertex deficit " + to_string(t) + " must lie in (0, " + to_string(n) + ")");
        for (auto u : deficits.edge_deficits)
            if (u <= 0 || u >= m)
                throw InvalidArgument("edge deficit " + to_string(u) + " must lie in (0, " + to_string(m) + ")");

        for (auto t : deficits.vertex_deficits)
            for (auto u : deficits.edge_deficits)
                if (auto w = solve_slice(graph, { n - t, m - u }, options))
                    return SubWitness{ t, u, std::move(*w) };
        return nullopt;
    }
}
