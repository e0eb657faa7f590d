/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <ordcore/errors.hh>
#include <ordcore/hypergraph.hh>

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

using std::nullopt;
using std::optional;
using std::set;
using std::to_string;
using std::vector;

namespace ordcore
{
    OrderedHypergraph::OrderedHypergraph(int size, int uniformity, vector<Hyperedge> hyperedges) :
        _size(size),
        _uniformity(uniformity)
    {
        if (size < 1)
            throw InvalidArgument("ordered hypergraph needs at least one vertex");
        if (uniformity < 1)
            throw InvalidArgument("uniformity must be positive, got " + to_string(uniformity));

        for (auto & e : hyperedges) {
            std::sort(e.begin(), e.end());
            if (static_cast<int>(e.size()) != uniformity)
                throw InvalidArgument("hyperedge of size " + to_string(e.size()) + " in a "
                        + to_string(uniformity) + "-uniform hypergraph");
            if (std::adjacent_find(e.begin(), e.end()) != e.end())
                throw InvalidArgument("hyperedge with a repeated vertex");
            if (e.front() < 0 || e.back() >= size)
                throw InvalidArgument("hyperedge vertex out of range for " + to_string(size) + " vertices");
        }
        std::sort(hyperedges.begin(), hyperedges.end());
        hyperedges.erase(std::unique(hyperedges.begin(), hyperedges.end()), hyperedges.end());
        _hyperedges = std::move(hyperedges);
        _lookup = set<Hyperedge>(_hyperedges.begin(), _hyperedges.end());

        _incident.resize(size);
        for (std::size_t i = 0; i < _hyperedges.size(); ++i)
            for (auto v : _hyperedges[i])
                _incident[v].push_back(static_cast<int>(i));
    }

    auto OrderedHypergraph::is_connected() const -> bool
    {
        vector<int> parent(_size);
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int (int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
        for (auto & e : _hyperedges)
            for (auto v : e)
                parent[find(v)] = find(e.front());
        for (Vertex v = 0; v < _size; ++v)
            if (find(v) != find(0))
                return false;
        return true;
    }

    auto as_hypergraph(const OrderedGraph & graph) -> OrderedHypergraph
    {
        vector<Hyperedge> edges;
        for (auto [u, v] : graph.edges())
            edges.push_back({ u, v });
        return OrderedHypergraph{ graph.size(), 2, std::move(edges) };
    }

    auto is_ordered_hyperhom(const OrderedHypergraph & source, const OrderedHypergraph & target, const MonotoneMap & f)
        -> bool
    {
        if (source.uniformity() != target.uniformity())
            throw InvalidArgument("hypergraphs of different uniformity");
        if (f.size() != source.size())
            throw InvalidArgument("map has length " + to_string(f.size()) + " but source has "
                    + to_string(source.size()) + " vertices");
        for (auto t : f.image())
            if (t >= target.size())
                throw InvalidArgument("map target " + to_string(t) + " out of range");

        Hyperedge image;
        for (auto & e : source.hyperedges()) {
            image.clear();
            for (auto v : e)
                image.push_back(f[v]);
            // monotone, so distinct images come out strictly increasing
            if (std::adjacent_find(image.begin(), image.end()) != image.end() || ! target.contains(image))
                return false;
        }
        return true;
    }

    namespace
    {
        /**
         * Assigns vertices in order. Since a hyperedge is sorted and maps
         * injectively and monotonically, once its first j vertices are placed
         * their images must be the first j vertices of some target hyperedge.
         */
        class HyperSearcher
        {
        private:
            const OrderedHypergraph & graph;
            SearchOrder order;
            vector<optional<Vertex>> pinned;
            VertexSet allowed;
            std::function<bool (const MonotoneMap &)> visitor;

            set<Hyperedge> prefixes;
            vector<Vertex> assignment;
            bool stopped = false;

            auto consistent(Vertex v) -> bool
            {
                Hyperedge prefix;
                for (auto i : graph.incident(v)) {
                    const auto & e = graph.hyperedges()[i];
                    prefix.clear();
                    for (auto w : e) {
                        if (w > v)
                            break;
                        prefix.push_back(assignment[w]);
                    }
                    if (std::adjacent_find(prefix.begin(), prefix.end()) != prefix.end()
                            || ! prefixes.contains(prefix))
                        return false;
                }
                return true;
            }

            auto search(Vertex v) -> void
            {
                if (v == graph.size()) {
                    if (! visitor(MonotoneMap{ assignment }))
                        stopped = true;
                    return;
                }

                Vertex lower = v == 0 ? 0 : assignment[v - 1];
                auto attempt = [&](Vertex t) {
                    if (! allowed.test(t) || (pinned[v] && *pinned[v] != t))
                        return;
                    assignment[v] = t;
                    if (consistent(v))
                        search(v + 1);
                };

                if (order == SearchOrder::Ascending)
                    for (Vertex t = lower; t < graph.size() && ! stopped; ++t)
                        attempt(t);
                else
                    for (Vertex t = graph.size() - 1; t >= lower && ! stopped; --t)
                        attempt(t);
            }

        public:
            HyperSearcher(const OrderedHypergraph & g, SearchOrder o, vector<optional<Vertex>> p, VertexSet a,
                    std::function<bool (const MonotoneMap &)> vis) :
                graph(g),
                order(o),
                pinned(std::move(p)),
                allowed(std::move(a)),
                visitor(std::move(vis)),
                assignment(g.size(), 0)
            {
                for (auto & e : graph.hyperedges())
                    for (std::size_t j = 1; j <= e.size(); ++j)
                        prefixes.emplace(e.begin(), e.begin() + j);
            }

            auto run() -> void
            {
                search(0);
            }
        };
    }

    auto find_nonsurjective_hyper_endomorphism(const OrderedHypergraph & graph, SearchOrder order)
        -> optional<MonotoneMap>
    {
        optional<MonotoneMap> result;
        VertexSet all(graph.size());
        all.set();
        HyperSearcher searcher{ graph, order, vector<optional<Vertex>>(graph.size()), all,
            [&](const MonotoneMap & f) {
                if (f.is_identity())
                    return true;
                result = f;
                return false;
            } };
        searcher.run();
        return result;
    }

    auto decide_hyper_retraction(const OrderedHypergraph & graph, const vector<Vertex> & keep)
        -> optional<MonotoneMap>
    {
        if (keep.empty())
            throw InvalidArgument("the kept vertex set must be nonempty");

        vector<optional<Vertex>> pinned(graph.size());
        VertexSet allowed(graph.size());
        for (auto v : keep) {
            if (v < 0 || v >= graph.size())
                throw InvalidArgument("kept vertex " + to_string(v) + " out of range");
            pinned[v] = v;
            allowed.set(v);
        }

        // hyperedges are only ever matched against ones inside keep
        vector<Hyperedge> inside;
        for (auto & e : graph.hyperedges())
            if (std::all_of(e.begin(), e.end(), [&](Vertex v) { return allowed.test(v); }))
                inside.push_back(e);
        OrderedHypergraph target{ graph.size(), graph.uniformity(), inside };

        optional<MonotoneMap> result;
        HyperSearcher searcher{ graph, SearchOrder::Ascending, std::move(pinned), std::move(allowed),
            [&](const MonotoneMap & f) {
                if (! is_ordered_hyperhom(graph, target, f))
                    return true;
                result = f;
                return false;
            } };
        searcher.run();
        return result;
    }
}
