/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <ordcore/errors.hh>
#include <ordcore/ordered_graph.hh>

#include <algorithm>
#include <string>

using std::max;
using std::optional;
using std::pair;
using std::span;
using std::to_string;
using std::vector;

namespace ordcore
{
    OrderedGraph::OrderedGraph(int size, span<const Edge> edges) :
        _size(size)
    {
        if (size < 1)
            throw InvalidArgument("ordered graph needs at least one vertex, got " + to_string(size));

        _edges.reserve(edges.size());
        for (auto [u, v] : edges) {
            if (u < 0 || v < 0 || u >= size || v >= size)
                throw InvalidArgument("edge (" + to_string(u) + "," + to_string(v) + ") out of range for "
                        + to_string(size) + " vertices");
            if (u == v)
                throw InvalidArgument("self-loop at vertex " + to_string(u));
            _edges.emplace_back(std::min(u, v), max(u, v));
        }

        std::sort(_edges.begin(), _edges.end());
        _edges.erase(std::unique(_edges.begin(), _edges.end()), _edges.end());

        _neighbours.resize(size);
        _adjacency.assign(size, VertexSet(size));
        for (auto [u, v] : _edges) {
            _neighbours[u].push_back(v);
            _neighbours[v].push_back(u);
            _adjacency[u].set(v);
            _adjacency[v].set(u);
        }
        for (auto & n : _neighbours)
            std::sort(n.begin(), n.end());
    }

    auto new_graph(int size, const vector<Edge> & edges) -> OrderedGraph
    {
        return OrderedGraph{ size, edges };
    }

    auto path_graph(int m) -> OrderedGraph
    {
        vector<Edge> edges;
        for (Vertex v = 0; v + 1 < m; ++v)
            edges.emplace_back(v, v + 1);
        return OrderedGraph{ m, edges };
    }

    auto edgeless_graph(int size) -> OrderedGraph
    {
        return OrderedGraph{ size, { } };
    }

    MonotoneMap::MonotoneMap(vector<Vertex> image) :
        _image(std::move(image))
    {
        for (std::size_t i = 0; i < _image.size(); ++i) {
            if (_image[i] < 0)
                throw InvalidArgument("negative image at vertex " + to_string(i));
            if (i > 0 && _image[i] < _image[i - 1])
                throw InvalidArgument("map is not monotone at vertex " + to_string(i));
        }
    }

    auto MonotoneMap::identity(int size) -> MonotoneMap
    {
        vector<Vertex> image(size);
        for (Vertex v = 0; v < size; ++v)
            image[v] = v;
        return MonotoneMap{ std::move(image) };
    }

    auto MonotoneMap::is_identity() const -> bool
    {
        for (Vertex v = 0; v < size(); ++v)
            if (_image[v] != v)
                return false;
        return true;
    }

    auto MonotoneMap::preimage(Vertex t) const -> pair<Vertex, Vertex>
    {
        auto [lo, hi] = std::equal_range(_image.begin(), _image.end(), t);
        return { static_cast<Vertex>(lo - _image.begin()), static_cast<Vertex>(hi - _image.begin()) };
    }

    auto MonotoneMap::image_vertices() const -> vector<Vertex>
    {
        vector<Vertex> result;
        std::unique_copy(_image.begin(), _image.end(), std::back_inserter(result));
        return result;
    }

    auto IntervalPartition::blocks() const -> vector<pair<Vertex, Vertex>>
    {
        vector<pair<Vertex, Vertex>> result;
        Vertex start = 0;
        for (auto c : cuts) {
            result.emplace_back(start, c);
            start = c;
        }
        result.emplace_back(start, size);
        return result;
    }

    auto is_independent_interval(const OrderedGraph & graph, Vertex lo, Vertex hi) -> bool
    {
        if (lo < 0 || hi < lo || hi >= graph.size())
            throw InvalidArgument("interval [" + to_string(lo) + "," + to_string(hi) + "] invalid for "
                    + to_string(graph.size()) + " vertices");

        for (Vertex v = lo; v <= hi; ++v)
            for (auto w : graph.neighbours(v))
                if (w > v && w <= hi)
                    return false;
        return true;
    }

    auto interval_partition(const OrderedGraph & graph) -> IntervalPartition
    {
        // a block starting at s can absorb v iff v has no neighbour in [s, v)
        IntervalPartition result{ graph.size(), { } };
        Vertex start = 0;
        for (Vertex v = 1; v < graph.size(); ++v) {
            auto & nbrs = graph.neighbours(v);
            auto below = std::lower_bound(nbrs.begin(), nbrs.end(), v);
            if (below != nbrs.begin() && *std::prev(below) >= start) {
                result.cuts.push_back(v);
                start = v;
            }
        }
        return result;
    }

    auto interval_chromatic_number(const OrderedGraph & graph) -> int
    {
        return interval_partition(graph).block_count();
    }

    auto is_valid_interval_partition(const OrderedGraph & graph, const IntervalPartition & partition) -> bool
    {
        if (partition.size != graph.size())
            return false;
        Vertex previous = 0;
        for (auto c : partition.cuts) {
            if (c <= previous || c >= graph.size())
                return false;
            previous = c;
        }
        for (auto [lo, hi] : partition.blocks())
            if (! is_independent_interval(graph, lo, hi - 1))
                return false;
        return true;
    }

    auto is_ordered_homomorphism(const OrderedGraph & source, const OrderedGraph & target, const MonotoneMap & f) -> bool
    {
        if (f.size() != source.size())
            throw InvalidArgument("map has length " + to_string(f.size()) + " but source has "
                    + to_string(source.size()) + " vertices");
        for (auto t : f.image())
            if (t >= target.size())
                throw InvalidArgument("map target " + to_string(t) + " out of range for "
                        + to_string(target.size()) + " vertices");

        for (auto [u, v] : source.edges())
            if (f[u] == f[v] || ! target.adjacent(f[u], f[v]))
                return false;
        return true;
    }

    auto image_subgraph(const OrderedGraph & graph, const MonotoneMap & f) -> Subgraph
    {
        if (f.size() != graph.size() || ! is_ordered_homomorphism(graph, graph, f))
            throw InvalidArgument("image_subgraph needs an endomorphism");

        auto embedding = f.image_vertices();
        vector<Vertex> position(graph.size(), -1);
        for (std::size_t i = 0; i < embedding.size(); ++i)
            position[embedding[i]] = static_cast<Vertex>(i);

        vector<Edge> edges;
        for (auto [u, v] : graph.edges())
            edges.emplace_back(position[f[u]], position[f[v]]);

        return Subgraph{ OrderedGraph{ static_cast<int>(embedding.size()), edges }, std::move(embedding) };
    }

    auto induced_subgraph(const OrderedGraph & graph, const vector<Vertex> & vertices) -> Subgraph
    {
        vector<Vertex> embedding = vertices;
        std::sort(embedding.begin(), embedding.end());
        embedding.erase(std::unique(embedding.begin(), embedding.end()), embedding.end());
        if (embedding.empty())
            throw InvalidArgument("induced subgraph of an empty vertex set");

        vector<Vertex> position(graph.size(), -1);
        for (std::size_t i = 0; i < embedding.size(); ++i) {
            if (embedding[i] < 0 || embedding[i] >= graph.size())
                throw InvalidArgument("vertex " + to_string(embedding[i]) + " out of range");
            position[embedding[i]] = static_cast<Vertex>(i);
        }

        vector<Edge> edges;
        for (auto [u, v] : graph.edges())
            if (position[u] >= 0 && position[v] >= 0)
                edges.emplace_back(position[u], position[v]);

        return Subgraph{ OrderedGraph{ static_cast<int>(embedding.size()), edges }, std::move(embedding) };
    }

    auto is_retraction(const OrderedGraph & graph, const vector<Vertex> & keep, const MonotoneMap & f) -> bool
    {
        if (f.size() != graph.size())
            return false;
        VertexSet in_keep(graph.size());
        for (auto v : keep) {
            if (v < 0 || v >= graph.size())
                throw InvalidArgument("vertex " + to_string(v) + " out of range");
            in_keep.set(v);
        }
        for (Vertex v = 0; v < graph.size(); ++v) {
            if (f[v] >= graph.size() || ! in_keep.test(f[v]))
                return false;
            if (in_keep.test(v) && f[v] != v)
                return false;
        }
        return is_ordered_homomorphism(graph, graph, f);
    }
}
