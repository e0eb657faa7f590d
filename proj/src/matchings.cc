/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <ordcore/errors.hh>
#include <ordcore/matchings.hh>

#include <functional>
#include <string>

using std::to_string;
using std::vector;

namespace ordcore
{
    OrderedMatching::OrderedMatching(OrderedGraph graph) :
        _graph(std::move(graph))
    {
        for (Vertex v = 0; v < _graph.size(); ++v)
            if (_graph.neighbours(v).size() != 1)
                throw InvalidArgument("vertex " + to_string(v) + " has degree "
                        + to_string(_graph.neighbours(v).size()) + " in a matching");
    }

    auto mc4() -> OrderedMatching
    {
        return OrderedMatching{ new_graph(8, { { 0, 5 }, { 1, 7 }, { 2, 4 }, { 3, 6 } }) };
    }

    auto mc(int i) -> OrderedMatching
    {
        if (i < 4)
            throw InvalidArgument("the collapsible matching family starts at 4 edges, got " + to_string(i));

        vector<Edge> edges = mc4().graph().edges();
        int size = 8;
        for (int step = 5; step <= i; ++step) {
            // previous vertices are 0 .. size-1; w is inserted before old index `at`
            int at = (step % 2 == 1) ? step - 1 : size;
            auto shift = [&](Vertex x) { return x + 1 + (x >= at ? 1 : 0); };
            for (auto & [u, v] : edges) {
                u = shift(u);
                v = shift(v);
            }
            edges.emplace_back(0, at + 1);
            size += 2;
        }
        return OrderedMatching{ new_graph(size, edges) };
    }

    auto all_matchings(int edge_count) -> vector<OrderedMatching>
    {
        if (edge_count < 1)
            throw InvalidArgument("matching needs at least one edge");

        int size = 2 * edge_count;
        vector<OrderedMatching> result;
        vector<Edge> edges;
        vector<bool> used(size, false);

        std::function<void ()> pair_up = [&]() {
            Vertex first = 0;
            while (first < size && used[first])
                ++first;
            if (first == size) {
                result.emplace_back(new_graph(size, edges));
                return;
            }
            used[first] = true;
            for (Vertex other = first + 1; other < size; ++other) {
                if (used[other])
                    continue;
                used[other] = true;
                edges.emplace_back(first, other);
                pair_up();
                edges.pop_back();
                used[other] = false;
            }
            used[first] = false;
        };
        pair_up();
        return result;
    }

    auto is_edge_collapsible(const OrderedGraph & graph) -> bool
    {
        if (graph.edge_count() == 0)
            throw InvalidArgument("edge-collapsibility needs at least one edge");

        bool any_proper = false, only_single_edges = true;
        for_each_ordered_homomorphism(graph, graph, { }, [&](const MonotoneMap & f) {
            if (f.is_identity())
                return true;
            any_proper = true;
            auto image = image_subgraph(graph, f);
            if (image.graph.size() != 2 || image.graph.edge_count() != 1) {
                only_single_edges = false;
                return false;
            }
            return true;
        });
        return any_proper && only_single_edges;
    }
}
