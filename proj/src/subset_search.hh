/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef ORDCORE_GUARD_SRC_SUBSET_SEARCH_HH
#define ORDCORE_GUARD_SRC_SUBSET_SEARCH_HH 1

#include <ordcore/ordered_graph.hh>

#include <algorithm>
#include <functional>
#include <optional>
#include <thread>
#include <vector>

namespace ordcore::detail
{
    struct SubsetBounds
    {
        int size;
        /// Subsets whose induced interval chromatic number is below this cannot qualify.
        int min_chromatic;
        /// Subsets inducing more edges than this cannot qualify.
        std::optional<int> max_edges;
    };

    /**
     * Enumerates size-k vertex subsets in lexicographic order, skipping any
     * prefix that cannot reach the chromatic bound: the greedy partition of a
     * prefix plus one block per still-missing vertex bounds the chromatic
     * number of every completion.
     */
    class SubsetEnumerator
    {
    private:
        const OrderedGraph & graph;
        SubsetBounds bounds;
        std::function<bool (const std::vector<Vertex> &)> leaf;
        std::vector<Vertex> chosen;
        VertexSet chosen_set;
        bool stopped = false;

        auto extend(Vertex from, int blocks, const VertexSet & block, int edges) -> void
        {
            int have = static_cast<int>(chosen.size());
            if (have == bounds.size) {
                if (! leaf(chosen))
                    stopped = true;
                return;
            }

            int missing = bounds.size - have;
            for (Vertex x = from; x + missing <= graph.size() && ! stopped; ++x) {
                const auto & row = graph.adjacency_row(x);
                int new_edges = edges + static_cast<int>((row & chosen_set).count());
                if (bounds.max_edges && new_edges > *bounds.max_edges)
                    continue;

                bool opens_block = have == 0 || (row & block).any();
                int new_blocks = blocks + (opens_block ? 1 : 0);
                if (new_blocks + (missing - 1) < bounds.min_chromatic)
                    continue;

                VertexSet new_block = opens_block ? VertexSet(graph.size()) : block;
                new_block.set(x);

                chosen.push_back(x);
                chosen_set.set(x);
                extend(x + 1, new_blocks, new_block, new_edges);
                chosen_set.reset(x);
                chosen.pop_back();
            }
        }

    public:
        SubsetEnumerator(const OrderedGraph & g, SubsetBounds b, std::function<bool (const std::vector<Vertex> &)> l) :
            graph(g),
            bounds(b),
            leaf(std::move(l)),
            chosen_set(g.size())
        {
        }

        auto run() -> void
        {
            if (bounds.size < 1 || bounds.size > graph.size())
                return;
            extend(0, 0, VertexSet(graph.size()), 0);
        }
    };

    /**
     * First subset (in lexicographic order) for which evaluate yields a
     * result. With several jobs, candidates are evaluated in batches; the
     * smallest successful candidate of the first successful batch wins, so
     * the answer is the same as the sequential one.
     */
    template <typename Result_>
    auto first_qualifying_subset(const OrderedGraph & graph, const SubsetBounds & bounds, unsigned jobs,
            const std::function<std::optional<Result_> (const std::vector<Vertex> &)> & evaluate)
        -> std::optional<Result_>
    {
        std::optional<Result_> found;

        if (jobs <= 1) {
            SubsetEnumerator enumerator{ graph, bounds, [&](const std::vector<Vertex> & s) {
                found = evaluate(s);
                return ! found;
            } };
            enumerator.run();
            return found;
        }

        const std::size_t batch_size = 256 * jobs;
        std::vector<std::vector<Vertex>> batch;

        auto flush = [&]() {
            std::vector<std::optional<Result_>> results(batch.size());
            {
                std::vector<std::jthread> workers;
                for (unsigned j = 0; j < jobs; ++j)
                    workers.emplace_back([&, j]() {
                        for (std::size_t i = j; i < batch.size(); i += jobs)
                            results[i] = evaluate(batch[i]);
                    });
            }
            batch.clear();
            for (auto & r : results)
                if (r) {
                    found = std::move(r);
                    return false;
                }
            return true;
        };

        SubsetEnumerator enumerator{ graph, bounds, [&](const std::vector<Vertex> & s) {
            batch.push_back(s);
            return batch.size() < batch_size || flush();
        } };
        enumerator.run();
        if (! found && ! batch.empty())
            flush();
        return found;
    }
}

#endif
