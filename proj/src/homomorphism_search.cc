/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <ordcore/errors.hh>
#include <ordcore/ordered_graph.hh>

#include <string>

using std::optional;
using std::to_string;
using std::vector;

namespace ordcore
{
    namespace
    {
        constexpr auto npos = VertexSet::npos;

        auto first_at_or_after(const VertexSet & set, Vertex from) -> VertexSet::size_type
        {
            return from == 0 ? set.find_first() : set.find_next(from - 1);
        }

        class Searcher
        {
        private:
            const OrderedGraph & source;
            const OrderedGraph & target;
            const HomomorphismSearchOptions & options;
            const HomomorphismVisitor & visitor;

            // domains[d][w] is the candidate set of source vertex w once vertices < d are assigned
            vector<vector<VertexSet>> domains;
            vector<Vertex> assignment;
            bool stopped = false;

            auto propagate(Vertex v, Vertex t) -> bool
            {
                auto & current = domains[v];
                auto & next = domains[v + 1];
                for (Vertex w = v + 1; w < source.size(); ++w)
                    next[w] = current[w];
                for (auto w : source.neighbours(v))
                    if (w > v)
                        next[w] &= target.adjacency_row(t);

                // later vertices must admit a nondecreasing continuation
                Vertex bound = t;
                for (Vertex w = v + 1; w < source.size(); ++w) {
                    auto c = first_at_or_after(next[w], bound);
                    if (c == npos)
                        return false;
                    bound = static_cast<Vertex>(c);
                }
                return true;
            }

            auto try_value(Vertex v, Vertex t) -> void
            {
                assignment[v] = t;
                if (propagate(v, t))
                    search(v + 1);
            }

            auto search(Vertex v) -> void
            {
                if (v == source.size()) {
                    if (! visitor(MonotoneMap{ assignment }))
                        stopped = true;
                    return;
                }

                const auto & domain = domains[v][v];
                Vertex lower = v == 0 ? 0 : assignment[v - 1];

                if (options.order == SearchOrder::Ascending) {
                    for (auto t = first_at_or_after(domain, lower); t != npos && ! stopped; t = domain.find_next(t))
                        try_value(v, static_cast<Vertex>(t));
                }
                else {
                    for (Vertex t = target.size() - 1; t >= lower && ! stopped; --t)
                        if (domain.test(t))
                            try_value(v, t);
                }
            }

        public:
            Searcher(const OrderedGraph & s, const OrderedGraph & t, const HomomorphismSearchOptions & o,
                    const HomomorphismVisitor & vis) :
                source(s),
                target(t),
                options(o),
                visitor(vis),
                domains(s.size() + 1, vector<VertexSet>(s.size(), VertexSet(t.size()))),
                assignment(s.size(), 0)
            {
            }

            auto run() -> void
            {
                if (! options.pinned.empty() && static_cast<int>(options.pinned.size()) != source.size())
                    throw InvalidArgument("pin list has length " + to_string(options.pinned.size())
                            + " but source has " + to_string(source.size()) + " vertices");
                if (options.allowed_targets && static_cast<int>(options.allowed_targets->size()) != target.size())
                    throw InvalidArgument("allowed target set has the wrong size");

                for (Vertex w = 0; w < source.size(); ++w) {
                    auto & d = domains[0][w];
                    if (! options.pinned.empty() && options.pinned[w]) {
                        auto p = *options.pinned[w];
                        if (p < 0 || p >= target.size())
                            throw InvalidArgument("pinned image " + to_string(p) + " out of range");
                        d.reset();
                        d.set(p);
                    }
                    else
                        d.set();
                    if (options.allowed_targets)
                        d &= *options.allowed_targets;
                    if (d.none())
                        return;
                }

                search(0);
            }
        };
    }

    auto for_each_ordered_homomorphism(const OrderedGraph & source, const OrderedGraph & target,
            const HomomorphismSearchOptions & options, const HomomorphismVisitor & visitor) -> void
    {
        Searcher searcher{ source, target, options, visitor };
        searcher.run();
    }

    auto find_ordered_homomorphism(const OrderedGraph & source, const OrderedGraph & target,
            const HomomorphismSearchOptions & options) -> optional<MonotoneMap>
    {
        optional<MonotoneMap> result;
        for_each_ordered_homomorphism(source, target, options, [&](const MonotoneMap & f) {
            result = f;
            return false;
        });
        return result;
    }
}
