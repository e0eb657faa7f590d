/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <ordcore/errors.hh>
#include <ordcore/retraction.hh>

#include <algorithm>
#include <array>

using std::nullopt;
using std::optional;
using std::string;
using std::to_string;
using std::variant;
using std::vector;

namespace ordcore
{
    auto SegmentDecomposition::left_anchor(int s) const -> optional<Vertex>
    {
        if (s <= 0)
            return nullopt;
        return anchors.at(s - 1);
    }

    auto SegmentDecomposition::right_anchor(int s) const -> optional<Vertex>
    {
        if (s >= static_cast<int>(anchors.size()))
            return nullopt;
        return anchors.at(s);
    }

    auto decompose(const OrderedGraph & graph, const vector<Vertex> & keep) -> SegmentDecomposition
    {
        if (keep.empty())
            throw InvalidArgument("the kept vertex set must be nonempty");

        VertexSet in_keep(graph.size());
        for (auto v : keep) {
            if (v < 0 || v >= graph.size())
                throw InvalidArgument("kept vertex " + to_string(v) + " out of range for "
                        + to_string(graph.size()) + " vertices");
            in_keep.set(v);
        }

        SegmentDecomposition result;
        result.segments.emplace_back();
        for (Vertex v = 0; v < graph.size(); ++v) {
            if (in_keep.test(v)) {
                result.anchors.push_back(v);
                result.segments.emplace_back();
            }
            else
                result.segments.back().push_back(v);
        }
        return result;
    }

    auto encode(const OrderedGraph & graph, const vector<Vertex> & keep, const EncodeOptions & options)
        -> variant<RetractionEncoding, EarlyUnsat>
    {
        RetractionEncoding enc{ graph.size(), decompose(graph, keep), TwoSatInstance{ },
            vector<int>(graph.size(), -1), vector<int>(graph.size(), -1) };
        auto & dec = enc.decomposition;
        auto & inst = enc.instance;
        int last_segment = static_cast<int>(dec.anchors.size());

        for (int s = 0; s <= last_segment; ++s)
            for (auto x : dec.segments[s]) {
                enc.variable_of[x] = inst.add_variable();
                enc.segment_of[x] = s;
            }

        // within a segment the images are nondecreasing: s_a -> s_b for a < b
        for (auto & segment : dec.segments) {
            for (std::size_t i = 0; i < segment.size(); ++i)
                for (std::size_t j = i + 1; j < segment.size(); ++j) {
                    if (options.adjacent_pairs_only && j != i + 1)
                        break;
                    int a = enc.variable_of[segment[i]], b = enc.variable_of[segment[j]];
                    inst.add_clause(pos(b), neg(a));
                    if (! options.adjacent_pairs_only)
                        inst.add_clause(neg(a), pos(b));
                }
        }

        // image of x when its variable takes value
        auto image = [&](Vertex x, bool value) -> optional<Vertex> {
            int s = enc.segment_of[x];
            return value ? dec.right_anchor(s) : dec.left_anchor(s);
        };
        auto is_target_edge = [&](optional<Vertex> a, optional<Vertex> b) {
            return a && b && *a != *b && graph.adjacent(*a, *b);
        };

        // edges between two non-anchor vertices
        for (auto [u, v] : graph.edges()) {
            if (enc.variable_of[u] < 0 || enc.variable_of[v] < 0)
                continue;

            constexpr std::array<std::array<bool, 2>, 4> combinations{ {
                { false, false }, { true, false }, { false, true }, { true, true } } };
            vector<std::array<bool, 2>> forbidden;
            for (auto & c : combinations)
                if (! is_target_edge(image(u, c[0]), image(v, c[1])))
                    forbidden.push_back(c);

            if (forbidden.size() == combinations.size())
                return EarlyUnsat{ { u, v }, "no choice of images maps the edge onto an edge" };
            for (auto & c : forbidden)
                inst.add_clause(Literal{ enc.variable_of[u], ! c[0] }, Literal{ enc.variable_of[v], ! c[1] });
        }

        // edges between a non-anchor vertex and an anchor
        for (auto [u, v] : graph.edges()) {
            bool u_free = enc.variable_of[u] >= 0, v_free = enc.variable_of[v] >= 0;
            if (u_free == v_free)
                continue;
            Vertex x = u_free ? u : v, anchor = u_free ? v : u;
            int s = enc.variable_of[x];

            bool left_ok = is_target_edge(image(x, false), anchor);
            bool right_ok = is_target_edge(image(x, true), anchor);
            if (! left_ok && ! right_ok)
                return EarlyUnsat{ { u, v }, "neither anchor next to the free vertex is adjacent to the kept endpoint" };
            if (! left_ok)
                inst.add_unit(pos(s));
            if (! right_ok)
                inst.add_unit(neg(s));
        }

        // vertices before the first anchor and after the last have one choice
        for (auto x : dec.segments.front())
            inst.add_unit(pos(enc.variable_of[x]));
        for (auto x : dec.segments.back())
            inst.add_unit(neg(enc.variable_of[x]));

        return enc;
    }

    auto clause_bound(const SegmentDecomposition & decomposition) -> long long
    {
        long long h = static_cast<long long>(decomposition.anchors.size());
        long long free = 0, pairs = 0;
        for (auto & segment : decomposition.segments) {
            long long s = static_cast<long long>(segment.size());
            free += s;
            pairs += s * (s - 1) / 2;
        }
        return 2 * pairs + 3 * free * free + h * h
            + static_cast<long long>(decomposition.segments.front().size())
            + static_cast<long long>(decomposition.segments.back().size());
    }

    auto decode(const RetractionEncoding & encoding, const Assignment & assignment) -> MonotoneMap
    {
        if (! check(encoding.instance, assignment))
            throw InvalidArgument("assignment does not satisfy the retraction encoding");

        vector<Vertex> image(encoding.vertex_count);
        for (Vertex x = 0; x < encoding.vertex_count; ++x) {
            int var = encoding.variable_of[x];
            if (var < 0) {
                image[x] = x;
                continue;
            }
            int s = encoding.segment_of[x];
            auto target = assignment[var] ? encoding.decomposition.right_anchor(s)
                : encoding.decomposition.left_anchor(s);
            if (! target)
                throw InvalidArgument("assignment sends vertex " + to_string(x) + " past the outermost anchor");
            image[x] = *target;
        }
        return MonotoneMap{ std::move(image) };
    }

    auto decide_retraction(const OrderedGraph & graph, const vector<Vertex> & keep, const EncodeOptions & options)
        -> optional<MonotoneMap>
    {
        auto encoded = encode(graph, keep, options);
        auto * enc = std::get_if<RetractionEncoding>(&encoded);
        if (! enc)
            return nullopt;

        auto assignment = solve(enc->instance);
        if (! assignment)
            return nullopt;
        return decode(*enc, *assignment);
    }
}
