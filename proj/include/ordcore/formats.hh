/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef ORDCORE_GUARD_FORMATS_HH
#define ORDCORE_GUARD_FORMATS_HH 1

#include <ordcore/gadgets.hh>
#include <ordcore/hypergraph.hh>
#include <ordcore/ordered_graph.hh>

#include <string>
#include <string_view>

namespace ordcore
{
    /**
     * Plain text formats, one record per line, '#' starting a comment:
     *
     *   og <n> <m>         followed by m lines "u v"
     *   ohg <n> <m> <k>    followed by m lines of k vertices
     *   x13 <v> <c>        followed by c lines of 3 variables
     *   mcg <k> <l>        followed by edge lines "part_u idx_u part_v idx_v" until the end
     *
     * Every parser throws ParseError naming the offending line.
     */
    auto parse_graph(std::string_view text) -> OrderedGraph;
    auto parse_hypergraph(std::string_view text) -> OrderedHypergraph;
    auto parse_x13(std::string_view text) -> X13Formula;
    auto parse_partitioned(std::string_view text) -> PartitionedGraph;

    auto serialise(const OrderedGraph & graph) -> std::string;
    auto serialise(const OrderedHypergraph & graph) -> std::string;
    auto serialise(const X13Formula & formula) -> std::string;
    auto serialise(const PartitionedGraph & graph) -> std::string;

    /// Key-value sidecars naming the gadget blocks, one "key: values" line each.
    auto serialise_layout(const HyperGadgetLayout & layout) -> std::string;
    auto serialise_layout(const SliceGadgetLayout & layout, const SliceTargets & targets) -> std::string;
    auto serialise_layout(const CliqueGadgetLayout & layout) -> std::string;

    /// "map: f(0)=a f(1)=b ...".
    auto format_map(const MonotoneMap & map) -> std::string;

    auto read_file(const std::string & path) -> std::string;
}

#endif
