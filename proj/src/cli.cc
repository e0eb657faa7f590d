/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <ordcore/cli.hh>
#include <ordcore/core_solver.hh>
#include <ordcore/errors.hh>
#include <ordcore/formats.hh>
#include <ordcore/gadgets.hh>
#include <ordcore/matchings.hh>
#include <ordcore/retraction.hh>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using std::ostream;
using std::string;
using std::vector;

namespace ordcore
{
    namespace
    {
        auto write_list(ostream & out, const string & key, const vector<Vertex> & values) -> void
        {
            out << key << ':';
            for (auto v : values)
                out << ' ' << v;
            out << '\n';
        }

        auto write_to(const string & path, const string & text) -> void
        {
            std::ofstream file{ path };
            if (! file)
                throw std::runtime_error("cannot write '" + path + "'");
            file << text;
        }

        auto load_graph(const CliInvocation & inv) -> OrderedGraph
        {
            return parse_graph(read_file(inv.inputs.at(0)));
        }

        auto order_of(const CliInvocation & inv) -> SearchOrder
        {
            return inv.descending ? SearchOrder::Descending : SearchOrder::Ascending;
        }

        auto run_retract(const CliInvocation & inv, ostream & out) -> int
        {
            auto graph = load_graph(inv);
            EncodeOptions options{ inv.adjacent_pairs };
            auto encoded = encode(graph, inv.keep, options);

            if (inv.cnf_output) {
                std::ostringstream cnf;
                if (auto * early = std::get_if<EarlyUnsat>(&encoded))
                    cnf << "c early unsat at edge " << early->edge.first << ' ' << early->edge.second << ": "
                        << early->reason << "\np cnf 0 1\n0\n";
                else
                    write_dimacs(cnf, std::get<RetractionEncoding>(encoded).instance);
                write_to(*inv.cnf_output, cnf.str());
            }

            if (auto * early = std::get_if<EarlyUnsat>(&encoded)) {
                out << "NONE\n" << "reason: " << early->reason << " (" << early->edge.first << ", "
                    << early->edge.second << ")\n";
                return exit_status::no;
            }

            auto & enc = std::get<RetractionEncoding>(encoded);
            if (auto assignment = solve(enc.instance)) {
                out << "RETRACT\n" << format_map(decode(enc, *assignment)) << '\n';
                return exit_status::yes;
            }
            out << "NONE\n";
            return exit_status::no;
        }

        auto run_core(const CliInvocation & inv, ostream & out) -> int
        {
            auto result = compute_core(load_graph(inv), order_of(inv));
            out << "core: " << result.core.size() << " vertices\n";
            write_list(out, "embedding", result.embedding);
            out << format_map(result.retraction) << '\n' << serialise(result.core);
            return exit_status::yes;
        }

        auto run_is_core(const CliInvocation & inv, ostream & out) -> int
        {
            if (auto f = find_nonsurjective_endomorphism(load_graph(inv), order_of(inv))) {
                out << "NOT CORE\n" << format_map(*f) << '\n';
                return exit_status::no;
            }
            out << "CORE\n";
            return exit_status::yes;
        }

        auto run_core_k(const CliInvocation & inv, ostream & out) -> int
        {
            auto graph = load_graph(inv);
            if (auto r = decide_core_with_k_vertices(graph, inv.k.value(), { inv.jobs })) {
                out << "RETRACT\n";
                write_list(out, "kept", r->kept);
                out << format_map(r->map) << '\n';
                return exit_status::yes;
            }
            out << "NONE\n";
            return exit_status::no;
        }

        auto run_core_chi(const CliInvocation & inv, ostream & out) -> int
        {
            auto graph = load_graph(inv);
            out << "chi: " << interval_chromatic_number(graph) << '\n';
            auto verdict = decide_core_chi(graph, { inv.jobs });
            if (auto * yes = std::get_if<CoreHasChiVertices>(&verdict)) {
                out << "CHI-CORE\n";
                write_list(out, "kept", yes->witness.kept);
                out << format_map(yes->witness.map) << '\n';
                return exit_status::yes;
            }
            if (auto * neither = std::get_if<Neither>(&verdict)) {
                out << "NEITHER\n" << format_map(neither->endomorphism) << '\n';
                return exit_status::no;
            }
            out << "CORE\n";
            return exit_status::no;
        }

        auto print_slice(ostream & out, const SliceWitness & w) -> void
        {
            write_list(out, "kept", w.kept);
            out << "edges:";
            for (auto [a, b] : w.edges)
                out << ' ' << a << '-' << b;
            out << '\n' << format_map(w.map) << '\n';
        }

        auto slice_options(const CliInvocation & inv) -> SliceOptions
        {
            SliceOptions options;
            options.jobs = inv.jobs;
            options.semantics = inv.strict ? SliceSemantics::Homomorphism : SliceSemantics::Retraction;
            return options;
        }

        auto run_slice(const CliInvocation & inv, ostream & out) -> int
        {
            auto graph = load_graph(inv);
            if (auto w = solve_slice(graph, { inv.g.value(), inv.h.value() }, slice_options(inv))) {
                out << "SLICE\n";
                print_slice(out, *w);
                return exit_status::yes;
            }
            out << "NONE\n";
            return exit_status::no;
        }

        auto run_sub(const CliInvocation & inv, ostream & out) -> int
        {
            auto graph = load_graph(inv);
            if (auto w = solve_sub(graph, { inv.t, inv.u }, slice_options(inv))) {
                out << "SUB\n" << "deficits: " << w->vertex_deficit << ' ' << w->edge_deficit << '\n';
                print_slice(out, w->slice);
                return exit_status::yes;
            }
            out << "NONE\n";
            return exit_status::no;
        }

        auto run_chi(const CliInvocation & inv, ostream & out) -> int
        {
            auto partition = interval_partition(load_graph(inv));
            out << "chi: " << partition.block_count() << '\n';
            write_list(out, "cuts", partition.cuts);
            return exit_status::yes;
        }

        auto emit(const CliInvocation & inv, ostream & out, const string & graph, const string & layout) -> void
        {
            if (inv.output)
                write_to(*inv.output, graph);
            else
                out << graph;
            if (inv.layout_output)
                write_to(*inv.layout_output, layout);
        }

        auto run_gen_matching(const CliInvocation & inv, ostream & out) -> int
        {
            emit(inv, out, serialise(mc(inv.i.value()).graph()), "");
            return exit_status::yes;
        }

        auto run_gen_gadget(const CliInvocation & inv, ostream & out) -> int
        {
            auto text = read_file(inv.inputs.at(0));
            if (inv.gadget_kind == "x13-hyper") {
                auto gadget = hypergraph_gadget(parse_x13(text), inv.k.value_or(3));
                emit(inv, out, serialise(gadget.graph), serialise_layout(gadget.layout));
            }
            else if (inv.gadget_kind == "slice") {
                auto gadget = slice_gadget(parse_x13(text));
                emit(inv, out, serialise(gadget.graph), serialise_layout(gadget.layout, gadget.targets));
            }
            else {
                auto gadget = clique_gadget(parse_partitioned(text));
                emit(inv, out, serialise(gadget.graph), serialise_layout(gadget.layout));
            }
            return exit_status::yes;
        }

        auto run_verify_gadget(const CliInvocation & inv, ostream & out) -> int
        {
            auto text = read_file(inv.inputs.at(0));
            RoundTripReport report;
            if (inv.gadget_kind == "x13-hyper")
                report = verify_hypergraph_round_trip(parse_x13(text), inv.k.value_or(3));
            else if (inv.gadget_kind == "slice")
                report = verify_slice_round_trip(parse_x13(text), { inv.jobs });
            else
                report = verify_clique_round_trip(parse_partitioned(text), { inv.jobs });

            out << "oracle: " << (report.oracle_yes ? "yes" : "no") << '\n';
            out << "solver: " << (report.solver_yes ? "yes" : "no") << '\n';
            if (report.solver_yes)
                out << "witness: " << (report.witness_ok ? "ok" : "invalid") << '\n';
            if (! report.detail.empty())
                out << "detail: " << report.detail << '\n';
            out << (report.consistent() ? "CONSISTENT" : "INCONSISTENT") << '\n';
            return report.consistent() ? exit_status::yes : exit_status::no;
        }
    }

    auto run(const CliInvocation & inv, ostream & out, ostream & err) -> int
    {
        try {
            const auto & s = inv.subcommand;
            if (s == "retract")
                return run_retract(inv, out);
            if (s == "core")
                return run_core(inv, out);
            if (s == "is-core")
                return run_is_core(inv, out);
            if (s == "core-k")
                return run_core_k(inv, out);
            if (s == "core-chi")
                return run_core_chi(inv, out);
            if (s == "slice")
                return run_slice(inv, out);
            if (s == "sub")
                return run_sub(inv, out);
            if (s == "chi")
                return run_chi(inv, out);
            if (s == "gen-matching")
                return run_gen_matching(inv, out);
            if (s == "gen-gadget")
                return run_gen_gadget(inv, out);
            if (s == "verify-gadget")
                return run_verify_gadget(inv, out);
            err << "error: unknown subcommand '" << s << "'\n";
        }
        catch (const ParseError & e) {
            err << "parse error: " << e.what() << '\n';
        }
        catch (const std::exception & e) {
            err << "error: " << e.what() << '\n';
        }
        return exit_status::usage;
    }

    auto run_cli(int argc, const char * const * argv, ostream & out, ostream & err) -> int
    {
        CLI::App app{ "Ordered graph cores, retractions and reduction gadgets", "ordcore" };
        app.require_subcommand(1);

        CliInvocation inv;
        app.add_option("--jobs", inv.jobs, "Worker threads for subset searches")->check(CLI::Range(1u, 256u));

        auto graph_command = [&](const string & name, const string & description) {
            auto * sub = app.add_subcommand(name, description);
            sub->add_option("graph", inv.inputs, "Graph file in og format")->required()->expected(1);
            return sub;
        };

        auto * retract = graph_command("retract", "Decide whether the graph retracts onto the kept vertices");
        retract->add_option("--keep", inv.keep, "Comma-separated vertices to keep")->required()->delimiter(',');
        retract->add_option("--emit-cnf", inv.cnf_output, "Write the 2-SAT encoding in DIMACS format");
        retract->add_flag("--adjacent-pairs", inv.adjacent_pairs, "Only order consecutive vertices of each segment");

        auto * core = graph_command("core", "Compute the core");
        core->add_flag("--descending", inv.descending, "Try larger images first");

        auto * is_core = graph_command("is-core", "Decide whether the graph is a core");
        is_core->add_flag("--descending", inv.descending, "Try larger images first");

        graph_command("core-k", "Decide whether the graph maps onto a proper subgraph on k vertices")
            ->add_option("--k", inv.k, "Vertex count")->required();

        graph_command("core-chi", "Decide whether the core has chromatic-number many vertices");

        auto * slice = graph_command("slice", "Find a retract with exactly g vertices and h edges");
        // --h is the edge target here, so help is long-form only
        slice->set_help_flag("--help", "Print this help message and exit");
        slice->add_option("--g", inv.g, "Vertex target")->required();
        slice->add_option("--h", inv.h, "Edge target")->required();
        slice->add_flag("--strict", inv.strict, "Accept any homomorphism into such a subgraph");

        auto * sub = graph_command("sub", "SLICE over every combination of vertex and edge deficits");
        sub->add_option("--t", inv.t, "Comma-separated vertex deficits")->required()->delimiter(',');
        sub->add_option("--u", inv.u, "Comma-separated edge deficits")->required()->delimiter(',');
        sub->add_flag("--strict", inv.strict, "Accept any homomorphism into such a subgraph");

        graph_command("chi", "Interval chromatic number and a minimum interval partition");

        auto * gen_matching = app.add_subcommand("gen-matching", "Write the edge-collapsible matching on i edges");
        gen_matching->add_option("--i", inv.i, "Edge count, at least 4")->required();
        gen_matching->add_option("-o,--output", inv.output, "Output file");

        const vector<string> kinds{ "x13-hyper", "slice", "clique" };
        auto * gen_gadget = app.add_subcommand("gen-gadget", "Build a reduction gadget");
        auto * verify_gadget = app.add_subcommand("verify-gadget", "Check a gadget against its source instance");
        for (auto * s : { gen_gadget, verify_gadget }) {
            s->add_option("kind", inv.gadget_kind, "x13-hyper, slice or clique")->required()->check(CLI::IsMember(kinds));
            s->add_option("instance", inv.inputs, "Instance file (x13 or mcg)")->required()->expected(1);
            s->add_option("--k", inv.k, "Hyperedge size for x13-hyper");
        }
        gen_gadget->add_option("-o,--output", inv.output, "Output file for the graph");
        gen_gadget->add_option("--layout", inv.layout_output, "Output file for the layout sidecar");

        try {
            app.parse(argc, argv);
        }
        catch (const CLI::ParseError & e) {
            int status = app.exit(e, out, err);
            return status == 0 ? exit_status::yes : exit_status::usage;
        }

        inv.subcommand = app.get_subcommands().front()->get_name();
        return run(inv, out, err);
    }
}
