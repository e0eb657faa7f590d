/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <ordcore/errors.hh>
#include <ordcore/twosat.hh>

#include <algorithm>
#include <string>
#include <utility>

using std::optional;
using std::to_string;
using std::vector;

namespace ordcore
{
    TwoSatInstance::TwoSatInstance(int var_count) :
        _var_count(var_count)
    {
        if (var_count < 0)
            throw InvalidArgument("negative variable count");
    }

    auto TwoSatInstance::add_variable() -> int
    {
        return _var_count++;
    }

    auto TwoSatInstance::add_clause(Literal a, Literal b) -> void
    {
        for (auto & l : { a, b })
            if (l.variable < 0 || l.variable >= _var_count)
                throw InvalidArgument("literal variable " + to_string(l.variable) + " out of range");
        _clauses.push_back(Clause{ a, b });
    }

    namespace
    {
        // node 2v is the positive literal of v, 2v + 1 the negative one
        auto node(Literal l) -> int
        {
            return 2 * l.variable + (l.positive ? 0 : 1);
        }

        /// Iterative Tarjan. Components are numbered in reverse topological order.
        auto strongly_connected_components(const vector<vector<int>> & out) -> vector<int>
        {
            int n = static_cast<int>(out.size());
            vector<int> index(n, -1), low(n, 0), component(n, -1), stack;
            vector<std::pair<int, std::size_t>> call_stack;
            vector<bool> on_stack(n, false);
            int next_index = 0, next_component = 0;

            for (int root = 0; root < n; ++root) {
                if (index[root] != -1)
                    continue;
                call_stack.emplace_back(root, 0);
                index[root] = low[root] = next_index++;
                stack.push_back(root);
                on_stack[root] = true;

                while (! call_stack.empty()) {
                    auto & [v, edge] = call_stack.back();
                    if (edge < out[v].size()) {
                        int w = out[v][edge++];
                        if (index[w] == -1) {
                            index[w] = low[w] = next_index++;
                            stack.push_back(w);
                            on_stack[w] = true;
                            call_stack.emplace_back(w, 0);
                        }
                        else if (on_stack[w])
                            low[v] = std::min(low[v], index[w]);
                        continue;
                    }

                    if (low[v] == index[v]) {
                        int w;
                        do {
                            w = stack.back();
                            stack.pop_back();
                            on_stack[w] = false;
                            component[w] = next_component;
                        } while (w != v);
                        ++next_component;
                    }

                    int finished = v;
                    call_stack.pop_back();
                    if (! call_stack.empty()) {
                        int parent = call_stack.back().first;
                        low[parent] = std::min(low[parent], low[finished]);
                    }
                }
            }
            return component;
        }
    }

    auto solve(const TwoSatInstance & instance) -> optional<Assignment>
    {
        vector<vector<int>> implications(2 * instance.var_count());
        for (auto & c : instance.clauses()) {
            // (a or b) gives not a -> b and not b -> a
            implications[node(! c.first)].push_back(node(c.second));
            implications[node(! c.second)].push_back(node(c.first));
        }

        auto component = strongly_connected_components(implications);

        Assignment result(instance.var_count());
        for (int v = 0; v < instance.var_count(); ++v) {
            int p = component[node(pos(v))], q = component[node(neg(v))];
            if (p == q)
                return std::nullopt;
            // the literal whose component comes later in topological order is set
            result[v] = p < q;
        }
        return result;
    }

    auto check(const TwoSatInstance & instance, const Assignment & assignment) -> bool
    {
        if (static_cast<int>(assignment.size()) != instance.var_count())
            throw InvalidArgument("assignment has " + to_string(assignment.size()) + " values for "
                    + to_string(instance.var_count()) + " variables");

        auto holds = [&](Literal l) { return assignment[l.variable] == l.positive; };
        return std::all_of(instance.clauses().begin(), instance.clauses().end(),
                [&](const Clause & c) { return holds(c.first) || holds(c.second); });
    }

    auto write_dimacs(std::ostream & out, const TwoSatInstance & instance) -> void
    {
        out << "p cnf " << instance.var_count() << " " << instance.clauses().size() << "\n";
        auto lit = [](Literal l) { return l.positive ? l.variable + 1 : -(l.variable + 1); };
        for (auto & c : instance.clauses())
            out << lit(c.first) << " " << lit(c.second) << " 0\n";
    }
}
