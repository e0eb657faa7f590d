/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef ORDCORE_GUARD_CLI_HH
#define ORDCORE_GUARD_CLI_HH 1

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ordcore
{
    /// A parsed command line: exactly one subcommand with its own flags.
    struct CliInvocation
    {
        std::string subcommand;
        std::vector<std::string> inputs;
        std::string gadget_kind;

        std::vector<int> keep;
        std::optional<int> k, g, h, i;
        std::vector<int> t, u;
        bool descending = false;
        bool strict = false;
        bool adjacent_pairs = false;
        unsigned jobs = 1;

        std::optional<std::string> output;
        std::optional<std::string> layout_output;
        std::optional<std::string> cnf_output;
    };

    namespace exit_status
    {
        constexpr int yes = 0;
        constexpr int no = 1;
        constexpr int usage = 2;
    }

    /// Executes an invocation, returning the exit status. Input errors are reported on err with status 2.
    auto run(const CliInvocation & invocation, std::ostream & out, std::ostream & err) -> int;

    /// Parses argv and runs it.
    auto run_cli(int argc, const char * const * argv, std::ostream & out, std::ostream & err) -> int;
}

#endif
