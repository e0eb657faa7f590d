/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <ordcore/cli.hh>

#include <iostream>

auto main(int argc, char * argv[]) -> int
{
    return ordcore::run_cli(argc, argv, std::cout, std::cerr);
}
