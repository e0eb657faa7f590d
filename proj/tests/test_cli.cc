#include <ordcore/cli.hh>
#include <ordcore/formats.hh>
#include <ordcore/matchings.hh>

#include <doctest.h>

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

using namespace ordcore;
using std::string;
using std::vector;

namespace
{
    const string fixtures = ORDCORE_FIXTURES;

    struct Outcome
    {
        int status;
        string out, err;
    };

    auto invoke(vector<string> args) -> Outcome
    {
        args.insert(args.begin(), "ordcore");
        vector<const char *> argv;
        for (auto & a : args)
            argv.push_back(a.c_str());
        std::ostringstream out, err;
        int status = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
        return { status, out.str(), err.str() };
    }

    auto fixture(const string & name) -> string
    {
        return fixtures + "/" + name;
    }

    auto scratch(const string & name) -> string
    {
        auto dir = std::filesystem::temp_directory_path() / "ordcore-cli-test";
        std::filesystem::create_directories(dir);
        return (dir / name).string();
    }
}

TEST_CASE("core questions")
{
    auto p2 = invoke({ "is-core", fixture("p2.og") });
    CHECK(p2.status == 0);
    CHECK(p2.out == "CORE\n");

    auto m = invoke({ "is-core", fixture("mc4.og") });
    CHECK(m.status == 1);
    CHECK(m.out.starts_with("NOT CORE\nmap: "));

    auto core = invoke({ "core", fixture("mc4.og") });
    CHECK(core.status == 0);
    CHECK(core.out.starts_with("core: 2 vertices\nembedding: 0 5\n"));
    CHECK(core.out.ends_with("og 2 1\n0 1\n"));

    auto k = invoke({ "core-k", fixture("mc4.og"), "--k", "2" });
    CHECK(k.status == 0);
    CHECK(k.out.find("kept: 0 5\n") != string::npos);
    CHECK(invoke({ "core-k", fixture("p3.og"), "--k", "2" }).status == 1);

    auto chi = invoke({ "core-chi", fixture("mc4.og") });
    CHECK(chi.status == 0);
    CHECK(chi.out.starts_with("chi: 2\nCHI-CORE\n"));
    auto p3 = invoke({ "core-chi", fixture("p3.og") });
    CHECK(p3.status == 1);
    CHECK(p3.out == "chi: 3\nCORE\n");

    CHECK(invoke({ "chi", fixture("mc4.og") }).out == "chi: 2\ncuts: 4\n");
}

TEST_CASE("retractions")
{
    auto none = invoke({ "retract", fixture("p3.og"), "--keep", "0,2" });
    CHECK(none.status == 1);
    CHECK(none.out.starts_with("NONE\n"));

    auto cnf = scratch("collapse.cnf");
    auto yes = invoke({ "retract", fixture("mc4.og"), "--keep", "0,5", "--emit-cnf", cnf });
    CHECK(yes.status == 0);
    CHECK(yes.out == "RETRACT\nmap: f(0)=0 f(1)=0 f(2)=0 f(3)=0 f(4)=5 f(5)=5 f(6)=5 f(7)=5\n");
    CHECK(read_file(cnf).starts_with("p cnf 6 "));

    invoke({ "retract", fixture("p3.og"), "--keep", "0,2", "--emit-cnf", cnf });
    CHECK(read_file(cnf).find("p cnf 0 1\n0\n") != string::npos);

    CHECK(invoke({ "retract", fixture("mc4.og"), "--keep", "0,5", "--adjacent-pairs" }).status == 0);
    CHECK(invoke({ "retract", fixture("p3.og"), "--keep", "0,7" }).status == 2);
}

TEST_CASE("slices")
{
    CHECK(invoke({ "slice", fixture("p3.og"), "--g", "2", "--h", "1" }).status == 1);
    auto yes = invoke({ "slice", fixture("mc4.og"), "--g", "2", "--h", "1" });
    CHECK(yes.status == 0);
    CHECK(invoke({ "slice", fixture("mc4.og"), "--g", "2", "--h", "1", "--strict" }).status == 0);
    CHECK(invoke({ "sub", fixture("mc4.og"), "--t", "1,6", "--u", "1,3" }).status == 0);
    CHECK(invoke({ "sub", fixture("mc4.og"), "--t", "1,2", "--u", "1,2" }).status == 1);
    CHECK(invoke({ "slice", "--help" }).status == 0);
}

TEST_CASE("generators")
{
    auto m = invoke({ "gen-matching", "--i", "5" });
    CHECK(m.status == 0);
    CHECK(parse_graph(m.out) == mc(5).graph());

    auto out = scratch("mc6.og");
    CHECK(invoke({ "gen-matching", "--i", "6", "-o", out }).status == 0);
    CHECK(parse_graph(read_file(out)) == mc(6).graph());
    CHECK(invoke({ "gen-matching", "--i", "3" }).status == 2);

    auto graph = scratch("hyper.ohg"), layout = scratch("hyper.layout");
    CHECK(invoke({ "gen-gadget", "x13-hyper", fixture("single.x13"), "-o", graph, "--layout", layout }).status == 0);
    CHECK(parse_hypergraph(read_file(graph)).size() == 12);
    CHECK(read_file(layout).starts_with("gadget: x13-hyper\n"));

    auto slice = invoke({ "gen-gadget", "slice", fixture("thrice.x13") });
    CHECK(slice.status == 0);
    CHECK(parse_graph(slice.out).size() == 28);

    auto clique = invoke({ "gen-gadget", "clique", fixture("clique.mcg") });
    CHECK(clique.status == 0);
    CHECK(parse_graph(clique.out).size() == 25);
}

TEST_CASE("gadget verification")
{
    auto clique = invoke({ "verify-gadget", "clique", fixture("clique.mcg") });
    CHECK(clique.status == 0);
    CHECK(clique.out.starts_with("oracle: yes\nsolver: yes\n"));
    CHECK(clique.out.ends_with("CONSISTENT\n"));

    auto hyper = invoke({ "verify-gadget", "x13-hyper", fixture("unsat.x13"), "--k", "4" });
    CHECK(hyper.status == 0);
    CHECK(hyper.out.starts_with("oracle: no\nsolver: no\n"));

    CHECK(invoke({ "verify-gadget", "slice", fixture("unsat.x13") }).out.ends_with("CONSISTENT\n"));
    CHECK(invoke({ "verify-gadget", "slice", fixture("single.x13") }).status == 2);
}

TEST_CASE("usage and input errors")
{
    CHECK(invoke({ }).status == 2);
    CHECK(invoke({ "bogus" }).status == 2);
    CHECK(invoke({ "retract", fixture("p3.og") }).status == 2);
    CHECK(invoke({ "--help" }).status == 0);

    auto bad = invoke({ "is-core", fixture("bad.og") });
    CHECK(bad.status == 2);
    CHECK(bad.err.find("line 2") != string::npos);
    CHECK(invoke({ "is-core", fixture("missing.og") }).status == 2);
    CHECK(invoke({ "gen-gadget", "nonsense", fixture("single.x13") }).status == 2);
    CHECK(invoke({ "core-k", fixture("p3.og"), "--k", "3" }).status == 2);
}
