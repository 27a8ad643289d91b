#include "cli.hpp"

#include <doctest.h>

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace {

struct Result
{
    int code = 0;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    Result r;
    r.code = motsteen::cli::run(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

bool contains(const std::string& s, const std::string& needle)
{
    return s.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("steenrod subcommand")
{
    Result r = run({"steenrod", "-p", "3", "--group", "Sp:4", "--class", "a2", "--op", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == "a4\n");
    r = run({"steenrod", "-p", "2", "--poly", "c2", "--op", "1", "--roots", "3"});
    CHECK(r.code == 0);
    CHECK(r.out == "c1*c2 + c3\n");
    r = run({"steenrod", "-p", "5", "--group", "GL:6", "--class", "a3", "--op", "0"});
    CHECK(r.code == 0);
    CHECK(r.out == "a3\n");
    r = run({"steenrod", "-p", "4", "--poly", "c2", "--op", "1"});
    CHECK(r.code == 2);
    CHECK_FALSE(r.err.empty());
    r = run({"steenrod", "-p", "3", "--poly", "c2 +", "--op", "1"});
    CHECK(r.code == 2);
    r = run({"steenrod", "-p", "3", "--group", "Sp:4", "--class", "a3", "--op", "1"});
    CHECK(r.code == 2);
}

TEST_CASE("steenrod json output")
{
    Result r = run({"steenrod", "-p", "3", "--group", "Sp:4", "--class", "a2", "--op", "1", "--json"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.contains("modulus"));
}

TEST_CASE("tor subcommand")
{
    Result r = run({"tor", "--family", "GL", "--n", "5", "--r", "2", "--p", "3"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "odd basis: a3 a4 a5\n"));
    r = run({"tor", "--family", "Sp", "--n", "2", "--p", "3"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "odd basis: a4\n"));
    r = run({"tor", "--family", "SO", "--n", "3", "--p", "2"});
    CHECK(r.code == 2);
    CHECK(contains(r.err, "torsion prime"));
    r = run({"tor", "--family", "GL", "--n", "3", "--r", "1", "--p", "2", "--json"});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::accept(r.out));
}

TEST_CASE("obstruct subcommand")
{
    Result r = run({"obstruct", "gl", "--n", "3", "--a", "0", "--b", "2", "-p", "2"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "(m=2, i=1)"));
    r = run({"obstruct", "sp", "--n", "2", "-p", "3"});
    CHECK(r.code == 0);
    r = run({"obstruct", "gl", "--n", "2", "--a", "0", "--b", "1", "-p", "2"});
    CHECK(r.code == 1);
    CHECK(contains(r.out, "no obstruction found by this method"));
    r = run({"obstruct", "so", "--n", "4", "-p", "2"});
    CHECK(r.code == 2);
    r = run({"obstruct", "gl", "--n", "3", "--a", "3", "--b", "1", "-p", "2"});
    CHECK(r.code == 2);
    r = run({"obstruct", "sp", "--n", "3", "-p", "5", "--oracle"});
    CHECK(r.code == 0);
    r = run({"obstruct", "gl", "-p", "2", "--scan", "2", "20"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "match: true"));
}

TEST_CASE("verify subcommand")
{
    CHECK(run({"verify", "--axiom", "adem", "-p", "2", "--bound", "12"}).code == 0);
    CHECK(run({"verify", "--axiom", "unit", "-p", "7", "--bound", "8"}).code == 0);
    CHECK(run({"verify", "--axiom", "cartan", "-p", "3", "--bound", "10"}).code == 0);
    CHECK(run({"verify", "--axiom", "nonsense", "-p", "3", "--bound", "10"}).code == 2);
    CHECK(run({"verify", "--axiom", "adem", "-p", "3"}).code == 2);
}

TEST_CASE("modulus subcommand")
{
    Result r = run({"modulus", "--q", "3"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "12"));
}

TEST_CASE("unknown subcommands and flags")
{
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"tor", "--family", "GL", "--n", "3", "--p", "2", "--bogus"}).code == 2);
}

TEST_CASE("repeated runs are byte-identical")
{
    const std::vector<std::vector<std::string>> commands{
        {"steenrod", "-p", "2", "--poly", "c1*c3 + c2^2", "--op", "2", "--json"},
        {"tor", "--family", "GL", "--n", "4", "--r", "1", "--p", "3", "--json"},
        {"obstruct", "gl", "-p", "3", "--scan", "3", "40", "--json"},
        {"verify", "--axiom", "cartan", "-p", "3", "--bound", "8", "--json"},
    };
    for (const auto& c : commands) {
        Result a = run(c), b = run(c);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
        CHECK(a.err == b.err);
    }
}
