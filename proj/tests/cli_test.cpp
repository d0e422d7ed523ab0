#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "preisach/cli.hpp"

using namespace preisach;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("cli subcommands") {
    CHECK(run({"lis", "--perm", "2,4,3,5,1"}).out == "3\n");
    CHECK(run({"phi", "--perm", "2,4,3,5,1", "--vertex", "+++-+"}).out == "(2,4,5)\n");
    CHECK(run({"phi-inverse", "--perm", "2,4,3,5,1", "--subseq", "2,4,5"}).out == "+++-+\n");
    CHECK(run({"phi-inverse", "--perm", "2,3,1", "--subseq", ""}).out == "---\n");
    CHECK(run({"nesting", "--perm", "2,3,1"}).out == "2\n");
    CHECK(run({"nesting", "--perm", "2,3,1", "--vertex", "+-+"}).out == "2\n");
    CHECK(run({"export-json", "--perm", "1"}).out ==
          R"({"n":1,"perm":[1],"vertices":["-","+"],"edges":[{"from":"-","to":"+","kind":"U","label":1},)"
          R"({"from":"+","to":"-","kind":"D","label":1}]})"
          "\n");
    CHECK(run({"export-dot", "--perm", "2,3,1"}).out == run({"export-dot", "--perm", "2,3,1", "--builder", "forward"}).out);

    const auto build = run({"build", "--perm", "2,3,1"});
    CHECK(build.code == kExitOk);
    CHECK(build.out.find("vertices 5\nedges 8\nnesting 2\n") != std::string::npos);
    CHECK(build.out.find("+-+ 2 (2,3)\n") != std::string::npos);
}

TEST_CASE("cli exit codes") {
    CHECK(run({"verify", "--perm", "2,3,1"}).code == kExitOk);
    CHECK(run({"verify-all", "--n", "3"}).code == kExitOk);
    CHECK(run({"stats", "--n", "10", "--samples", "5", "--seed", "7"}).code == kExitOk);

    CHECK(run({"verify", "--perm", "2,2,1"}).code == kExitUsage);
    CHECK(run({"verify"}).code == kExitUsage);
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"bogus"}).code == kExitUsage);
    CHECK(run({"phi", "--perm", "2,3,1", "--vertex", "+0-"}).code == kExitUsage);
    CHECK(run({"phi", "--perm", "2,3,1", "--vertex", "-++"}).code == kExitUsage);
    CHECK(run({"verify-all", "--n", "12"}).code == kExitUsage);
    CHECK(run({"verify-all", "--n", "12"}).err.find("n too large") != std::string::npos);

    CHECK(run({"verify", "--perm", "1,2,3,4,5,6,7,8", "--max-vertices", "100"}).code == kExitBudget);
    CHECK(run({"export-dot", "--perm", "1,2,3,4,5,6,7,8", "--max-vertices", "100"}).code == kExitBudget);
    CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("cli writes --out files") {
    const auto path = std::filesystem::temp_directory_path() / "preisach_cli_test.dot";
    CHECK(run({"export-dot", "--perm", "1", "--out", path.string()}).code == kExitOk);
    std::ifstream in(path);
    std::stringstream text;
    text << in.rdbuf();
    CHECK(text.str().rfind("digraph preisach {", 0) == 0);
    std::filesystem::remove(path);
}
